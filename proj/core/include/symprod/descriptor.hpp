#pragma once

#include <string>

#include "symprod/spaces.hpp"

namespace symprod {

// Grammar: sphere:<dim> | surface:g=<g> | surface:g=<g>,k=<k> | cp:<n> | rp2
//        | betti:<b0>,<b1>,...
// No whitespace permitted. Malformed input throws std::invalid_argument with
// the offending position.
SpaceSpec parse_descriptor(const std::string& text);

// Canonical descriptor string; parse_descriptor(describe(s)) resolves to the
// same space.
std::string describe(const SpaceSpec& spec);

}  // namespace symprod
