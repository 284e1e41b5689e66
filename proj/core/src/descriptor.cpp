#include "symprod/descriptor.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace symprod {

namespace {

[[noreturn]] void fail(const std::string& text, size_t pos, const std::string& why) {
    std::ostringstream os;
    os << "descriptor '" << text << "': " << why << " at position " << pos;
    throw std::invalid_argument(os.str());
}

// Parses a base-10 run of digits with optional leading '-'.
long long parse_int(const std::string& text, size_t& pos, const char* what) {
    const size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) fail(text, start, std::string("expected ") + what);
    try {
        return std::stoll(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
        fail(text, start, std::string(what) + " out of range");
    }
}

void expect_end(const std::string& text, size_t pos) {
    if (pos != text.size()) fail(text, pos, "unexpected trailing characters");
}

}  // namespace

SpaceSpec parse_descriptor(const std::string& text) {
    for (size_t i = 0; i < text.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            fail(text, i, "whitespace is not permitted");
        }
    }
    if (text == "rp2") return RealProjectivePlane{};

    const size_t colon = text.find(':');
    if (colon == std::string::npos) {
        fail(text, 0, "unknown space (expected sphere:<dim>, surface:g=<g>[,k=<k>], cp:<n>, rp2 "
                      "or betti:<b0>,...)");
    }
    const std::string head = text.substr(0, colon);
    size_t pos = colon + 1;

    if (head == "sphere") {
        const long long dim = parse_int(text, pos, "dimension");
        expect_end(text, pos);
        if (dim < 1) fail(text, colon + 1, "sphere dimension must be positive");
        return Sphere{static_cast<int>(dim)};
    }
    if (head == "cp") {
        const long long n = parse_int(text, pos, "n");
        expect_end(text, pos);
        if (n < 0) fail(text, colon + 1, "cp index must be non-negative");
        return ComplexProjective{static_cast<int>(n)};
    }
    if (head == "surface") {
        if (text.compare(pos, 2, "g=") != 0) fail(text, pos, "expected 'g='");
        pos += 2;
        const long long g = parse_int(text, pos, "genus");
        if (g < 0) fail(text, pos, "genus must be non-negative");
        if (pos == text.size()) return ClosedSurface{static_cast<int>(g)};
        if (text.compare(pos, 3, ",k=") != 0) fail(text, pos, "expected ',k='");
        pos += 3;
        const size_t k_pos = pos;
        const long long k = parse_int(text, pos, "puncture count");
        expect_end(text, pos);
        if (k < 1) fail(text, k_pos, "puncture count must be positive");
        return PuncturedSurface{static_cast<int>(g), static_cast<int>(k)};
    }
    if (head == "betti") {
        RawBetti raw;
        while (true) {
            const size_t b_pos = pos;
            const long long b = parse_int(text, pos, "Betti number");
            if (b < 0) fail(text, b_pos, "Betti numbers must be non-negative");
            raw.betti.push_back(b);
            if (pos == text.size()) break;
            if (text[pos] != ',') fail(text, pos, "expected ','");
            ++pos;
        }
        return raw;
    }
    fail(text, 0, "unknown space '" + head + "'");
}

namespace {

struct Describer {
    std::string operator()(const Sphere& s) const { return "sphere:" + std::to_string(s.dim); }
    std::string operator()(const ClosedSurface& s) const {
        return "surface:g=" + std::to_string(s.genus);
    }
    std::string operator()(const PuncturedSurface& s) const {
        return "surface:g=" + std::to_string(s.genus) + ",k=" + std::to_string(s.punctures);
    }
    std::string operator()(const ComplexProjective& s) const { return "cp:" + std::to_string(s.n); }
    std::string operator()(const RealProjectivePlane&) const { return "rp2"; }
    std::string operator()(const RawBetti& s) const {
        std::string out = "betti:";
        for (size_t i = 0; i < s.betti.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(s.betti[i]);
        }
        return out;
    }
};

}  // namespace

std::string describe(const SpaceSpec& spec) { return std::visit(Describer{}, spec); }

}  // namespace symprod
