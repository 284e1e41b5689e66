#pragma once

#include <vector>

#include "symprod/rational.hpp"

namespace symprod {

// Cycle type of a permutation in S_n: alpha[r-1] = number of r-cycles,
// so sum r*alpha[r-1] = n. One CycleType per conjugacy class.
struct CycleType {
    int n = 0;
    std::vector<int> alpha;

    int cycle_count() const;
    Integer centralizer_order() const;  // prod_r r^{alpha_r} * alpha_r!
    Integer class_size() const;         // n! / centralizer_order
    bool is_valid() const;
};

// All cycle types of S_n in a fixed deterministic order.
std::vector<CycleType> cycle_types(int n);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace symprod
