#pragma once

#include <map>
#include <utility>

#include "symprod/cycle_types.hpp"
#include "symprod/spaces.hpp"

namespace symprod {

// dims[{d, n}] = dim of the degree-d part of the n-th graded-symmetric power.
using BigradedDims = std::map<std::pair<int, int>, long long>;

// Dimensions of S^n(H_*(X)) by direct enumeration over generators: even-degree
// generators enter with unbounded multiplicity, odd-degree ones at most once.
// Independent of the generating-function engine.
BigradedDims sym_power_dims_oracle(const GradedSpace& space, int n_max, int d_max);

// Equivariant Euler characteristic of sigma acting on X^n by factor
// permutation, computed as a signed trace over sigma-fixed basis tensors.
// Cost is total_dim^cycle_count, the caller's budget.
long long graded_perm_trace_oracle(const GradedSpace& space, const CycleType& sigma);

}  // namespace symprod
