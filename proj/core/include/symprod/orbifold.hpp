#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "symprod/series.hpp"
#include "symprod/spaces.hpp"

namespace symprod {

// Coefficients c(m,l) of an elliptic genus Ell(X) = sum c(m,l) y^l q^m,
// keyed by (m, l) with m >= 0.
using EllCoefficients = std::map<std::pair<long long, long long>, long long>;

// Text format: one entry per line as `m l c`; lines starting with `#` and
// blank lines are ignored; duplicate (m,l) keys are an error. Errors carry
// the 1-based line number.
EllCoefficients parse_ell_coefficients(std::istream& in);
EllCoefficients parse_ell_coefficients_text(const std::string& text);

// DMVV product: sum_n Ell(X^n, S_n) t^n = prod_{i>=1} prod_{m,l} (1 - t^i y^l q^m)^{-c(m,l)}.
// Factors with i > t_order are omitted; the y-window truncates.
TruncatedSeries dmvv_series(const EllCoefficients& coeffs, int t_order, int q_order, int y_min,
                            int y_max);

// Validates log(dmvv_series) against the explicit expansion
// sum_i sum_{m,l} c(m,l) sum_j (t^i y^l q^m)^j / j at the same truncation.
bool dmvv_log_check(const EllCoefficients& coeffs, int t_order, int q_order, int y_min, int y_max);

// Orbifold Euler characteristic chi(X^n, S_n): sum over cycle types sigma of
// prod_r chi(SP^{alpha_r}(X)), the chi values read from euler_sp_series.
long long orbifold_euler_bruteforce(const GradedSpace& space, int n);

// Seeded randomized dmvv_log_check family (support <= 4, |c| <= 3, orders
// 3..6, y-window wide enough that no y-truncation occurs). True iff every
// case passes.
bool dmvv_random_family(unsigned long long seed, int cases);

}  // namespace symprod
