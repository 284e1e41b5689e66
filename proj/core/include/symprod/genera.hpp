#pragma once

#include <functional>
#include <vector>

#include "symprod/series.hpp"
#include "symprod/spaces.hpp"

namespace symprod {

// Per-cycle-length equivariant genus value: seed(r) as a series constant in q
// and t (a polynomial in y and/or u) at the requested profile.
using GenusSeed = std::function<TruncatedSeries(int r, const TruncationProfile&)>;

// Profile used by the cycle-index engine: t up to t_order, with y and u room
// sized so that no intermediate term can escape (y- and u-degrees of every
// intermediate monomial are bounded by its t-degree).
TruncationProfile genus_profile(int t_order);

// prod_{d odd} (1+q t^d)^{beta_d} / prod_{d even} (1-q t^d)^{beta_d};
// the q^n coefficient is the Poincare polynomial of the n-th symmetric power.
TruncatedSeries macdonald_series(const GradedSpace& space, int q_order, int t_order);

// Betti numbers of SP^n(X) in degrees 0..d_max. d_max < 0 selects the default
// n * top_degree (2n for a surface).
std::vector<long long> betti_sp(const GradedSpace& space, int n, int d_max = -1);

// sum_n chi(SP^n(X)) q^n = (1-q)^{-chi(X)}.
TruncatedSeries euler_sp_series(const GradedSpace& space, int q_order);

// exp(sum_{r>=1} seed(r) t^r / r), the generating function of the genus over
// symmetric powers.
TruncatedSeries cycle_index_genus(const GenusSeed& seed, int t_order);

// Same coefficients by the explicit sum over cycle types:
// [t^n] = sum_{alpha |- n} prod_r seed(r)^{alpha_r} / (prod_r r^{alpha_r} alpha_r!).
TruncatedSeries cycle_index_genus_direct(const GenusSeed& seed, int t_order);

GenusSeed constant_genus_seed(long long value);
GenusSeed chi_y_seed(int g);  // r -> (1-g)(1+(-y)^r)
GenusSeed ell_seed(int g);    // r -> 0 (r odd), (2-2g)u (r even)

// sum_n chi_y(SP^n(S_g)) t^n = ((1-t)(1+yt))^{g-1}.
TruncatedSeries chi_y_sp_series(int g, int t_order);

// Signature of SP^m(M_g): coefficient of t^m in (1-t^2)^{g-1}; 0 for odd m.
long long signature_closed_sp(int g, int m);

// Signature of SP^{2n}(M_{g,k}) = (-1)^n binom(g, n), independent of k >= 1.
long long signature_punctured_sp(int g, int k, int n);

// sum_n Ell(SP^n(S_g)) t^n = (1-t^2)^{-(1-g)u} with u standing for eps^{1/4}.
TruncatedSeries ell_sp_series(int g, int t_order);

// Poincare series of H_*(SP^inf(M_g)): (1+t)^{2g} / (1-t^2).
TruncatedSeries stable_betti_series(int g, int t_order);

}  // namespace symprod
