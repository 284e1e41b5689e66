#include "symprod/genera.hpp"

#include <stdexcept>

#include "symprod/cycle_types.hpp"

namespace symprod {

namespace {

TruncationProfile two_var_profile(int q_order, int t_order) {
    TruncationProfile p;
    p.q_order = q_order;
    p.t_order = t_order;
    p.u_order = 0;
    p.y_min = 0;
    p.y_max = 0;
    return p;
}

void require_genus_inputs(int g, int t_order) {
    if (g < 0) throw std::invalid_argument("genus must be non-negative");
    if (t_order < 0) throw std::invalid_argument("t_order must be non-negative");
}

}  // namespace

TruncationProfile genus_profile(int t_order) {
    if (t_order < 0) throw std::invalid_argument("genus_profile: t_order must be non-negative");
    TruncationProfile p;
    p.q_order = 0;
    p.t_order = t_order;
    p.u_order = t_order;
    p.y_min = 0;
    p.y_max = t_order;
    return p;
}

TruncatedSeries macdonald_series(const GradedSpace& space, int q_order, int t_order) {
    if (q_order < 0 || t_order < 0) {
        throw std::invalid_argument("macdonald_series: orders must be non-negative");
    }
    const TruncationProfile p = two_var_profile(q_order, t_order);
    TruncatedSeries result = TruncatedSeries::constant(1, p);
    const TruncatedSeries one = TruncatedSeries::constant(1, p);
    for (int d = 0; d <= space.top_degree(); ++d) {
        if (space.betti(d) == 0) continue;
        Exponents e;
        e.q = 1;
        e.t = d;
        const TruncatedSeries qtd = TruncatedSeries::monomial(1, e, p);
        const TruncatedSeries factor = (d % 2 != 0) ? one + qtd : inv_one_minus(qtd);
        for (long long b = 0; b < space.betti(d); ++b) result = result * factor;
    }
    return result;
}

std::vector<long long> betti_sp(const GradedSpace& space, int n, int d_max) {
    if (n < 0) throw std::invalid_argument("betti_sp: n must be non-negative");
    if (d_max < 0) d_max = n * space.top_degree();
    const TruncatedSeries series = macdonald_series(space, n, d_max);
    ExponentQuery at_n;
    at_n.q = n;
    const TruncatedSeries poincare = coeff(series, at_n);
    std::vector<long long> betti(static_cast<size_t>(d_max) + 1, 0);
    for (const auto& [e, c] : poincare.terms()) betti[static_cast<size_t>(e.t)] = c.as_int64();
    return betti;
}

TruncatedSeries euler_sp_series(const GradedSpace& space, int q_order) {
    if (q_order < 0) throw std::invalid_argument("euler_sp_series: q_order must be non-negative");
    const TruncationProfile p = two_var_profile(q_order, 0);
    Exponents e;
    e.q = 1;
    const TruncatedSeries base =
        TruncatedSeries::constant(1, p) - TruncatedSeries::monomial(1, e, p);
    return pow(base, Rational(-euler_char(space)));
}

TruncatedSeries cycle_index_genus(const GenusSeed& seed, int t_order) {
    if (t_order < 0) throw std::invalid_argument("cycle_index_genus: t_order must be non-negative");
    const TruncationProfile p = genus_profile(t_order);
    TruncatedSeries arg(p);
    for (int r = 1; r <= t_order; ++r) {
        Exponents e;
        e.t = r;
        arg += seed(r, p) * TruncatedSeries::monomial(Rational(1, r), e, p);
    }
    return exp(arg);
}

TruncatedSeries cycle_index_genus_direct(const GenusSeed& seed, int t_order) {
    if (t_order < 0) {
        throw std::invalid_argument("cycle_index_genus_direct: t_order must be non-negative");
    }
    const TruncationProfile p = genus_profile(t_order);
    TruncatedSeries result = TruncatedSeries::constant(1, p);
    for (int n = 1; n <= t_order; ++n) {
        TruncatedSeries coeff_n(p);
        for (const CycleType& ct : cycle_types(n)) {
            TruncatedSeries term = TruncatedSeries::constant(1, p);
            for (size_t i = 0; i < ct.alpha.size(); ++i) {
                if (ct.alpha[i] == 0) continue;
                const TruncatedSeries s = seed(static_cast<int>(i) + 1, p);
                for (int j = 0; j < ct.alpha[i]; ++j) term = term * s;
            }
            coeff_n += term * Rational(Integer(1), ct.centralizer_order());
        }
        Exponents e;
        e.t = n;
        result += coeff_n * TruncatedSeries::monomial(1, e, p);
    }
    return result;
}

GenusSeed constant_genus_seed(long long value) {
    return [value](int, const TruncationProfile& p) {
        return TruncatedSeries::constant(value, p);
    };
}

GenusSeed chi_y_seed(int g) {
    if (g < 0) throw std::invalid_argument("chi_y_seed: genus must be non-negative");
    return [g](int r, const TruncationProfile& p) {
        if (r < 1) throw std::invalid_argument("chi_y_seed: r must be positive");
        Exponents e;
        e.y = r;
        const Rational factor(1 - static_cast<long long>(g));
        const Rational sign = (r % 2 == 0) ? Rational(1) : Rational(-1);
        return TruncatedSeries::constant(factor, p) +
               TruncatedSeries::monomial(factor * sign, e, p);
    };
}

GenusSeed ell_seed(int g) {
    if (g < 0) throw std::invalid_argument("ell_seed: genus must be non-negative");
    return [g](int r, const TruncationProfile& p) {
        if (r < 1) throw std::invalid_argument("ell_seed: r must be positive");
        if (r % 2 != 0) return TruncatedSeries(p);
        Exponents e;
        e.u = 1;
        return TruncatedSeries::monomial(Rational(2 - 2LL * g), e, p);
    };
}

TruncatedSeries chi_y_sp_series(int g, int t_order) {
    require_genus_inputs(g, t_order);
    const TruncationProfile p = genus_profile(t_order);
    const TruncatedSeries one = TruncatedSeries::constant(1, p);
    Exponents et;
    et.t = 1;
    Exponents eyt;
    eyt.t = 1;
    eyt.y = 1;
    const TruncatedSeries base = (one - TruncatedSeries::monomial(1, et, p)) *
                                 (one + TruncatedSeries::monomial(1, eyt, p));
    return pow(base, static_cast<long long>(g) - 1);
}

long long signature_closed_sp(int g, int m) {
    if (g < 0 || m < 0) {
        throw std::invalid_argument("signature_closed_sp: arguments must be non-negative");
    }
    if (m % 2 != 0) return 0;
    const TruncationProfile p = two_var_profile(0, m);
    Exponents e;
    e.t = 2;
    const TruncatedSeries base =
        TruncatedSeries::constant(1, p) - TruncatedSeries::monomial(1, e, p);
    const TruncatedSeries series = pow(base, static_cast<long long>(g) - 1);
    Exponents at;
    at.t = m;
    return series.coefficient(at).as_int64();
}

long long signature_punctured_sp(int g, int k, int n) {
    if (g < 0 || n < 0) {
        throw std::invalid_argument("signature_punctured_sp: g and n must be non-negative");
    }
    if (k < 1) {
        throw std::invalid_argument(
            "signature_punctured_sp: k must be positive; use signature_closed_sp for closed "
            "surfaces");
    }
    const Integer b = binomial(g, n);
    const Rational value = (n % 2 == 0) ? Rational(b) : Rational(-b);
    return value.as_int64();
}

TruncatedSeries ell_sp_series(int g, int t_order) {
    require_genus_inputs(g, t_order);
    const TruncationProfile p = genus_profile(t_order);
    Exponents e2;
    e2.t = 2;
    const TruncatedSeries base =
        TruncatedSeries::constant(1, p) - TruncatedSeries::monomial(1, e2, p);
    Exponents eu;
    eu.u = 1;
    const TruncatedSeries exponent =
        TruncatedSeries::monomial(Rational(static_cast<long long>(g) - 1), eu, p);
    return pow(base, exponent);
}

TruncatedSeries stable_betti_series(int g, int t_order) {
    require_genus_inputs(g, t_order);
    const TruncationProfile p = two_var_profile(0, t_order);
    Exponents et;
    et.t = 1;
    Exponents et2;
    et2.t = 2;
    const TruncatedSeries one_plus_t =
        TruncatedSeries::constant(1, p) + TruncatedSeries::monomial(1, et, p);
    return pow(one_plus_t, 2LL * g) * inv_one_minus(TruncatedSeries::monomial(1, et2, p));
}

}  // namespace symprod
