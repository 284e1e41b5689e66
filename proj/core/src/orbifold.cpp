#include "symprod/orbifold.hpp"

#include <climits>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "symprod/cycle_types.hpp"
#include "symprod/genera.hpp"

namespace symprod {

EllCoefficients parse_ell_coefficients(std::istream& in) {
    EllCoefficients coeffs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long long m = 0, l = 0, c = 0;
        if (!(fields >> m >> l >> c)) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected three integers `m l c`");
        }
        std::string rest;
        if (fields >> rest) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": trailing content after `m l c`");
        }
        if (m < 0) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": m must be non-negative");
        }
        if (!coeffs.emplace(std::make_pair(m, l), c).second) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate entry for (" +
                                        std::to_string(m) + ", " + std::to_string(l) + ")");
        }
    }
    return coeffs;
}

EllCoefficients parse_ell_coefficients_text(const std::string& text) {
    std::istringstream in(text);
    return parse_ell_coefficients(in);
}

namespace {

TruncationProfile dmvv_profile(int t_order, int q_order, int y_min, int y_max) {
    if (t_order < 0 || q_order < 0) {
        throw std::invalid_argument("dmvv: orders must be non-negative");
    }
    TruncationProfile p;
    p.q_order = q_order;
    p.t_order = t_order;
    p.u_order = 0;
    p.y_min = y_min;
    p.y_max = y_max;
    p.y_mode = YWindowMode::truncating;
    p.validate();
    return p;
}

}  // namespace

TruncatedSeries dmvv_series(const EllCoefficients& coeffs, int t_order, int q_order, int y_min,
                            int y_max) {
    const TruncationProfile p = dmvv_profile(t_order, q_order, y_min, y_max);
    TruncatedSeries result = TruncatedSeries::constant(1, p);
    const TruncatedSeries one = TruncatedSeries::constant(1, p);
    for (int i = 1; i <= t_order; ++i) {
        for (const auto& [key, c] : coeffs) {
            if (c == 0) continue;
            const auto& [m, l] = key;
            if (m > q_order) continue;  // the factor is 1 at this truncation
            Exponents e;
            e.t = i;
            e.q = static_cast<int>(m);
            e.y = static_cast<int>(l);
            const TruncatedSeries x = TruncatedSeries::monomial(1, e, p);
            if (x.is_zero()) continue;  // y-exponent outside the window
            if (c > 0) {
                const TruncatedSeries factor = inv_one_minus(x);
                for (long long j = 0; j < c; ++j) result = result * factor;
            } else {
                const TruncatedSeries factor = one - x;
                for (long long j = 0; j < -c; ++j) result = result * factor;
            }
        }
    }
    return result;
}

bool dmvv_log_check(const EllCoefficients& coeffs, int t_order, int q_order, int y_min,
                    int y_max) {
    const TruncationProfile p = dmvv_profile(t_order, q_order, y_min, y_max);
    const TruncatedSeries product = dmvv_series(coeffs, t_order, q_order, y_min, y_max);
    const TruncatedSeries lhs = log_one_plus(product - TruncatedSeries::constant(1, p));

    TruncatedSeries rhs(p);
    for (int i = 1; i <= t_order; ++i) {
        for (const auto& [key, c] : coeffs) {
            if (c == 0) continue;
            const auto& [m, l] = key;
            for (int j = 1; i * j <= t_order; ++j) {
                const long long mq = m * j;
                const long long ly = l * j;
                if (mq > q_order) break;
                if (ly < INT_MIN || ly > INT_MAX) continue;
                Exponents e;
                e.t = i * j;
                e.q = static_cast<int>(mq);
                e.y = static_cast<int>(ly);
                rhs += TruncatedSeries::monomial(Rational(c, j), e, p);
            }
        }
    }
    return lhs == rhs;
}

long long orbifold_euler_bruteforce(const GradedSpace& space, int n) {
    if (n < 1) throw std::invalid_argument("orbifold_euler_bruteforce: n must be positive");
    const TruncatedSeries euler = euler_sp_series(space, n);
    std::vector<Rational> chi_sp(static_cast<size_t>(n) + 1);
    for (int a = 0; a <= n; ++a) {
        Exponents e;
        e.q = a;
        chi_sp[static_cast<size_t>(a)] = euler.coefficient(e);
    }
    Rational total(0);
    for (const CycleType& ct : cycle_types(n)) {
        Rational term(1);
        for (int a : ct.alpha) term *= chi_sp[static_cast<size_t>(a)];
        total += term;
    }
    return total.as_int64();
}

bool dmvv_random_family(unsigned long long seed, int cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> support_size(1, 4);
    std::uniform_int_distribution<long long> m_dist(0, 2);
    std::uniform_int_distribution<long long> l_dist(-2, 2);
    std::uniform_int_distribution<long long> c_dist(-3, 3);
    std::uniform_int_distribution<int> order_dist(3, 6);

    for (int k = 0; k < cases; ++k) {
        EllCoefficients coeffs;
        const int entries = support_size(rng);
        for (int i = 0; i < entries; ++i) {
            long long c = c_dist(rng);
            if (c == 0) c = 1;
            coeffs[{m_dist(rng), l_dist(rng)}] = c;
        }
        const int t_order = order_dist(rng);
        const int q_order = order_dist(rng);
        long long l_max = 0;
        for (const auto& [key, c] : coeffs) l_max = std::max(l_max, std::llabs(key.second));
        // Window wide enough that nothing y-truncates, so the identity is exact.
        const int span = static_cast<int>(l_max) * t_order;
        if (!dmvv_log_check(coeffs, t_order, q_order, -span, span)) return false;
    }
    return true;
}

}  // namespace symprod
