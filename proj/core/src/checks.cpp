#include "symprod/checks.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "symprod/cycle_types.hpp"
#include "symprod/genera.hpp"
#include "symprod/oracles.hpp"
#include "symprod/orbifold.hpp"
#include "symprod/series.hpp"
#include "symprod/spaces.hpp"

namespace symprod::checks {

namespace {

constexpr unsigned long long kDmvvFamilySeed = 0x53504746ULL;

struct Recorder {
    bool ok = true;
    long long cases = 0;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        ++cases;
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    SuiteResult finish(std::string name) const {
        SuiteResult r;
        r.name = std::move(name);
        r.passed = ok;
        r.detail = ok ? std::to_string(cases) + " cases" : detail;
        return r;
    }
};

struct NamedSpace {
    std::string name;
    GradedSpace space;
};

std::vector<NamedSpace> oracle_family(Family family) {
    std::vector<NamedSpace> spaces = {
        {"S^1", resolve(Sphere{1})},
        {"S^2", resolve(Sphere{2})},
        {"T^2", resolve(ClosedSurface{1})},
        {"genus-2", resolve(ClosedSurface{2})},
        {"M_{1,1}", resolve(PuncturedSurface{1, 1})},
        {"M_{2,3}", resolve(PuncturedSurface{2, 3})},
        {"betti:1,3", resolve(RawBetti{{1, 3}})},
        {"betti:2,0,1", resolve(RawBetti{{2, 0, 1}})},
    };
    if (family == Family::full) {
        spaces.push_back({"rp2", resolve(RealProjectivePlane{})});
        spaces.push_back({"cp:2", resolve(ComplexProjective{2})});
        spaces.push_back({"betti:1,2,2,1", resolve(RawBetti{{1, 2, 2, 1}})});
        spaces.push_back({"betti:3", resolve(RawBetti{{3}})});
    }
    return spaces;
}

long long ipow(long long base, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) v *= base;
    return v;
}

TruncatedSeries poly_times_t(const TruncatedSeries& s, int k) {
    Exponents e;
    e.t = k;
    return s * TruncatedSeries::monomial(1, e, s.profile());
}

SuiteResult macdonald_oracle_suite(Family family) {
    Recorder rec;
    const int n_max = family == Family::small ? 5 : 6;
    const int d_max = family == Family::small ? 8 : 10;
    for (const auto& [name, space] : oracle_family(family)) {
        const BigradedDims dims = sym_power_dims_oracle(space, n_max, d_max);
        const TruncatedSeries series = macdonald_series(space, n_max, d_max);
        for (int n = 0; n <= n_max; ++n) {
            for (int d = 0; d <= d_max; ++d) {
                const auto it = dims.find({d, n});
                const long long expected = it == dims.end() ? 0 : it->second;
                Exponents e;
                e.q = n;
                e.t = d;
                std::ostringstream what;
                what << name << ": [q^" << n << " t^" << d << "] macdonald="
                     << series.coefficient(e).str() << " oracle=" << expected;
                rec.expect(series.coefficient(e) == Rational(expected), what.str());
            }
        }
    }
    return rec.finish("macdonald-oracle");
}

SuiteResult sphere_cpn_suite(Family family) {
    Recorder rec;
    const int n_max = family == Family::small ? 8 : 10;
    const GradedSpace sphere = resolve(Sphere{2});
    for (int n = 0; n <= n_max; ++n) {
        const std::vector<long long> got = betti_sp(sphere, n);
        const std::vector<long long> want = resolve(ComplexProjective{n}).betti_list();
        std::ostringstream what;
        what << "betti_sp(S^2, " << n << ") differs from CP^" << n;
        rec.expect(got == want, what.str());
    }
    return rec.finish("sphere-cpn");
}

SuiteResult punctured_signature_suite(Family family) {
    Recorder rec;
    const int g_max = family == Family::small ? 6 : 8;
    const int k_max = family == Family::small ? 3 : 4;
    const int n_max = family == Family::small ? 6 : 8;
    // Independent binomials from the Pascal recurrence.
    std::vector<std::vector<long long>> pascal(static_cast<size_t>(g_max) + 1);
    for (int i = 0; i <= g_max; ++i) {
        pascal[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) {
            pascal[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                pascal[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                pascal[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
        }
    }
    auto choose = [&](int g, int n) -> long long {
        return n <= g ? pascal[static_cast<size_t>(g)][static_cast<size_t>(n)] : 0;
    };
    for (int g = 0; g <= g_max; ++g) {
        for (int k = 1; k <= k_max; ++k) {
            for (int n = 0; n <= n_max; ++n) {
                const long long want = (n % 2 == 0 ? 1 : -1) * choose(g, n);
                std::ostringstream what;
                what << "sign(SP^" << 2 * n << "(M_{" << g << "," << k << "})) = "
                     << signature_punctured_sp(g, k, n) << ", expected " << want;
                rec.expect(signature_punctured_sp(g, k, n) == want, what.str());
            }
        }
    }
    // Same 2g+k, same homotopy type, different signatures.
    rec.expect(signature_punctured_sp(2, 1, 2) == 1, "sign(SP^4(M_{2,1})) != 1");
    rec.expect(signature_punctured_sp(1, 3, 2) == 0, "sign(SP^4(M_{1,3})) != 0");
    rec.expect(signature_punctured_sp(2, 1, 2) != signature_punctured_sp(1, 3, 2),
               "distinction scenario failed: signatures agree");
    return rec.finish("punctured-signature");
}

SuiteResult chi_y_closed_form_suite(Family family) {
    Recorder rec;
    const int g_max = family == Family::small ? 4 : 6;
    const int t_order = family == Family::small ? 8 : 10;
    for (int g = 0; g <= g_max; ++g) {
        std::ostringstream what;
        what << "cycle_index_genus(chi_y_seed(" << g << ")) != ((1-t)(1+yt))^" << (g - 1);
        rec.expect(cycle_index_genus(chi_y_seed(g), t_order) == chi_y_sp_series(g, t_order),
                   what.str());
    }
    // g=0 coefficients are chi_y(CP^n) = sum_{k<=n} (-y)^k.
    const TruncatedSeries g0 = chi_y_sp_series(0, t_order);
    const TruncationProfile p = genus_profile(t_order);
    for (int n = 0; n <= t_order; ++n) {
        TruncatedSeries want(p);
        for (int k = 0; k <= n; ++k) {
            Exponents e;
            e.y = k;
            want += TruncatedSeries::monomial(k % 2 == 0 ? 1 : -1, e, p);
        }
        ExponentQuery at;
        at.t = n;
        std::ostringstream what;
        what << "chi_y(CP^" << n << ") != sum_{k<=n} (-y)^k";
        rec.expect(coeff(g0, at) == want, what.str());
    }
    return rec.finish("chi-y-closed-form");
}

SuiteResult chi_y_specializations_suite(Family family) {
    Recorder rec;
    const int g_max = family == Family::small ? 4 : 6;
    const int order = family == Family::small ? 8 : 10;
    for (int g = 0; g <= g_max; ++g) {
        const TruncatedSeries chi_y = chi_y_sp_series(g, order);
        const TruncatedSeries at_minus_one = substitute(chi_y, VarId::y, -1);
        const TruncatedSeries euler =
            rename_var(euler_sp_series(resolve(ClosedSurface{g}), order), VarId::q, VarId::t);
        std::ostringstream what;
        what << "g=" << g << ": chi_y at y=-1 != (1-t)^{-chi}";
        rec.expect(at_minus_one == euler, what.str());

        const TruncatedSeries at_one = substitute(chi_y, VarId::y, 1);
        for (int m = 0; m <= order; ++m) {
            Exponents e;
            e.t = m;
            std::ostringstream w2;
            w2 << "g=" << g << ", m=" << m << ": chi_y at y=1 != signature";
            rec.expect(at_one.coefficient(e) == Rational(signature_closed_sp(g, m)), w2.str());
        }
    }
    return rec.finish("chi-y-specializations");
}

SuiteResult elliptic_closed_form_suite(Family family) {
    Recorder rec;
    const int g_max = family == Family::small ? 4 : 6;
    const int t_order = family == Family::small ? 8 : 10;
    for (int g = 0; g <= g_max; ++g) {
        std::ostringstream what;
        what << "cycle_index_genus(ell_seed(" << g << ")) != (1-t^2)^{(g-1)u}";
        rec.expect(cycle_index_genus(ell_seed(g), t_order) == ell_sp_series(g, t_order),
                   what.str());
    }
    rec.expect(ell_sp_series(1, t_order) ==
                   TruncatedSeries::constant(1, genus_profile(t_order)),
               "g=1 elliptic series is not the constant 1");
    return rec.finish("elliptic-closed-form");
}

SuiteResult trace_oracle_suite(Family family) {
    Recorder rec;
    const int n_max = family == Family::small ? 4 : 5;
    // Every Betti vector over degrees 0..3 with 1 <= total <= 4 (top entry
    // nonzero so each space appears once).
    std::vector<GradedSpace> spaces;
    for (int len = 1; len <= 4; ++len) {
        std::vector<long long> b(static_cast<size_t>(len), 0);
        const auto walk = [&](auto&& self, int pos, long long sum) -> void {
            if (pos == len) {
                if (sum >= 1 && b.back() >= 1) spaces.emplace_back(b);
                return;
            }
            for (long long v = 0; sum + v <= 4; ++v) {
                b[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, sum + v);
            }
            b[static_cast<size_t>(pos)] = 0;
        };
        walk(walk, 0, 0);
    }
    for (const GradedSpace& space : spaces) {
        const long long chi = euler_char(space);
        for (int n = 1; n <= n_max; ++n) {
            for (const CycleType& sigma : cycle_types(n)) {
                const long long got = graded_perm_trace_oracle(space, sigma);
                const long long want = ipow(chi, sigma.cycle_count());
                std::ostringstream what;
                what << "trace mismatch: space betti=(";
                for (size_t i = 0; i < space.betti_list().size(); ++i) {
                    what << (i ? "," : "") << space.betti_list()[i];
                }
                what << "), n=" << n << ", got " << got << ", want chi^c = " << want;
                rec.expect(got == want, what.str());
            }
        }
    }
    return rec.finish("trace-oracle");
}

SuiteResult fibration_stabilization_suite(Family family) {
    Recorder rec;
    const int g_max = 3;
    const int n_max = family == Family::small ? 6 : 7;
    for (int g = 0; g <= g_max; ++g) {
        const GradedSpace surface = resolve(ClosedSurface{g});
        for (int n = std::max(0, 2 * g - 1); n <= n_max; ++n) {
            // P(SP^n(M_g)) = P(CP^{n-g}) (1+t)^{2g} for n > 2g-2.
            TruncationProfile p;
            p.q_order = 0;
            p.t_order = 2 * n;
            p.u_order = 0;
            p.y_min = 0;
            p.y_max = 0;
            TruncatedSeries cp(p);
            for (int i = 0; i <= n - g; ++i) {
                Exponents e;
                e.t = 2 * i;
                cp += TruncatedSeries::monomial(1, e, p);
            }
            Exponents et;
            et.t = 1;
            const TruncatedSeries product =
                cp * pow(TruncatedSeries::constant(1, p) + TruncatedSeries::monomial(1, et, p),
                         2LL * g);
            const std::vector<long long> got = betti_sp(surface, n);
            bool same = true;
            for (int d = 0; d <= 2 * n; ++d) {
                Exponents e;
                e.t = d;
                if (!(product.coefficient(e) == Rational(got[static_cast<size_t>(d)]))) {
                    same = false;
                }
            }
            std::ostringstream what;
            what << "fibration law fails for g=" << g << ", n=" << n;
            rec.expect(same, what.str());
        }
        // Low degrees agree with the stable series once n >= d.
        const TruncatedSeries stable = stable_betti_series(g, n_max);
        for (int n = 0; n <= n_max; ++n) {
            const std::vector<long long> got = betti_sp(surface, n);
            for (int d = 0; d <= n && d <= 2 * n; ++d) {
                Exponents e;
                e.t = d;
                std::ostringstream what;
                what << "stabilization fails for g=" << g << ", n=" << n << ", d=" << d;
                rec.expect(stable.coefficient(e) == Rational(got[static_cast<size_t>(d)]),
                           what.str());
            }
        }
    }
    return rec.finish("fibration-stabilization");
}

SuiteResult dmvv_suite(Family family) {
    Recorder rec;
    // Two-colored partitions.
    const EllCoefficients two = {{{0, 0}, 2}};
    const TruncatedSeries series = dmvv_series(two, 4, 0, 0, 0);
    const long long expected[5] = {1, 2, 5, 10, 20};
    for (int i = 0; i <= 4; ++i) {
        Exponents e;
        e.t = i;
        std::ostringstream what;
        what << "[t^" << i << "] of the c(0,0)=2 product != " << expected[i];
        rec.expect(series.coefficient(e) == Rational(expected[i]), what.str());
    }
    // Euler-factor specialization vs the conjugacy-class sum.
    const int n_max = family == Family::small ? 6 : 7;
    for (long long chi = -2; chi <= 3; ++chi) {
        const GradedSpace space = chi >= 1 ? GradedSpace({1, 0, chi - 1}) : GradedSpace({1, 1 - chi});
        const EllCoefficients c = {{{0, 0}, chi}};
        const TruncatedSeries euler_product = dmvv_series(c, n_max, 0, 0, 0);
        for (int n = 1; n <= n_max; ++n) {
            Exponents e;
            e.t = n;
            std::ostringstream what;
            what << "orbifold Euler mismatch at chi=" << chi << ", n=" << n;
            rec.expect(Rational(orbifold_euler_bruteforce(space, n)) ==
                           euler_product.coefficient(e),
                       what.str());
        }
    }
    // Deterministic log-checks.
    rec.expect(dmvv_log_check({{{0, 0}, 1}}, 6, 6, -6, 6), "log-check fails on c(0,0)=1");
    rec.expect(dmvv_log_check({{{1, -1}, 1}, {{1, 1}, 1}}, 6, 6, -6, 6),
               "log-check fails on c(1,-1)=c(1,1)=1");
    rec.expect(dmvv_log_check({{{0, 0}, -2}}, 6, 6, -6, 6), "log-check fails on c(0,0)=-2");
    // Randomized family.
    const int cases = family == Family::small ? 25 : 60;
    rec.expect(dmvv_random_family(kDmvvFamilySeed, cases), "randomized dmvv log-check family");
    // Non-negativity of colored-partition counts.
    for (long long c = 0; c <= 3; ++c) {
        const TruncatedSeries s = dmvv_series({{{0, 0}, c}}, 6, 0, 0, 0);
        bool non_negative = true;
        for (const auto& [e, v] : s.terms()) {
            if (v < Rational(0)) non_negative = false;
        }
        std::ostringstream what;
        what << "negative coefficient in the c(0,0)=" << c << " product";
        rec.expect(non_negative, what.str());
    }
    return rec.finish("dmvv");
}

SuiteResult euler_macdonald_suite(Family family) {
    Recorder rec;
    const int q_order = family == Family::small ? 6 : 7;
    for (const auto& [name, space] : oracle_family(family)) {
        const int t_order = q_order * std::max(1, space.top_degree());
        const TruncatedSeries at_minus_one =
            substitute(macdonald_series(space, q_order, t_order), VarId::t, -1);
        const TruncatedSeries euler = euler_sp_series(space, q_order);
        rec.expect(at_minus_one == euler, name + ": macdonald at t=-1 != (1-q)^{-chi}");
    }
    return rec.finish("euler-macdonald");
}

SuiteResult cycle_index_dual_suite(Family family) {
    Recorder rec;
    const int t_order = family == Family::small ? 7 : 8;
    const int g_max = family == Family::small ? 4 : 5;
    std::vector<std::pair<std::string, GenusSeed>> seeds;
    for (long long chi = -3; chi <= 3; ++chi) {
        seeds.emplace_back("constant " + std::to_string(chi), constant_genus_seed(chi));
    }
    for (int g = 0; g <= g_max; ++g) {
        seeds.emplace_back("chi_y g=" + std::to_string(g), chi_y_seed(g));
        seeds.emplace_back("ell g=" + std::to_string(g), ell_seed(g));
    }
    for (const auto& [name, seed] : seeds) {
        rec.expect(cycle_index_genus(seed, t_order) == cycle_index_genus_direct(seed, t_order),
                   "exp form and cycle-type sum disagree for seed " + name);
    }
    return rec.finish("cycle-index-dual");
}

}  // namespace

std::vector<SuiteResult> run_all(Family family) {
    std::vector<SuiteResult> results;
    results.push_back(macdonald_oracle_suite(family));
    results.push_back(sphere_cpn_suite(family));
    results.push_back(punctured_signature_suite(family));
    results.push_back(chi_y_closed_form_suite(family));
    results.push_back(chi_y_specializations_suite(family));
    results.push_back(elliptic_closed_form_suite(family));
    results.push_back(trace_oracle_suite(family));
    results.push_back(fibration_stabilization_suite(family));
    results.push_back(dmvv_suite(family));
    results.push_back(euler_macdonald_suite(family));
    results.push_back(cycle_index_dual_suite(family));
    return results;
}

}  // namespace symprod::checks
