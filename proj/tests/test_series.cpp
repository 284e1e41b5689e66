#include <stdexcept>

#include "doctest.h"
#include "symprod/series.hpp"

using namespace symprod;

namespace {

TruncationProfile qt_profile(int q, int t) {
    TruncationProfile p;
    p.q_order = q;
    p.t_order = t;
    p.u_order = 0;
    p.y_min = 0;
    p.y_max = 0;
    return p;
}

TruncatedSeries mono(const Rational& c, int q, int t, int y, int u, const TruncationProfile& p) {
    Exponents e;
    e.q = q;
    e.t = t;
    e.y = y;
    e.u = u;
    return TruncatedSeries::monomial(c, e, p);
}

}  // namespace

TEST_CASE("profile validation") {
    TruncationProfile p;
    p.q_order = -1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    TruncationProfile w;
    w.y_min = 1;
    CHECK_THROWS_AS(w.validate(), std::invalid_argument);
    w.y_min = 0;
    w.y_max = -1;
    CHECK_THROWS_AS(w.validate(), std::invalid_argument);
}

TEST_CASE("addition") {
    const TruncationProfile p = qt_profile(3, 3);
    const TruncatedSeries one_plus_t = TruncatedSeries::constant(1, p) + mono(1, 0, 1, 0, 0, p);
    const TruncatedSeries one_minus_t = TruncatedSeries::constant(1, p) - mono(1, 0, 1, 0, 0, p);
    CHECK(one_plus_t + one_minus_t == TruncatedSeries::constant(2, p));

    const TruncatedSeries s = mono(3, 1, 2, 0, 0, p) + mono(Rational(1, 2), 0, 1, 0, 0, p);
    CHECK(s + TruncatedSeries(p) == s);

    const TruncatedSeries disjoint = mono(1, 1, 0, 0, 0, p) + mono(1, 1, 1, 0, 0, p);
    CHECK(disjoint.terms().size() == 2);
    Exponents eq;
    eq.q = 1;
    CHECK(disjoint.coefficient(eq) == Rational(1));
}

TEST_CASE("profile mismatch is rejected") {
    const TruncatedSeries a = TruncatedSeries::constant(1, qt_profile(3, 3));
    const TruncatedSeries b = TruncatedSeries::constant(1, qt_profile(3, 4));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a - b, std::invalid_argument);
}

TEST_CASE("multiplication") {
    const TruncationProfile p = qt_profile(2, 4);
    const TruncatedSeries one_plus_t = TruncatedSeries::constant(1, p) + mono(1, 0, 1, 0, 0, p);
    Exponents et;
    et.t = 1;
    const TruncatedSeries sq = one_plus_t * one_plus_t;
    CHECK(sq.coefficient(et) == Rational(2));
    CHECK(sq.terms().size() == 3);

    // (1-t) * (1+t+...+t^N) == 1 after truncation.
    const TruncatedSeries geom = inv_one_minus(mono(1, 0, 1, 0, 0, p));
    const TruncatedSeries one_minus_t = TruncatedSeries::constant(1, p) - mono(1, 0, 1, 0, 0, p);
    CHECK(one_minus_t * geom == TruncatedSeries::constant(1, p));
}

TEST_CASE("torus SP^2 Poincare polynomial from the product form") {
    // (1+qt)^2 / ((1-q)(1-qt^2)), coefficient of q^2.
    const TruncationProfile p = qt_profile(2, 4);
    const TruncatedSeries one_plus_qt = TruncatedSeries::constant(1, p) + mono(1, 1, 1, 0, 0, p);
    const TruncatedSeries s = one_plus_qt * one_plus_qt * inv_one_minus(mono(1, 1, 0, 0, 0, p)) *
                              inv_one_minus(mono(1, 1, 2, 0, 0, p));
    ExponentQuery at;
    at.q = 2;
    const TruncatedSeries p2 = coeff(s, at);
    const long long expected[5] = {1, 2, 2, 2, 1};
    for (int d = 0; d <= 4; ++d) {
        Exponents e;
        e.t = d;
        CHECK(p2.coefficient(e) == Rational(expected[d]));
    }
}

TEST_CASE("inv_one_minus") {
    SUBCASE("geometric series in q") {
        const TruncationProfile p = qt_profile(3, 0);
        const TruncatedSeries s = inv_one_minus(mono(1, 1, 0, 0, 0, p));
        CHECK(s.terms().size() == 4);
        for (int n = 0; n <= 3; ++n) {
            Exponents e;
            e.q = n;
            CHECK(s.coefficient(e) == Rational(1));
        }
    }
    SUBCASE("mixed monomial qt^2") {
        const TruncationProfile p = qt_profile(2, 4);
        const TruncatedSeries s = inv_one_minus(mono(1, 1, 2, 0, 0, p));
        CHECK(s.terms().size() == 3);
        Exponents e;
        e.q = 2;
        e.t = 4;
        CHECK(s.coefficient(e) == Rational(1));
    }
    SUBCASE("monomial carrying y") {
        TruncationProfile p = qt_profile(0, 3);
        p.y_max = 3;
        const TruncatedSeries s = inv_one_minus(mono(1, 0, 1, 1, 0, p));
        Exponents e;
        e.t = 3;
        e.y = 3;
        CHECK(s.coefficient(e) == Rational(1));
        CHECK(s.terms().size() == 4);
    }
    SUBCASE("rejects constants and non-terminating directions") {
        TruncationProfile p = qt_profile(2, 2);
        p.y_max = 2;
        CHECK_THROWS_AS(inv_one_minus(TruncatedSeries::constant(1, p)), std::invalid_argument);
        CHECK_THROWS_AS(inv_one_minus(mono(1, 0, 0, 1, 0, p)), std::invalid_argument);
        CHECK_THROWS_AS(inv_one_minus(mono(1, 1, 0, 0, 0, p) + mono(1, 0, 1, 0, 0, p)),
                        std::invalid_argument);
    }
}

TEST_CASE("exp") {
    const TruncationProfile p = qt_profile(3, 0);
    SUBCASE("exp(0) = 1") {
        CHECK(exp(TruncatedSeries(p)) == TruncatedSeries::constant(1, p));
    }
    SUBCASE("exp(-chi log(1-q)) for chi=2") {
        const TruncatedSeries log_term = log_one_plus(mono(-1, 1, 0, 0, 0, p));
        const TruncatedSeries s = exp(log_term * Rational(-2));
        for (int n = 0; n <= 3; ++n) {
            Exponents e;
            e.q = n;
            CHECK(s.coefficient(e) == Rational(n + 1));
        }
    }
    SUBCASE("elliptic seed sum for g=0") {
        TruncationProfile gp = qt_profile(0, 4);
        gp.u_order = 2;
        TruncatedSeries arg(gp);
        for (int r = 2; r <= 4; r += 2) {
            arg += mono(Rational(2, r), 0, r, 0, 1, gp);
        }
        const TruncatedSeries s = exp(arg);
        Exponents t2;
        t2.t = 2;
        t2.u = 1;
        CHECK(s.coefficient(t2) == Rational(1));
        Exponents t4u1;
        t4u1.t = 4;
        t4u1.u = 1;
        Exponents t4u2;
        t4u2.t = 4;
        t4u2.u = 2;
        CHECK(s.coefficient(t4u1) == Rational(1, 2));
        CHECK(s.coefficient(t4u2) == Rational(1, 2));
    }
    SUBCASE("nonzero constant term is rejected") {
        CHECK_THROWS_AS(exp(TruncatedSeries::constant(1, p)), std::invalid_argument);
    }
    SUBCASE("pure-y argument is rejected (would not terminate)") {
        TruncationProfile yp = qt_profile(0, 0);
        yp.y_max = 4;
        CHECK_THROWS_AS(exp(mono(1, 0, 0, 1, 0, yp)), std::invalid_argument);
    }
}

TEST_CASE("log_one_plus") {
    const TruncationProfile p = qt_profile(0, 3);
    SUBCASE("log(1+0) = 0") {
        CHECK(log_one_plus(TruncatedSeries(p)).is_zero());
    }
    SUBCASE("Mercator series at -t") {
        const TruncatedSeries s = log_one_plus(mono(-1, 0, 1, 0, 0, p));
        Exponents e1;
        e1.t = 1;
        Exponents e2;
        e2.t = 2;
        Exponents e3;
        e3.t = 3;
        CHECK(s.coefficient(e1) == Rational(-1));
        CHECK(s.coefficient(e2) == Rational(-1, 2));
        CHECK(s.coefficient(e3) == Rational(-1, 3));
    }
    SUBCASE("exp . log_one_plus round-trip") {
        const TruncatedSeries s = mono(2, 0, 1, 0, 0, p) + mono(Rational(-1, 3), 0, 2, 0, 0, p);
        CHECK(exp(log_one_plus(s)) == TruncatedSeries::constant(1, p) + s);
        CHECK(log_one_plus(exp(s) - TruncatedSeries::constant(1, p)) == s);
    }
    SUBCASE("nonzero constant term is rejected") {
        CHECK_THROWS_AS(log_one_plus(TruncatedSeries::constant(2, p)), std::invalid_argument);
    }
}

TEST_CASE("pow") {
    SUBCASE("integer power (1-t^2)^{g-1}, g=2") {
        const TruncationProfile p = qt_profile(0, 4);
        const TruncatedSeries base =
            TruncatedSeries::constant(1, p) - mono(1, 0, 2, 0, 0, p);
        CHECK(pow(base, 1) == base);
    }
    SUBCASE("chi_y of projective spaces via a negative power") {
        TruncationProfile p = qt_profile(0, 2);
        p.y_max = 2;
        const TruncatedSeries base =
            (TruncatedSeries::constant(1, p) - mono(1, 0, 1, 0, 0, p)) *
            (TruncatedSeries::constant(1, p) + mono(1, 0, 1, 1, 0, p));
        const TruncatedSeries s = pow(base, -1);
        // 1 + (1-y)t + (1-y+y^2)t^2
        Exponents t1;
        t1.t = 1;
        CHECK(s.coefficient(t1) == Rational(1));
        t1.y = 1;
        CHECK(s.coefficient(t1) == Rational(-1));
        Exponents t2;
        t2.t = 2;
        t2.y = 2;
        CHECK(s.coefficient(t2) == Rational(1));
        t2.y = 1;
        CHECK(s.coefficient(t2) == Rational(-1));
    }
    SUBCASE("formal u exponent (fractional binomial)") {
        TruncationProfile p = qt_profile(0, 4);
        p.u_order = 2;
        const TruncatedSeries base =
            TruncatedSeries::constant(1, p) - mono(1, 0, 2, 0, 0, p);
        const TruncatedSeries s = pow(base, -mono(1, 0, 0, 0, 1, p));
        Exponents e;
        e.t = 2;
        e.u = 1;
        CHECK(s.coefficient(e) == Rational(1));
        e.t = 4;
        CHECK(s.coefficient(e) == Rational(1, 2));
        e.u = 2;
        CHECK(s.coefficient(e) == Rational(1, 2));
    }
    SUBCASE("integer exponents match repeated multiplication") {
        const TruncationProfile p = qt_profile(0, 5);
        const TruncatedSeries base = TruncatedSeries::constant(1, p) + mono(1, 0, 1, 0, 0, p) +
                                     mono(Rational(1, 2), 0, 2, 0, 0, p);
        TruncatedSeries repeated = TruncatedSeries::constant(1, p);
        for (int m = 1; m <= 5; ++m) {
            repeated = repeated * base;
            CHECK(pow(base, m) == repeated);
        }
        CHECK(pow(base, 3) * pow(base, -3) == TruncatedSeries::constant(1, p));
    }
    SUBCASE("preconditions") {
        const TruncationProfile p = qt_profile(0, 3);
        CHECK_THROWS_AS(pow(TruncatedSeries::constant(2, p), 2), std::invalid_argument);
        const TruncatedSeries base = TruncatedSeries::constant(1, p) + mono(1, 0, 1, 0, 0, p);
        CHECK_THROWS_AS(pow(base, base), std::invalid_argument);  // exponent involves t
    }
}

TEST_CASE("coeff extraction") {
    const TruncationProfile p = qt_profile(2, 2);
    const TruncatedSeries s = TruncatedSeries::constant(1, p) + mono(2, 1, 1, 0, 0, p) +
                              mono(1, 2, 2, 0, 0, p);
    ExponentQuery at;
    at.q = 1;
    const TruncatedSeries c1 = coeff(s, at);
    Exponents et;
    et.t = 1;
    CHECK(c1.coefficient(et) == Rational(2));
    CHECK(c1.terms().size() == 1);
    CHECK(coeff_q(s, 1) == c1);

    at.q = 3;
    CHECK_THROWS_AS(coeff(s, at), std::invalid_argument);
}

TEST_CASE("y-window modes") {
    SUBCASE("strict windows refuse escaping products") {
        TruncationProfile p = qt_profile(0, 4);
        p.y_max = 1;
        const TruncatedSeries ty = mono(1, 0, 1, 1, 0, p);
        CHECK_THROWS_AS(ty * ty, std::overflow_error);
    }
    SUBCASE("truncating windows drop escaping products") {
        TruncationProfile p = qt_profile(0, 4);
        p.y_max = 1;
        p.y_mode = YWindowMode::truncating;
        const TruncatedSeries ty = mono(1, 0, 1, 1, 0, p);
        CHECK((ty * ty).is_zero());
    }
    SUBCASE("negative y exponents live in the Laurent window") {
        TruncationProfile p = qt_profile(1, 1);
        p.y_min = -2;
        p.y_max = 2;
        const TruncatedSeries s = mono(1, 1, 0, -1, 0, p) * mono(1, 0, 1, -1, 0, p);
        Exponents e;
        e.q = 1;
        e.t = 1;
        e.y = -2;
        CHECK(s.coefficient(e) == Rational(1));
    }
}

TEST_CASE("monomial and coefficient bounds") {
    const TruncationProfile p = qt_profile(2, 2);
    Exponents neg;
    neg.t = -1;
    CHECK_THROWS_AS(TruncatedSeries::monomial(1, neg, p), std::invalid_argument);
    // q/t/u overflow truncates silently.
    Exponents big;
    big.q = 3;
    CHECK(TruncatedSeries::monomial(1, big, p).is_zero());
    Exponents out;
    out.q = 5;
    CHECK_THROWS_AS(TruncatedSeries::constant(1, p).coefficient(out), std::invalid_argument);
}

TEST_CASE("substitute") {
    const TruncationProfile p = qt_profile(0, 3);
    const TruncatedSeries s = TruncatedSeries::constant(1, p) + mono(3, 0, 1, 0, 0, p) +
                              mono(1, 0, 2, 0, 0, p);
    const TruncatedSeries at_minus_one = substitute(s, VarId::t, -1);
    CHECK(at_minus_one == TruncatedSeries::constant(-1, at_minus_one.profile()));
    const TruncatedSeries at_zero = substitute(s, VarId::t, 0);
    CHECK(at_zero.constant_term() == Rational(1));
    CHECK(at_zero.terms().size() == 1);
}

TEST_CASE("rename_var") {
    const TruncationProfile p = qt_profile(3, 0);
    const TruncatedSeries s = TruncatedSeries::constant(1, p) + mono(2, 1, 0, 0, 0, p);
    const TruncatedSeries renamed = rename_var(s, VarId::q, VarId::t);
    CHECK(renamed.profile().t_order == 3);
    CHECK(renamed.profile().q_order == 0);
    Exponents e;
    e.t = 1;
    CHECK(renamed.coefficient(e) == Rational(2));

    const TruncationProfile p2 = qt_profile(2, 2);
    const TruncatedSeries mixed = mono(1, 1, 1, 0, 0, p2);
    CHECK_THROWS_AS(rename_var(mixed, VarId::q, VarId::t), std::invalid_argument);
    CHECK_THROWS_AS(rename_var(s, VarId::q, VarId::y), std::invalid_argument);
}

TEST_CASE("to_string") {
    TruncationProfile p = qt_profile(2, 2);
    p.y_min = -2;
    p.y_max = 2;
    p.u_order = 2;
    CHECK(to_string(TruncatedSeries(p)) == "0");
    const TruncatedSeries s = TruncatedSeries::constant(1, p) - mono(Rational(1, 2), 0, 2, 0, 0, p);
    CHECK(to_string(s) == "1 - 1/2*t^2");
    const TruncatedSeries m = mono(1, 1, 0, -2, 1, p);
    CHECK(to_string(m) == "q*y^-2*u");
    CHECK(to_string(m, {"q", "t", "y", "e^(1/4)"}) == "q*y^-2*e^(1/4)");
    const TruncatedSeries neg = -mono(1, 0, 1, 0, 0, p) + mono(1, 0, 2, 0, 0, p);
    CHECK(to_string(neg) == "-t + t^2");
}

TEST_CASE("equality is term-map equality") {
    // Same terms under different profiles still compare equal.
    const TruncatedSeries a = TruncatedSeries::constant(3, qt_profile(2, 2));
    const TruncatedSeries b = TruncatedSeries::constant(3, qt_profile(5, 5));
    CHECK(a == b);
}
