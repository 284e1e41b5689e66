#include <stdexcept>
#include <string>

#include "doctest.h"
#include "symprod/genera.hpp"
#include "symprod/orbifold.hpp"

using namespace symprod;

namespace {

Rational t_coefficient(const TruncatedSeries& s, int t) {
    Exponents e;
    e.t = t;
    return s.coefficient(e);
}

}  // namespace

TEST_CASE("dmvv product with c(0,0)=2 counts two-colored partitions") {
    const TruncatedSeries s = dmvv_series({{{0, 0}, 2}}, 4, 0, 0, 0);
    const long long expected[5] = {1, 2, 5, 10, 20};
    for (int i = 0; i <= 4; ++i) CHECK(t_coefficient(s, i) == Rational(expected[i]));
}

TEST_CASE("dmvv product with no coefficients is 1") {
    const TruncatedSeries s = dmvv_series({}, 5, 5, -5, 5);
    CHECK(s == TruncatedSeries::constant(1, s.profile()));
}

TEST_CASE("dmvv negative exponents expand through polynomial factors") {
    // c(0,0) = -1 gives prod (1-t^i), the Euler function.
    const TruncatedSeries s = dmvv_series({{{0, 0}, -1}}, 6, 0, 0, 0);
    const long long pentagonal[7] = {1, -1, -1, 0, 0, 1, 0};
    for (int i = 0; i <= 6; ++i) CHECK(t_coefficient(s, i) == Rational(pentagonal[i]));
}

TEST_CASE("dmvv log identity") {
    CHECK(dmvv_log_check({{{0, 0}, 1}}, 6, 6, -6, 6));
    CHECK(dmvv_log_check({{{1, -1}, 1}, {{1, 1}, 1}}, 6, 6, -6, 6));
    CHECK(dmvv_log_check({{{0, 0}, -2}}, 6, 6, -6, 6));
    CHECK(dmvv_log_check({{{2, 1}, 3}, {{0, -2}, -1}}, 5, 5, -12, 12));
}

TEST_CASE("dmvv randomized log-check family") {
    CHECK(dmvv_random_family(0x53504746ULL, 25));
}

TEST_CASE("colored-partition coefficients are non-negative") {
    for (long long c = 0; c <= 3; ++c) {
        const TruncatedSeries s = dmvv_series({{{0, 0}, c}}, 6, 0, 0, 0);
        for (const auto& [e, v] : s.terms()) CHECK(v > Rational(0));
    }
}

TEST_CASE("orbifold Euler characteristic by conjugacy-class enumeration") {
    SUBCASE("sphere fixtures") {
        CHECK(orbifold_euler_bruteforce(resolve(Sphere{2}), 2) == 5);
        CHECK(orbifold_euler_bruteforce(resolve(Sphere{2}), 3) == 10);
    }
    SUBCASE("chi = 0 collapses everything") {
        for (int n = 1; n <= 5; ++n) {
            CHECK(orbifold_euler_bruteforce(resolve(ClosedSurface{1}), n) == 0);
        }
    }
    SUBCASE("matches the Euler-factor product for several chi") {
        for (long long chi = -2; chi <= 3; ++chi) {
            const GradedSpace space = chi >= 1 ? GradedSpace({1, 0, chi - 1})
                                               : GradedSpace({1, 1 - chi});
            const TruncatedSeries product = dmvv_series({{{0, 0}, chi}}, 6, 0, 0, 0);
            for (int n = 1; n <= 6; ++n) {
                CHECK(Rational(orbifold_euler_bruteforce(space, n)) == t_coefficient(product, n));
            }
        }
    }
    SUBCASE("n must be positive") {
        CHECK_THROWS_AS(orbifold_euler_bruteforce(resolve(Sphere{2}), 0), std::invalid_argument);
    }
}

TEST_CASE("coefficient file parsing") {
    SUBCASE("entries, comments and blank lines") {
        const EllCoefficients c = parse_ell_coefficients_text(
            "# Ell(X) of some surface\n"
            "0 0 2\n"
            "\n"
            "1 -1 1\n"
            "  # indented comment\n"
            "1 1 -3\n");
        REQUIRE(c.size() == 3);
        CHECK(c.at({0, 0}) == 2);
        CHECK(c.at({1, -1}) == 1);
        CHECK(c.at({1, 1}) == -3);
    }
    SUBCASE("duplicate keys are an error with a line number") {
        try {
            parse_ell_coefficients_text("0 0 1\n0 0 2\n");
            CHECK(false);
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
            CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
        }
    }
    SUBCASE("malformed rows") {
        CHECK_THROWS_AS(parse_ell_coefficients_text("0 0\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_ell_coefficients_text("0 0 x\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_ell_coefficients_text("0 0 1 9\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_ell_coefficients_text("-1 0 1\n"), std::invalid_argument);
    }
    SUBCASE("empty input is the empty map") {
        CHECK(parse_ell_coefficients_text("").empty());
        CHECK(parse_ell_coefficients_text("# only a comment\n").empty());
    }
}

TEST_CASE("dmvv window arguments are validated") {
    CHECK_THROWS_AS(dmvv_series({}, -1, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(dmvv_series({}, 3, 3, 1, 3), std::invalid_argument);
}

TEST_CASE("y truncation drops factors entirely outside the window") {
    // With window [0,0] the y-carrying factors disappear and only c(0,0) acts.
    const TruncatedSeries narrow = dmvv_series({{{0, 0}, 1}, {{0, 3}, 5}}, 4, 0, 0, 0);
    const TruncatedSeries plain = dmvv_series({{{0, 0}, 1}}, 4, 0, 0, 0);
    CHECK(narrow == plain);
}
