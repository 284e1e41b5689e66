#include <stdexcept>

#include "doctest.h"
#include "symprod/descriptor.hpp"
#include "symprod/spaces.hpp"

using namespace symprod;

TEST_CASE("space resolution") {
    CHECK(resolve(Sphere{2}).betti_list() == std::vector<long long>{1, 0, 1});
    CHECK(resolve(Sphere{1}).betti_list() == std::vector<long long>{1, 1});
    CHECK(resolve(Sphere{4}).betti_list() == std::vector<long long>{1, 0, 0, 0, 1});
    CHECK(resolve(ClosedSurface{0}).betti_list() == std::vector<long long>{1, 0, 1});
    CHECK(resolve(ClosedSurface{2}).betti_list() == std::vector<long long>{1, 4, 1});
    CHECK(resolve(PuncturedSurface{1, 1}).betti_list() == std::vector<long long>{1, 2});
    CHECK(resolve(PuncturedSurface{2, 3}).betti_list() == std::vector<long long>{1, 6});
    CHECK(resolve(ComplexProjective{3}).betti_list() ==
          std::vector<long long>{1, 0, 1, 0, 1, 0, 1});
    CHECK(resolve(ComplexProjective{0}).betti_list() == std::vector<long long>{1});
    CHECK(resolve(RealProjectivePlane{}).betti_list() == std::vector<long long>{1});
    CHECK(resolve(RawBetti{{1, 4, 1}}).betti_list() == std::vector<long long>{1, 4, 1});
}

TEST_CASE("resolution rejects malformed specs") {
    CHECK_THROWS_AS(resolve(Sphere{0}), std::invalid_argument);
    CHECK_THROWS_AS(resolve(ClosedSurface{-1}), std::invalid_argument);
    CHECK_THROWS_AS(resolve(PuncturedSurface{1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(resolve(ComplexProjective{-1}), std::invalid_argument);
    CHECK_THROWS_AS(resolve(RawBetti{{}}), std::invalid_argument);
    CHECK_THROWS_AS(resolve(RawBetti{{1, -2}}), std::invalid_argument);
}

TEST_CASE("euler characteristics") {
    CHECK(euler_char(resolve(Sphere{2})) == 2);
    CHECK(euler_char(resolve(ClosedSurface{2})) == -2);
    CHECK(euler_char(resolve(PuncturedSurface{1, 1})) == -1);
    // chi = 2 - 2g - k for a punctured surface.
    for (int g = 0; g <= 3; ++g) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(euler_char(resolve(PuncturedSurface{g, k})) == 2 - 2 * g - k);
        }
    }
}

TEST_CASE("graded space accessors") {
    const GradedSpace s = resolve(ClosedSurface{2});
    CHECK(s.top_degree() == 2);
    CHECK(s.betti(1) == 4);
    CHECK(s.betti(3) == 0);
    CHECK(s.betti(-1) == 0);
    CHECK(s.total_dim() == 6);
}

TEST_CASE("descriptor parsing") {
    CHECK(resolve(parse_descriptor("sphere:2")) == resolve(Sphere{2}));
    CHECK(resolve(parse_descriptor("surface:g=2")) == resolve(ClosedSurface{2}));
    CHECK(resolve(parse_descriptor("surface:g=2,k=1")) == resolve(PuncturedSurface{2, 1}));
    CHECK(resolve(parse_descriptor("cp:3")) == resolve(ComplexProjective{3}));
    CHECK(resolve(parse_descriptor("rp2")) == resolve(RealProjectivePlane{}));
    CHECK(resolve(parse_descriptor("betti:1,4,1")) == resolve(RawBetti{{1, 4, 1}}));
    // The punctured pair is retained, not just the homotopy type.
    const SpaceSpec punctured = parse_descriptor("surface:g=2,k=1");
    CHECK(std::holds_alternative<PuncturedSurface>(punctured));
    CHECK(std::get<PuncturedSurface>(punctured).genus == 2);
    CHECK(std::get<PuncturedSurface>(punctured).punctures == 1);
}

TEST_CASE("descriptor errors") {
    CHECK_THROWS_AS(parse_descriptor("surface:k=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("sphere:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("sphere:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("betti:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("betti:1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("betti:1,-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("surface:g=2,k=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("surface:g=2 ,k=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("sphere:2x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor(""), std::invalid_argument);
    try {
        parse_descriptor("surface:k=1");
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("position") != std::string::npos);
    }
}

TEST_CASE("describe round-trips") {
    const char* descriptors[] = {"sphere:2",  "surface:g=2", "surface:g=1,k=3",
                                 "cp:4",      "rp2",         "betti:1,4,1"};
    for (const char* d : descriptors) {
        const SpaceSpec spec = parse_descriptor(d);
        CHECK(describe(spec) == d);
    }
}
