#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polynomial.hpp"

using namespace qch;

TEST_CASE("evaluation") {
    UniPoly p{std::vector<Int>{0, -1, 1}};  // t^2 - t
    CHECK(p(Int(6)) == 30);
    CHECK(UniPoly()(Int(123)) == 0);

    // (t^2 - 4t) + 4tx at (6, 1): total-count conservation gives 6^2
    BiPoly chi = BiPoly::monomial(2, 0, 1) + BiPoly::monomial(1, 0, -4) + BiPoly::monomial(1, 1, 4);
    CHECK(chi(Int(6), Int(1)) == 36);
    CHECK(BiPoly()(Int(5), Int(7)) == 0);
}

TEST_CASE("interpolation on the pinned samples") {
    using Samples = std::vector<std::pair<Int, Int>>;
    CHECK(interpolate(Samples{{1, 0}, {2, 1}, {3, 2}}, 2) ==
          UniPoly{std::vector<Int>{-1, 1}});  // t - 1
    CHECK(interpolate(Samples{{1, 0}, {2, 2}, {3, 6}, {4, 12}}, 3) ==
          UniPoly{std::vector<Int>{0, -1, 1}});  // t^2 - t
    CHECK_THROWS_AS(interpolate(Samples{{1, 0}, {2, 1}}, 2), input_error);
    CHECK_THROWS_AS(interpolate(Samples{{1, 0}, {1, 1}, {2, 2}}, 2), input_error);
    // non-integer result is an error, never a rounding
    CHECK_THROWS_AS(interpolate(Samples{{0, 0}, {2, 1}, {4, 2}}, 2), interpolation_error);
    // samples of t^2 with a claimed bound of 1
    CHECK_THROWS_AS(interpolate(Samples{{0, 0}, {1, 1}, {2, 4}}, 1), interpolation_error);
}

TEST_CASE("interpolation round-trips random integer polynomials") {
    auto rng = oracles::seeded_rng(10);
    std::uniform_int_distribution<int> coeff(-100, 100), deg(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        int d = deg(rng);
        std::vector<Int> c(d + 1);
        for (Int& x : c) x = coeff(rng);
        UniPoly p{std::move(c)};
        std::vector<std::pair<Int, Int>> samples;
        for (int node = 1; node <= d + 1; ++node) samples.emplace_back(node, p(Int(node)));
        CHECK(interpolate(samples, d) == p);
    }
}

TEST_CASE("canonical text rendering") {
    BiPoly chi = BiPoly::monomial(2, 0, 1) + BiPoly::monomial(1, 0, -4) + BiPoly::monomial(1, 1, 4);
    CHECK(chi.str() == "t^2 - 4*t + 4*t*x");
    CHECK(BiPoly().str() == "0");
    BiPoly w = BiPoly::monomial(2, 0, 1) + BiPoly::monomial(1, 1, 3) + BiPoly::monomial(0, 2, 2);
    CHECK(w.str("x", "y") == "x^2 + 3*x*y + 2*y^2");
    UniPoly p{std::vector<Int>{2, 0, -1, 5}};
    CHECK(p.str() == "5*t^3 - t^2 + 2");
    CHECK(UniPoly{std::vector<Int>{-7}}.str("x") == "-7");
    CHECK(UniPoly{std::vector<Int>{0, 1}}.str() == "t");
}

TEST_CASE("bivariate arithmetic and substitution") {
    BiPoly x = BiPoly::monomial(1, 0, 1), y = BiPoly::monomial(0, 1, 1);
    BiPoly lhs = (x - BiPoly::constant(1)) * (x + BiPoly::constant(1));
    CHECK(lhs == x * x - BiPoly::constant(1));
    CHECK((x + y).pow(2) == x * x + BiPoly::monomial(1, 1, 2) + y * y);

    // substitute t -> (x-1)(y-1), x -> y in t + x
    BiPoly t_plus_x = BiPoly::monomial(1, 0, 1) + BiPoly::monomial(0, 1, 1);
    BiPoly substituted =
        t_plus_x.substituted((x - BiPoly::constant(1)) * (y - BiPoly::constant(1)), y);
    CHECK(substituted == x * y - x + BiPoly::constant(1));

    BiPoly chi = BiPoly::monomial(2, 0, 1) + BiPoly::monomial(1, 1, 4);
    CHECK(chi.coefficient_of_second(0) == UniPoly{std::vector<Int>{0, 0, 1}});
    CHECK(chi.coefficient_of_second(1) == UniPoly{std::vector<Int>{0, 4}});
    CHECK(chi.evaluate_first(Int(6)) == UniPoly{std::vector<Int>{36, 24}});
}
