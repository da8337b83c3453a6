#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coboundary.hpp"
#include "codes.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace qch;

namespace {

const RingSpec kZ = RingSpec::integers();

Arrangement z_arrangement(int rank, std::vector<std::vector<long>> cols) {
    std::vector<std::vector<RingElement>> columns;
    for (const auto& col : cols) {
        std::vector<RingElement> c;
        for (long v : col) c.push_back(RingElement::integer(kZ, v));
        columns.push_back(std::move(c));
    }
    return Arrangement(kZ, rank, std::move(columns));
}

Ideal z_ideal(long q) { return Ideal::principal_integer(kZ, q); }

std::vector<Int> ints(std::vector<long> v) { return std::vector<Int>(v.begin(), v.end()); }

Arrangement random_z_arrangement(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3), rank_d(1, 3), count_d(1, 4);
    int rank = rank_d(rng), n = count_d(rng);
    std::vector<std::vector<long>> cols;
    while (static_cast<int>(cols.size()) < n) {
        std::vector<long> col(rank);
        bool nonzero = false;
        for (long& v : col) {
            v = entry(rng);
            nonzero = nonzero || v != 0;
        }
        if (nonzero) cols.push_back(col);
    }
    return z_arrangement(rank, cols);
}

}  // namespace

TEST_CASE("codeword weight counts fully nonzero classes") {
    ResidueRing r3(z_ideal(3));
    auto w = [&](std::vector<long> word, std::vector<std::vector<int>> classes) {
        std::vector<RingElement> v;
        for (long x : word) v.push_back(RingElement::integer(kZ, x));
        return codeword_weight(v, r3, classes);
    };
    CHECK(w({0, 0, 0}, {{0}, {1}, {2}}) == 0);
    CHECK(w({1, 0, 2}, {{0}, {1}, {2}}) == 2);  // singleton classes: Hamming
    CHECK(w({1, 0}, {{0, 1}}) == 0);            // one zero member kills the class
    CHECK(w({1, 3}, {{0}, {1}}) == 1);          // 3 reduces to zero mod 3
    CHECK_THROWS_AS(w({1}, {{0}, {1}}), input_error);
}

TEST_CASE("B counts by enumeration match the pinned examples") {
    Arrangement e = z_arrangement(2, {{1, 0}, {0, 1}});
    CHECK(coboundary_counts_brute(e, z_ideal(3)) == ints({4, 4, 1}));

    Arrangement quad = fixtures::load("zsqrtm5");
    Ideal p = Ideal::from_generators(quad.ring(),
                                     {RingElement(quad.ring(), 2, 0), RingElement(quad.ring(), 1, -1)});
    CHECK(coboundary_counts_brute(quad, p) == ints({0, 4}));  // (t^2-2t) + 2tx at t = 2

    CHECK(coboundary_counts_brute(e, Ideal::unit(kZ)) == ints({0, 0, 1}));
}

TEST_CASE("inclusion-exclusion counts match enumeration") {
    Arrangement e = z_arrangement(2, {{1, 0}, {0, 1}});
    CHECK(coboundary_counts(e, z_ideal(3)) == ints({4, 4, 1}));

    Arrangement empty = z_arrangement(2, {});
    CHECK(coboundary_counts(empty, z_ideal(5)) == ints({25}));

    Arrangement quad = fixtures::load("zsqrtm5");
    RingSpec m5 = quad.ring();
    Ideal p = Ideal::from_generators(m5, {RingElement(m5, 2, 0), RingElement(m5, 1, -1)});
    Ideal q = Ideal::from_generators(m5, {RingElement(m5, 3, 0), RingElement(m5, 1, 1)});
    Ideal pq = p.product(q);
    Ideal five = Ideal::principal_integer(m5, 5);
    for (const Ideal& ideal :
         {p, q, pq, p.product(p), q.product(q), pq.product(five)})
        CHECK(coboundary_counts(quad, ideal) == coboundary_counts_brute(quad, ideal));
}

TEST_CASE("randomized agreement of the two B routes") {
    auto rng = oracles::seeded_rng(77);
    int arrangements = 0;
    while (arrangements < 20) {
        Arrangement a = random_z_arrangement(rng);
        ++arrangements;
        for (long q = 1; q <= 12; ++q) {
            std::vector<Int> by_subsets = coboundary_counts(a, z_ideal(q));
            CHECK(by_subsets == coboundary_counts_brute(a, z_ideal(q)));
            Int total = 0;
            for (const Int& b : by_subsets) total += b;
            Int expected;
            mpz_pow_ui(expected.get_mpz_t(), Int(q).get_mpz_t(), a.space_rank());
            CHECK(total == expected);
            CHECK(by_subsets[0] == characteristic_brute(a, z_ideal(q)));
        }
    }
}

TEST_CASE("coboundary quasi-polynomial of the zsqrtm5 example") {
    CoboundaryResult cb = coboundary_quasi_polynomial(fixtures::load("zsqrtm5"));
    std::vector<std::string> expected = {
        "t^2 - t + t*x",
        "t^2 - 2*t + 2*t*x",
        "t^2 - 3*t + 3*t*x",
        "t^2 - 4*t + 4*t*x",
    };
    REQUIRE(cb.quasi.constituents.size() == 4);
    int i = 0;
    for (const auto& [kappa, poly] : cb.quasi.constituents) CHECK(poly.str() == expected[i++]);
}

TEST_CASE("coboundary quasi-polynomial over Z") {
    CoboundaryResult e = coboundary_quasi_polynomial(z_arrangement(2, {{1, 0}, {0, 1}}));
    CHECK(e.quasi.period == Ideal::unit(kZ));
    // (t-1)^2 + 2(t-1)x + x^2
    BiPoly t = BiPoly::monomial(1, 0, 1), x = BiPoly::monomial(0, 1, 1);
    BiPoly t1 = t - BiPoly::constant(1);
    CHECK(e.quasi.constituents.at(Ideal::unit(kZ)) == t1 * t1 + BiPoly::constant(2) * t1 * x + x * x);

    CoboundaryResult s = coboundary_quasi_polynomial(z_arrangement(1, {{2}}));
    CHECK(s.quasi.constituents.at(Ideal::unit(kZ)) == t - BiPoly::constant(1) + x);
    CHECK(s.quasi.constituents.at(z_ideal(2)) == t - BiPoly::constant(2) + BiPoly::constant(2) * x);
}

TEST_CASE("B_i constituents evaluate back to the counts") {
    auto rng = oracles::seeded_rng(78);
    for (int trial = 0; trial < 6; ++trial) {
        Arrangement a = random_z_arrangement(rng);
        CoboundaryResult cb = coboundary_quasi_polynomial(a);
        for (long q = 1; q <= 12; ++q) {
            std::vector<Int> b = coboundary_counts(a, z_ideal(q));
            UniPoly value = cb.quasi(z_ideal(q));
            for (int i = 0; i <= a.class_count(); ++i) CHECK(value.coeff(i) == b[i]);
        }
    }
}

TEST_CASE("tutte polynomials") {
    BiPoly x = BiPoly::monomial(1, 0, 1), y = BiPoly::monomial(0, 1, 1);
    CHECK(tutte_polynomial(z_arrangement(2, {{1, 0}, {0, 1}})) == x * x);
    CHECK(tutte_polynomial(fixtures::load("braid3")) == x * x + x + y);
    CHECK(tutte_polynomial(z_arrangement(2, {})) == BiPoly::constant(1));
    // the two parallel vectors of the quadratic example define one hyperplane
    CHECK(tutte_polynomial(fixtures::load("zsqrtm5")) == x);
}

TEST_CASE("tutte-coboundary identity on all fixtures") {
    for (const char* name :
         {"empty2", "single2", "e1e2", "braid3", "zsqrtm5", "parallel_pair", "axes_scaled"}) {
        std::string detail;
        CHECK_MESSAGE(tutte_coboundary_identity_holds(fixtures::load(name), {}, &detail), name,
                      ": ", detail);
    }
}

TEST_CASE("kernel-weight identity") {
    Arrangement quad = fixtures::load("zsqrtm5");
    Ideal pq = Ideal::from_generators(quad.ring(), {RingElement(quad.ring(), 1, 1)});
    CHECK(kernel_weight_identity_holds(quad, pq));
    // both sides are 12 + 24x at t = 6
    std::vector<Int> b = coboundary_counts(quad, pq);
    CHECK(b == ints({12, 24}));

    Arrangement e = z_arrangement(2, {{1, 0}, {0, 1}});
    CHECK(kernel_weight_identity_holds(e, z_ideal(3)));
    CHECK(count_H(e, e.full_mask(), z_ideal(3)) == 1);

    CHECK(kernel_weight_identity_holds(e, Ideal::unit(kZ)));
}
