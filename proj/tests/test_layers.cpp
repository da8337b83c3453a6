#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coboundary.hpp"
#include "fixtures.hpp"
#include "layers.hpp"
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

int member_count(const std::vector<char>& members) {
    int n = 0;
    for (char m : members) n += m;
    return n;
}

}  // namespace

TEST_CASE("coset membership distinguishes the atoms") {
    // A = {2} over Z: 1/2 and 0 are different layers since 1 is not in <2>
    LayerPoset single = LayerPoset::build(z_arrangement(1, {{2}}));
    REQUIRE(single.size() == 3);
    CHECK(single.layer(0).dim == 1);
    CHECK(single.layer(1).dim == 0);
    CHECK(single.layer(2).dim == 0);
    CHECK(!single.coset_equivalent(single.layer(1).rep, single.layer(2).rep, single.layer(1).flat));
    CHECK(single.coset_equivalent(single.layer(1).rep, single.layer(1).rep, single.layer(1).flat));
}

TEST_CASE("the zsqrtm5 example has the five-element poset") {
    LayerPoset poset = LayerPoset::build(fixtures::load("zsqrtm5"));
    REQUIRE(poset.size() == 5);
    CHECK(poset.layer(0).dim == 2);
    CHECK(poset.layer(0).atom_count == 0);
    CHECK(poset.atoms() == std::vector<int>{1, 2, 3, 4});
    for (int i = 1; i < 5; ++i) {
        CHECK(poset.layer(i).dim == 1);
        CHECK(poset.layer(i).atom_count == 1);
        CHECK(poset.leq(0, i));
        for (int j = 1; j < 5; ++j) CHECK(poset.leq(i, j) == (i == j));
    }
    // the zero atom and the half-shift atom live on different cosets
    CHECK(!poset.coset_equivalent(poset.layer(1).rep, poset.layer(3).rep, poset.layer(1).flat));
}

TEST_CASE("single coordinate hyperplane gives the two-element poset") {
    LayerPoset poset = LayerPoset::build(z_arrangement(2, {{1, 0}}));
    REQUIRE(poset.size() == 2);
    CHECK(poset.layer(0).dim == 2);
    CHECK(poset.layer(1).dim == 1);
    CHECK(poset.period() == Ideal::unit(kZ));
}

TEST_CASE("braid columns produce the full intersection lattice from one point") {
    LayerPoset poset = LayerPoset::build(fixtures::load("braid3"));
    REQUIRE(poset.size() == 5);  // ambient, three planes, one line
    CHECK(poset.point_count() == 1);
    CHECK(poset.atoms().size() == 3);
    CHECK(poset.poset_characteristic(Ideal::unit(kZ)) ==
          UniPoly{std::vector<Int>{0, 2, -3, 1}});
}

TEST_CASE("a layer can exist without owning a torsion point") {
    // {(0,1), (2,0)}: the layer of the first hyperplane contains only points
    // whose maximal vanishing set is the whole arrangement.
    Arrangement a = fixtures::load("axes_scaled");
    LayerPoset poset = LayerPoset::build(a);
    CHECK(poset.size() == 6);
    CHECK(poset.poset_characteristic(Ideal::unit(kZ)) ==
          UniPoly{std::vector<Int>{1, -2, 1}});  // (t-1)^2
    CHECK(poset.poset_characteristic(z_ideal(2)) ==
          UniPoly{std::vector<Int>{2, -3, 1}});  // (t-1)(t-2)
}

TEST_CASE("torsion subposets of the zsqrtm5 example") {
    Arrangement a = fixtures::load("zsqrtm5");
    LayerPoset poset = LayerPoset::build(a);
    std::vector<Ideal> divs = divisors(poset.period());
    REQUIRE(divs.size() == 4);
    CHECK(member_count(poset.torsion_members(divs[0])) == 2);  // O
    CHECK(member_count(poset.torsion_members(divs[1])) == 3);  // p
    CHECK(member_count(poset.torsion_members(divs[2])) == 4);  // q
    CHECK(member_count(poset.torsion_members(divs[3])) == 5);  // pq
    // d1 | d2 implies L[d1] is a subposet of L[d2], and L[rho] is everything
    for (const Ideal& d1 : divs)
        for (const Ideal& d2 : divs) {
            if (!d1.divides(d2)) continue;
            std::vector<char> m1 = poset.torsion_members(d1);
            std::vector<char> m2 = poset.torsion_members(d2);
            for (int i = 0; i < poset.size(); ++i)
                if (m1[i]) CHECK(m2[i]);
        }
    std::vector<char> everything = poset.torsion_members(poset.period());
    CHECK(member_count(everything) == poset.size());
    // bottom is O-torsion always
    CHECK(poset.torsion_members(Ideal::unit(a.ring()))[poset.bottom()] == 1);
}

TEST_CASE("torsion subposet of a non-divisor falls back to the gcd class") {
    LayerPoset poset = LayerPoset::build(z_arrangement(1, {{2}}));
    CHECK(member_count(poset.torsion_members(z_ideal(3))) ==
          member_count(poset.torsion_members(Ideal::unit(kZ))));
    CHECK(member_count(poset.torsion_members(z_ideal(6))) ==
          member_count(poset.torsion_members(z_ideal(2))));
    CHECK(member_count(poset.torsion_members(Ideal::unit(kZ))) == 2);  // ambient + {0}
}

TEST_CASE("complement counts via Mobius sums") {
    Arrangement a = fixtures::load("zsqrtm5");
    LayerPoset poset = LayerPoset::build(a);
    Ideal pq = poset.period();
    CHECK(poset.complement_count(0, pq) == 12);  // 6^2 - 4*6
    for (int atom : poset.atoms()) CHECK(poset.complement_count(atom, pq) == 6);
    CHECK(poset.complement_count(0, Ideal::unit(a.ring())) == 0);
    // enumeration agrees: 36 points, 24 on atoms
    Int off_atoms = 0;
    for (int k = 0; k < poset.point_count(); ++k)
        if (poset.minimal_layer_of_point(k) == poset.bottom()) ++off_atoms;
    CHECK(off_atoms == 12);
    // asking for the complement of a layer outside L[kappa] is an error
    std::vector<char> unit_members = poset.torsion_members(Ideal::unit(a.ring()));
    int outside = -1;
    for (int atom : poset.atoms())
        if (!unit_members[atom]) outside = atom;
    REQUIRE(outside >= 0);
    CHECK_THROWS_AS(poset.complement_count(outside, Ideal::unit(a.ring())), input_error);
}

TEST_CASE("poset constituents of the pinned examples") {
    LayerPoset poset = LayerPoset::build(fixtures::load("zsqrtm5"));
    std::vector<Ideal> divs = divisors(poset.period());
    CHECK(poset.poset_constituent(divs[3]).str() == "t^2 - 4*t + 4*t*x");
    CHECK(poset.poset_constituent(divs[0]).str() == "t^2 - t + t*x");
    LayerPoset single = LayerPoset::build(z_arrangement(1, {{2}}));
    CHECK(single.poset_constituent(z_ideal(2)).str() == "t - 2 + 2*x");
    // x = 0 specializes to the characteristic polynomial for every divisor
    for (const Ideal& kappa : divs)
        CHECK(poset.poset_constituent(kappa).coefficient_of_second(0) ==
              poset.poset_characteristic(kappa));
}

TEST_CASE("poset constituents equal the interpolated ones on every fixture") {
    for (const char* name : {"single2", "e1e2", "braid3", "zsqrtm5", "parallel_pair",
                             "axes_scaled", "sqrt2", "golden5", "gauss", "golden_pair", "empty2"}) {
        Arrangement a = fixtures::load(name);
        LayerPoset poset = LayerPoset::build(a);
        CoboundaryResult cb = coboundary_quasi_polynomial(a);
        for (const Ideal& kappa : divisors(poset.period())) {
            CHECK_MESSAGE(poset.poset_constituent(kappa) == cb.quasi.constituents.at(kappa),
                          name, " at divisor ", kappa.str());
        }
    }
}

TEST_CASE("lemma-level point facts on the quadratic fixtures") {
    for (const char* name : {"zsqrtm5", "sqrt2", "gauss", "golden5"}) {
        Arrangement a = fixtures::load(name);
        LayerPoset poset = LayerPoset::build(a);
        std::vector<Ideal> divs = divisors(poset.period());
        for (const Ideal& kappa : divs) {
            std::vector<char> members = poset.torsion_members(kappa);
            for (int z = 0; z < poset.size(); ++z) {
                Int inside = 0;
                bool any = false;
                for (int k = 0; k < poset.point_count(); ++k) {
                    if (!poset.point_is_torsion(k, kappa)) continue;
                    if (poset.point_in_layer(k, z)) {
                        ++inside;
                        any = true;
                    }
                }
                CHECK(static_cast<bool>(members[z]) == any);
                if (members[z]) {
                    Int expected;
                    mpz_pow_ui(expected.get_mpz_t(), kappa.norm().get_mpz_t(),
                               poset.layer(z).dim);
                    CHECK(inside == expected);
                }
            }
        }
        // every point belongs to exactly one complement M(Z)
        std::vector<int> owner(poset.point_count());
        for (int k = 0; k < poset.point_count(); ++k) {
            owner[k] = poset.minimal_layer_of_point(k);
            int containing = 0;
            for (int z = 0; z < poset.size(); ++z) containing += poset.point_in_layer(k, z);
            CHECK(containing >= 1);
        }
        // a(Z) against the weight bound, with equality exactly on M(Z)
        for (int z = 0; z < poset.size(); ++z)
            for (int k = 0; k < poset.point_count(); ++k) {
                if (!poset.point_in_layer(k, z)) continue;
                int bound = a.class_count() - poset.point_weight(k);
                CHECK(poset.layer(z).atom_count <= bound);
                CHECK((poset.layer(z).atom_count == bound) == (owner[k] == z));
            }
    }
}

TEST_CASE("rank-four braid columns build the partition lattice") {
    Arrangement a = fixtures::load("braid4");
    LayerPoset poset = LayerPoset::build(a);
    CHECK(poset.size() == 15);  // set partitions of a four-element set
    CHECK(poset.atoms().size() == 6);
    CHECK(poset.poset_characteristic(Ideal::unit(kZ)) ==
          UniPoly{std::vector<Int>{0, -6, 11, -6, 1}});  // t(t-1)(t-2)(t-3)
    BiPoly tutte = tutte_polynomial(a);
    CHECK(tutte(Int(1), Int(1)) == 16);  // spanning trees of the complete graph
    std::string detail;
    CHECK(tutte_coboundary_identity_holds(a, {}, &detail));
}

TEST_CASE("dot export is deterministic and ranked by dimension") {
    Arrangement a = fixtures::load("zsqrtm5");
    std::string first = LayerPoset::build(a).dot();
    std::string second = LayerPoset::build(a).dot();
    CHECK(first == second);
    CHECK(first.find("rankdir=BT") != std::string::npos);
    CHECK(first.find("dim 2") != std::string::npos);
    // four covers out of the bottom
    size_t edges = 0;
    for (size_t pos = first.find("->"); pos != std::string::npos; pos = first.find("->", pos + 1))
        ++edges;
    CHECK(edges == 4);
}

TEST_CASE("resource bound on the point enumeration") {
    Limits tight;
    tight.max_enumeration = 3;
    CHECK_THROWS_AS(LayerPoset::build(fixtures::load("zsqrtm5"), tight), resource_error);
}
