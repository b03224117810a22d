#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "linklab/ideal_ops.hpp"
#include "linklab/rng.hpp"
#include "linklab/stanley_reisner.hpp"
#include "linklab/suites.hpp"

using namespace linklab;

namespace {

Polynomial sqf_mono(const RingDescriptor& r, std::uint64_t mask) {
    Monomial m(r.num_vars());
    for (std::size_t v = 0; v < r.num_vars(); ++v)
        if (mask & (1ULL << v)) m.exponent(v) = 1;
    return Polynomial::from_monomial(r, r.field().one(), m);
}

// Brute face enumeration straight from the definition: S is a face iff
// no generator support sits inside S.
std::vector<std::uint64_t> faces_oracle(const Ideal& I) {
    const std::size_t n = I.ring().num_vars();
    std::vector<std::uint64_t> sups;
    for (const Polynomial& g : I.generators())
        sups.push_back(g.leading().mono.support_mask());
    std::vector<std::uint64_t> faces;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        bool face = true;
        for (std::uint64_t sup : sups)
            if ((sup & s) == sup) {
                face = false;
                break;
            }
        if (face) faces.push_back(s);
    }
    return faces;
}

}  // namespace

TEST_CASE("complex of (x0x1) in two variables") {
    RingDescriptor ring(2, Field::rationals(), MonomialOrder::grevlex);
    Ideal I(ring, {sqf_mono(ring, 0b11)});
    SimplicialComplex C = complex_of_ideal(I);
    CHECK(C.facets() == std::vector<std::uint64_t>{0b01, 0b10});
    CHECK(C.has_face(0));
    CHECK(!C.has_face(0b11));
}

TEST_CASE("skew lines give two disjoint edges") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    Ideal a = skew_lines_ideal(ring);
    SimplicialComplex C = complex_of_ideal(a);
    CHECK(C.facets() == std::vector<std::uint64_t>{0b0011, 0b1100});
    // cross-check the full face set against the brute oracle
    auto oracle = faces_oracle(a);
    for (std::uint64_t s = 0; s < 16; ++s) {
        bool in_oracle =
            std::find(oracle.begin(), oracle.end(), s) != oracle.end();
        CHECK(C.has_face(s) == in_oracle);
    }
}

TEST_CASE("zero ideal gives the full simplex") {
    RingDescriptor ring(3, Field::rationals(), MonomialOrder::grevlex);
    Ideal zero(ring, {});
    SimplicialComplex C = complex_of_ideal(zero);
    CHECK(C.facets() == std::vector<std::uint64_t>{0b111});
}

TEST_CASE("bad generators are rejected") {
    RingDescriptor ring(2, Field::rationals(), MonomialOrder::grevlex);
    Ideal notsqf(ring, {Polynomial::variable(ring, 0, 2)});
    CHECK_THROWS_AS(complex_of_ideal(notsqf), PreconditionError);
    Ideal notmono(ring, {Polynomial::variable(ring, 0) +
                         Polynomial::variable(ring, 1)});
    CHECK_THROWS_AS(complex_of_ideal(notmono), PreconditionError);
}

TEST_CASE("round trip between complexes and ideals") {
    RingDescriptor ring(5, Field::prime_field(101), MonomialOrder::grevlex);
    SplitMix64 rng(19);
    for (int t = 0; t < 20; ++t) {
        // random antichain of facets
        std::vector<std::uint64_t> facets;
        int count = 1 + static_cast<int>(rng.uniform(4));
        for (int k = 0; k < count; ++k)
            facets.push_back(1 + rng.uniform((1ULL << 5) - 1));
        SimplicialComplex C = SimplicialComplex::from_facets(5, facets);
        Ideal I = ideal_of_complex(C, ring);
        SimplicialComplex C2 = complex_of_ideal(I);
        CHECK(C.facets() == C2.facets());
        // and the other direction from the ideal side
        Ideal I2 = ideal_of_complex(C2, ring);
        CHECK(ideals_equal(I, I2));
    }
}

TEST_CASE("reduced homology of standard complexes") {
    const Field Q = Field::rationals();
    SUBCASE("two disjoint edges: one reduced 0-cycle") {
        SimplicialComplex C =
            SimplicialComplex::from_facets(4, {0b0011, 0b1100});
        auto h = reduced_homology_dims(C, Q);
        REQUIRE(h.size() == 3);  // degrees -1, 0, 1
        CHECK(h[0] == 0);
        CHECK(h[1] == 1);
        CHECK(h[2] == 0);
    }
    SUBCASE("hollow triangle: a circle") {
        SimplicialComplex C =
            SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110});
        auto h = reduced_homology_dims(C, Q);
        REQUIRE(h.size() == 3);
        CHECK(h[0] == 0);
        CHECK(h[1] == 0);
        CHECK(h[2] == 1);
    }
    SUBCASE("the empty complex {emptyset}") {
        SimplicialComplex C = SimplicialComplex::from_facets(3, {0});
        auto h = reduced_homology_dims(C, Q);
        REQUIRE(h.size() == 1);
        CHECK(h[0] == 1);  // H~_{-1}
    }
    SUBCASE("solid simplex is acyclic") {
        SimplicialComplex C = SimplicialComplex::from_facets(3, {0b111});
        auto h = reduced_homology_dims(C, Q);
        for (int d : h) CHECK(d == 0);
    }
}

TEST_CASE("Hochster formula") {
    SUBCASE("edge ideal (x0x1)") {
        RingDescriptor ring(2, Field::rationals(), MonomialOrder::grevlex);
        Ideal I(ring, {sqf_mono(ring, 0b11)});
        HochsterTable H = hochster_betti(I, ring.field());
        CHECK(H.by_subset.at({1, 0b11}) == 1);
        CHECK(H.table.totals() == std::vector<int>{1, 1});
    }
    SUBCASE("skew lines match the resolution route") {
        RingDescriptor ring = quartic_ring(Field::prime_field(32003));
        Ideal a = skew_lines_ideal(ring);
        HochsterTable H = hochster_betti(a, ring.field());
        CHECK(H.table.totals() == std::vector<int>{1, 4, 4, 1});
        CHECK(H.table == graded_betti(a));
    }
    SUBCASE("F_2 and Q agree on these torsion-free examples") {
        RingDescriptor r2 = quartic_ring(Field::prime_field(2));
        RingDescriptor rq = quartic_ring(Field::rationals());
        CHECK(hochster_betti(skew_lines_ideal(r2), r2.field()).table ==
              hochster_betti(skew_lines_ideal(rq), rq.field()).table);
        Ideal m2(r2, {sqf_mono(r2, 0b0011), sqf_mono(r2, 0b0110)});
        Ideal mq(rq, {sqf_mono(rq, 0b0011), sqf_mono(rq, 0b0110)});
        CHECK(hochster_betti(m2, r2.field()).table ==
              hochster_betti(mq, rq.field()).table);
    }
}

TEST_CASE("squarefree invariants") {
    SUBCASE("skew lines") {
        RingDescriptor ring = quartic_ring(Field::prime_field(32003));
        SqfInvariants s = sqf_invariants(skew_lines_ideal(ring),
                                         ring.field());
        CHECK(s.cd == 3);
        CHECK(s.depth == 1);
        CHECK(s.fgrade == 1);
        CHECK(s.dim == 2);
        CHECK(s.height == 2);
        CHECK(s.pure);
    }
    SUBCASE("monomial complete intersection is CM") {
        RingDescriptor ring = quartic_ring(Field::prime_field(32003));
        Ideal ci(ring, {sqf_mono(ring, 0b0101), sqf_mono(ring, 0b1010)});
        SqfInvariants s = sqf_invariants(ci, ring.field());
        CHECK(s.cd == 2);
        CHECK(s.depth == 2);
        CHECK(s.depth == s.dim);
    }
    SUBCASE("zero ideal convention") {
        RingDescriptor ring(3, Field::rationals(), MonomialOrder::grevlex);
        SqfInvariants s = sqf_invariants(Ideal(ring, {}), ring.field());
        CHECK(s.depth == 3);
        CHECK(s.cd == 0);
        CHECK(s.dim == 3);
    }
    SUBCASE("unit ideal is rejected") {
        RingDescriptor ring(3, Field::rationals(), MonomialOrder::grevlex);
        Ideal unit(ring, {Polynomial::constant(ring, 1)});
        CHECK_THROWS_AS(sqf_invariants(unit, ring.field()),
                        PreconditionError);
    }
}

TEST_CASE("squarefree class properties on random inputs") {
    RingDescriptor ring(5, Field::prime_field(32003),
                        MonomialOrder::grevlex);
    SplitMix64 rng(37);
    for (int t = 0; t < 25; ++t) {
        Ideal I = random_squarefree_ideal(ring, rng);
        SqfInvariants s = sqf_invariants(I, ring.field());
        // cd = pd = n - depth, fgrade = depth
        CHECK(s.cd == s.pd);
        CHECK(s.depth + s.pd == 5);
        CHECK(s.fgrade == s.depth);
        // grade lower bound
        CHECK(s.cd >= s.height);
        CHECK(s.height == height(I));
        // vanishing equivalence read both ways
        for (std::int64_t tt = 0; tt <= 5; ++tt) {
            bool cd_small = s.cd <= 5 - tt;
            bool depth_big = s.depth >= tt;
            CHECK(cd_small == depth_big);
        }
        // the two Betti routes agree
        CHECK(hochster_betti(I, ring.field()).table == graded_betti(I));
        // dimension agrees with the facet route
        CHECK(s.dim == krull_dimension(I).krull_dim);
    }
}

TEST_CASE("shellable-type examples come out Cohen-Macaulay") {
    const Field Q = Field::rationals();
    SUBCASE("full simplex (zero ideal)") {
        RingDescriptor ring(4, Q, MonomialOrder::grevlex);
        SqfInvariants s = sqf_invariants(Ideal(ring, {}), Q);
        CHECK(s.depth == s.dim);
    }
    SUBCASE("boundary of the simplex (sphere)") {
        RingDescriptor ring(4, Q, MonomialOrder::grevlex);
        // boundary of the tetrahedron: the only nonface is x0x1x2x3
        Ideal I(ring, {sqf_mono(ring, 0b1111)});
        SqfInvariants s = sqf_invariants(I, Q);
        CHECK(s.dim == 3);
        CHECK(s.depth == 3);
    }
}

TEST_CASE("Reisner's projective plane depends on the field") {
    // minimal 6-vertex triangulation of RP^2: pd 3 over Q, pd 4 over F_2
    std::vector<std::uint64_t> facets;
    auto tri = [&](int a, int b, int c) {
        facets.push_back((1ULL << a) | (1ULL << b) | (1ULL << c));
    };
    tri(0, 1, 3);
    tri(0, 1, 4);
    tri(0, 2, 3);
    tri(0, 2, 5);
    tri(0, 4, 5);
    tri(1, 2, 4);
    tri(1, 2, 5);
    tri(1, 3, 5);
    tri(2, 3, 4);
    tri(3, 4, 5);
    SimplicialComplex C = SimplicialComplex::from_facets(6, facets);

    RingDescriptor rq(6, Field::rationals(), MonomialOrder::grevlex);
    Ideal Iq = ideal_of_complex(C, rq);
    SqfInvariants sq = sqf_invariants(Iq, rq.field());
    CHECK(sq.pd == 3);
    CHECK(sq.depth == 3);  // CM over Q

    RingDescriptor r2(6, Field::prime_field(2), MonomialOrder::grevlex);
    Ideal I2 = ideal_of_complex(C, r2);
    SqfInvariants s2 = sqf_invariants(I2, r2.field());
    CHECK(s2.pd == 4);
    CHECK(s2.depth == 2);  // torsion shows up in characteristic 2
    // both routes agree within each field
    CHECK(hochster_betti(I2, r2.field()).table == graded_betti(I2));
    CHECK(hochster_betti(Iq, rq.field()).table == graded_betti(Iq));
}
