#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "linklab/ideal_ops.hpp"
#include "linklab/rng.hpp"
#include "linklab/suites.hpp"

using namespace linklab;

namespace {

Polynomial mono(const RingDescriptor& r, std::initializer_list<int> exps,
                std::int64_t coeff = 1) {
    Monomial m(r.num_vars());
    std::size_t i = 0;
    for (int e : exps) m.exponent(i++) = e;
    return Polynomial::from_monomial(r, r.field().from_int(coeff), m);
}

// Monomial-ideal intersection oracle: (m_i) cap (n_j) = (lcm(m_i, n_j)).
Ideal monomial_intersect_oracle(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> gens;
    const RingDescriptor& ring = I.ring();
    for (const Polynomial& f : I.generators())
        for (const Polynomial& g : J.generators())
            gens.push_back(Polynomial::from_monomial(
                ring, ring.field().one(),
                Monomial::lcm(f.leading().mono, g.leading().mono)));
    return Ideal(ring, std::move(gens));
}

// Exhaustive independent-set oracle over all variable subsets.
std::int64_t dim_oracle(const Ideal& I) {
    const RingDescriptor& ring = I.ring();
    const std::size_t n = ring.num_vars();
    std::vector<std::uint64_t> supports;
    for (const Polynomial& g : I.groebner_basis())
        supports.push_back(g.leading().mono.support_mask());
    std::int64_t best = -1;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        bool ok = true;
        for (std::uint64_t sup : supports)
            if ((sup & s) == sup) {
                ok = false;
                break;
            }
        if (ok) best = std::max<std::int64_t>(best, __builtin_popcountll(s));
    }
    return best;
}

Ideal random_monomial_ideal(const RingDescriptor& ring, SplitMix64& rng) {
    std::vector<Polynomial> gens;
    int count = 1 + static_cast<int>(rng.uniform(3));
    for (int k = 0; k < count; ++k) {
        Monomial m(ring.num_vars());
        int deg = 1 + static_cast<int>(rng.uniform(3));
        for (int d = 0; d < deg; ++d)
            m.exponent(rng.uniform(ring.num_vars())) += 1;
        gens.push_back(
            Polynomial::from_monomial(ring, ring.field().one(), m));
    }
    return Ideal(ring, std::move(gens));
}

}  // namespace

TEST_CASE("principal intersections") {
    RingDescriptor ring(2, Field::rationals(), MonomialOrder::grevlex);
    Ideal I(ring, {mono(ring, {1, 0})});
    Ideal J(ring, {mono(ring, {0, 1})});
    CHECK(ideals_equal(intersect(I, J), Ideal(ring, {mono(ring, {1, 1})})));
}

TEST_CASE("two skew lines: product of disjoint primes is the intersection") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    Ideal p1(ring, {Polynomial::variable(ring, 0),
                    Polynomial::variable(ring, 1)});
    Ideal p2(ring, {Polynomial::variable(ring, 2),
                    Polynomial::variable(ring, 3)});
    CHECK(ideals_equal(intersect(p1, p2), skew_lines_ideal(ring)));
}

TEST_CASE("a cap b is the stated complete intersection") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    Ideal a = skew_lines_ideal(ring);
    Ideal b = twisted_quartic_ideal(ring);
    Ideal c = skew_quartic_ci(ring);
    Ideal inter = intersect(a, b);
    CHECK(ideals_equal(inter, c));
    CHECK(is_complete_intersection(inter));
    // intersection of homogeneous ideals comes back visibly homogeneous
    CHECK(inter.homogeneous());
}

TEST_CASE("intersection agrees with the pairwise-lcm oracle") {
    RingDescriptor ring(4, Field::prime_field(101), MonomialOrder::grevlex);
    SplitMix64 rng(17);
    for (int t = 0; t < 15; ++t) {
        Ideal I = random_monomial_ideal(ring, rng);
        Ideal J = random_monomial_ideal(ring, rng);
        CHECK(ideals_equal(intersect(I, J), monomial_intersect_oracle(I, J)));
    }
}

TEST_CASE("colon quotients") {
    RingDescriptor ring(2, Field::rationals(), MonomialOrder::grevlex);
    Ideal xy(ring, {mono(ring, {1, 1})});
    Ideal x(ring, {mono(ring, {1, 0})});
    CHECK(ideals_equal(colon(xy, x), Ideal(ring, {mono(ring, {0, 1})})));
}

TEST_CASE("the linkage colons of the worked example") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    Ideal a = skew_lines_ideal(ring);
    Ideal b = twisted_quartic_ideal(ring);
    Ideal c = skew_quartic_ci(ring);
    CHECK(ideals_equal(colon(c, a), b));
    CHECK(ideals_equal(colon(c, b), a));
}

TEST_CASE("colon by the zero ideal is rejected") {
    RingDescriptor ring(2, Field::rationals(), MonomialOrder::grevlex);
    Ideal I(ring, {mono(ring, {1, 0})});
    Ideal zero(ring, {});
    CHECK_THROWS_AS(colon(I, zero), PreconditionError);
}

TEST_CASE("Krull dimension and height") {
    RingDescriptor r2(2, Field::rationals(), MonomialOrder::grevlex);
    DimensionReport d = krull_dimension(Ideal(r2, {mono(r2, {1, 1})}));
    CHECK(d.krull_dim == 1);
    CHECK(d.height == 1);
    CHECK(!d.is_unit);

    RingDescriptor r4 = quartic_ring(Field::prime_field(32003));
    DimensionReport da = krull_dimension(skew_lines_ideal(r4));
    CHECK(da.krull_dim == 2);
    CHECK(da.height == 2);
    DimensionReport db = krull_dimension(twisted_quartic_ideal(r4));
    CHECK(db.krull_dim == 2);
    CHECK(db.height == 2);

    // unit and zero ideals
    DimensionReport du =
        krull_dimension(Ideal(r2, {Polynomial::constant(r2, 1)}));
    CHECK(du.is_unit);
    CHECK(du.krull_dim == -1);
    DimensionReport dz = krull_dimension(Ideal(r2, {}));
    CHECK(dz.krull_dim == 2);
    CHECK(dz.height == 0);
}

TEST_CASE("dimension agrees with the exhaustive oracle") {
    RingDescriptor ring(5, Field::prime_field(101), MonomialOrder::grevlex);
    SplitMix64 rng(23);
    for (int t = 0; t < 20; ++t) {
        Ideal I = random_monomial_ideal(ring, rng);
        CHECK(krull_dimension(I).krull_dim == dim_oracle(I));
    }
}

TEST_CASE("height + dim = n for proper homogeneous ideals") {
    RingDescriptor ring(4, Field::prime_field(101), MonomialOrder::grevlex);
    SplitMix64 rng(29);
    for (int t = 0; t < 15; ++t) {
        Ideal I = random_monomial_ideal(ring, rng);
        DimensionReport d = krull_dimension(I);
        if (!d.is_unit) CHECK(d.krull_dim + d.height == 4);
    }
}

TEST_CASE("regular sequences by the height criterion") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    Ideal c = skew_quartic_ci(ring);
    CHECK(is_regular_sequence(c.generators()));

    std::vector<Polynomial> stall = {mono(ring, {1, 0, 0, 0}),
                                     mono(ring, {1, 1, 0, 0})};
    CHECK(!is_regular_sequence(stall));

    std::vector<Polynomial> disjoint = {mono(ring, {1, 0, 1, 0}),
                                        mono(ring, {0, 1, 0, 1})};
    CHECK(is_regular_sequence(disjoint));

    std::vector<Polynomial> inhom = {mono(ring, {1, 0, 0, 0}) +
                                     mono(ring, {2, 0, 0, 0})};
    CHECK_THROWS_AS(is_regular_sequence(inhom), PreconditionError);
}

TEST_CASE("find_regular_sequence_in") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    SUBCASE("disjoint-support pair inside the skew-lines ideal") {
        Ideal a = skew_lines_ideal(ring);
        auto fs = find_regular_sequence_in(a, 2, 1);
        REQUIRE(fs.size() == 2);
        CHECK(is_regular_sequence(fs));
        for (const Polynomial& f : fs) CHECK(contains(a, f));
        // generators-first strategy picks x0x2, x1x3
        CHECK(fs[0] == mono(ring, {1, 0, 1, 0}));
        CHECK(fs[1] == mono(ring, {0, 1, 0, 1}));
    }
    SUBCASE("principal ideal") {
        Ideal x(ring, {mono(ring, {1, 0, 0, 0})});
        auto fs = find_regular_sequence_in(x, 1, 5);
        REQUIRE(fs.size() == 1);
        CHECK(fs[0] == mono(ring, {1, 0, 0, 0}));
    }
    SUBCASE("inside the quartic curve ideal") {
        Ideal b = twisted_quartic_ideal(ring);
        auto fs = find_regular_sequence_in(b, 2, 11);
        REQUIRE(fs.size() == 2);
        CHECK(is_regular_sequence(fs));
        for (const Polynomial& f : fs) CHECK(contains(b, f));
    }
    SUBCASE("length above the height is rejected") {
        Ideal a = skew_lines_ideal(ring);
        CHECK_THROWS_AS(find_regular_sequence_in(a, 3, 1),
                        PreconditionError);
    }
}

TEST_CASE("complete-intersection detection") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    CHECK(is_complete_intersection(skew_quartic_ci(ring)));
    CHECK(!is_complete_intersection(skew_lines_ideal(ring)));
    Ideal three_vars(ring, {Polynomial::variable(ring, 0),
                            Polynomial::variable(ring, 1),
                            Polynomial::variable(ring, 2)});
    CHECK(is_complete_intersection(three_vars));
}

TEST_CASE("minimal generator counts") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    CHECK(minimal_generators(skew_lines_ideal(ring)).size() == 4);
    CHECK(minimal_generators(skew_quartic_ci(ring)).size() == 2);
    CHECK(minimal_generators(twisted_quartic_ideal(ring)).size() == 4);
    // redundant generator is dropped
    Ideal red(ring, {mono(ring, {1, 0, 0, 0}), mono(ring, {1, 1, 0, 0})});
    CHECK(minimal_generators(red).size() == 1);
}

TEST_CASE("colon properties on random small ideals") {
    RingDescriptor ring(3, Field::prime_field(101), MonomialOrder::grevlex);
    SplitMix64 rng(41);
    for (int t = 0; t < 10; ++t) {
        Ideal I = random_monomial_ideal(ring, rng);
        Ideal J = random_monomial_ideal(ring, rng);
        Ideal K = random_monomial_ideal(ring, rng);
        Ideal q = colon(I, J);
        // I is always inside I : J
        for (const Polynomial& g : I.generators()) CHECK(contains(q, g));
        // J inside I forces I : J = (1)
        Ideal sum = ideal_sum(I, J);
        Ideal qq = colon(sum, J);
        bool j_in_sum = true;
        for (const Polynomial& g : J.generators())
            if (!contains(sum, g)) j_in_sum = false;
        if (j_in_sum) CHECK(qq.is_unit_ideal());
        // iterated colon equals colon by the product
        Ideal lhs = colon(q, K);
        std::vector<Polynomial> prod_gens;
        for (const Polynomial& gj : J.generators())
            for (const Polynomial& gk : K.generators())
                prod_gens.push_back(gj * gk);
        Ideal rhs = colon(I, Ideal(ring, prod_gens));
        CHECK(ideals_equal(lhs, rhs));
    }
}
