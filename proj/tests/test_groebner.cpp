#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "linklab/ideal.hpp"
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

// Buchberger-criterion oracle: every S-polynomial of a basis reduces to 0.
bool all_spairs_reduce(const RingDescriptor& ring,
                       const std::vector<Polynomial>& G) {
    const Field& F = ring.field();
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            const Term& li = G[i].leading();
            const Term& lj = G[j].leading();
            Monomial L = Monomial::lcm(li.mono, lj.mono);
            Polynomial s =
                G[i].term_mul(F.inv(li.coeff), L.divide_exact(li.mono)) -
                G[j].term_mul(F.inv(lj.coeff), L.divide_exact(lj.mono));
            if (!normal_form(s, G).is_zero()) return false;
        }
    }
    return true;
}

Polynomial random_homogeneous(const RingDescriptor& ring, SplitMix64& rng,
                              int deg) {
    std::vector<Term> terms;
    int count = 1 + static_cast<int>(rng.uniform(3));
    for (int t = 0; t < count; ++t) {
        Monomial m(ring.num_vars());
        for (int d = 0; d < deg; ++d)
            m.exponent(rng.uniform(ring.num_vars())) += 1;
        terms.push_back({ring.field().from_int(rng.uniform_int(-4, 4)), m});
    }
    return Polynomial::make(ring, std::move(terms));
}

}  // namespace

TEST_CASE("normal form: single-step binomial division") {
    // under lex x0x3 is the lead of x0x3 - x1x2
    RingDescriptor ring(4, Field::rationals(), MonomialOrder::lex);
    Polynomial f = mono(ring, {1, 0, 0, 1});
    Polynomial g = mono(ring, {1, 0, 0, 1}) - mono(ring, {0, 1, 1, 0});
    CHECK(normal_form(f, {g}) == mono(ring, {0, 1, 1, 0}));
}

TEST_CASE("normal form of a basis element is zero") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    Ideal b = twisted_quartic_ideal(ring);
    const auto& G = b.groebner_basis();
    for (const Polynomial& g : G) CHECK(normal_form(g, G).is_zero());
}

TEST_CASE("normal form with no dividing leads returns the input") {
    RingDescriptor ring(4, Field::rationals(), MonomialOrder::grevlex);
    Polynomial x2 = Polynomial::variable(ring, 2);
    std::vector<Polynomial> G = {Polynomial::variable(ring, 0),
                                 Polynomial::variable(ring, 1)};
    CHECK(normal_form(x2, G) == x2);
}

TEST_CASE("normal form tries divisors in fixed list order") {
    RingDescriptor ring(2, Field::rationals(), MonomialOrder::grevlex);
    Polynomial f = mono(ring, {2, 1});
    Polynomial g1 = mono(ring, {1, 0}) - mono(ring, {0, 1});  // x0 - x1
    Polynomial g2 = mono(ring, {1, 1});                       // x0*x1
    Polynomial r12 = normal_form(f, {g1, g2});
    Polynomial r21 = normal_form(f, {g2, g1});
    CHECK(r12 == mono(ring, {0, 3}));
    CHECK(r21.is_zero());
}

TEST_CASE("reduced GB of {x0, x0+x1} is {x0, x1}") {
    RingDescriptor ring(2, Field::rationals(), MonomialOrder::grevlex);
    Ideal I(ring, {mono(ring, {1, 0}),
                   mono(ring, {1, 0}) + mono(ring, {0, 1})});
    const auto& gb = I.groebner_basis();
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == mono(ring, {1, 0}));
    CHECK(gb[1] == mono(ring, {0, 1}));
}

TEST_CASE("Buchberger criterion holds for computed bases") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    SUBCASE("quartic curve ideal") {
        Ideal b = twisted_quartic_ideal(ring);
        CHECK(all_spairs_reduce(ring, b.groebner_basis()));
    }
    SUBCASE("a three-generator binomial variant") {
        Polynomial q = mono(ring, {1, 0, 0, 1}) - mono(ring, {0, 1, 1, 0});
        Polynomial c1 = mono(ring, {0, 3, 0, 0}) - mono(ring, {2, 0, 0, 1});
        Polynomial c2 = mono(ring, {0, 0, 3, 0}) - mono(ring, {0, 1, 0, 2});
        Ideal J(ring, {q, c1, c2});
        CHECK(all_spairs_reduce(ring, J.groebner_basis()));
    }
    SUBCASE("random homogeneous ideals") {
        SplitMix64 rng(31);
        for (int t = 0; t < 10; ++t) {
            std::vector<Polynomial> gens;
            for (int k = 0; k < 3; ++k)
                gens.push_back(random_homogeneous(
                    ring, rng, 1 + static_cast<int>(rng.uniform(3))));
            Ideal I(ring, gens);
            CHECK(all_spairs_reduce(ring, I.groebner_basis()));
        }
    }
}

TEST_CASE("reduced GB is independent of generator permutation") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    std::vector<Polynomial> gens = twisted_quartic_ideal(ring).generators();
    std::sort(gens.begin(), gens.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return ring.compare(a.leading().mono, b.leading().mono) ==
                         std::strong_ordering::less;
              });
    Ideal J(ring, gens);
    std::reverse(gens.begin(), gens.end());
    Ideal K(ring, gens);
    CHECK(J.groebner_basis() == K.groebner_basis());
    CHECK(J.groebner_basis() ==
          twisted_quartic_ideal(ring).groebner_basis());
}

TEST_CASE("GB of a homogeneous ideal is homogeneous") {
    RingDescriptor ring(3, Field::prime_field(7), MonomialOrder::grevlex);
    SplitMix64 rng(77);
    for (int t = 0; t < 10; ++t) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k)
            gens.push_back(random_homogeneous(
                ring, rng, 1 + static_cast<int>(rng.uniform(3))));
        Ideal I(ring, gens);
        for (const Polynomial& g : I.groebner_basis())
            CHECK(g.is_homogeneous());
    }
}

TEST_CASE("containment") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    Ideal b = twisted_quartic_ideal(ring);
    // lies in a cap b, hence in b
    Polynomial f = mono(ring, {1, 0, 2, 0}) - mono(ring, {0, 2, 0, 1});
    CHECK(contains(b, f));

    Ideal xy(ring, {Polynomial::variable(ring, 0),
                    Polynomial::variable(ring, 1)});
    CHECK(!contains(xy, Polynomial::variable(ring, 2)));
    CHECK(contains(xy, Polynomial(ring)));  // zero is everywhere
}

TEST_CASE("containment is monotone under ideal sum") {
    RingDescriptor ring(3, Field::prime_field(101), MonomialOrder::grevlex);
    SplitMix64 rng(13);
    for (int t = 0; t < 12; ++t) {
        std::vector<Polynomial> gi, gj;
        for (int k = 0; k < 2; ++k) {
            gi.push_back(random_homogeneous(ring, rng, 2));
            gj.push_back(random_homogeneous(ring, rng, 2));
        }
        Ideal I(ring, gi), J(ring, gj);
        std::vector<Polynomial> sum = gi;
        sum.insert(sum.end(), gj.begin(), gj.end());
        Ideal IJ(ring, sum);
        Polynomial f = random_homogeneous(ring, rng, 3);
        if (contains(I, f)) CHECK(contains(IJ, f));
        for (const Polynomial& g : gi)
            if (!g.is_zero()) CHECK(contains(IJ, g));
    }
}

TEST_CASE("ideal equality through reduced bases") {
    RingDescriptor ring(2, Field::rationals(), MonomialOrder::grevlex);
    Ideal one_x(ring, {mono(ring, {1, 0})});
    Ideal two_x(ring, {mono(ring, {1, 0}, 2)});
    CHECK(ideals_equal(one_x, two_x));

    Ideal xsq(ring, {mono(ring, {2, 0})});
    CHECK(!ideals_equal(one_x, xsq));
}

TEST_CASE("S-pair budget raises a structured error") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    std::vector<Polynomial> gens = twisted_quartic_ideal(ring).generators();
    GBOptions opt;
    opt.pair_budget = 1;
    bool threw = false;
    try {
        reduced_groebner(ring, gens, opt);
    } catch (const BudgetExceededError& e) {
        threw = true;
        CHECK(e.pairs > opt.pair_budget);
    }
    CHECK(threw);
}

TEST_CASE("module engine: Koszul syzygy of (x0, x1)") {
    RingDescriptor ring(2, Field::rationals(), MonomialOrder::grevlex);
    std::vector<ModVec> cols = {
        ModVec::from_polynomial(Polynomial::variable(ring, 0)),
        ModVec::from_polynomial(Polynomial::variable(ring, 1))};
    auto syz = syzygy_generators(ring, cols);
    REQUIRE(syz.size() == 1);
    ModVec s = syz[0].monic();
    CHECK(s.comp(0) == Polynomial::variable(ring, 1));
    CHECK(s.comp(1) == -Polynomial::variable(ring, 0));
}

TEST_CASE("module engine: membership witnesses reassemble the target") {
    RingDescriptor ring(3, Field::prime_field(32003),
                        MonomialOrder::grevlex);
    SplitMix64 rng(55);
    for (int t = 0; t < 8; ++t) {
        std::vector<ModVec> cols;
        for (int k = 0; k < 3; ++k)
            cols.push_back(
                ModVec::from_polynomial(random_homogeneous(ring, rng, 2)));
        ColumnSpanGB span(ring, cols);
        Polynomial c0 = random_homogeneous(ring, rng, 1);
        Polynomial c1 = random_homogeneous(ring, rng, 2);
        ModVec target(ring, 1);
        target.comp(0) = c0 * cols[0].comp(0) + c1 * cols[1].comp(0);
        auto witness = span.express(target);
        REQUIRE(witness.has_value());
        Polynomial recon(ring);
        for (std::size_t j = 0; j < cols.size(); ++j)
            recon = recon + (*witness)[j] * cols[j].comp(0);
        CHECK(recon == target.comp(0));
        Polynomial out = Polynomial::constant(ring, 1);
        ModVec vout(ring, 1);
        vout.comp(0) = out;
        if (!span.contains(vout)) CHECK(!span.express(vout).has_value());
    }
}

TEST_CASE("syzygies evaluate to zero on their columns") {
    RingDescriptor ring = quartic_ring(Field::prime_field(32003));
    Ideal a = skew_lines_ideal(ring);
    std::vector<ModVec> cols;
    for (const Polynomial& g : a.generators())
        cols.push_back(ModVec::from_polynomial(g));
    auto syz = syzygy_generators(ring, cols);
    CHECK(!syz.empty());
    for (const ModVec& s : syz) {
        Polynomial acc(ring);
        for (std::size_t j = 0; j < cols.size(); ++j)
            acc = acc + s.comp(j) * cols[j].comp(0);
        CHECK(acc.is_zero());
    }
}
