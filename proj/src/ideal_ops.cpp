#include "linklab/ideal_ops.hpp"

#include <algorithm>

#include "linklab/rng.hpp"

namespace linklab {

namespace {

Polynomial lift_to_extended(const RingDescriptor& ext, const Polynomial& p) {
    std::vector<Term> terms;
    terms.reserve(p.num_terms());
    for (const Term& t : p.terms()) {
        Monomial m(ext.num_vars());
        for (std::size_t i = 0; i < t.mono.num_vars(); ++i)
            m.exponent(i) = t.mono.exponent(i);
        terms.push_back({t.coeff, std::move(m)});
    }
    return Polynomial::make(ext, std::move(terms));
}

Polynomial project_to_base(const RingDescriptor& base, const Polynomial& p) {
    std::vector<Term> terms;
    terms.reserve(p.num_terms());
    for (const Term& t : p.terms()) {
        Monomial m(base.num_vars());
        for (std::size_t i = 0; i < base.num_vars(); ++i)
            m.exponent(i) = t.mono.exponent(i);
        for (std::size_t i = base.num_vars(); i < t.mono.num_vars(); ++i)
            if (t.mono.exponent(i) != 0)
                throw Error("project_to_base: aux variable survives");
        terms.push_back({t.coeff, std::move(m)});
    }
    return Polynomial::make(base, std::move(terms));
}

bool free_of_tail(const RingDescriptor& ext, const Polynomial& p) {
    for (const Term& t : p.terms())
        for (std::size_t i = ext.base_vars(); i < ext.num_vars(); ++i)
            if (t.mono.exponent(i) != 0) return false;
    return true;
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J, const GBOptions& opt) {
    require_same_ring(I.ring(), J.ring());
    const RingDescriptor& ring = I.ring();
    RingDescriptor ext = ring.extended_with_tail(1);
    const std::size_t tvar = ext.num_vars() - 1;
    Polynomial t = Polynomial::variable(ext, tvar);
    Polynomial one_minus_t =
        Polynomial::constant(ext, ext.field().one()) - t;

    std::vector<Polynomial> gens;
    for (const Polynomial& f : I.generators())
        gens.push_back(t * lift_to_extended(ext, f));
    for (const Polynomial& g : J.generators())
        gens.push_back(one_minus_t * lift_to_extended(ext, g));

    std::vector<Polynomial> gb = reduced_groebner(ext, gens, opt);
    std::vector<Polynomial> down;
    for (const Polynomial& p : gb)
        if (free_of_tail(ext, p)) down.push_back(project_to_base(ring, p));
    // re-normalize in the base ring so the result carries its reduced GB
    // (and, for homogeneous inputs, visibly homogeneous generators)
    return Ideal::from_groebner(ring, reduced_groebner(ring, down, opt));
}

namespace {

Ideal colon_principal(const Ideal& I, const Polynomial& g,
                      const GBOptions& opt) {
    const RingDescriptor& ring = I.ring();
    Ideal gI(ring, {g});
    Ideal inter = intersect(I, gI, opt);
    std::vector<Polynomial> quot;
    for (const Polynomial& p : inter.generators())
        quot.push_back(exact_divide(p, g));
    return Ideal::from_groebner(ring, reduced_groebner(ring, quot, opt));
}

}  // namespace

Ideal colon(const Ideal& I, const Ideal& J, const GBOptions& opt) {
    require_same_ring(I.ring(), J.ring());
    if (J.generators().empty())
        throw PreconditionError(
            "colon by the zero ideal rejected (would be the unit ideal)");
    bool first = true;
    Ideal acc = I;  // placeholder, replaced on first generator
    for (const Polynomial& g : J.generators()) {
        Ideal part = colon_principal(I, g, opt);
        acc = first ? part : intersect(acc, part, opt);
        first = false;
    }
    return acc;
}

DimensionReport krull_dimension(const Ideal& I, const GBOptions& opt) {
    const RingDescriptor& ring = I.ring();
    const std::size_t n = ring.num_vars();
    if (n > 64) throw DimensionError("krull_dimension: n > 64 unsupported");
    const auto& gb = I.groebner_basis(opt);
    if (!gb.empty() && gb[0].is_constant())
        return {-1, static_cast<std::int64_t>(n), true};

    // minimal supports of the initial monomial ideal
    std::vector<std::uint64_t> supports;
    for (const Polynomial& g : gb)
        supports.push_back(g.leading().mono.support_mask());
    std::sort(supports.begin(), supports.end(),
              [](std::uint64_t a, std::uint64_t b) {
                  int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
                  return pa != pb ? pa < pb : a < b;
              });
    std::vector<std::uint64_t> min_sup;
    for (std::uint64_t s : supports) {
        bool dominated = false;
        for (std::uint64_t m : min_sup)
            if ((m & s) == m) {
                dominated = true;
                break;
            }
        if (!dominated) min_sup.push_back(s);
    }

    // largest variable subset containing no minimal support
    std::int64_t best = 0;
    auto independent_with = [&](std::uint64_t mask) {
        for (std::uint64_t s : min_sup)
            if ((s & mask) == s) return false;
        return true;
    };
    auto recurse = [&](auto&& self, std::size_t idx, std::uint64_t mask,
                       std::int64_t count) -> void {
        if (count + static_cast<std::int64_t>(n - idx) <= best) return;
        if (idx == n) {
            best = std::max(best, count);
            return;
        }
        std::uint64_t with = mask | (std::uint64_t{1} << idx);
        if (independent_with(with)) self(self, idx + 1, with, count + 1);
        self(self, idx + 1, mask, count);
    };
    if (independent_with(0))
        recurse(recurse, 0, 0, 0);
    else
        best = -1;  // the empty set already contains a support: unit ideal
    if (best < 0) return {-1, static_cast<std::int64_t>(n), true};
    return {best, static_cast<std::int64_t>(n) - best, false};
}

std::int64_t height(const Ideal& I, const GBOptions& opt) {
    return krull_dimension(I, opt).height;
}

bool is_regular_sequence(const std::vector<Polynomial>& fs,
                         const GBOptions& opt) {
    if (fs.empty()) return true;
    const RingDescriptor& ring = fs[0].ring();
    for (const Polynomial& f : fs) {
        require_same_ring(ring, f.ring());
        if (!f.is_homogeneous())
            throw PreconditionError(
                "is_regular_sequence: non-homogeneous input rejected");
        if (f.is_constant())
            throw PreconditionError(
                "is_regular_sequence: constant input rejected");
    }
    if (fs.size() > ring.num_vars()) return false;
    for (std::size_t i = 1; i <= fs.size(); ++i) {
        Ideal prefix(ring,
                     std::vector<Polynomial>(fs.begin(), fs.begin() + i));
        if (height(prefix, opt) != static_cast<std::int64_t>(i)) return false;
    }
    return true;
}

std::vector<Polynomial> find_regular_sequence_in(const Ideal& I,
                                                 std::size_t length,
                                                 std::uint64_t seed,
                                                 int degree_boost,
                                                 const GBOptions& opt) {
    const RingDescriptor& ring = I.ring();
    const Field& F = ring.field();
    if (!I.homogeneous())
        throw PreconditionError(
            "find_regular_sequence_in: ideal must be homogeneous");
    if (length == 0) return {};
    std::int64_t h = height(I, opt);
    if (static_cast<std::int64_t>(length) > h)
        throw PreconditionError(
            "find_regular_sequence_in: requested length exceeds height");

    std::vector<Polynomial> cur;
    auto accept = [&](const Polynomial& f) {
        if (f.is_zero() || f.is_constant() || !f.is_homogeneous())
            return false;
        std::vector<Polynomial> trial = cur;
        trial.push_back(f);
        Ideal J(ring, trial);
        if (height(J, opt) != static_cast<std::int64_t>(trial.size()))
            return false;
        cur.push_back(f);
        return true;
    };

    for (const Polynomial& g : I.generators()) {
        if (cur.size() == length) break;
        accept(g);
    }

    SplitMix64 rng(seed);
    const std::int64_t target =
        I.max_generator_degree() + static_cast<std::int64_t>(degree_boost);
    const int max_attempts = 200;
    int attempts = 0;
    while (cur.size() < length && attempts < max_attempts) {
        ++attempts;
        Polynomial f(ring);
        for (const Polynomial& g : I.generators()) {
            std::int64_t gap = target - g.degree();
            if (gap < 0) continue;
            Coeff c = F.is_rationals()
                          ? F.from_int(rng.uniform_int(-3, 3))
                          : F.from_int(static_cast<std::int64_t>(
                                rng.uniform(F.characteristic())));
            if (F.is_zero(c)) continue;
            std::size_t var = static_cast<std::size_t>(
                rng.uniform(static_cast<std::uint64_t>(ring.num_vars())));
            Monomial mult = Monomial::variable(
                ring.num_vars(), var, static_cast<std::int32_t>(gap));
            f = f + g.term_mul(c, mult);
        }
        accept(f);
    }
    if (cur.size() < length)
        throw RetryExhaustedError(
            "find_regular_sequence_in: retry budget exhausted (length " +
            std::to_string(cur.size()) + " of " + std::to_string(length) +
            "); a larger degree_boost may help");
    return cur;
}

std::vector<Polynomial> minimal_generators(const Ideal& I,
                                           const GBOptions& opt) {
    if (!I.homogeneous())
        throw NonHomogeneousError(
            "minimal_generators requires a homogeneous ideal");
    std::vector<Polynomial> sorted = I.generators();
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Polynomial& a, const Polynomial& b) {
                         return a.degree() < b.degree();
                     });
    std::vector<Polynomial> kept;
    for (const Polynomial& g : sorted) {
        if (kept.empty()) {
            kept.push_back(g);
            continue;
        }
        Ideal K(I.ring(), kept);
        if (!normal_form(g, K.groebner_basis(opt)).is_zero()) kept.push_back(g);
    }
    return kept;
}

bool is_complete_intersection(const Ideal& c, const GBOptions& opt) {
    if (!c.homogeneous())
        throw NonHomogeneousError(
            "is_complete_intersection requires a homogeneous ideal");
    DimensionReport d = krull_dimension(c, opt);
    if (d.is_unit) return false;
    return static_cast<std::int64_t>(minimal_generators(c, opt).size()) ==
           d.height;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Polynomial> gens = I.generators();
    for (const Polynomial& g : J.generators()) gens.push_back(g);
    return Ideal(I.ring(), std::move(gens));
}

}  // namespace linklab
