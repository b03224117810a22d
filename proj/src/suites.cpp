#include "linklab/suites.hpp"

#include <algorithm>

#include "linklab/ideal_ops.hpp"
#include "linklab/linkage.hpp"
#include "linklab/resolution.hpp"

namespace linklab {

RingDescriptor quartic_ring(const Field& f) {
    return RingDescriptor(4, f, MonomialOrder::grevlex);
}

namespace {

Polynomial mono(const RingDescriptor& r, std::initializer_list<int> exps,
                std::int64_t coeff = 1) {
    Monomial m(r.num_vars());
    std::size_t i = 0;
    for (int e : exps) m.exponent(i++) = e;
    return Polynomial::from_monomial(r, r.field().from_int(coeff), m);
}

}  // namespace

Ideal skew_lines_ideal(const RingDescriptor& r) {
    return Ideal(r, {mono(r, {1, 0, 1, 0}), mono(r, {1, 0, 0, 1}),
                     mono(r, {0, 1, 1, 0}), mono(r, {0, 1, 0, 1})});
}

Ideal twisted_quartic_ideal(const RingDescriptor& r) {
    Polynomial q = mono(r, {1, 0, 0, 1}) - mono(r, {0, 1, 1, 0});
    Polynomial c1 = mono(r, {0, 3, 0, 0}) - mono(r, {2, 0, 1, 0});
    Polynomial c2 = mono(r, {0, 0, 3, 0}) - mono(r, {0, 1, 0, 2});
    Polynomial c3 = mono(r, {1, 0, 2, 0}) - mono(r, {0, 2, 0, 1});
    return Ideal(r, {q, c1, c2, c3});
}

Ideal skew_quartic_ci(const RingDescriptor& r) {
    Polynomial q = mono(r, {1, 0, 0, 1}) - mono(r, {0, 1, 1, 0});
    Polynomial c = mono(r, {1, 0, 2, 0}) - mono(r, {0, 2, 0, 1});
    return Ideal(r, {q, c});
}

Ideal maximal_ideal(const RingDescriptor& r) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < r.num_vars(); ++i)
        gens.push_back(Polynomial::variable(r, i));
    return Ideal(r, std::move(gens));
}

namespace {

Polynomial matrix_minor(const RingDescriptor& ring,
                        const std::vector<std::vector<std::size_t>>& var_of,
                        const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    // Laplace expansion along the first listed row
    if (rows.size() == 1)
        return Polynomial::variable(ring, var_of[rows[0]][cols[0]]);
    Polynomial det(ring);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> sub_cols;
        for (std::size_t l = 0; l < cols.size(); ++l)
            if (l != k) sub_cols.push_back(cols[l]);
        Polynomial term =
            Polynomial::variable(ring, var_of[rows[0]][cols[k]]) *
            matrix_minor(ring, var_of, sub_rows, sub_cols);
        det = (k % 2 == 0) ? det + term : det - term;
    }
    return det;
}

void subsets_of_size(std::size_t n, std::size_t k,
                     std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

Ideal minors_ideal(const RingDescriptor& ring,
                   const std::vector<std::vector<std::size_t>>& var_of,
                   std::size_t t) {
    const std::size_t rows = var_of.size();
    const std::size_t cols = rows ? var_of[0].size() : 0;
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    subsets_of_size(rows, t, row_sets);
    subsets_of_size(cols, t, col_sets);
    std::vector<Polynomial> gens;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets)
            gens.push_back(matrix_minor(ring, var_of, rs, cs));
    return Ideal(ring, std::move(gens));
}

std::string Ledger::to_string() const {
    std::string out;
    for (const auto& e : entries) {
        out += (e.pass ? "PASS" : "FAIL");
        out += "  " + e.name;
        if (!e.pass || !e.actual.empty())
            out += "  [expected: " + e.expected + "; actual: " + e.actual +
                   "]";
        out += "\n";
    }
    out += all_pass() ? "ledger: all entries pass\n"
                      : "ledger: FAILURES present\n";
    return out;
}

namespace {

void entry(Ledger& L, const std::string& name, bool pass,
           const std::string& expected, const std::string& actual) {
    L.entries.push_back({name, pass, expected, actual});
}

void check_eq(Ledger& L, const std::string& name, std::int64_t expected,
              std::int64_t actual) {
    entry(L, name, expected == actual, std::to_string(expected),
          std::to_string(actual));
}

}  // namespace

Ledger verify_paper_suite(const PaperSuiteOptions& opt) {
    Ledger L;
    const Field F = Field::prime_field(32003);
    RingDescriptor ring = quartic_ring(F);
    Ideal a = skew_lines_ideal(ring);
    Ideal b = twisted_quartic_ideal(ring);
    Ideal c = skew_quartic_ci(ring);

    Ideal inter = intersect(a, b, opt.gb);
    entry(L, "a cap b equals the stated 2-generator ideal",
          ideals_equal(inter, c), "equal", ideals_equal(inter, c) ? "equal" : "different");
    entry(L, "a cap b is a complete intersection",
          is_complete_intersection(c, opt.gb), "true",
          is_complete_intersection(c, opt.gb) ? "true" : "false");
    bool link_ab = ideals_equal(colon(c, a, opt.gb), b);
    entry(L, "(a cap b) : a = b", link_ab, "equal",
          link_ab ? "equal" : "different");
    bool link_ba = ideals_equal(colon(c, b, opt.gb), a);
    entry(L, "(a cap b) : b = a", link_ba, "equal",
          link_ba ? "equal" : "different");

    DimensionReport da = krull_dimension(a, opt.gb);
    DimensionReport db = krull_dimension(b, opt.gb);
    check_eq(L, "dim R/a", 2, da.krull_dim);
    check_eq(L, "dim R/b", 2, db.krull_dim);
    check_eq(L, "height a", 2, da.height);
    check_eq(L, "height b", 2, db.height);

    DepthPd dpa = depth_and_pd(a, opt.gb);
    DepthPd dpb = depth_and_pd(b, opt.gb);
    check_eq(L, "depth R/a", 1, dpa.depth);
    check_eq(L, "depth R/b", 1, dpb.depth);

    SqfInvariants sa = sqf_invariants(a, F);
    check_eq(L, "cd(a) via squarefree route", 3, sa.cd);
    check_eq(L, "fgrade(a)", 1, sa.fgrade);

    {
        RingDescriptor r2 = quartic_ring(Field::prime_field(2));
        Ideal b2 = twisted_quartic_ideal(r2);
        CdBounds cb = cd_bounds_char_p(b2, opt.probe_e_max, opt.gb);
        bool started_right = true;  // bounds [2,3] before probing
        started_right = cb.lower == 2;
        if (cb.exact) {
            entry(L, "cd(b) over F_2 (Frobenius probe)", *cb.exact == 2 && started_right,
                  "exact 2 from initial bounds [2,3]",
                  "exact " + std::to_string(*cb.exact) + "; " + cb.notes);
        } else {
            // degraded outcome: keep the bounds honest, never claim cd = 3
            entry(L, "cd(b) over F_2 (Frobenius probe)",
                  cb.probe_budget_exceeded && cb.lower == 2 && cb.upper == 3,
                  "exact 2, or bounds [2,3] with budget-exceeded flag",
                  "bounds [" + std::to_string(cb.lower) + ", " +
                      std::to_string(cb.upper) + "]; " + cb.notes);
        }
    }

    LinkageRecord rec = link(a, c, false, opt.gb);
    entry(L, "link(a, a cap b) verifies", rec.verified, "verified",
          rec.verified ? "verified" : "not verified");
    std::int64_t kdepth = canonical_depth(a, rec, opt.gb);
    check_eq(L, "canonical depth of the link (= depth R/b + 1)", 2, kdepth);
    entry(L, "dim-2 non-CM link has both depths 1",
          !rec.inv_a.cm && rec.inv_a.dim == 2 && rec.inv_a.depth == 1 &&
              rec.inv_b.depth == 1,
          "depth(R/a) = depth(R/b) = 1 with R/a non-CM of dim 2",
          "depth(R/a)=" + std::to_string(rec.inv_a.depth) +
              ", depth(R/b)=" + std::to_string(rec.inv_b.depth));

    LinkageRecord rec_b = link(b, c, true, opt.gb);
    std::int64_t kdepth_b = canonical_depth(b, rec_b, opt.gb);
    check_eq(L, "reverse link canonical depth (= depth R/a + 1)", 2, kdepth_b);

    bool sym = verify_link(a, b, c, nullptr, opt.gb) &&
               verify_link(b, a, c, nullptr, opt.gb);
    entry(L, "verify_link symmetric in a and b", sym, "true",
          sym ? "true" : "false");

    if (opt.heavy) {
        RingDescriptor R12(12, F, MonomialOrder::grevlex);
        std::vector<std::vector<std::size_t>> X(4,
                                                std::vector<std::size_t>(3));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j) X[i][j] = 3 * i + j;
        std::vector<std::vector<std::size_t>> Xp(X.begin() + 2, X.end());

        Ideal I3 = minors_ideal(R12, X, 3);
        Ideal I2 = minors_ideal(R12, Xp, 2);

        DimensionReport d3 = krull_dimension(I3, opt.gb);
        DimensionReport d2 = krull_dimension(I2, opt.gb);
        check_eq(L, "[heavy] height I_3(X)", 2, d3.height);
        check_eq(L, "[heavy] height I_2(X')", 2, d2.height);

        DepthPd p3 = depth_and_pd(I3, opt.gb);
        DepthPd p2 = depth_and_pd(I2, opt.gb);
        entry(L, "[heavy] R/I_3(X) is Cohen-Macaulay",
              p3.depth == d3.krull_dim, "depth = dim = 10",
              "depth " + std::to_string(p3.depth) + ", dim " +
                  std::to_string(d3.krull_dim));
        entry(L, "[heavy] R/I_2(X') is Cohen-Macaulay",
              p2.depth == d2.krull_dim, "depth = dim = 10",
              "depth " + std::to_string(p2.depth) + ", dim " +
                  std::to_string(d2.krull_dim));

        CdBounds c3 = cd_bounds_char_p(I3, opt.probe_e_max, opt.gb);
        CdBounds c2 = cd_bounds_char_p(I2, opt.probe_e_max, opt.gb);
        bool both_exact_2 = c3.exact && c2.exact && *c3.exact == 2 &&
                            *c2.exact == 2;
        entry(L, "[heavy] char-p cd equal and exact on both sides",
              both_exact_2, "cd = 2 on both sides",
              "I_3: " + (c3.exact ? std::to_string(*c3.exact) : "inexact") +
                  ", I_2: " +
                  (c2.exact ? std::to_string(*c2.exact) : "inexact"));
        entry(L,
              "[heavy] characteristic-0 values cd = 4 and cd = 3 NOT "
              "reproduced (out-of-scope method); char-p values reported "
              "instead",
              true, "documented", "documented");
    }
    return L;
}

// ---- randomized property suite --------------------------------------------

Ideal random_squarefree_ideal(const RingDescriptor& ring, SplitMix64& rng) {
    const std::size_t n = ring.num_vars();
    const std::uint64_t full = (1ULL << n) - 1;
    for (;;) {
        std::size_t count = 1 + rng.uniform(n);
        std::vector<std::uint64_t> supports;
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t s = 1 + rng.uniform(full);  // nonempty subset
            supports.push_back(s);
        }
        std::vector<Polynomial> gens;
        for (std::uint64_t s : supports) {
            Monomial m(n);
            for (std::size_t v = 0; v < n; ++v)
                if (s & (1ULL << v)) m.exponent(v) = 1;
            gens.push_back(
                Polynomial::from_monomial(ring, ring.field().one(), m));
        }
        Ideal I(ring, std::move(gens));
        if (!I.is_unit_ideal() && !I.is_zero_ideal()) return I;
    }
}

Ideal random_unmixed_squarefree_ideal(const RingDescriptor& ring,
                                      SplitMix64& rng) {
    const std::size_t n = ring.num_vars();
    std::size_t f = 1 + rng.uniform(n - 1);  // facet size in [1, n-1]
    std::vector<std::vector<std::size_t>> all;
    {
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (cur.size() == f) {
                all.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < n; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }
    // deterministic Fisher-Yates, then take a prefix
    for (std::size_t i = all.size(); i > 1; --i)
        std::swap(all[i - 1], all[rng.uniform(i)]);
    std::size_t m = 1 + rng.uniform(all.size());
    std::vector<std::uint64_t> facets;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t mask = 0;
        for (std::size_t v : all[i]) mask |= 1ULL << v;
        facets.push_back(mask);
    }
    SimplicialComplex C = SimplicialComplex::from_facets(n, facets);
    return ideal_of_complex(C, ring);
}

std::string PropertyStats::to_string() const {
    std::string out;
    out += "property suite: trials=" + std::to_string(trials) +
           " seed=" + std::to_string(seed) + " n=" + std::to_string(vars) +
           " char=" + std::to_string(characteristic) + "\n";
    out += "links attempted:    " + std::to_string(links_attempted) + "\n";
    out += "links verified:     " + std::to_string(links_verified) + "\n";
    out += "stage failures:     " + std::to_string(stage_failures) + "\n";
    out += "chains completed:   " + std::to_string(chains_completed) + "\n";
    out += "CM-CM links:        " + std::to_string(cm_cm_links) + "\n";
    out += "dim-2 non-CM links: " + std::to_string(dim2_noncm_links) + "\n";
    out += "squarefree chain endpoints: " +
           std::to_string(sqf_chain_endpoints) + "\n";
    out += "violations:         " + std::to_string(violations) + "\n";
    for (const std::string& v : violation_notes) out += "  VIOLATION: " + v + "\n";
    return out;
}

PropertyStats random_property_suite(const PropertyOptions& opt) {
    PropertyStats st;
    st.trials = opt.trials;
    st.seed = opt.seed;
    st.vars = opt.vars;
    st.characteristic = opt.characteristic;

    Field F = opt.characteristic == 0
                  ? Field::rationals()
                  : Field::prime_field(opt.characteristic);
    RingDescriptor ring(opt.vars, F, MonomialOrder::grevlex);
    SplitMix64 root(opt.seed);

    auto violation = [&](const std::string& why) {
        ++st.violations;
        st.violation_notes.push_back(why);
    };

    for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
        SplitMix64 rng = root.split();
        Ideal a = random_unmixed_squarefree_ideal(ring, rng);
        const std::string tag = "trial " + std::to_string(trial);

        ++st.links_attempted;
        LinkageRecord rec{a, a, a, false, false, "", {}, {}};
        try {
            rec = find_ci_link(a, rng.next(), false, opt.gb);
        } catch (const Error&) {
            ++st.stage_failures;
            continue;
        }
        if (!rec.verified) {
            violation(tag + ": link of an unmixed ideal failed to verify");
            continue;
        }
        ++st.links_verified;

        // double-colon involution
        if (!ideals_equal(colon(rec.c, rec.b, opt.gb), a))
            violation(tag + ": c : (c : a) != a");

        // CM preservation across a link
        if (rec.inv_a.cm && !rec.inv_b.cm)
            violation(tag + ": CM not preserved under linkage");

        // canonical-module depth identity
        try {
            std::int64_t kd = canonical_depth(a, rec, opt.gb);
            if (!rec.inv_a.cm) {
                if (kd != rec.inv_b.depth + 1)
                    violation(tag + ": depth K = " + std::to_string(kd) +
                              " != depth R/b + 1 = " +
                              std::to_string(rec.inv_b.depth + 1));
            } else {
                if (kd != rec.inv_a.dim)
                    violation(tag +
                              ": CM side: canonical depth != dim R/a");
            }
        } catch (const ZeroModuleError&) {
            ++st.stage_failures;
        }

        // two-dimensional non-CM links have both depths 1
        if (rec.inv_a.dim == 2 && !rec.inv_a.cm) {
            ++st.dim2_noncm_links;
            if (rec.inv_a.depth != 1 || rec.inv_b.depth != 1)
                violation(tag + ": dim-2 non-CM link without depth 1");
        }

        // equal exact char-p cd on CM-CM links (both equal the height)
        if (!F.is_rationals() && rec.inv_a.cm && rec.inv_b.cm) {
            ++st.cm_cm_links;
            CdBounds ca = cd_bounds_char_p(a, 3, opt.gb);
            CdBounds cb = cd_bounds_char_p(rec.b, 3, opt.gb);
            if (!ca.exact || !cb.exact || *ca.exact != *cb.exact ||
                *ca.exact != rec.inv_a.height)
                violation(tag + ": CM-CM link without equal exact cd");
        }

        // even chains preserve depth
        ChainResult chain = even_link_chain(a, 2, rng.next(), false, opt.gb);
        if (!chain.completed) {
            ++st.stage_failures;
        } else {
            ++st.chains_completed;
            const Ideal& end = chain.records.back().b;
            DepthPd dp_end = depth_and_pd(end, opt.gb);
            if (dp_end.depth != rec.inv_a.depth)
                violation(tag + ": depth changed along an even chain");
            if (is_squarefree_monomial_ideal(end)) {
                ++st.sqf_chain_endpoints;
                SqfInvariants se = sqf_invariants(end, F);
                SqfInvariants sa = sqf_invariants(a, F);
                if (se.cd != sa.cd)
                    violation(tag +
                              ": squarefree even-chain endpoints with "
                              "different cd");
            }
        }
    }
    return st;
}

}  // namespace linklab
