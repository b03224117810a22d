#include "linklab/groebner.hpp"

#include <algorithm>
#include <cstdlib>

namespace linklab {

GBOptions::GBOptions() : pair_budget(default_pair_budget()) {}

std::uint64_t default_pair_budget() {
    static const std::uint64_t v = [] {
        if (const char* s = std::getenv("LINKLAB_PAIR_BUDGET")) {
            char* end = nullptr;
            unsigned long long x = std::strtoull(s, &end, 10);
            if (end && *end == '\0' && x > 0)
                return static_cast<std::uint64_t>(x);
        }
        return std::uint64_t{1000000};
    }();
    return v;
}

namespace {

Polynomial drop_leading(const Polynomial& p) {
    const auto& ts = p.terms();
    return Polynomial::make(p.ring(),
                            std::vector<Term>(ts.begin() + 1, ts.end()));
}

struct SPair {
    std::size_t i, j;
    Monomial lcm;
    std::int64_t deg;
};

ModVec s_vector(const ModVec& f, const ModVec& g, const Monomial& lcm) {
    // both monic with the same leading position
    ModLead lf = f.lead(), lg = g.lead();
    const Field& F = f.ring().field();
    return f.term_mul(F.one(), lcm.divide_exact(lf.term.mono)) -
           g.term_mul(F.one(), lcm.divide_exact(lg.term.mono));
}

// Gebauer-Moeller update: h (monic, nonzero) joins G; prunes old pairs by
// the chain criterion, new pairs by lcm domination, and (rank-1 only,
// where it is valid) the coprimality criterion.
void gm_update(std::vector<ModVec>& G, std::vector<SPair>& pairs, ModVec h,
               bool rank1) {
    const RingDescriptor& ring = h.ring();
    const std::size_t m = G.size();
    const ModLead hl = h.lead();

    std::vector<SPair> kept;
    kept.reserve(pairs.size());
    for (SPair& p : pairs) {
        bool drop = false;
        if (G[p.i].lead().pos == hl.pos && hl.term.mono.divides(p.lcm)) {
            Monomial lih =
                Monomial::lcm(G[p.i].lead().term.mono, hl.term.mono);
            Monomial ljh =
                Monomial::lcm(G[p.j].lead().term.mono, hl.term.mono);
            if (lih != p.lcm && ljh != p.lcm) drop = true;
        }
        if (!drop) kept.push_back(std::move(p));
    }
    pairs = std::move(kept);

    struct Cand {
        std::size_t k;
        Monomial lcm;
        std::int64_t deg;
        bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t k = 0; k < m; ++k) {
        ModLead lk = G[k].lead();
        if (lk.pos != hl.pos) continue;
        Monomial L = Monomial::lcm(lk.term.mono, hl.term.mono);
        std::int64_t d = L.total_degree();
        bool cop = lk.term.mono.coprime(hl.term.mono);
        cands.push_back({k, std::move(L), d, cop});
    }
    std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        auto c = ring.compare(a.lcm, b.lcm);
        if (c != std::strong_ordering::equal)
            return c == std::strong_ordering::less;
        return a.k < b.k;
    });
    std::vector<Cand> minimal;
    for (Cand& c : cands) {
        bool dominated = false;
        for (const Cand& kc : minimal)
            if (kc.lcm.divides(c.lcm)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(std::move(c));
    }
    for (Cand& c : minimal)
        if (!(rank1 && c.coprime))
            pairs.push_back({c.k, m, std::move(c.lcm), c.deg});

    G.push_back(std::move(h));
}

std::vector<ModVec> module_groebner(std::vector<ModVec> gens,
                                    const GBOptions& opt) {
    std::vector<ModVec> G;
    std::vector<SPair> pairs;
    bool rank1 = !gens.empty() && gens[0].rank() == 1;
    std::uint64_t processed = 0;

    for (ModVec& g : gens) {
        if (g.is_zero()) continue;
        ModVec h = module_normal_form(g, G);
        if (!h.is_zero()) gm_update(G, pairs, h.monic(), rank1);
    }

    while (!pairs.empty()) {
        auto it = std::min_element(
            pairs.begin(), pairs.end(), [&](const SPair& a, const SPair& b) {
                if (a.deg != b.deg) return a.deg < b.deg;
                if (a.i != b.i) return a.i < b.i;
                return a.j < b.j;
            });
        SPair p = std::move(*it);
        pairs.erase(it);
        if (++processed > opt.pair_budget)
            throw BudgetExceededError(
                "Groebner S-pair budget exceeded (" +
                    std::to_string(opt.pair_budget) +
                    "); raise LINKLAB_PAIR_BUDGET to continue",
                processed);
        ModVec h = module_normal_form(s_vector(G[p.i], G[p.j], p.lcm), G);
        if (!h.is_zero()) gm_update(G, pairs, h.monic(), rank1);
    }
    return G;
}

bool lead_greater(const ModVec& a, const ModVec& b) {
    ModLead la = a.lead(), lb = b.lead();
    if (la.pos != lb.pos) return la.pos < lb.pos;  // POT: lower pos is bigger
    return a.ring().compare(la.term.mono, lb.term.mono) ==
           std::strong_ordering::greater;
}

std::vector<ModVec> interreduce(std::vector<ModVec> G) {
    std::vector<bool> removed(G.size(), false);
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || removed[j] || removed[i]) continue;
            ModLead li = G[i].lead(), lj = G[j].lead();
            if (li.pos != lj.pos) continue;
            if (!lj.term.mono.divides(li.term.mono)) continue;
            if (lj.term.mono == li.term.mono && j > i) continue;
            removed[i] = true;
        }
    }
    std::vector<ModVec> kept;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!removed[i]) kept.push_back(std::move(G[i]));

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<ModVec> others;
            others.reserve(kept.size() - 1);
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            ModVec nf = module_normal_form(kept[i], others).monic();
            if (nf != kept[i]) {
                kept[i] = std::move(nf);
                changed = true;
            }
        }
    }
    std::sort(kept.begin(), kept.end(), lead_greater);
    return kept;
}

}  // namespace

ModVec module_normal_form(const ModVec& v, const std::vector<ModVec>& G) {
    const RingDescriptor& ring = v.ring();
    const Field& F = ring.field();
    for (const ModVec& g : G) {
        require_same_ring(ring, g.ring());
        if (g.rank() != v.rank())
            throw DimensionError("normal form: ranks differ");
        if (g.is_zero())
            throw ZeroPolynomialError("normal form: zero divisor element");
    }
    ModVec h = v;
    std::vector<std::vector<Term>> out(v.rank());
    while (!h.is_zero()) {
        ModLead hl = h.lead();
        bool reduced = false;
        for (const ModVec& g : G) {
            ModLead gl = g.lead();
            if (gl.pos != hl.pos || !gl.term.mono.divides(hl.term.mono))
                continue;
            Coeff c = F.div(hl.term.coeff, gl.term.coeff);
            Monomial q = hl.term.mono.divide_exact(gl.term.mono);
            h = h - g.term_mul(c, q);
            reduced = true;
            break;
        }
        if (!reduced) {
            out[hl.pos].push_back(hl.term);
            h.comp(hl.pos) = drop_leading(h.comp(hl.pos));
        }
    }
    ModVec r(ring, v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i)
        r.comp(i) = Polynomial::make(ring, std::move(out[i]));
    return r;
}

std::vector<ModVec> module_reduced_groebner(std::vector<ModVec> gens,
                                            const GBOptions& opt) {
    return interreduce(module_groebner(std::move(gens), opt));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    std::vector<ModVec> gv;
    gv.reserve(G.size());
    for (const Polynomial& g : G) gv.push_back(ModVec::from_polynomial(g));
    return module_normal_form(ModVec::from_polynomial(f), gv).comp(0);
}

std::vector<Polynomial> reduced_groebner(const RingDescriptor& ring,
                                         const std::vector<Polynomial>& gens,
                                         const GBOptions& opt) {
    std::vector<ModVec> gv;
    gv.reserve(gens.size());
    for (const Polynomial& g : gens) {
        require_same_ring(ring, g.ring());
        gv.push_back(ModVec::from_polynomial(g));
    }
    std::vector<ModVec> gb = module_reduced_groebner(std::move(gv), opt);
    std::vector<Polynomial> out;
    out.reserve(gb.size());
    for (ModVec& v : gb) out.push_back(v.comp(0));
    return out;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G) {
    const RingDescriptor& ring = f.ring();
    const Field& F = ring.field();
    DivisionResult res{std::vector<Polynomial>(G.size(), Polynomial(ring)),
                       Polynomial(ring)};
    std::vector<Term> rem;
    Polynomial h = f;
    while (!h.is_zero()) {
        const Term& lt = h.leading();
        bool reduced = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (G[k].is_zero()) continue;
            require_same_ring(ring, G[k].ring());
            const Term& gl = G[k].leading();
            if (!gl.mono.divides(lt.mono)) continue;
            Coeff c = F.div(lt.coeff, gl.coeff);
            Monomial q = lt.mono.divide_exact(gl.mono);
            res.quotients[k] =
                res.quotients[k] + Polynomial::from_monomial(ring, c, q);
            h = axpy_sub(h, c, q, G[k]);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(lt);
            h = drop_leading(h);
        }
    }
    res.remainder = Polynomial::make(ring, std::move(rem));
    return res;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw ZeroPolynomialError("exact_divide by zero");
    DivisionResult d = divide(f, {g});
    if (!d.remainder.is_zero())
        throw Error("exact_divide: division left a remainder");
    return d.quotients[0];
}

ColumnSpanGB::ColumnSpanGB(const RingDescriptor& ring,
                           std::vector<ModVec> columns, const GBOptions& opt)
    : ring_(ring),
      ambient_(columns.empty() ? 0 : columns[0].rank()),
      ncols_(columns.size()) {
    std::vector<ModVec> ext;
    ext.reserve(ncols_);
    for (std::size_t j = 0; j < ncols_; ++j) {
        require_same_ring(ring_, columns[j].ring());
        if (columns[j].rank() != ambient_)
            throw DimensionError("column ranks differ");
        ModVec w(ring_, ambient_ + ncols_);
        for (std::size_t i = 0; i < ambient_; ++i)
            w.comp(i) = columns[j].comp(i);
        w.comp(ambient_ + j) =
            Polynomial::constant(ring_, ring_.field().one());
        ext.push_back(std::move(w));
    }
    extended_gb_ = module_reduced_groebner(std::move(ext), opt);
    for (const ModVec& g : extended_gb_) {
        bool first_block_zero = true;
        for (std::size_t i = 0; i < ambient_ && first_block_zero; ++i)
            if (!g.comp(i).is_zero()) first_block_zero = false;
        if (!first_block_zero) continue;
        ModVec s(ring_, ncols_);
        for (std::size_t j = 0; j < ncols_; ++j)
            s.comp(j) = g.comp(ambient_ + j);
        syzygies_.push_back(std::move(s));
    }
}

std::optional<std::vector<Polynomial>> ColumnSpanGB::express(
    const ModVec& v) const {
    if (v.rank() != ambient_)
        throw DimensionError("express: rank does not match ambient");
    if (ncols_ == 0) {
        if (v.is_zero()) return std::vector<Polynomial>{};
        return std::nullopt;
    }
    ModVec w(ring_, ambient_ + ncols_);
    for (std::size_t i = 0; i < ambient_; ++i) w.comp(i) = v.comp(i);
    ModVec nf = module_normal_form(w, extended_gb_);
    for (std::size_t i = 0; i < ambient_; ++i)
        if (!nf.comp(i).is_zero()) return std::nullopt;
    std::vector<Polynomial> q;
    q.reserve(ncols_);
    for (std::size_t j = 0; j < ncols_; ++j)
        q.push_back(-nf.comp(ambient_ + j));
    return q;
}

bool ColumnSpanGB::contains(const ModVec& v) const {
    return express(v).has_value();
}

std::vector<ModVec> syzygy_generators(const RingDescriptor& ring,
                                      const std::vector<ModVec>& columns,
                                      const GBOptions& opt) {
    ColumnSpanGB span(ring, columns, opt);
    return span.syzygies();
}

}  // namespace linklab
