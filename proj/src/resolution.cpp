#include "linklab/resolution.hpp"

#include <algorithm>

#include "linklab/ideal_ops.hpp"

namespace linklab {

PresentedModule PresentedModule::cyclic(const Ideal& I) {
    if (!I.homogeneous())
        throw NonHomogeneousError("cyclic module requires a homogeneous ideal");
    PresentedModule M{I.ring(), 1, {0}, {}};
    for (const Polynomial& g : I.generators())
        M.relations.push_back(ModVec::from_polynomial(g));
    return M;
}

void PresentedModule::validate_graded() const {
    if (degree_labels.size() != ambient_rank)
        throw DimensionError("degree label count does not match ambient rank");
    for (const ModVec& col : relations) {
        if (col.rank() != ambient_rank)
            throw DimensionError("relation column rank mismatch");
        if (!col.is_zero() && !col.is_homogeneous(degree_labels))
            throw NonHomogeneousError("relation column is not homogeneous");
    }
}

PresentedModule syzygy_module(const std::vector<ModVec>& vectors,
                              const std::vector<std::int64_t>& ambient_labels,
                              const GBOptions& opt) {
    if (vectors.empty())
        throw PreconditionError("syzygy_module of an empty list");
    const RingDescriptor& ring = vectors[0].ring();
    for (const ModVec& v : vectors) {
        require_same_ring(ring, v.ring());
        if (v.rank() != vectors[0].rank())
            throw DimensionError("syzygy_module: mixed ambient ranks");
    }
    PresentedModule S{ring, vectors.size(), {}, {}};
    for (const ModVec& v : vectors)
        S.degree_labels.push_back(
            v.is_zero() ? 0 : v.graded_degree(ambient_labels));
    S.relations = syzygy_generators(ring, vectors, opt);
    return S;
}

namespace {

bool unit_entry(const Polynomial& p) {
    return !p.is_zero() && p.is_constant();
}

ModVec drop_row(const ModVec& v, std::size_t row) {
    std::vector<Polynomial> comps;
    comps.reserve(v.rank() - 1);
    for (std::size_t i = 0; i < v.rank(); ++i)
        if (i != row) comps.push_back(v.comp(i));
    if (comps.empty()) return ModVec(v.ring(), 0);
    return ModVec::from_components(std::move(comps));
}

// Cancel unit entries of N (columns of d_{i+1} in the coordinates of F_i),
// deleting the matching basis vectors from F_{i+1} and F_i. P, when
// present, holds the columns of d_i (indexed by the F_i basis); a
// cancellation at row r deletes its column r. Entries are scanned in a
// fixed row-major sweep.
void cancel_units(std::vector<ModVec>& N, std::vector<std::int64_t>& next_deg,
                  std::vector<ModVec>* P, std::vector<std::int64_t>& cur_deg,
                  const RingDescriptor& ring) {
    const Field& F = ring.field();
    for (;;) {
        for (std::size_t j = N.size(); j-- > 0;) {
            if (N[j].is_zero()) {
                N.erase(N.begin() + j);
                next_deg.erase(next_deg.begin() + j);
            }
        }
        std::size_t rows = cur_deg.size();
        std::size_t hit_r = rows, hit_c = 0;
        for (std::size_t r = 0; r < rows && hit_r == rows; ++r)
            for (std::size_t c = 0; c < N.size(); ++c)
                if (unit_entry(N[c].comp(r))) {
                    hit_r = r;
                    hit_c = c;
                    break;
                }
        if (hit_r == rows) break;

        const std::size_t r = hit_r, c = hit_c;
        Coeff inv_u = F.inv(N[c].comp(r).leading().coeff);
        for (std::size_t j = 0; j < N.size(); ++j) {
            if (j == c || N[j].comp(r).is_zero()) continue;
            Polynomial q = N[j].comp(r).scalar_mul(inv_u);
            for (std::size_t row = 0; row < rows; ++row)
                N[j].comp(row) = N[j].comp(row) - q * N[c].comp(row);
        }
        N.erase(N.begin() + c);
        next_deg.erase(next_deg.begin() + c);
        for (ModVec& col : N) col = drop_row(col, r);
        if (P) P->erase(P->begin() + r);
        cur_deg.erase(cur_deg.begin() + r);
    }
}

}  // namespace

FreeResolution minimal_free_resolution(const PresentedModule& M,
                                       const GBOptions& opt) {
    M.validate_graded();
    const RingDescriptor& ring = M.ring;
    FreeResolution R{ring, {M.degree_labels}, {}};
    if (M.is_zero_module()) return R;

    std::vector<ModVec> d1;
    std::vector<std::int64_t> deg1;
    for (const ModVec& col : M.relations) {
        if (col.is_zero()) continue;
        deg1.push_back(col.graded_degree(M.degree_labels));
        d1.push_back(col);
    }
    cancel_units(d1, deg1, nullptr, R.degrees[0], ring);
    if (d1.empty()) return R;
    R.diffs.push_back(std::move(d1));
    R.degrees.push_back(std::move(deg1));

    while (true) {
        if (R.length() > ring.num_vars())
            throw Error("resolution exceeded the Hilbert bound (internal)");
        std::vector<ModVec> syz =
            syzygy_generators(ring, R.diffs.back(), opt);
        if (syz.empty()) break;
        std::vector<std::int64_t> deg_next;
        deg_next.reserve(syz.size());
        for (const ModVec& s : syz)
            deg_next.push_back(s.graded_degree(R.degrees.back()));
        cancel_units(syz, deg_next, &R.diffs.back(), R.degrees.back(), ring);
        if (syz.empty()) break;
        R.diffs.push_back(std::move(syz));
        R.degrees.push_back(std::move(deg_next));
    }
    return R;
}

FreeResolution minimal_free_resolution(const Ideal& I, const GBOptions& opt) {
    return minimal_free_resolution(PresentedModule::cyclic(I), opt);
}

std::vector<int> BettiTable::totals() const {
    std::vector<int> t;
    t.reserve(by_degree.size());
    for (const auto& row : by_degree) {
        int s = 0;
        for (const auto& [d, c] : row) s += c;
        t.push_back(s);
    }
    return t;
}

std::string BettiTable::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < by_degree.size(); ++i) {
        out += "beta_" + std::to_string(i) + ":";
        for (const auto& [d, c] : by_degree[i])
            out += " " + std::to_string(d) + "^" + std::to_string(c);
        out += "\n";
    }
    return out;
}

BettiTable graded_betti(const FreeResolution& F) {
    BettiTable B;
    B.by_degree.resize(F.degrees.size());
    for (std::size_t i = 0; i < F.degrees.size(); ++i)
        for (std::int64_t d : F.degrees[i]) ++B.by_degree[i][d];
    return B;
}

BettiTable graded_betti(const Ideal& I, const GBOptions& opt) {
    return graded_betti(minimal_free_resolution(I, opt));
}

DepthPd depth_and_pd(const PresentedModule& M, const GBOptions& opt) {
    if (M.is_zero_module())
        throw ZeroModuleError("depth of the zero module is undefined");
    FreeResolution R = minimal_free_resolution(M, opt);
    if (R.resolves_zero_module())
        throw ZeroModuleError("depth of the zero module is undefined");
    std::int64_t pd = static_cast<std::int64_t>(R.length());
    return {pd, static_cast<std::int64_t>(M.ring.num_vars()) - pd};
}

DepthPd depth_and_pd(const Ideal& I, const GBOptions& opt) {
    DepthPd r = depth_and_pd(PresentedModule::cyclic(I), opt);
    DimensionReport dim = krull_dimension(I, opt);
    if (r.depth > dim.krull_dim)
        throw Error("depth exceeds dimension (internal inconsistency)");
    return r;
}

PresentedModule quotient_presentation(const Ideal& b, const Ideal& c,
                                      const GBOptions& opt) {
    require_same_ring(b.ring(), c.ring());
    if (!b.homogeneous() || !c.homogeneous())
        throw NonHomogeneousError("quotient_presentation requires graded input");
    for (const Polynomial& h : c.generators())
        if (!contains(b, h))
            throw ContainmentError("quotient_presentation: c is not inside b");

    std::vector<Polynomial> bmin = minimal_generators(b, opt);
    std::vector<Polynomial> chosen;
    for (const Polynomial& g : bmin)
        if (!contains(c, g)) chosen.push_back(g);

    const RingDescriptor& ring = b.ring();
    if (chosen.empty()) return PresentedModule{ring, 0, {}, {}};

    PresentedModule M{ring, chosen.size(), {}, {}};
    for (const Polynomial& g : chosen) M.degree_labels.push_back(g.degree());

    std::vector<ModVec> cols;
    for (const Polynomial& g : chosen)
        cols.push_back(ModVec::from_polynomial(g));
    for (const Polynomial& h : c.generators())
        cols.push_back(ModVec::from_polynomial(h));
    std::vector<ModVec> syz = syzygy_generators(ring, cols, opt);
    for (const ModVec& s : syz) {
        ModVec proj(ring, chosen.size());
        for (std::size_t j = 0; j < chosen.size(); ++j)
            proj.comp(j) = s.comp(j);
        if (!proj.is_zero()) M.relations.push_back(std::move(proj));
    }
    return M;
}

namespace {

// Columns of M^T, given the columns of M (elements of R^rows).
std::vector<ModVec> transpose_columns(const RingDescriptor& ring,
                                      const std::vector<ModVec>& cols,
                                      std::size_t rows) {
    std::vector<ModVec> out;
    out.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        ModVec t(ring, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            t.comp(c) = cols[c].comp(r);
        out.push_back(std::move(t));
    }
    return out;
}

// Generators of ker( x -> d^T x ) at cohomological degree i, i.e. the
// cocycles of the dualized resolution, as elements of R^{rank_i}.
std::vector<ModVec> cocycle_generators(const FreeResolution& R,
                                       std::size_t i, const GBOptions& opt) {
    const RingDescriptor& ring = R.ring;
    if (i == R.length()) {
        std::vector<ModVec> basis;
        for (std::size_t k = 0; k < R.rank(i); ++k)
            basis.push_back(ModVec::unit(ring, R.rank(i), k));
        return basis;
    }
    std::vector<ModVec> delta_cols =
        transpose_columns(ring, R.diffs[i], R.rank(i));
    return syzygy_generators(ring, delta_cols, opt);
}

// Columns of the incoming dual map delta^{i-1} = (d_i)^T.
std::vector<ModVec> coboundary_columns(const FreeResolution& R,
                                       std::size_t i) {
    if (i == 0) return {};
    return transpose_columns(R.ring, R.diffs[i - 1], R.rank(i - 1));
}

}  // namespace

bool ext_nonvanishing(const Ideal& I, std::int64_t i, const GBOptions& opt) {
    if (i < 0) throw PreconditionError("ext_nonvanishing: negative index");
    FreeResolution R = minimal_free_resolution(I, opt);
    if (R.resolves_zero_module()) return false;  // Ext of the zero module
    if (static_cast<std::size_t>(i) > R.length()) return false;
    std::size_t ii = static_cast<std::size_t>(i);
    std::vector<ModVec> cocycles = cocycle_generators(R, ii, opt);
    std::vector<ModVec> image = coboundary_columns(R, ii);
    if (image.empty()) {
        for (const ModVec& z : cocycles)
            if (!z.is_zero()) return true;
        return false;
    }
    ColumnSpanGB span(R.ring, image, opt);
    for (const ModVec& z : cocycles)
        if (!span.contains(z)) return true;
    return false;
}

namespace {

// R-linear combination sum coeffs[l] * cols[l].
ModVec apply_columns(const RingDescriptor& ring,
                     const std::vector<ModVec>& cols,
                     const std::vector<Polynomial>& coeffs,
                     std::size_t out_rank) {
    ModVec out(ring, out_rank);
    for (std::size_t l = 0; l < cols.size(); ++l) {
        if (coeffs[l].is_zero()) continue;
        for (std::size_t r = 0; r < out_rank; ++r)
            out.comp(r) = out.comp(r) + coeffs[l] * cols[l].comp(r);
    }
    return out;
}

Polynomial dot(const ModVec& a, const ModVec& b) {
    Polynomial s(a.ring());
    for (std::size_t l = 0; l < a.rank(); ++l)
        s = s + a.comp(l) * b.comp(l);
    return s;
}

Ideal frobenius_bracket(const Ideal& I, std::uint64_t q,
                        const GBOptions& opt) {
    // g = sum c_m m  =>  g^q = sum c_m m^q in characteristic p | q
    // (coefficients are fixed by Frobenius on the prime field)
    const RingDescriptor& ring = I.ring();
    std::vector<Polynomial> gens;
    for (const Polynomial& g : minimal_generators(I, opt)) {
        std::vector<Term> terms;
        for (const Term& t : g.terms())
            terms.push_back(
                {t.coeff, t.mono.pow(static_cast<std::int32_t>(q))});
        gens.push_back(Polynomial::make(ring, std::move(terms)));
    }
    return Ideal(ring, std::move(gens));
}

}  // namespace

ProbeResult frobenius_vanishing_probe(const Ideal& I, std::int64_t i,
                                      int e_max, const GBOptions& opt) {
    const RingDescriptor& ring = I.ring();
    if (ring.field().is_rationals())
        throw UnsupportedFieldError(
            "frobenius probe requires a finite prime field");
    if (!I.homogeneous())
        throw NonHomogeneousError("frobenius probe requires a graded ideal");
    std::int64_t h = height(I, opt);
    if (i <= h)
        throw PreconditionError(
            "frobenius probe applies only above the height");

    try {
        FreeResolution G = minimal_free_resolution(I, opt);
        if (G.resolves_zero_module())
            throw PreconditionError("frobenius probe on the unit ideal");
        if (static_cast<std::size_t>(i) > G.length())
            return {true, 0, false};  // Ext^i(R/I, R) = 0 outright
        std::size_t ii = static_cast<std::size_t>(i);
        std::vector<ModVec> cocycles = cocycle_generators(G, ii, opt);
        {
            std::vector<ModVec> imageG = coboundary_columns(G, ii);
            ColumnSpanGB spanG(ring, imageG, opt);
            bool all_in = true;
            for (const ModVec& z : cocycles)
                if (!spanG.contains(z)) {
                    all_in = false;
                    break;
                }
            if (all_in) return {true, 0, false};
        }

        const std::uint64_t p = ring.field().characteristic();
        // resource guard: bracket generator degrees scale by p^e, and the
        // syzygy work blows up far before the S-pair budget notices
        const std::uint64_t max_bracket_degree = 256;
        std::int64_t base_deg = 1;
        for (const Polynomial& g : minimal_generators(I, opt))
            base_deg = std::max(base_deg, g.degree());
        std::uint64_t q = 1;
        for (int e = 1; e <= e_max; ++e) {
            q *= p;
            if (q * static_cast<std::uint64_t>(base_deg) >
                max_bracket_degree)
                return {false, -1, true};
            Ideal Iq = frobenius_bracket(I, q, opt);
            FreeResolution Fq = minimal_free_resolution(Iq, opt);
            if (static_cast<std::size_t>(i) > Fq.length())
                return {true, e, false};

            // chain map phi lifting R/I^{[q]} ->> R/I across resolutions
            std::vector<std::vector<ModVec>> phi(ii + 1);
            phi[0] = {ModVec::unit(ring, 1, 0)};
            for (std::size_t j = 1; j <= ii; ++j) {
                ColumnSpanGB spanGj(ring, G.diffs[j - 1], opt);
                for (const ModVec& fcol : Fq.diffs[j - 1]) {
                    std::vector<Polynomial> coeffs;
                    coeffs.reserve(fcol.rank());
                    for (std::size_t l = 0; l < fcol.rank(); ++l)
                        coeffs.push_back(fcol.comp(l));
                    ModVec rhs = apply_columns(ring, phi[j - 1], coeffs,
                                               G.rank(j - 1));
                    auto witness = spanGj.express(rhs);
                    if (!witness)
                        throw Error("chain map lift failed (internal)");
                    ModVec col(ring, G.rank(j));
                    for (std::size_t l = 0; l < G.rank(j); ++l)
                        col.comp(l) = (*witness)[l];
                    phi[j].push_back(std::move(col));
                }
            }

            // induced map on cohomology is zero iff every cocycle of G
            // lands in the coboundaries of Fq
            std::vector<ModVec> imageF = coboundary_columns(Fq, ii);
            ColumnSpanGB spanF(ring, imageF, opt);
            bool all_die = true;
            for (const ModVec& z : cocycles) {
                ModVec w(ring, Fq.rank(ii));
                for (std::size_t c = 0; c < Fq.rank(ii); ++c)
                    w.comp(c) = dot(phi[ii][c], z);
                if (w.is_zero()) continue;
                if (!spanF.contains(w)) {
                    all_die = false;
                    break;
                }
            }
            if (all_die) return {true, e, false};
        }
        return {false, -1, false};
    } catch (const BudgetExceededError&) {
        return {false, -1, true};
    }
}

CdBounds cd_bounds_char_p(const Ideal& I, int e_max, const GBOptions& opt) {
    const RingDescriptor& ring = I.ring();
    if (ring.field().is_rationals())
        throw UnsupportedFieldError(
            "cd_bounds_char_p requires a finite prime field");
    if (!I.homogeneous())
        throw NonHomogeneousError("cd_bounds_char_p requires a graded ideal");
    DimensionReport dim = krull_dimension(I, opt);
    if (dim.is_unit)
        throw PreconditionError("cd_bounds_char_p: unit ideal rejected");

    const std::int64_t n = static_cast<std::int64_t>(ring.num_vars());
    CdBounds B{dim.height, 0, std::nullopt, false, ""};
    DepthPd dp = depth_and_pd(I, opt);
    B.upper = n - dp.depth;
    B.notes = "initial bounds [grade, n - depth] = [" +
              std::to_string(B.lower) + ", " + std::to_string(B.upper) + "]";

    for (std::int64_t i = B.upper; i > B.lower; --i) {
        ProbeResult pr = frobenius_vanishing_probe(I, i, e_max, opt);
        if (pr.confirmed) {
            B.upper = i - 1;
            B.notes += "; H^" + std::to_string(i) +
                       " vanishing confirmed at stage e=" +
                       std::to_string(pr.stage);
        } else {
            B.probe_budget_exceeded = pr.budget_exceeded;
            B.notes += "; H^" + std::to_string(i) + " not confirmed" +
                       (pr.budget_exceeded ? " (budget exceeded)" : "");
            break;
        }
    }
    if (B.lower == B.upper) B.exact = B.lower;
    return B;
}

}  // namespace linklab
