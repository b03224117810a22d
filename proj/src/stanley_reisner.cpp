#include "linklab/stanley_reisner.hpp"

#include <algorithm>

namespace linklab {

SimplicialComplex SimplicialComplex::from_facets(
    std::size_t num_vertices, std::vector<std::uint64_t> facets) {
    if (num_vertices > 24)
        throw DimensionError("simplicial complexes capped at 24 vertices");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t f : facets) {
        bool contained = false;
        for (std::uint64_t g : facets)
            if (f != g && (f & g) == f) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(f);
    }
    return SimplicialComplex(num_vertices, std::move(maximal));
}

int SimplicialComplex::max_facet_size() const {
    int best = 0;
    for (std::uint64_t f : facets_)
        best = std::max(best, __builtin_popcountll(f));
    return best;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    int s = __builtin_popcountll(facets_[0]);
    for (std::uint64_t f : facets_)
        if (__builtin_popcountll(f) != s) return false;
    return true;
}

SimplicialComplex SimplicialComplex::restriction(std::uint64_t sigma) const {
    std::vector<std::uint64_t> cut;
    cut.reserve(facets_.size());
    for (std::uint64_t f : facets_) cut.push_back(f & sigma);
    return from_facets(n_, std::move(cut));
}

bool is_squarefree_monomial_ideal(const Ideal& I) {
    for (const Polynomial& g : I.generators())
        if (!g.is_term() || !g.leading().mono.is_squarefree()) return false;
    return true;
}

SimplicialComplex complex_of_ideal(const Ideal& I) {
    const std::size_t n = I.ring().num_vars();
    if (n > 24)
        throw DimensionError("Stanley-Reisner path capped at n = 24");
    std::vector<std::uint64_t> supports;
    for (const Polynomial& g : I.generators()) {
        if (!g.is_term() || !g.leading().mono.is_squarefree())
            throw PreconditionError(
                "complex_of_ideal: non-squarefree or non-monomial generator");
        supports.push_back(g.leading().mono.support_mask());
    }
    const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    auto is_face = [&](std::uint64_t s) {
        for (std::uint64_t sup : supports)
            if ((sup & s) == sup) return false;
        return true;
    };
    std::vector<std::uint64_t> facets;
    for (std::uint64_t s = 0; s <= full; ++s) {
        if (!is_face(s)) continue;
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v) {
            std::uint64_t bit = 1ULL << v;
            if (!(s & bit) && is_face(s | bit)) maximal = false;
        }
        if (maximal) facets.push_back(s);
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

Ideal ideal_of_complex(const SimplicialComplex& C,
                       const RingDescriptor& ring) {
    const std::size_t n = C.num_vertices();
    if (ring.num_vars() != n)
        throw DimensionError("ring variable count must match vertex count");
    const std::uint64_t full = (1ULL << n) - 1;
    std::vector<Polynomial> gens;
    for (std::uint64_t s = 0; s <= full; ++s) {
        if (C.has_face(s)) continue;
        bool minimal = true;
        for (std::size_t v = 0; v < n && minimal; ++v) {
            std::uint64_t bit = 1ULL << v;
            if ((s & bit) && !C.has_face(s & ~bit)) minimal = false;
        }
        if (!minimal) continue;
        Monomial m(n);
        for (std::size_t v = 0; v < n; ++v)
            if (s & (1ULL << v)) m.exponent(v) = 1;
        gens.push_back(
            Polynomial::from_monomial(ring, ring.field().one(), m));
    }
    return Ideal(ring, std::move(gens));
}

namespace {

// rank of a dense matrix over the field, by Gaussian elimination
int field_rank(const Field& F, std::vector<std::vector<Coeff>> M) {
    if (M.empty() || M[0].empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t piv = lead;
        while (piv < rows && F.is_zero(M[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[lead]);
        Coeff inv = F.inv(M[lead][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || F.is_zero(M[r][c])) continue;
            Coeff factor = F.mul(M[r][c], inv);
            for (std::size_t cc = c; cc < cols; ++cc)
                M[r][cc] = F.sub(M[r][cc], F.mul(factor, M[lead][cc]));
        }
        ++lead;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::uint64_t>> faces_by_dimension(
    const SimplicialComplex& C) {
    // index d+1 holds the d-faces, d = -1 .. dim
    std::vector<std::vector<std::uint64_t>> out;
    if (C.is_void()) return out;
    int dim = C.max_facet_size() - 1;
    out.resize(dim + 2);
    std::vector<std::uint64_t> all;
    for (std::uint64_t f : C.facets()) {
        // enumerate subsets of each facet
        std::uint64_t s = f;
        while (true) {
            all.push_back(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::uint64_t s : all)
        out[__builtin_popcountll(s) /* = d+1 */].push_back(s);
    return out;
}

}  // namespace

std::vector<int> reduced_homology_dims(const SimplicialComplex& C,
                                       const Field& k) {
    std::vector<int> dims;
    if (C.is_void()) return dims;
    auto faces = faces_by_dimension(C);
    const int levels = static_cast<int>(faces.size());  // dim + 2

    // boundary_rank[t] = rank of the map from t-level faces down a level
    std::vector<int> brank(levels + 1, 0);
    for (int t = 1; t < levels; ++t) {
        const auto& dom = faces[t];
        const auto& cod = faces[t - 1];
        std::map<std::uint64_t, std::size_t> row_of;
        for (std::size_t r = 0; r < cod.size(); ++r) row_of[cod[r]] = r;
        std::vector<std::vector<Coeff>> M(
            cod.size(), std::vector<Coeff>(dom.size(), k.zero()));
        for (std::size_t c = 0; c < dom.size(); ++c) {
            std::uint64_t f = dom[c];
            int sign = 0;
            for (std::size_t v = 0; v < 64; ++v) {
                std::uint64_t bit = 1ULL << v;
                if (!(f & bit)) continue;
                Coeff entry =
                    (sign % 2 == 0) ? k.one() : k.neg(k.one());
                M[row_of.at(f & ~bit)][c] = entry;
                ++sign;
            }
        }
        brank[t] = field_rank(k, std::move(M));
    }

    dims.resize(levels);
    for (int t = 0; t < levels; ++t) {
        int c = static_cast<int>(faces[t].size());
        dims[t] = c - brank[t] - brank[t + 1];
    }
    return dims;
}

HochsterTable hochster_betti(const Ideal& I, const Field& k) {
    SimplicialComplex C = complex_of_ideal(I);
    const std::size_t n = I.ring().num_vars();
    HochsterTable H;
    if (C.is_void())
        throw PreconditionError("hochster_betti: unit ideal rejected");
    const std::uint64_t full = (1ULL << n) - 1;
    std::int64_t max_i = 0;
    std::map<std::pair<std::int64_t, std::int64_t>, int> agg;
    for (std::uint64_t sigma = 0; sigma <= full; ++sigma) {
        SimplicialComplex R = C.restriction(sigma);
        std::vector<int> h = reduced_homology_dims(R, k);
        const std::int64_t size = __builtin_popcountll(sigma);
        for (std::size_t t = 0; t < h.size(); ++t) {
            if (h[t] == 0) continue;
            std::int64_t j = static_cast<std::int64_t>(t) - 1;  // H~_j
            std::int64_t i = size - j - 1;                      // Hochster
            H.by_subset[{i, sigma}] = h[t];
            agg[{i, size}] += h[t];
            max_i = std::max(max_i, i);
        }
        if (sigma == full) break;  // guard n = 64 wrap (n <= 24 anyway)
    }
    H.table.by_degree.resize(max_i + 1);
    for (const auto& [key, c] : agg)
        H.table.by_degree[key.first][key.second] = c;
    return H;
}

SqfInvariants sqf_invariants(const Ideal& I, const Field& k) {
    if (I.is_unit_ideal())
        throw PreconditionError("sqf_invariants: unit ideal rejected");
    if (!is_squarefree_monomial_ideal(I))
        throw PreconditionError(
            "sqf_invariants requires a squarefree monomial ideal");
    const std::int64_t n = static_cast<std::int64_t>(I.ring().num_vars());
    SimplicialComplex C = complex_of_ideal(I);
    HochsterTable H = hochster_betti(I, k);
    std::int64_t pd = 0;
    auto totals = H.table.totals();
    for (std::size_t i = 0; i < totals.size(); ++i)
        if (totals[i] > 0) pd = static_cast<std::int64_t>(i);
    SqfInvariants S{};
    S.pd = pd;
    S.depth = n - pd;
    S.cd = pd;  // cd = pd on the squarefree monomial class
    S.fgrade = S.depth;
    S.dim = C.max_facet_size();
    S.height = n - S.dim;
    S.pure = C.is_pure();
    return S;
}

}  // namespace linklab
