/**
 * @file stanley_reisner.hpp
 * @brief Squarefree monomial ideals as simplicial complexes: reduced
 *        homology, Hochster's formula, and the exact squarefree
 *        depth/pd/cd/fgrade package.
 */
#ifndef LINKLAB_STANLEY_REISNER_HPP
#define LINKLAB_STANLEY_REISNER_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "linklab/ideal.hpp"
#include "linklab/resolution.hpp"

namespace linklab {

/// Faces are vertex bitmasks; only the maximal ones are stored.
class SimplicialComplex {
 public:
    /// Normalizes: deduplicates and drops faces contained in others.
    static SimplicialComplex from_facets(std::size_t num_vertices,
                                         std::vector<std::uint64_t> facets);

    std::size_t num_vertices() const { return n_; }
    const std::vector<std::uint64_t>& facets() const { return facets_; }

    /// No faces at all (not even the empty face).
    bool is_void() const { return facets_.empty(); }

    bool has_face(std::uint64_t mask) const {
        for (std::uint64_t f : facets_)
            if ((mask & f) == mask) return true;
        return false;
    }

    /// Largest facet cardinality (0 for {empty face} and for void).
    int max_facet_size() const;
    bool is_pure() const;

    /// Faces contained in the vertex subset sigma.
    SimplicialComplex restriction(std::uint64_t sigma) const;

 private:
    SimplicialComplex(std::size_t n, std::vector<std::uint64_t> facets)
        : n_(n), facets_(std::move(facets)) {}
    std::size_t n_;
    std::vector<std::uint64_t> facets_;
};

bool is_squarefree_monomial_ideal(const Ideal& I);

/// Stanley-Reisner complex of a squarefree monomial ideal: faces are the
/// vertex sets containing no generator support. Rejects non-monomial or
/// non-squarefree generators. Needs n <= 24.
SimplicialComplex complex_of_ideal(const Ideal& I);

/// Inverse correspondence: the ideal of minimal non-faces.
Ideal ideal_of_complex(const SimplicialComplex& C, const RingDescriptor& ring);

/// Dimensions of reduced homology over the field; entry d+1 holds
/// dim H~_d for d = -1 .. dim. Empty vector for the void complex.
std::vector<int> reduced_homology_dims(const SimplicialComplex& C,
                                       const Field& k);

struct HochsterTable {
    BettiTable table;  // beta_{i,j} summed over subsets of size j
    std::map<std::pair<std::int64_t, std::uint64_t>, int> by_subset;
};

/// Hochster's formula: beta_{i,sigma}(R/I) = dim H~^{|sigma|-i-1} of the
/// restriction to sigma.
HochsterTable hochster_betti(const Ideal& I, const Field& k);

struct SqfInvariants {
    std::int64_t depth;
    std::int64_t pd;
    std::int64_t cd;
    std::int64_t fgrade;
    std::int64_t dim;      // dim R/I
    std::int64_t height;
    bool pure;             // unmixedness for squarefree ideals
};

/// Exact invariants on the squarefree class: cd = pd = n - depth and
/// fgrade = depth. cd of the zero ideal is 0; the unit ideal is rejected.
SqfInvariants sqf_invariants(const Ideal& I, const Field& k);

}  // namespace linklab

#endif
