/**
 * @file resolution.hpp
 * @brief Graded presentations, minimal free resolutions, Betti numbers,
 *        depth via Auslander-Buchsbaum, Ext nonvanishing, and the
 *        characteristic-p Frobenius vanishing probe.
 */
#ifndef LINKLAB_RESOLUTION_HPP
#define LINKLAB_RESOLUTION_HPP

#include <map>
#include <optional>
#include <string>

#include "linklab/ideal.hpp"
#include "linklab/modvec.hpp"

namespace linklab {

/// A module given by generators and relations: coker of the relation
/// matrix acting into R^ambient_rank. The same shape doubles as
/// "submodule generated by columns" where noted.
struct PresentedModule {
    RingDescriptor ring;
    std::size_t ambient_rank;
    std::vector<std::int64_t> degree_labels;  // one per ambient basis vector
    std::vector<ModVec> relations;            // columns in R^ambient_rank

    bool is_zero_module() const { return ambient_rank == 0; }

    /// R/I as a cyclic module; requires homogeneous I.
    static PresentedModule cyclic(const Ideal& I);

    /// Throws NonHomogeneousError unless every relation is homogeneous
    /// with respect to the degree labels.
    void validate_graded() const;
};

struct FreeResolution {
    RingDescriptor ring;
    /// degrees[i] = basis degrees of F_i; degrees[0] describes the ambient.
    std::vector<std::vector<std::int64_t>> degrees;
    /// diffs[i] = columns of d_{i+1} : F_{i+1} -> F_i.
    std::vector<std::vector<ModVec>> diffs;

    std::size_t length() const { return degrees.size() - 1; }  // = pd
    std::size_t rank(std::size_t i) const { return degrees[i].size(); }
    bool resolves_zero_module() const { return rank(0) == 0; }
};

/// Syzygies of a list of module elements, packaged as a PresentedModule
/// whose ambient is R^k (k = number of input vectors) and whose columns
/// generate the kernel of R^k -> R^s.
PresentedModule syzygy_module(const std::vector<ModVec>& vectors,
                              const std::vector<std::int64_t>& ambient_labels,
                              const GBOptions& opt = {});

/// Minimal graded free resolution by iterated syzygies with unit
/// cancellation after every step; length obeys the Hilbert bound.
FreeResolution minimal_free_resolution(const PresentedModule& M,
                                       const GBOptions& opt = {});
FreeResolution minimal_free_resolution(const Ideal& I,
                                       const GBOptions& opt = {});

struct BettiTable {
    /// by_degree[i] maps internal degree j to the count of R(-j) in F_i.
    std::vector<std::map<std::int64_t, int>> by_degree;

    std::vector<int> totals() const;
    bool operator==(const BettiTable& o) const {
        return by_degree == o.by_degree;
    }
    std::string to_string() const;
};

BettiTable graded_betti(const FreeResolution& F);
BettiTable graded_betti(const Ideal& I, const GBOptions& opt = {});

struct DepthPd {
    std::int64_t pd;
    std::int64_t depth;
};

/// Auslander-Buchsbaum: depth = n - pd. Zero modules are rejected.
DepthPd depth_and_pd(const PresentedModule& M, const GBOptions& opt = {});
/// For R/I; additionally checks depth <= dim(R/I).
DepthPd depth_and_pd(const Ideal& I, const GBOptions& opt = {});

/// The module b/c for nested ideals c <= b, presented on the minimal
/// generators of b that survive modulo c. Under a CI link c : a = b this
/// is the canonical module of R/a.
PresentedModule quotient_presentation(const Ideal& b, const Ideal& c,
                                      const GBOptions& opt = {});

/// Whether Ext^i(R/I, R) != 0, read off the dualized minimal resolution.
bool ext_nonvanishing(const Ideal& I, std::int64_t i,
                      const GBOptions& opt = {});

struct ProbeResult {
    bool confirmed;
    int stage;              // witnessing e when confirmed
    bool budget_exceeded;   // a stage aborted on the S-pair budget
};

/// One-sided char-p test of H^i_I(R) = 0 through the Frobenius colimit:
/// confirms vanishing when the natural map
/// Ext^i(R/I, R) -> Ext^i(R/I^{[p^e]}, R) dies for some e <= e_max.
/// Never claims nonvanishing. Brackets are taken on the fixed minimal
/// generator list of I.
ProbeResult frobenius_vanishing_probe(const Ideal& I, std::int64_t i,
                                      int e_max, const GBOptions& opt = {});

struct CdBounds {
    std::int64_t lower;
    std::int64_t upper;
    std::optional<std::int64_t> exact;
    bool probe_budget_exceeded = false;
    std::string notes;
};

/// Bounds height(I) <= cd(I,R) <= n - depth(R/I) (the upper bound is the
/// Peskine-Szpiro positive-characteristic inequality), then walks the
/// upper bound down with the Frobenius probe.
CdBounds cd_bounds_char_p(const Ideal& I, int e_max = 3,
                          const GBOptions& opt = {});

}  // namespace linklab

#endif
