/**
 * @file suites.hpp
 * @brief The worked-example corpus, the deterministic verification ledger,
 *        and the seeded randomized property suite.
 */
#ifndef LINKLAB_SUITES_HPP
#define LINKLAB_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "linklab/ideal.hpp"
#include "linklab/rng.hpp"
#include "linklab/stanley_reisner.hpp"

namespace linklab {

// ---- worked-example corpus ------------------------------------------------

/// k[x0..x3] under grevlex.
RingDescriptor quartic_ring(const Field& f);

/// (x0,x1) cap (x2,x3) = (x0x2, x0x3, x1x2, x1x3): two skew lines in P^3.
Ideal skew_lines_ideal(const RingDescriptor& ring);

/// Defining prime of the quartic curve (s^4, s^3 t, s t^3, t^4):
/// (x0x3 - x1x2, x1^3 - x0^2 x2, x2^3 - x1 x3^2, x0 x2^2 - x1^2 x3).
Ideal twisted_quartic_ideal(const RingDescriptor& ring);

/// The height-2 complete intersection (x0x3 - x1x2, x0x2^2 - x1^2 x3)
/// linking the two curves; equals their intersection.
Ideal skew_quartic_ci(const RingDescriptor& ring);

/// (x0, ..., x{n-1}).
Ideal maximal_ideal(const RingDescriptor& ring);

/// Ideal of t x t minors of a matrix whose (i,j) entry is the variable
/// var_of[i][j] of the ring.
Ideal minors_ideal(const RingDescriptor& ring,
                   const std::vector<std::vector<std::size_t>>& var_of,
                   std::size_t t);

// ---- paper verification ledger --------------------------------------------

struct LedgerEntry {
    std::string name;
    bool pass;
    std::string expected;
    std::string actual;
};

struct Ledger {
    std::vector<LedgerEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    std::string to_string() const;
};

struct PaperSuiteOptions {
    bool heavy = false;
    int probe_e_max = 3;
    GBOptions gb;
};

/// Reproduces the worked linkage example end to end (intersection, CI
/// check, both colons, depths, cds, canonical depth, the dim-2 depth
/// corollary); with `heavy`, adds the 12-variable determinantal pair
/// (heights, CM, equal char-p cd) and reports the characteristic-0 cd
/// values as not reproduced.
Ledger verify_paper_suite(const PaperSuiteOptions& opt = {});

// ---- randomized property suite --------------------------------------------

struct PropertyStats {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t vars = 0;
    std::uint64_t characteristic = 0;

    int links_attempted = 0;
    int links_verified = 0;
    int stage_failures = 0;  // search/degeneracy failures, not violations
    int chains_completed = 0;
    int cm_cm_links = 0;
    int dim2_noncm_links = 0;
    int sqf_chain_endpoints = 0;
    int violations = 0;
    std::vector<std::string> violation_notes;

    std::string to_string() const;  // no timestamps: byte-stable
};

struct PropertyOptions {
    std::uint64_t trials = 50;
    std::uint64_t seed = 7;
    std::size_t vars = 5;
    std::uint64_t characteristic = 32003;
    GBOptions gb;
};

/// Random pure complexes give unmixed squarefree ideals; random CIs inside
/// them give links and 2-step chains; every linkage-theoretic invariant the
/// engine knows is asserted on each one.
PropertyStats random_property_suite(const PropertyOptions& opt = {});

/// Random squarefree monomial ideal (not necessarily pure) on n vertices;
/// proper and nonzero.
Ideal random_squarefree_ideal(const RingDescriptor& ring, SplitMix64& rng);

/// Random pure complex on n vertices -> unmixed squarefree ideal.
Ideal random_unmixed_squarefree_ideal(const RingDescriptor& ring,
                                      SplitMix64& rng);

}  // namespace linklab

#endif
