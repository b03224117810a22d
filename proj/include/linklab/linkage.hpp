/**
 * @file linkage.hpp
 * @brief Links a ~ b through complete intersections c (b = c:a, a = c:b),
 *        even-link chains, and the canonical-module depth of a link.
 */
#ifndef LINKLAB_LINKAGE_HPP
#define LINKLAB_LINKAGE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "linklab/ideal.hpp"
#include "linklab/resolution.hpp"

namespace linklab {

struct IdealInvariants {
    std::int64_t dim;
    std::int64_t height;
    std::int64_t depth;
    std::int64_t pd;
    bool cm;
};

IdealInvariants ideal_invariants(const Ideal& I, const GBOptions& opt = {});

struct LinkageRecord {
    Ideal a;
    Ideal c;  // the complete intersection
    Ideal b;  // c : a
    bool verified;               // c:b came back equal to a
    bool unmixedness_certified;  // proven combinatorially, not just asserted
    std::string notes;
    IdealInvariants inv_a;
    IdealInvariants inv_b;
};

/// Link a through the CI c <= a of the same height. Unmixedness of a is
/// verified combinatorially for squarefree monomial ideals; otherwise the
/// caller must assert it (recorded in the record). The degenerate case
/// c : a = (1), i.e. a = c, raises DegenerateLinkError.
LinkageRecord link(const Ideal& a, const Ideal& c,
                   bool caller_asserts_unmixed = false,
                   const GBOptions& opt = {});

/// All LinkageRecord invariants as a predicate; never throws for
/// mathematical failures, collecting reasons instead.
bool verify_link(const Ideal& a, const Ideal& b, const Ideal& c,
                 std::string* reasons = nullptr, const GBOptions& opt = {});

/// Build a link from a seeded regular sequence of length height(a)
/// inside a. Retries a few derived seeds when the sequence generates a
/// itself; if every attempt degenerates, reports that a is a complete
/// intersection.
LinkageRecord find_ci_link(const Ideal& a, std::uint64_t seed,
                           bool caller_asserts_unmixed = false,
                           const GBOptions& opt = {});

/// depth of the canonical module K_{R/a} = b/c of a verified link.
std::int64_t canonical_depth(const Ideal& a, const LinkageRecord& rec,
                             const GBOptions& opt = {});

struct ChainResult {
    std::vector<LinkageRecord> records;
    bool completed;
    std::string failure;  // empty when completed
};

/// Chain of `steps` successive CI links starting at a (steps must be
/// even; 0 gives the trivial chain). A stage failure aborts and returns
/// the partial chain.
ChainResult even_link_chain(const Ideal& a, int steps, std::uint64_t seed,
                            bool caller_asserts_unmixed = false,
                            const GBOptions& opt = {});

}  // namespace linklab

#endif
