#include "linklab/linkage.hpp"

#include "linklab/ideal_ops.hpp"
#include "linklab/rng.hpp"
#include "linklab/stanley_reisner.hpp"

namespace linklab {

IdealInvariants ideal_invariants(const Ideal& I, const GBOptions& opt) {
    DimensionReport d = krull_dimension(I, opt);
    DepthPd dp = depth_and_pd(I, opt);
    return {d.krull_dim, d.height, dp.depth, dp.pd,
            dp.depth == d.krull_dim};
}

namespace {

// Unmixedness gate: combinatorial purity for squarefree monomial ideals,
// caller assertion otherwise.
bool certify_unmixed(const Ideal& a, bool caller_asserts,
                     std::string* notes) {
    if (is_squarefree_monomial_ideal(a)) {
        if (!complex_of_ideal(a).is_pure())
            throw PreconditionError(
                "link: a is not unmixed (impure Stanley-Reisner complex)");
        return true;
    }
    if (!caller_asserts)
        throw PreconditionError(
            "link: unmixedness of a neither verifiable (not squarefree "
            "monomial) nor asserted by the caller");
    if (notes)
        *notes += "unmixedness of a caller-asserted, not verified; ";
    return false;
}

}  // namespace

LinkageRecord link(const Ideal& a, const Ideal& c, bool caller_asserts_unmixed,
                   const GBOptions& opt) {
    require_same_ring(a.ring(), c.ring());
    if (!a.homogeneous() || !c.homogeneous())
        throw NonHomogeneousError("link requires homogeneous ideals");

    std::string notes;
    for (const Polynomial& g : c.generators())
        if (!contains(a, g))
            throw PreconditionError("link: c is not contained in a");
    if (!is_complete_intersection(c, opt))
        throw PreconditionError("link: c is not a complete intersection");
    if (height(c, opt) != height(a, opt))
        throw PreconditionError("link: height(c) differs from height(a)");
    bool certified = certify_unmixed(a, caller_asserts_unmixed, &notes);

    Ideal b = colon(c, a, opt);
    if (b.is_unit_ideal())
        throw DegenerateLinkError(
            "link: c : a is the unit ideal (a = c), no proper link");

    Ideal back = colon(c, b, opt);
    bool verified = ideals_equal(back, a);
    if (!verified) notes += "c : (c : a) differs from a; ";

    LinkageRecord rec{a,       c,         b,
                      verified, certified, notes,
                      ideal_invariants(a, opt), ideal_invariants(b, opt)};
    return rec;
}

bool verify_link(const Ideal& a, const Ideal& b, const Ideal& c,
                 std::string* reasons, const GBOptions& opt) {
    auto fail = [&](const std::string& why) {
        if (reasons) *reasons += why + "; ";
        return false;
    };
    try {
        require_same_ring(a.ring(), b.ring());
        require_same_ring(a.ring(), c.ring());
        bool ok = true;
        for (const Polynomial& g : c.generators())
            if (!contains(a, g) || !contains(b, g)) {
                ok = fail("c is not inside a cap b");
                break;
            }
        if (!is_complete_intersection(c, opt))
            ok = fail("c is not a complete intersection");
        std::int64_t hc = height(c, opt);
        if (height(a, opt) != hc || height(b, opt) != hc)
            ok = fail("heights of a, b, c disagree");
        if (!ideals_equal(colon(c, a, opt), b)) ok = fail("c : a != b");
        if (!ideals_equal(colon(c, b, opt), a)) ok = fail("c : b != a");
        return ok;
    } catch (const Error& e) {
        return fail(std::string("error during verification: ") + e.what());
    }
}

LinkageRecord find_ci_link(const Ideal& a, std::uint64_t seed,
                           bool caller_asserts_unmixed, const GBOptions& opt) {
    std::int64_t h = height(a, opt);
    if (h <= 0)
        throw PreconditionError("find_ci_link: a must be a proper nonzero ideal");
    SplitMix64 rng(seed);
    const int attempts = 8;
    for (int t = 0; t < attempts; ++t) {
        std::uint64_t sub = rng.next();
        std::vector<Polynomial> fs;
        try {
            fs = find_regular_sequence_in(a, static_cast<std::size_t>(h), sub,
                                          /*degree_boost=*/t / 4, opt);
        } catch (const RetryExhaustedError&) {
            continue;
        }
        Ideal c(a.ring(), fs);
        if (ideals_equal(c, a)) continue;  // degenerate seed, try again
        try {
            return link(a, c, caller_asserts_unmixed, opt);
        } catch (const DegenerateLinkError&) {
            continue;
        }
    }
    throw DegenerateLinkError(
        "find_ci_link: every attempt degenerated (a itself appears to be a "
        "complete intersection) or the sequence search failed");
}

std::int64_t canonical_depth(const Ideal& a, const LinkageRecord& rec,
                             const GBOptions& opt) {
    if (!ideals_equal(a, rec.a))
        throw PreconditionError("canonical_depth: record does not belong to a");
    if (!rec.verified)
        throw PreconditionError("canonical_depth: record is not verified");
    PresentedModule K = quotient_presentation(rec.b, rec.c, opt);
    if (K.is_zero_module())
        throw ZeroModuleError("canonical_depth: module b/c degenerated to 0");
    return depth_and_pd(K, opt).depth;
}

ChainResult even_link_chain(const Ideal& a, int steps, std::uint64_t seed,
                            bool caller_asserts_unmixed, const GBOptions& opt) {
    if (steps < 0 || steps % 2 != 0)
        throw PreconditionError("even_link_chain: steps must be even and >= 0");
    ChainResult out{{}, true, ""};
    SplitMix64 rng(seed);
    Ideal current = a;
    for (int k = 0; k < steps; ++k) {
        SplitMix64 stage = rng.split();
        // after the first stage, unmixedness is inherited: the CI link of
        // an unmixed ideal is unmixed of the same height
        bool asserts = (k == 0) ? caller_asserts_unmixed : true;
        try {
            LinkageRecord rec = find_ci_link(current, stage.next(), asserts, opt);
            current = rec.b;
            out.records.push_back(std::move(rec));
        } catch (const Error& e) {
            out.completed = false;
            out.failure = "stage " + std::to_string(k) + ": " + e.what();
            break;
        }
    }
    return out;
}

}  // namespace linklab
