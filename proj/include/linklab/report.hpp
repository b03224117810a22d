/**
 * @file report.hpp
 * @brief Invariant reports: one structure answering dim/height/depth/pd,
 *        Betti table, cd (exact or bounds) and fgrade, with per-field
 *        provenance and a versioned JSON encoding.
 */
#ifndef LINKLAB_REPORT_HPP
#define LINKLAB_REPORT_HPP

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "linklab/ideal.hpp"
#include "linklab/resolution.hpp"

namespace linklab {

struct CdReport {
    std::optional<std::int64_t> exact;
    std::optional<std::int64_t> lower;  // bounds present on the char-p route
    std::optional<std::int64_t> upper;
    bool probe_budget_exceeded = false;
    std::string method;

    bool operator==(const CdReport& o) const = default;
};

struct InvariantReport {
    int schema = 1;
    std::size_t n = 0;
    std::uint64_t characteristic = 0;
    std::string order;

    std::int64_t dim = 0;
    std::int64_t height = 0;
    std::int64_t depth = 0;
    std::int64_t pd = 0;
    BettiTable betti;

    std::optional<CdReport> cd;
    std::string cd_reason;  // set when cd is absent
    std::optional<std::int64_t> fgrade;
    std::string fgrade_reason;

    bool cm = false;
    bool squarefree = false;
    bool homogeneous = true;
    std::optional<bool> unmixed;  // known only on the squarefree route

    std::map<std::string, std::string> provenance;

    bool operator==(const InvariantReport& o) const = default;
};

struct ReportOptions {
    int probe_e_max = 3;
    GBOptions gb;
};

/// Routes by input class: squarefree monomial ideals take the exact
/// Stanley-Reisner path cross-checked against the resolution; general
/// ideals over F_p add char-p cd bounds; over Q the cd field is omitted
/// with a reason rather than fabricated.
InvariantReport invariant_report(const Ideal& I,
                                 const ReportOptions& opt = {});

/// Throws Error if the report violates its internal consistency
/// invariants (depth + pd = n, cd within bounds, fgrade = n - cd).
void validate_report(const InvariantReport& r);

nlohmann::json report_to_json(const InvariantReport& r);
InvariantReport report_from_json(const nlohmann::json& j);
std::string report_to_text(const InvariantReport& r);

}  // namespace linklab

#endif
