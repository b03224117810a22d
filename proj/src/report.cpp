#include "linklab/report.hpp"

#include "linklab/ideal_ops.hpp"
#include "linklab/parser.hpp"
#include "linklab/stanley_reisner.hpp"

namespace linklab {

InvariantReport invariant_report(const Ideal& I, const ReportOptions& opt) {
    if (!I.homogeneous())
        throw PreconditionError("invariant_report requires a homogeneous ideal");
    if (I.is_unit_ideal())
        throw PreconditionError("invariant_report: unit ideal rejected");

    const RingDescriptor& ring = I.ring();
    const std::int64_t n = static_cast<std::int64_t>(ring.num_vars());

    InvariantReport r;
    r.n = ring.num_vars();
    r.characteristic = ring.field().characteristic();
    r.order = order_name(ring.order());
    r.homogeneous = true;
    r.squarefree = is_squarefree_monomial_ideal(I);

    DimensionReport dim = krull_dimension(I, opt.gb);
    r.dim = dim.krull_dim;
    r.height = dim.height;
    r.provenance["dim"] = "independent sets of the initial monomial ideal";

    DepthPd dp = depth_and_pd(I, opt.gb);
    r.depth = dp.depth;
    r.pd = dp.pd;
    r.betti = graded_betti(I, opt.gb);
    r.provenance["depth"] = "minimal free resolution (Auslander-Buchsbaum)";
    r.provenance["betti"] = "minimal free resolution";

    if (r.squarefree) {
        SqfInvariants s = sqf_invariants(I, ring.field());
        HochsterTable h = hochster_betti(I, ring.field());
        if (s.depth != r.depth || s.pd != r.pd || !(h.table == r.betti))
            throw Error(
                "squarefree and resolution routes disagree (internal)");
        r.cd = CdReport{s.cd, s.cd, s.cd, false,
                        "squarefree: cd = pd, Hochster cross-checked"};
        r.fgrade = s.fgrade;
        r.unmixed = s.pure;
        r.provenance["cd"] = "Stanley-Reisner route (exact)";
        r.provenance["depth"] +=
            "; cross-checked against Hochster's formula";
    } else if (!ring.field().is_rationals()) {
        CdBounds b = cd_bounds_char_p(I, opt.probe_e_max, opt.gb);
        r.cd = CdReport{b.exact, b.lower, b.upper, b.probe_budget_exceeded,
                        "char-p bounds with Frobenius probe: " + b.notes};
        r.provenance["cd"] = "Peskine-Szpiro bounds + Frobenius probe";
        if (b.exact) {
            r.fgrade = n - *b.exact;
        } else {
            r.fgrade_reason = "cd not exact (probe inconclusive)";
        }
    } else {
        r.cd_reason =
            "characteristic-0 cohomological dimension is out of scope "
            "(requires D-module methods)";
        r.fgrade_reason = r.cd_reason;
    }

    r.cm = (r.depth == r.dim);
    validate_report(r);
    return r;
}

void validate_report(const InvariantReport& r) {
    const std::int64_t n = static_cast<std::int64_t>(r.n);
    if (r.depth + r.pd != n)
        throw Error("report invariant violated: depth + pd != n");
    if (r.dim + r.height != n)
        throw Error("report invariant violated: dim + height != n");
    if (r.cm != (r.depth == r.dim))
        throw Error("report invariant violated: CM flag");
    if (r.cd) {
        if (r.cd->lower && r.cd->upper) {
            if (*r.cd->lower > *r.cd->upper)
                throw Error("report invariant violated: cd bounds crossed");
            if (r.cd->exact &&
                (*r.cd->exact < *r.cd->lower || *r.cd->exact > *r.cd->upper))
                throw Error("report invariant violated: cd outside bounds");
        }
        if (r.cd->exact && r.fgrade && *r.fgrade != n - *r.cd->exact)
            throw Error("report invariant violated: fgrade != n - cd");
    }
}

namespace {

nlohmann::json betti_to_json(const BettiTable& B) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : B.by_degree) {
        nlohmann::json r = nlohmann::json::object();
        for (const auto& [deg, count] : row)
            r[std::to_string(deg)] = count;
        rows.push_back(std::move(r));
    }
    return rows;
}

BettiTable betti_from_json(const nlohmann::json& j) {
    BettiTable B;
    for (const auto& row : j) {
        std::map<std::int64_t, int> m;
        for (auto it = row.begin(); it != row.end(); ++it)
            m[std::stoll(it.key())] = it.value().get<int>();
        B.by_degree.push_back(std::move(m));
    }
    return B;
}

}  // namespace

nlohmann::json report_to_json(const InvariantReport& r) {
    nlohmann::json j;
    j["schema"] = r.schema;
    j["ring"] = {{"n", r.n},
                 {"char", r.characteristic},
                 {"order", r.order}};
    j["dim"] = r.dim;
    j["height"] = r.height;
    j["depth"] = r.depth;
    j["pd"] = r.pd;
    j["betti"] = betti_to_json(r.betti);
    if (r.cd) {
        nlohmann::json c;
        c["exact"] = r.cd->exact ? nlohmann::json(*r.cd->exact)
                                 : nlohmann::json(nullptr);
        c["lower"] = r.cd->lower ? nlohmann::json(*r.cd->lower)
                                 : nlohmann::json(nullptr);
        c["upper"] = r.cd->upper ? nlohmann::json(*r.cd->upper)
                                 : nlohmann::json(nullptr);
        c["probe_budget_exceeded"] = r.cd->probe_budget_exceeded;
        c["method"] = r.cd->method;
        j["cd"] = std::move(c);
    } else {
        j["cd"] = nullptr;
        j["cd_reason"] = r.cd_reason;
    }
    if (r.fgrade) {
        j["fgrade"] = *r.fgrade;
    } else {
        j["fgrade"] = nullptr;
        j["fgrade_reason"] = r.fgrade_reason;
    }
    j["flags"] = {{"cm", r.cm},
                  {"squarefree", r.squarefree},
                  {"homogeneous", r.homogeneous}};
    j["flags"]["unmixed"] =
        r.unmixed ? nlohmann::json(*r.unmixed) : nlohmann::json(nullptr);
    j["provenance"] = r.provenance;
    return j;
}

InvariantReport report_from_json(const nlohmann::json& j) {
    InvariantReport r;
    r.schema = j.at("schema").get<int>();
    r.n = j.at("ring").at("n").get<std::size_t>();
    r.characteristic = j.at("ring").at("char").get<std::uint64_t>();
    r.order = j.at("ring").at("order").get<std::string>();
    r.dim = j.at("dim").get<std::int64_t>();
    r.height = j.at("height").get<std::int64_t>();
    r.depth = j.at("depth").get<std::int64_t>();
    r.pd = j.at("pd").get<std::int64_t>();
    r.betti = betti_from_json(j.at("betti"));
    if (!j.at("cd").is_null()) {
        const auto& c = j.at("cd");
        CdReport cd;
        if (!c.at("exact").is_null())
            cd.exact = c.at("exact").get<std::int64_t>();
        if (!c.at("lower").is_null())
            cd.lower = c.at("lower").get<std::int64_t>();
        if (!c.at("upper").is_null())
            cd.upper = c.at("upper").get<std::int64_t>();
        cd.probe_budget_exceeded = c.at("probe_budget_exceeded").get<bool>();
        cd.method = c.at("method").get<std::string>();
        r.cd = std::move(cd);
    } else if (j.contains("cd_reason")) {
        r.cd_reason = j.at("cd_reason").get<std::string>();
    }
    if (!j.at("fgrade").is_null()) {
        r.fgrade = j.at("fgrade").get<std::int64_t>();
    } else if (j.contains("fgrade_reason")) {
        r.fgrade_reason = j.at("fgrade_reason").get<std::string>();
    }
    r.cm = j.at("flags").at("cm").get<bool>();
    r.squarefree = j.at("flags").at("squarefree").get<bool>();
    r.homogeneous = j.at("flags").at("homogeneous").get<bool>();
    if (!j.at("flags").at("unmixed").is_null())
        r.unmixed = j.at("flags").at("unmixed").get<bool>();
    for (auto it = j.at("provenance").begin(); it != j.at("provenance").end();
         ++it)
        r.provenance[it.key()] = it.value().get<std::string>();
    return r;
}

std::string report_to_text(const InvariantReport& r) {
    std::string out;
    out += "ring: n=" + std::to_string(r.n) +
           " char=" + std::to_string(r.characteristic) + " order=" + r.order +
           "\n";
    out += "dim R/I    = " + std::to_string(r.dim) + "\n";
    out += "height I   = " + std::to_string(r.height) + "\n";
    out += "depth R/I  = " + std::to_string(r.depth) + "\n";
    out += "pd R/I     = " + std::to_string(r.pd) + "\n";
    if (r.cd) {
        if (r.cd->exact) {
            out += "cd(I,R)    = " + std::to_string(*r.cd->exact) + "\n";
        } else {
            out += "cd(I,R)    in [" + std::to_string(*r.cd->lower) + ", " +
                   std::to_string(*r.cd->upper) + "]" +
                   (r.cd->probe_budget_exceeded ? " (probe budget exceeded)"
                                                : " (probe inconclusive)") +
                   "\n";
        }
        out += "  method: " + r.cd->method + "\n";
    } else {
        out += "cd(I,R)    unavailable: " + r.cd_reason + "\n";
    }
    if (r.fgrade) {
        out += "fgrade     = " + std::to_string(*r.fgrade) + "\n";
    } else {
        out += "fgrade     unavailable: " + r.fgrade_reason + "\n";
    }
    out += std::string("flags: ") + (r.cm ? "CM" : "non-CM") +
           (r.squarefree ? ", squarefree" : "") +
           (r.unmixed ? (*r.unmixed ? ", unmixed" : ", mixed") : "") + "\n";
    out += "betti:\n" + r.betti.to_string();
    return out;
}

}  // namespace linklab
