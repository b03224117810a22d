/**
 * @file linklab.cpp
 * @brief Command-line surface: invariant reports, link construction and
 *        verification, even chains, the worked-example suite, and the
 *        randomized property suite. Exit code 0 iff all checks pass.
 */
#include <iostream>

#include <CLI11.hpp>

#include "linklab/ideal_ops.hpp"
#include "linklab/linkage.hpp"
#include "linklab/parser.hpp"
#include "linklab/report.hpp"
#include "linklab/suites.hpp"

using namespace linklab;

namespace {

void print_record(const LinkageRecord& rec) {
    std::cout << "a: " << format_ideal_file(rec.a);
    std::cout << "c (complete intersection):\n";
    for (const Polynomial& g : rec.c.generators())
        std::cout << "  " << g.to_string() << "\n";
    std::cout << "b = c : a:\n";
    for (const Polynomial& g : rec.b.generators())
        std::cout << "  " << g.to_string() << "\n";
    std::cout << "verified: " << (rec.verified ? "yes" : "no") << "\n";
    std::cout << "unmixedness: "
              << (rec.unmixedness_certified ? "certified (squarefree route)"
                                            : "caller-asserted")
              << "\n";
    if (!rec.notes.empty()) std::cout << "notes: " << rec.notes << "\n";
    auto show = [](const char* side, const IdealInvariants& v) {
        std::cout << side << ": dim=" << v.dim << " height=" << v.height
                  << " depth=" << v.depth << " pd=" << v.pd
                  << (v.cm ? " (CM)" : " (non-CM)") << "\n";
    };
    show("R/a", rec.inv_a);
    show("R/b", rec.inv_b);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linklab: exact linkage, depth and cohomological-dimension "
                 "computations in polynomial rings"};
    app.require_subcommand(1);

    std::string ideal_path, ci_path;
    bool json_out = false, assert_unmixed = false, heavy = false;
    int emax = 3;
    std::uint64_t seed = 7;
    int steps = 2;
    std::uint64_t trials = 50, characteristic = 32003;
    std::size_t vars = 5;

    auto* inv = app.add_subcommand("invariants",
                                   "invariant report for an ideal file");
    inv->add_option("file", ideal_path, "ideal file")->required();
    inv->add_flag("--json", json_out, "emit JSON (schema 1)");
    inv->add_option("--emax", emax, "Frobenius probe stage cap")->capture_default_str();

    auto* lnk = app.add_subcommand("link", "link an ideal through a given CI");
    lnk->add_option("file", ideal_path, "ideal file for a")->required();
    lnk->add_option("--ci", ci_path, "ideal file for c")->required();
    lnk->add_flag("--assert-unmixed", assert_unmixed,
                  "assert unmixedness of a (needed off the squarefree route)");

    auto* fnd = app.add_subcommand("find-link",
                                   "search a CI link with a seeded sequence");
    fnd->add_option("file", ideal_path, "ideal file for a")->required();
    fnd->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    fnd->add_flag("--assert-unmixed", assert_unmixed,
                  "assert unmixedness of a");

    auto* chn = app.add_subcommand("chain", "build an even link chain");
    chn->add_option("file", ideal_path, "ideal file for the start")
        ->required();
    chn->add_option("--steps", steps, "even number of links")->capture_default_str();
    chn->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    chn->add_flag("--assert-unmixed", assert_unmixed,
                  "assert unmixedness of the start ideal");

    auto* vp = app.add_subcommand("verify-paper",
                                  "run the worked-example ledger");
    vp->add_flag("--heavy", heavy, "include the 12-variable determinantal pair");
    vp->add_option("--emax", emax, "Frobenius probe stage cap")->capture_default_str();

    auto* pt = app.add_subcommand("property-test",
                                  "seeded randomized linkage property suite");
    pt->add_option("--trials", trials, "number of trials")->capture_default_str();
    pt->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    pt->add_option("--vars", vars, "number of variables (n <= 6 advised)")
        ->capture_default_str();
    pt->add_option("--char", characteristic, "field characteristic (0 = Q)")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) {
            Ideal I = parse_ideal_file(ideal_path);
            ReportOptions ropt;
            ropt.probe_e_max = emax;
            InvariantReport r = invariant_report(I, ropt);
            if (json_out)
                std::cout << report_to_json(r).dump(2) << "\n";
            else
                std::cout << report_to_text(r);
            return 0;
        }
        if (lnk->parsed()) {
            Ideal a = parse_ideal_file(ideal_path);
            Ideal c = parse_ideal_file(ci_path);
            LinkageRecord rec = link(a, c, assert_unmixed);
            print_record(rec);
            return rec.verified ? 0 : 1;
        }
        if (fnd->parsed()) {
            Ideal a = parse_ideal_file(ideal_path);
            LinkageRecord rec = find_ci_link(a, seed, assert_unmixed);
            print_record(rec);
            return rec.verified ? 0 : 1;
        }
        if (chn->parsed()) {
            Ideal a = parse_ideal_file(ideal_path);
            ChainResult res = even_link_chain(a, steps, seed, assert_unmixed);
            for (std::size_t k = 0; k < res.records.size(); ++k) {
                const auto& rec = res.records[k];
                std::cout << "stage " << k << ": depth R/a=" << rec.inv_a.depth
                          << " -> depth R/b=" << rec.inv_b.depth
                          << (rec.verified ? " (verified)" : " (NOT verified)")
                          << "\n";
            }
            if (!res.completed) {
                std::cout << "chain aborted: " << res.failure << "\n";
                return 1;
            }
            std::cout << "chain completed: " << res.records.size()
                      << " links\n";
            for (const auto& rec : res.records)
                if (!rec.verified) return 1;
            return 0;
        }
        if (vp->parsed()) {
            PaperSuiteOptions popt;
            popt.heavy = heavy;
            popt.probe_e_max = emax;
            Ledger L = verify_paper_suite(popt);
            std::cout << L.to_string();
            return L.all_pass() ? 0 : 1;
        }
        if (pt->parsed()) {
            PropertyOptions popt;
            popt.trials = trials;
            popt.seed = seed;
            popt.vars = vars;
            popt.characteristic = characteristic;
            PropertyStats st = random_property_suite(popt);
            std::cout << st.to_string();
            return st.violations == 0 ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
