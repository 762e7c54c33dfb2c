// Command-line driver: replays the verification suites and emits canonical
// serializations of the named objects.  Exit status 0 iff every selected
// check passed.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "polyaut/serialize.hpp"
#include "polyaut/verify.hpp"

using namespace polyaut;

int main(int argc, char** argv) {
    CLI::App app{"exact replay of the verification suites"};
    app.require_subcommand(1);

    std::string report_path;
    long long budget = 5000000;
    bool with_millis = false;
    app.add_option("--report", report_path, "write a structured JSON report to this path");
    app.add_option("--budget", budget, "term budget for large products");
    app.add_flag("--millis", with_millis, "include elapsed milliseconds in reports");

    auto* sc_found = app.add_subcommand("foundations", "foundational identities");

    std::string lemma_id;
    bool lemma_numeric = false;
    uint64_t lemma_seed = 1;
    int lemma_trials = 20;
    auto* sc_lemma = app.add_subcommand("lemma", "one case family or branch");
    sc_lemma->add_option("id", lemma_id, "case id, e.g. L2.A or L6")->required();
    sc_lemma->add_flag("--numeric", lemma_numeric, "also run randomized numeric mode");
    sc_lemma->add_option("--seed", lemma_seed, "numeric mode seed");
    sc_lemma->add_option("--trials", lemma_trials, "numeric mode trial count");

    int thm_s = 1;
    uint64_t thm_seed = 1;
    auto* sc_thm = app.add_subcommand("theorem1", "composed-word degree bounds");
    sc_thm->add_option("--s", thm_s, "word length")->check(CLI::IsMember({1, 2}))->required();
    sc_thm->add_option("--seed", thm_seed, "sampling seed");

    auto* sc_cent = app.add_subcommand("centralizer", "centralizer checks");

    std::string emit_id;
    auto* sc_emit = app.add_subcommand("emit", "print a named object canonically");
    sc_emit->add_option("object", emit_id, "object name (see --list)")->required();

    uint64_t all_seed = 1;
    int all_trials = 20;
    auto* sc_all = app.add_subcommand("all", "every suite");
    sc_all->add_option("--seed", all_seed, "seed for randomized drivers");
    sc_all->add_option("--trials", all_trials, "numeric trials per case");

    CLI11_PARSE(app, argc, argv);

    std::vector<Report> reports;
    nlohmann::ordered_json structured;
    bool structured_is_reports = true;

    try {
        if (sc_found->parsed()) {
            reports = verify_foundations();
        } else if (sc_lemma->parsed()) {
            std::optional<NumericMode> numeric;
            if (lemma_numeric) numeric = NumericMode{lemma_seed, lemma_trials};
            reports = verify_lemma(lemma_id, numeric);
        } else if (sc_thm->parsed()) {
            TermBudgetGuard guard(static_cast<std::size_t>(budget));
            if (thm_s == 1)
                reports.push_back(verify_theorem_s1(thm_seed));
            else
                reports.push_back(verify_theorem_s2(thm_seed, budget));
        } else if (sc_cent->parsed()) {
            reports = verify_centralizer();
        } else if (sc_emit->parsed()) {
            auto objects = named_objects();
            auto it = objects.find(emit_id);
            if (it == objects.end()) {
                std::cerr << "unknown object '" << emit_id << "'; available:";
                for (const auto& [k, v] : objects) std::cerr << " " << k;
                std::cerr << "\n";
                return 2;
            }
            std::cout << it->second.text;
            structured = it->second.structured;
            structured_is_reports = false;
        } else if (sc_all->parsed()) {
            reports = verify_all(all_seed, all_trials, budget);
        }
    } catch (const UnknownCase& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    for (const auto& r : reports) std::cout << report_line(r) << "\n";
    if (structured_is_reports) structured = reports_json(reports, with_millis);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << structured.dump(2) << "\n";
    }
    return all_pass(reports) ? 0 : 1;
}
