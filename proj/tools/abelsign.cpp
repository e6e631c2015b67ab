// Command-line front end: classification, named quantities, the
// root-coincidence oracle, corpus crosschecks, reference-table verification,
// on-variety sampling and return-map simulation.
//
// Exit codes: 0 success (documented reference-table discrepancies included),
// 1 usage or I/O error, 2 verification discrepancy (oracle/classifier
// disagreement, undocumented table discrepancy, failed factorization check).
#include "abelsign/crosscheck.hpp"
#include "abelsign/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>

namespace {

using namespace abelsign;

int cmd_classify(const std::string& path, bool as_json) {
    const Params p = params_from_file(path);
    const CaseVerdict v = classify(p);
    if (as_json) {
        std::cout << verdict_to_json(p, v).dump(2) << "\n";
        return 0;
    }
    std::cout << "matched cases:";
    if (v.matched.empty()) std::cout << " (none)";
    for (auto c : v.matched) std::cout << ' ' << to_string(c);
    std::cout << "\nconclusion: " << to_string(v.conclusion) << "\n";
    return 0;
}

int cmd_quantities(const std::string& path) {
    const Params p = params_from_file(path);
    const InvariantBundle b = compute_bundle(p);
    std::cout << bundle_to_json(b).dump(2) << "\n";
    return b.res_factorization_ok ? 0 : 2;
}

int cmd_oracle(const std::string& path, bool as_json) {
    const Params p = params_from_file(path);
    const OracleVerdict v = decide_definite(p);
    const ScanReport s = numeric_sign_scan(p);
    if (as_json) {
        Json j = oracle_to_json(v);
        j["numeric_scan"] = scan_to_json(s);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "definite: " << (v.definite ? "yes" : "no") << " (" << to_string(v.reason)
              << ")\nnumeric scan: " << to_string(s.kind) << "\n";
    return 0;
}

int cmd_crosscheck(std::uint64_t seed, int count, bool as_json) {
    CorpusOptions opt;
    opt.random_points = count;
    opt.per_case = std::max(10, count / 20);
    const CrosscheckStats st = run_crosscheck(seed, opt);
    if (as_json) {
        Json j;
        j["seed"] = seed;
        j["requested_random_points"] = count;
        j["corpus_size"] = st.total;
        j["definite_points"] = st.definite;
        j["classifier_disagreements"] = st.classifier_disagreements;
        j["numeric_violations"] = st.numeric_violations;
        Json fails = Json::array();
        for (const auto& f : st.failures)
            fails.push_back({{"point", params_to_json(f.point)}, {"what", f.what}});
        j["failures"] = fails;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "corpus " << st.total << " points (seed " << seed << "): " << st.definite
                  << " definite, " << st.classifier_disagreements << " disagreements, "
                  << st.numeric_violations << " numeric violations\n";
        for (const auto& f : st.failures) std::cout << "  " << f.what << "\n";
    }
    return (st.classifier_disagreements || st.numeric_violations) ? 2 : 0;
}

int cmd_verify_table1(bool as_json) {
    const auto rows = verify_table1();
    bool undocumented = false;
    Json arr = Json::array();
    for (const auto& r : rows) {
        if (r.discrepancy && !r.documented) undocumented = true;
        if (as_json) {
            arr.push_back(table1_row_to_json(r));
            continue;
        }
        std::cout << "row " << to_string(r.case_label) << ": member=" << (r.member ? "yes" : "NO")
                  << " inequalities=" << (r.inequalities_ok ? "ok" : "FAIL");
        if (r.computed_rank) {
            std::cout << " rank=" << *r.computed_rank << "/";
            if (r.expected_cp)
                std::cout << *r.expected_cp;
            else
                std::cout << "*";
        }
        if (r.discrepancy)
            std::cout << (r.documented ? "  [documented discrepancy]" : "  [DISCREPANCY]");
        if (r.case_label == CaseLabel::c3b)
            std::cout << " (point satisfies case-3a equalities: "
                      << (r.row3b_point_matches_3a ? "yes" : "no") << ")";
        std::cout << "\n";
    }
    if (as_json) {
        Json j;
        j["rows"] = arr;
        j["undocumented_discrepancies"] = undocumented;
        std::cout << j.dump(2) << "\n";
    }
    return undocumented ? 2 : 0;
}

int cmd_sample(const std::string& label, std::uint64_t seed, int count, bool as_json) {
    const auto pts = sample_case(case_from_string(label), seed, count);
    Json j;
    j["case"] = label;
    j["seed"] = seed;
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(params_to_json(p));
    j["points"] = arr;
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& p : pts) {
            for (int i = 0; i < 6; ++i)
                std::cout << (i ? " " : "") << p.a[static_cast<std::size_t>(i)].str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_simulate(const std::string& path, double rho_max, int grid, double tol, bool as_json,
                 bool table) {
    const Params p = params_from_file(path);
    ReturnMapOptions opt;
    opt.rtol = tol;
    const ReturnMapReport rep = count_limit_cycles(p, rho_max, grid, opt);
    if (table) {
        const double rho_min = rho_max * 1e-4;
        const double ratio = std::pow(rho_max / rho_min, 1.0 / (grid - 1));
        std::cout << "# rho0\tP(rho0)-rho0\n";
        for (int i = 0; i < grid; ++i) {
            const double rho0 = rho_min * std::pow(ratio, i);
            const auto out = return_map(p, rho0, opt);
            if (out.escaped)
                std::cout << rho0 << "\tescape@" << out.escape_theta << "\n";
            else
                std::cout << rho0 << "\t" << (out.value - rho0) << "\n";
        }
        return 0;
    }
    if (as_json) {
        std::cout << report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "fixed points: " << rep.fixed_points.size()
                  << (rep.center_detected ? " (center detected)" : "") << ", escapes: "
                  << rep.escapes.size() << "\n";
        for (const auto& fp : rep.fixed_points)
            std::cout << "  rho0 = " << fp.rho0 << ", residual = " << fp.residual
                      << ", polar_valid = " << (fp.polar_valid ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact definite-sign classification for the Abel equation of a quadratic system"};
    app.require_subcommand(1);

    std::string point_path, case_label = "5a";
    bool as_json = false, table = false;
    std::uint64_t seed = 1;
    int count = 1000, grid = 512;
    double rho_max = 10.0, tol = 1e-10;

    auto* classify_cmd = app.add_subcommand("classify", "match the point against all cases");
    classify_cmd->add_option("--point", point_path, "Params JSON file")->required();
    classify_cmd->add_flag("--json", as_json, "JSON output");

    auto* quantities_cmd =
        app.add_subcommand("quantities", "exact named quantities at the point");
    quantities_cmd->add_option("--point", point_path, "Params JSON file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "root-coincidence definiteness oracle");
    oracle_cmd->add_option("--point", point_path, "Params JSON file")->required();
    oracle_cmd->add_flag("--json", as_json, "JSON output");

    auto* crosscheck_cmd =
        app.add_subcommand("crosscheck", "oracle vs classifier agreement corpus");
    crosscheck_cmd->add_option("--count", count, "number of random corpus points");
    crosscheck_cmd->add_option("--seed", seed, "corpus seed");
    crosscheck_cmd->add_flag("--json", as_json, "JSON output");

    auto* table_cmd = app.add_subcommand("verify-table1", "re-verify the reference point table");
    table_cmd->add_flag("--json", as_json, "JSON output");

    auto* sample_cmd = app.add_subcommand("sample", "sample exact points of one semi-variety");
    sample_cmd->add_option("--case", case_label, "case label (1a 1b 2 3a 4 5a B1 B2)")
        ->required();
    sample_cmd->add_option("--seed", seed, "sampler seed");
    sample_cmd->add_option("--count", count, "number of points")->default_val(1);
    sample_cmd->add_flag("--json", as_json, "JSON output");

    auto* simulate_cmd = app.add_subcommand("simulate", "Poincare return-map scan");
    simulate_cmd->add_option("--point", point_path, "Params JSON file")->required();
    simulate_cmd->add_option("--rho-max", rho_max, "largest initial condition");
    simulate_cmd->add_option("--grid", grid, "number of rho0 samples");
    simulate_cmd->add_option("--tol", tol, "integrator relative tolerance");
    simulate_cmd->add_flag("--json", as_json, "JSON output");
    simulate_cmd->add_flag("--table", table, "plain-text P(rho0)-rho0 table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(point_path, as_json);
        if (quantities_cmd->parsed()) return cmd_quantities(point_path);
        if (oracle_cmd->parsed()) return cmd_oracle(point_path, as_json);
        if (crosscheck_cmd->parsed()) return cmd_crosscheck(seed, count, as_json);
        if (table_cmd->parsed()) return cmd_verify_table1(as_json);
        if (sample_cmd->parsed()) return cmd_sample(case_label, seed, count, as_json);
        if (simulate_cmd->parsed())
            return cmd_simulate(point_path, rho_max, grid, tol, as_json, table);
    } catch (const std::logic_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
