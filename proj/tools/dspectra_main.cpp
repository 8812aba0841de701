#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dspectra/distance.hpp"
#include "dspectra/equienergetic.hpp"
#include "dspectra/expr.hpp"
#include "dspectra/json_io.hpp"
#include "dspectra/theory.hpp"

namespace {

using namespace dspectra;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTemplateMismatch = 4;
constexpr int kExitVerification = 5;
constexpr int kExitNumeric = 6;

// EXPR argument, or @file.json holding a plain graph export.
Evaluated evaluate_argument(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        const std::string path = text.substr(1);
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open graph file '" + path + "'", 0, "a readable file");
        ordered_json j;
        try {
            j = ordered_json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid graph JSON: ") + e.what(), 0, "graph JSON");
        }
        return Evaluated{graph_from_json(j), std::nullopt};
    }
    return evaluate(*parse_expr(text));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open output file '" + path + "'", 0, "a writable file");
    out << content;
}

std::string compact(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", round_sig(x, 12));
    return buf;
}

void print_spectrum_human(const Spectrum& s, const char* title) {
    std::cout << title << " (" << s.size() << " values):\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        std::cout << "  " << compact(s.values[i]);
        if (!s.labels.empty())
            std::cout << "  [" << s.labels[i] << "]";
        std::cout << "\n";
    }
}

int run_graph(const std::string& expr_text, const std::string& out_path,
              const std::string& distances_path) {
    const Evaluated ev = evaluate_argument(expr_text);
    const GraphChecks ck = checks(ev.graph);
    std::cout << "vertices: " << ev.graph.vertex_count() << "\n";
    std::cout << "edges: " << ev.graph.edge_count() << "\n";
    std::cout << "connected: " << (ck.is_connected ? "yes" : "no") << "\n";
    if (ck.regularity)
        std::cout << "regularity: " << *ck.regularity << "\n";
    else
        std::cout << "regularity: irregular\n";
    std::cout << "triangle_free: " << (ck.is_triangle_free ? "yes" : "no") << "\n";
    if (ev.blocked) {
        const BlockSizes& sz = ev.blocked->sizes;
        std::cout << "blocks: m=" << sz.m << " n=" << sz.n << " p=" << sz.p << " q=" << sz.q;
        if (ev.blocked->core)
            std::cout << " (h1=" << to_string(ev.blocked->core->h1)
                      << ", h2=" << to_string(ev.blocked->core->h2) << ")";
        std::cout << "\n";
    }
    if (!out_path.empty()) {
        const ordered_json j =
            ev.blocked ? blocked_graph_to_json(*ev.blocked) : graph_to_json(ev.graph);
        write_file(out_path, j.dump(2) + "\n");
    }
    if (!distances_path.empty())
        write_file(distances_path, distance_matrix(ev.graph).to_csv());
    return 0;
}

int run_spectrum(const std::string& expr_text, const std::string& method, bool as_json) {
    const Evaluated ev = evaluate_argument(expr_text);
    std::optional<Spectrum> numeric;
    std::optional<Spectrum> closed;
    if (method == "numeric" || method == "both")
        numeric = distance_spectrum_numeric(ev.graph);
    if (method == "closed" || method == "both") {
        if (!ev.blocked)
            throw TemplateMismatchError("closed form needs a djoin expression");
        closed = closed_form_distance_spectrum(*ev.blocked);
    }

    if (as_json) {
        ordered_json j;
        if (method == "numeric") {
            j = spectrum_to_json(*numeric);
        } else if (method == "closed") {
            j = spectrum_to_json(*closed);
        } else {
            const MultisetComparison cmp = multiset_compare(*closed, *numeric, 1e-8);
            j["closed"] = spectrum_to_json(*closed);
            j["numeric"] = spectrum_to_json(*numeric);
            j["max_gap"] = round_sig(cmp.max_gap, 12);
            j["equal"] = cmp.equal;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (closed)
        print_spectrum_human(*closed, "closed-form distance spectrum");
    if (numeric)
        print_spectrum_human(*numeric, "numeric distance spectrum");
    if (closed && numeric) {
        const MultisetComparison cmp = multiset_compare(*closed, *numeric, 1e-8);
        std::cout << "max multiset gap: " << compact(cmp.max_gap) << "\n";
    }
    return 0;
}

int run_energy(const std::string& expr_text) {
    const Evaluated ev = evaluate_argument(expr_text);
    std::cout << format_sig(distance_energy(ev.graph), 10) << "\n";
    return 0;
}

ordered_json clauses_by_label(const Spectrum& s) {
    std::map<std::string, std::vector<double>> groups;
    for (std::size_t i = 0; i < s.values.size(); ++i)
        groups[s.labels[i]].push_back(round_sig(s.values[i], 12));
    ordered_json j;
    for (auto& [label, values] : groups)
        j[label] = values;
    return j;
}

int run_verify(const std::string& expr_text, double tol, bool as_json) {
    const Evaluated ev = evaluate_argument(expr_text);
    if (!ev.blocked)
        throw TemplateMismatchError("verification needs a djoin expression");
    const BlockedGraph& bg = *ev.blocked;

    const TemplateId id = classify_template(bg);
    const TemplateValidation tv = validate_template(bg, TemplateSpec::for_template(id));
    const Spectrum closed = closed_form_distance_spectrum(bg);
    const Spectrum oracle = distance_spectrum_numeric(bg.graph);
    const MultisetComparison cmp = multiset_compare(closed, oracle, tol);

    // The vertex-complement template's pair clause circulates with two
    // midpoint readings; report which one the oracle supports.
    std::optional<MultisetComparison> cmp_constant;
    if (id == TemplateId::ComplementVertices)
        cmp_constant = multiset_compare(complement_vertices_constant_midpoint(bg), oracle, tol);
    auto midpoint_support = [&]() -> std::string {
        if (cmp.equal && (!cmp_constant || !cmp_constant->equal))
            return "per_index";
        if (cmp_constant && cmp_constant->equal && !cmp.equal)
            return "constant";
        if (cmp.equal && cmp_constant && cmp_constant->equal)
            return "both";
        return "neither";
    };

    const bool ok = tv.ok && cmp.equal;
    if (as_json) {
        ordered_json j;
        j["template"] = to_string(id);
        ordered_json tj;
        tj["ok"] = tv.ok;
        tj["violation_count"] = tv.violation_count;
        if (tv.first_violation) {
            const TemplateViolation& v = *tv.first_violation;
            tj["first_violation"] = {{"i", v.i}, {"j", v.j}, {"expected", v.expected}, {"actual", v.actual}};
        } else {
            tj["first_violation"] = nullptr;
        }
        j["template_validation"] = std::move(tj);
        j["clauses"] = clauses_by_label(closed);
        j["closed"] = spectrum_to_json(closed);
        j["oracle"] = spectrum_to_json(oracle);
        j["max_gap"] = round_sig(cmp.max_gap, 12);
        j["equal"] = cmp.equal;
        if (cmp_constant) {
            j["midpoint"] = {{"per_index_max_gap", round_sig(cmp.max_gap, 12)},
                             {"constant_max_gap", round_sig(cmp_constant->max_gap, 12)},
                             {"oracle_supports", midpoint_support()}};
        }
        j["ok"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "template: " << to_string(id) << "\n";
        if (tv.ok) {
            std::cout << "template check: ok\n";
        } else {
            const TemplateViolation& v = *tv.first_violation;
            std::cout << "template check: FAILED, " << tv.violation_count << " pairs off, first at ("
                      << v.i << "," << v.j << "): expected " << v.expected << ", got " << v.actual
                      << "\n";
        }
        std::cout << "closed vs oracle: max gap " << compact(cmp.max_gap) << " (tol " << tol
                  << ") -> " << (cmp.equal ? "equal" : "DIFFERENT") << "\n";
        if (cmp_constant)
            std::cout << "pair-clause midpoint supported by oracle: " << midpoint_support() << "\n";
        std::cout << (ok ? "verdict: ok" : "verdict: MISMATCH") << "\n";
    }
    return ok ? 0 : kExitVerification;
}

int family_size_cap() {
    const char* env = std::getenv("SPECTRA_MAX_N");
    if (!env || !*env)
        return 30;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 3)
        throw ParseError("SPECTRA_MAX_N must be an integer >= 3", 0, "an integer");
    return static_cast<int>(v);
}

int run_families(const std::string& case_text, const std::string& g_text, const std::string& h_text,
                 const std::string& vary_text, const std::string& fixed_text, int n_target,
                 double tol, bool as_json, const std::string& out_path, const std::string& csv_path) {
    FamilySpec spec;
    if (case_text == "i")
        spec.family_case = FamilyCase::I;
    else if (case_text == "ii")
        spec.family_case = FamilyCase::II;
    else if (case_text == "iii")
        spec.family_case = FamilyCase::III;
    else if (case_text == "iv")
        spec.family_case = FamilyCase::IV;
    else
        throw ParseError("unknown family case '" + case_text + "'", 0, "i|ii|iii|iv");

    spec.base = evaluate_argument(g_text).graph;
    spec.fixed_other = evaluate_argument(fixed_text).graph;
    if (vary_text == "g1")
        spec.vary = VarySide::G1Side;
    else if (vary_text == "g2")
        spec.vary = VarySide::G2Side;
    else
        throw ParseError("unknown varying side '" + vary_text + "'", 0, "g1|g2");
    spec.n_target = n_target;

    if (!h_text.empty()) {
        if (spec.family_case == FamilyCase::III) {
            const auto h2 = h2_kind_from_string(h_text);
            if (!h2)
                throw ParseError("unknown vertex overlay kind '" + h_text + "'", 0,
                                 "empty|complete|same|comp");
            spec.h2 = *h2;
        } else {
            const auto h1 = h1_kind_from_string(h_text);
            if (!h1)
                throw ParseError("unknown edge overlay kind '" + h_text + "'", 0,
                                 "empty|complete|line|compline");
            spec.h1 = *h1;
        }
    }

    const std::vector<BlockedGraph> members = build_family(spec, family_size_cap());
    const FamilyReport report = verify_family(members, tol);

    ordered_json j = family_report_to_json(report);
    j["case"] = case_text;
    if (!out_path.empty())
        write_file(out_path, j.dump(2) + "\n");
    if (!csv_path.empty())
        write_file(csv_path, family_report_to_csv(report));

    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "family: case=" << case_text << " vary=" << to_string(report.vary)
                  << " members=" << report.member_count << " order=" << report.order << "\n";
        for (std::size_t i = 0; i < report.energies.size(); ++i) {
            std::cout << "  partition ";
            for (std::size_t k = 0; k < report.partitions[i].size(); ++k)
                std::cout << (k ? "+" : "") << report.partitions[i][k];
            std::cout << ": energy " << format_sig(report.energies[i], 12) << "\n";
        }
        std::cout << "common energy: " << format_sig(report.common_energy, 12) << "\n";
        std::cout << "max deviation: " << compact(report.max_deviation) << " (tol " << tol << ") -> "
                  << (report.equienergetic ? "equienergetic" : "NOT equienergetic") << "\n";
        std::cout << "all diameters 3: " << (report.all_diameter_three ? "yes" : "no") << "\n";
        std::cout << "mechanism gap: " << compact(report.mechanism_gap) << "\n";
        std::cout << "shared clauses: " << (report.shared_clauses_match ? "match" : "DIFFER") << "\n";
    }
    return report.equienergetic ? 0 : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance spectra of merged-subdivision double join graphs"};
    app.require_subcommand(1);

    std::string expr_text, out_path, distances_path, method = "numeric";
    bool as_json = false;
    double tol = 1e-8;

    CLI::App* cmd_graph = app.add_subcommand("graph", "evaluate an expression and export the graph");
    cmd_graph->add_option("EXPR", expr_text, "graph expression or @file.json")->required();
    cmd_graph->add_option("--out", out_path, "write graph JSON here");
    cmd_graph->add_option("--distances", distances_path, "write the distance matrix as CSV");

    CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "distance spectrum of an expression");
    cmd_spectrum->add_option("EXPR", expr_text, "graph expression or @file.json")->required();
    cmd_spectrum->add_option("--method", method, "numeric|closed|both (default numeric)")
        ->check(CLI::IsMember({"numeric", "closed", "both"}));
    cmd_spectrum->add_flag("--json", as_json, "emit JSON instead of text");

    CLI::App* cmd_energy = app.add_subcommand("energy", "distance energy of an expression");
    cmd_energy->add_option("EXPR", expr_text, "graph expression or @file.json")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "closed form vs BFS oracle for a double join");
    cmd_verify->add_option("EXPR", expr_text, "djoin expression")->required();
    cmd_verify->add_option("--tol", tol, "multiset comparison tolerance (default 1e-8)");
    cmd_verify->add_flag("--json", as_json, "emit the report as JSON");

    std::string case_text, g_text, h_text, vary_text, fixed_text, csv_path;
    int n_target = 0;
    double family_tol = 1e-6;
    CLI::App* cmd_families = app.add_subcommand("families", "build and verify an equienergetic family");
    cmd_families->add_option("--case", case_text, "family case i|ii|iii|iv")->required();
    cmd_families->add_option("--g", g_text, "base graph expression")->required();
    cmd_families->add_option("--overlay", h_text, "free overlay kind for the chosen case");
    cmd_families->add_option("--vary", vary_text, "which joined side varies: g1|g2")->required();
    cmd_families->add_option("--fixed", fixed_text, "expression for the fixed joined side")->required();
    cmd_families->add_option("--n", n_target, "vertex count of the varying side")->required();
    cmd_families->add_option("--tol", family_tol, "energy agreement tolerance (default 1e-6)");
    cmd_families->add_flag("--json", as_json, "emit the report as JSON");
    cmd_families->add_option("--out", out_path, "write the report JSON here");
    cmd_families->add_option("--csv", csv_path, "write the member table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (cmd_graph->parsed())
            return run_graph(expr_text, out_path, distances_path);
        if (cmd_spectrum->parsed())
            return run_spectrum(expr_text, method, as_json);
        if (cmd_energy->parsed())
            return run_energy(expr_text);
        if (cmd_verify->parsed())
            return run_verify(expr_text, tol, as_json);
        if (cmd_families->parsed())
            return run_families(case_text, g_text, h_text, vary_text, fixed_text, n_target,
                                family_tol, as_json, out_path, csv_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const TemplateMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTemplateMismatch;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const ComplexRootError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
