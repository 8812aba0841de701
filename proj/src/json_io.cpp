#include "dspectra/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace dspectra {

double round_sig(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x))
        return x == 0.0 ? 0.0 : x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
    return std::strtod(buf, nullptr);
}

std::string format_sig(double x, int digits) {
    const double rounded = round_sig(x, digits);
    const double ax = std::abs(rounded);
    const int int_digits = ax < 1.0 ? 1 : static_cast<int>(std::floor(std::log10(ax))) + 1;
    const int decimals = std::max(0, digits - int_digits);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded);
    return buf;
}

ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.first, e.second});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs fields \"n\" and \"edges\"", 0, "graph object");
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::from_edges(n, std::move(edges));
}

ordered_json blocked_graph_to_json(const BlockedGraph& bg) {
    ordered_json j = graph_to_json(bg.graph);
    j["blocks"] = {{"m", bg.sizes.m}, {"n", bg.sizes.n}, {"p", bg.sizes.p}, {"q", bg.sizes.q}};
    if (bg.core) {
        j["h1"] = to_string(bg.core->h1);
        j["h2"] = to_string(bg.core->h2);
    } else {
        j["h1"] = nullptr;
        j["h2"] = nullptr;
    }
    return j;
}

ordered_json spectrum_to_json(const Spectrum& s) {
    ordered_json j;
    ordered_json values = ordered_json::array();
    for (double v : s.values)
        values.push_back(round_sig(v, 12));
    j["values"] = std::move(values);
    j["provenance"] = s.provenance == Provenance::ClosedForm ? "closed_form" : "numeric";
    j["labels"] = s.labels;
    return j;
}

namespace {

std::string partition_text(const Partition& parts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out << '+';
        out << parts[i];
    }
    return out.str();
}

// shortest-faithful rendering for quantities that may be tiny (deviations)
std::string format_compact(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace

ordered_json family_report_to_json(const FamilyReport& r) {
    ordered_json j;
    j["member_count"] = r.member_count;
    j["order"] = r.order;
    j["vary"] = to_string(r.vary);
    j["template"] = r.covering_template ? ordered_json(to_string(*r.covering_template))
                                        : ordered_json(nullptr);
    ordered_json members = ordered_json::array();
    for (std::size_t i = 0; i < r.energies.size(); ++i) {
        ordered_json m;
        m["partition"] = r.partitions[i];
        m["energy"] = round_sig(r.energies[i], 12);
        m["deviation"] = round_sig(r.energies[i] - r.common_energy, 12);
        members.push_back(std::move(m));
    }
    j["members"] = std::move(members);
    j["common_energy"] = round_sig(r.common_energy, 12);
    j["max_deviation"] = round_sig(r.max_deviation, 12);
    j["equienergetic"] = r.equienergetic;
    j["all_diameter_three"] = r.all_diameter_three;
    j["mechanism_gap"] = round_sig(r.mechanism_gap, 12);
    j["min_adjacency_eigenvalue"] = round_sig(r.min_adjacency_eigenvalue, 12);
    j["shared_clauses_match"] = r.shared_clauses_match;
    return j;
}

std::string family_report_to_csv(const FamilyReport& r) {
    std::ostringstream out;
    out << "partition,energy,deviation\n";
    for (std::size_t i = 0; i < r.energies.size(); ++i) {
        out << partition_text(r.partitions[i]) << ',' << format_sig(r.energies[i], 12) << ','
            << format_compact(r.energies[i] - r.common_energy) << '\n';
    }
    return out.str();
}

} // namespace dspectra
