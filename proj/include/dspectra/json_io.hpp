#pragma once

#include <string>

#include "json.hpp"

#include "dspectra/equienergetic.hpp"
#include "dspectra/graph.hpp"
#include "dspectra/numlin.hpp"
#include "dspectra/transforms.hpp"

namespace dspectra {

using ordered_json = nlohmann::ordered_json;

// Round to `digits` significant decimal digits. All eigenvalues pass through
// this before serialization so identical runs serialize byte-identically.
double round_sig(double x, int digits);

// Fixed-point rendering with `digits` significant digits ("6.000000000").
std::string format_sig(double x, int digits);

ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const ordered_json& j);

ordered_json blocked_graph_to_json(const BlockedGraph& bg);
ordered_json spectrum_to_json(const Spectrum& s);
ordered_json family_report_to_json(const FamilyReport& r);
std::string family_report_to_csv(const FamilyReport& r);

} // namespace dspectra
