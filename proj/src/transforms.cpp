#include "dspectra/transforms.hpp"

namespace dspectra {

const char* to_string(H1Kind k) {
    switch (k) {
    case H1Kind::Empty: return "empty";
    case H1Kind::Complete: return "complete";
    case H1Kind::LineOfG: return "line";
    case H1Kind::ComplementLineOfG: return "compline";
    }
    return "?";
}

const char* to_string(H2Kind k) {
    switch (k) {
    case H2Kind::Empty: return "empty";
    case H2Kind::Complete: return "complete";
    case H2Kind::SameAsG: return "same";
    case H2Kind::ComplementOfG: return "comp";
    }
    return "?";
}

std::optional<H1Kind> h1_kind_from_string(const std::string& s) {
    if (s == "empty") return H1Kind::Empty;
    if (s == "complete") return H1Kind::Complete;
    if (s == "line") return H1Kind::LineOfG;
    if (s == "compline") return H1Kind::ComplementLineOfG;
    return std::nullopt;
}

std::optional<H2Kind> h2_kind_from_string(const std::string& s) {
    if (s == "empty") return H2Kind::Empty;
    if (s == "complete") return H2Kind::Complete;
    if (s == "same") return H2Kind::SameAsG;
    if (s == "comp") return H2Kind::ComplementOfG;
    return std::nullopt;
}

Graph subdivision(const Graph& g) {
    return merged_subdivision(g, H1Kind::Empty, H2Kind::Empty).graph;
}

Graph h1_overlay(const Graph& g, H1Kind k) {
    const int m = g.edge_count();
    if (m < 1)
        throw NoEdgesError("edge-side overlay needs a base graph with edges");
    switch (k) {
    case H1Kind::Empty: return make_empty(m);
    case H1Kind::Complete: return make_complete(m);
    case H1Kind::LineOfG: return line_graph(g);
    case H1Kind::ComplementLineOfG: return complement(line_graph(g));
    }
    throw SizeError("unknown edge-side overlay kind");
}

Graph h2_overlay(const Graph& g, H2Kind k) {
    const int n = g.vertex_count();
    if (n < 1)
        throw SizeError("vertex-side overlay needs a non-empty base graph");
    switch (k) {
    case H2Kind::Empty: return make_empty(n);
    case H2Kind::Complete: return make_complete(n);
    case H2Kind::SameAsG: return g;
    case H2Kind::ComplementOfG: return complement(g);
    }
    throw SizeError("unknown vertex-side overlay kind");
}

MergedSubdivision merged_subdivision(const Graph& g, H1Kind h1, H2Kind h2) {
    const int m = g.edge_count();
    const int n = g.vertex_count();
    if (m < 1)
        throw NoEdgesError("merged subdivision needs a base graph with at least one edge");

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(i, m + g.edges()[i].first);
        edges.emplace_back(i, m + g.edges()[i].second);
    }
    // keep the overlay graphs alive while iterating their edge lists
    const Graph h1_graph = h1_overlay(g, h1);
    const Graph h2_graph = h2_overlay(g, h2);
    for (const Edge& e : h1_graph.edges())
        edges.emplace_back(e.first, e.second);
    for (const Edge& e : h2_graph.edges())
        edges.emplace_back(m + e.first, m + e.second);

    MergedSubdivision ms;
    ms.base = g;
    ms.h1 = h1;
    ms.h2 = h2;
    ms.m = m;
    ms.n = n;
    ms.graph = Graph::from_edges(m + n, std::move(edges));
    return ms;
}

namespace {

BlockedGraph assemble_double_join(std::optional<MergedSubdivision> core_tag, const Graph& core_graph,
                                  int m, const Graph& g1, const Graph& g2) {
    const int n = core_graph.vertex_count() - m;
    const int p = g1.vertex_count();
    const int q = g2.vertex_count();
    if (m < 1 || n < 1)
        throw SizeError("double join core must have both vertex classes non-empty");
    if (p < 1 || q < 1)
        throw SizeError("double join needs non-empty graphs on both sides");

    std::vector<Edge> edges = core_graph.edges();
    const int off1 = m + n;
    const int off2 = m + n + p;
    for (const Edge& e : g1.edges())
        edges.emplace_back(e.first + off1, e.second + off1);
    for (const Edge& e : g2.edges())
        edges.emplace_back(e.first + off2, e.second + off2);
    // every edge-vertex meets all of g1, every original vertex meets all of g2
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < p; ++j)
            edges.emplace_back(i, off1 + j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < q; ++j)
            edges.emplace_back(m + i, off2 + j);

    BlockedGraph bg;
    bg.core = std::move(core_tag);
    bg.g1 = g1;
    bg.g2 = g2;
    bg.sizes = BlockSizes{m, n, p, q};
    bg.graph = Graph::from_edges(m + n + p + q, std::move(edges));
    return bg;
}

} // namespace

BlockedGraph double_join(const MergedSubdivision& core, const Graph& g1, const Graph& g2) {
    return assemble_double_join(core, core.graph, core.m, g1, g2);
}

BlockedGraph double_join_raw(const Graph& core, int m, const Graph& g1, const Graph& g2) {
    if (m < 1 || m >= core.vertex_count())
        throw SizeError("raw double join split must leave both classes non-empty");
    return assemble_double_join(std::nullopt, core, m, g1, g2);
}

} // namespace dspectra
