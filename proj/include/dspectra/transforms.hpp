#pragma once

#include <optional>
#include <string>

#include "dspectra/graph.hpp"

namespace dspectra {

// Overlay placed on the edge-vertex side of a merged subdivision. LineOfG and
// ComplementLineOfG are derived from the base graph's own line graph.
enum class H1Kind { Empty, Complete, LineOfG, ComplementLineOfG };

// Overlay placed on the original-vertex side.
enum class H2Kind { Empty, Complete, SameAsG, ComplementOfG };

const char* to_string(H1Kind k);
const char* to_string(H2Kind k);
std::optional<H1Kind> h1_kind_from_string(const std::string& s);
std::optional<H2Kind> h2_kind_from_string(const std::string& s);

// Subdivision graph of g with extra edges overlaid inside each vertex class:
// vertices [0, m) are the edge-vertices of g (canonical edge order), vertices
// [m, m+n) the original vertices. Every edge-vertex keeps its two subdivision
// edges into the endpoints of the edge it represents.
struct MergedSubdivision {
    Graph base;   // g
    H1Kind h1 = H1Kind::Empty;
    H2Kind h2 = H2Kind::Empty;
    Graph graph;  // the merged graph on m+n vertices
    int m = 0;    // edge count of base
    int n = 0;    // vertex count of base

    bool operator==(const MergedSubdivision& other) const = default;
};

// Plain subdivision: every edge replaced by a path of length two. Same vertex
// layout as MergedSubdivision with empty overlays.
Graph subdivision(const Graph& g);

// The overlay graph itself (on m edge-vertices resp. n original vertices).
Graph h1_overlay(const Graph& g, H1Kind k);
Graph h2_overlay(const Graph& g, H2Kind k);

MergedSubdivision merged_subdivision(const Graph& g, H1Kind h1, H2Kind h2);

struct BlockSizes {
    int m = 0; // edge-vertices
    int n = 0; // original vertices
    int p = 0; // first joined graph
    int q = 0; // second joined graph
    int total() const { return m + n + p + q; }
};

// A double join: core on [0, m+n), then g1 on [m+n, m+n+p) joined to every
// edge-vertex, then g2 on [m+n+p, m+n+p+q) joined to every original vertex.
// `core` is present when the graph was built from a merged subdivision; the
// raw constructor leaves it empty and only the numeric routes apply.
struct BlockedGraph {
    std::optional<MergedSubdivision> core;
    Graph g1;
    Graph g2;
    Graph graph;
    BlockSizes sizes;
};

BlockedGraph double_join(const MergedSubdivision& core, const Graph& g1, const Graph& g2);

// Same block layout but the first two blocks are given directly as an
// arbitrary graph split at `m`. Escape hatch for experiments outside the
// merged-subdivision constructions.
BlockedGraph double_join_raw(const Graph& core, int m, const Graph& g1, const Graph& g2);

} // namespace dspectra
