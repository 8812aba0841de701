#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dspectra/errors.hpp"
#include "dspectra/numlin.hpp"

namespace dspectra {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Stores both a dense adjacency
// table (O(1) queries) and the lexicographically sorted edge list; the edge
// list order is the canonical edge indexing used by incidence matrices, line
// graphs and subdivisions.
class Graph {
public:
    Graph() = default;

    // Edges are normalised to (min,max) and sorted; loops and duplicates are
    // rejected, as are endpoints outside [0, n).
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int i, int j) const;
    int degree(int v) const;

    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<int> neighbors(int v) const;

    SymmetricMatrix adjacency() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<Edge> edges_;
};

// Generators. Cycles need n >= 3; the others n >= 1.
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_empty(int n);

Graph complement(const Graph& g);
Graph disjoint_union(const std::vector<Graph>& parts);

// Line graph on g's canonical edge ordering; needs at least one edge.
Graph line_graph(const Graph& g);

// Edge-by-vertex 0/1 incidence matrix, rows in canonical edge order.
Matrix incidence(const Graph& g);

bool is_connected(const Graph& g);
// Common degree if the graph is regular, nullopt otherwise.
std::optional<int> regularity(const Graph& g);
bool is_triangle_free(const Graph& g);

struct GraphChecks {
    bool is_connected = false;
    std::optional<int> regularity;
    bool is_triangle_free = false;
};

GraphChecks checks(const Graph& g);

} // namespace dspectra
