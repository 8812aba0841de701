#include "dspectra/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace dspectra {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0)
        throw SizeError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
    for (Edge& e : edges) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
            throw SizeError("edge endpoint out of range");
        if (e.first == e.second)
            throw SizeError("loops are not allowed");
        if (e.first > e.second)
            std::swap(e.first, e.second);
        if (g.adj_[static_cast<std::size_t>(e.first) * n + e.second])
            throw SizeError("duplicate edge");
        g.adj_[static_cast<std::size_t>(e.first) * n + e.second] = 1;
        g.adj_[static_cast<std::size_t>(e.second) * n + e.first] = 1;
    }
    std::sort(edges.begin(), edges.end());
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge(int i, int j) const {
    return adj_[static_cast<std::size_t>(i) * n_ + j] != 0;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        d += adj_[static_cast<std::size_t>(v) * n_ + u];
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_[static_cast<std::size_t>(v) * n_ + u])
            out.push_back(u);
    return out;
}

SymmetricMatrix Graph::adjacency() const {
    if (n_ < 1)
        throw SizeError("adjacency matrix needs at least one vertex");
    SymmetricMatrix a(n_);
    for (const Edge& e : edges_)
        a.set(e.first, e.second, 1.0);
    return a;
}

Graph make_cycle(int n) {
    if (n < 3)
        throw SizeError("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1)
        throw SizeError("complete graph needs at least 1 vertex, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_empty(int n) {
    if (n < 1)
        throw SizeError("empty graph needs at least 1 vertex, got " + std::to_string(n));
    return Graph::from_edges(n, {});
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1)
        throw SizeError("complement needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j))
                edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty())
        throw EmptyListError("disjoint union needs at least one graph");
    int total = 0;
    for (const Graph& p : parts)
        total += p.vertex_count();
    std::vector<Edge> edges;
    int offset = 0;
    for (const Graph& p : parts) {
        for (const Edge& e : p.edges())
            edges.emplace_back(e.first + offset, e.second + offset);
        offset += p.vertex_count();
    }
    return Graph::from_edges(total, std::move(edges));
}

Graph line_graph(const Graph& g) {
    const auto& ge = g.edges();
    const int m = static_cast<int>(ge.size());
    if (m < 1)
        throw NoEdgesError("line graph needs at least one edge");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const bool share = ge[i].first == ge[j].first || ge[i].first == ge[j].second ||
                               ge[i].second == ge[j].first || ge[i].second == ge[j].second;
            if (share)
                edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(m, std::move(edges));
}

Matrix incidence(const Graph& g) {
    const auto& ge = g.edges();
    if (ge.empty())
        throw NoEdgesError("incidence matrix needs at least one edge");
    Matrix m(static_cast<int>(ge.size()), g.vertex_count());
    for (int i = 0; i < static_cast<int>(ge.size()); ++i) {
        m(i, ge[i].first) = 1.0;
        m(i, ge[i].second) = 1.0;
    }
    return m;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1)
        throw SizeError("connectivity check needs at least one vertex");
    std::vector<char> seen(n, 0);
    std::queue<int> work;
    work.push(0);
    seen[0] = 1;
    int count = 1;
    while (!work.empty()) {
        const int v = work.front();
        work.pop();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                work.push(u);
            }
        }
    }
    return count == n;
}

std::optional<int> regularity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1)
        throw SizeError("regularity check needs at least one vertex");
    const int d = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != d)
            return std::nullopt;
    return d;
}

bool is_triangle_free(const Graph& g) {
    for (const Edge& e : g.edges())
        for (int w = 0; w < g.vertex_count(); ++w)
            if (g.has_edge(e.first, w) && g.has_edge(e.second, w))
                return false;
    return true;
}

GraphChecks checks(const Graph& g) {
    return GraphChecks{is_connected(g), regularity(g), is_triangle_free(g)};
}

} // namespace dspectra
