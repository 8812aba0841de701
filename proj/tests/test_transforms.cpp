#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "dspectra/distance.hpp"
#include "dspectra/numlin.hpp"
#include "dspectra/transforms.hpp"

using namespace dspectra;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    return degs;
}

} // namespace

TEST_CASE("subdividing a cycle doubles it") {
    const Graph s = subdivision(make_cycle(4));
    CHECK(s.vertex_count() == 8);
    CHECK(s.edge_count() == 8);
    CHECK(regularity(s) == 2);
    CHECK(is_connected(s));
    CHECK(multiset_compare(eigen_sym(s.adjacency()), eigen_sym(make_cycle(8).adjacency()), 1e-9).equal);

    CHECK(multiset_compare(eigen_sym(subdivision(make_cycle(3)).adjacency()),
                           eigen_sym(make_cycle(6).adjacency()), 1e-9)
              .equal);
}

TEST_CASE("subdividing a single edge gives a path") {
    const Graph s = subdivision(make_complete(2));
    CHECK(s.vertex_count() == 3);
    CHECK(degree_sequence(s) == std::vector<int>{1, 1, 2});
    CHECK_THROWS_AS(subdivision(make_empty(3)), NoEdgesError);
}

TEST_CASE("merged subdivision layout: edge-vertices first, then originals") {
    const Graph g = make_cycle(4);
    const MergedSubdivision ms = merged_subdivision(g, H1Kind::LineOfG, H2Kind::SameAsG);
    CHECK(ms.m == 4);
    CHECK(ms.n == 4);
    CHECK(ms.graph.vertex_count() == 8);

    // the induced blocks are exactly the two overlays and the incidence cross
    const Graph h1 = h1_overlay(g, H1Kind::LineOfG);
    const Graph h2 = h2_overlay(g, H2Kind::SameAsG);
    for (int i = 0; i < ms.m; ++i)
        for (int j = 0; j < ms.m; ++j)
            if (i != j)
                CHECK(ms.graph.has_edge(i, j) == h1.has_edge(i, j));
    for (int i = 0; i < ms.n; ++i)
        for (int j = 0; j < ms.n; ++j)
            if (i != j)
                CHECK(ms.graph.has_edge(ms.m + i, ms.m + j) == h2.has_edge(i, j));
    const Matrix inc = incidence(g);
    for (int i = 0; i < ms.m; ++i)
        for (int j = 0; j < ms.n; ++j)
            CHECK((ms.graph.has_edge(i, ms.m + j) ? 1.0 : 0.0) == inc(i, j));
}

TEST_CASE("merged subdivision edge counts") {
    CHECK(merged_subdivision(make_cycle(4), H1Kind::Empty, H2Kind::Empty).graph.edge_count() == 8);
    CHECK(merged_subdivision(make_cycle(3), H1Kind::LineOfG, H2Kind::Empty).graph.edge_count() == 9);
    CHECK(merged_subdivision(make_cycle(4), H1Kind::Empty, H2Kind::SameAsG).graph.edge_count() == 12);

    // empty overlays reproduce the plain subdivision
    const MergedSubdivision ms = merged_subdivision(make_cycle(5), H1Kind::Empty, H2Kind::Empty);
    CHECK(ms.graph == subdivision(make_cycle(5)));
}

TEST_CASE("overlay kinds resolve against the base graph") {
    const Graph g = make_cycle(4);
    CHECK(h1_overlay(g, H1Kind::Empty) == make_empty(4));
    CHECK(h1_overlay(g, H1Kind::Complete) == make_complete(4));
    CHECK(h1_overlay(g, H1Kind::LineOfG) == line_graph(g));
    CHECK(h1_overlay(g, H1Kind::ComplementLineOfG) == complement(line_graph(g)));
    CHECK(h2_overlay(g, H2Kind::SameAsG) == g);
    CHECK(h2_overlay(g, H2Kind::ComplementOfG) == complement(g));
}

TEST_CASE("double join block layout and counts") {
    const MergedSubdivision core = merged_subdivision(make_cycle(4), H1Kind::Empty, H2Kind::Empty);
    const BlockedGraph bg = double_join(core, make_cycle(3), make_cycle(3));
    CHECK(bg.graph.vertex_count() == 14);
    CHECK(bg.graph.edge_count() == 38);
    CHECK(bg.sizes.m == 4);
    CHECK(bg.sizes.n == 4);
    CHECK(bg.sizes.p == 3);
    CHECK(bg.sizes.q == 3);
    CHECK(is_connected(bg.graph));
    CHECK(diameter(bg.graph) == 3);

    // every edge-vertex sees all of g1, every original vertex sees all of g2
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(bg.graph.has_edge(i, 8 + j));
            CHECK(bg.graph.has_edge(4 + i, 11 + j));
        }
    // and no edge-vertex touches g2 directly
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK_FALSE(bg.graph.has_edge(i, 11 + j));
}

TEST_CASE("the complete-overlay example graph") {
    const MergedSubdivision core = merged_subdivision(make_cycle(4), H1Kind::Complete, H2Kind::Empty);
    const BlockedGraph bg = double_join(core, make_cycle(3), make_complete(4));
    CHECK(bg.graph.vertex_count() == 15);
    CHECK(bg.graph.edge_count() == 51);
    CHECK(diameter(bg.graph) == 3);
}

TEST_CASE("double join edge count formula over a grid") {
    for (const Graph& base : {make_cycle(4), make_cycle(5), make_complete(4)}) {
        for (H1Kind h1 : {H1Kind::Empty, H1Kind::Complete, H1Kind::LineOfG}) {
            for (H2Kind h2 : {H2Kind::Empty, H2Kind::SameAsG}) {
                const MergedSubdivision core = merged_subdivision(base, h1, h2);
                const Graph g1 = make_cycle(3);
                const Graph g2 = make_complete(4);
                const BlockedGraph bg = double_join(core, g1, g2);
                const int expected = 2 * core.m + h1_overlay(base, h1).edge_count() +
                                     h2_overlay(base, h2).edge_count() + g1.edge_count() +
                                     g2.edge_count() + core.m * g1.vertex_count() +
                                     core.n * g2.vertex_count();
                CHECK(bg.graph.edge_count() == expected);
                CHECK(is_connected(bg.graph));
                CHECK(diameter(bg.graph) <= 3);
            }
        }
    }
}

TEST_CASE("double join rejects empty sides") {
    const MergedSubdivision core = merged_subdivision(make_cycle(3), H1Kind::Empty, H2Kind::Empty);
    CHECK_THROWS_AS(double_join(core, Graph{}, make_cycle(3)), SizeError);
    CHECK_THROWS_AS(double_join(core, make_cycle(3), Graph{}), SizeError);
}

TEST_CASE("raw double join splits an arbitrary core") {
    const Graph core = make_cycle(6);
    const BlockedGraph bg = double_join_raw(core, 2, make_complete(2), make_complete(3));
    CHECK_FALSE(bg.core.has_value());
    CHECK(bg.sizes.m == 2);
    CHECK(bg.sizes.n == 4);
    CHECK(bg.graph.vertex_count() == 11);
    CHECK_THROWS_AS(double_join_raw(core, 0, make_complete(2), make_complete(2)), SizeError);
    CHECK_THROWS_AS(double_join_raw(core, 6, make_complete(2), make_complete(2)), SizeError);
}
