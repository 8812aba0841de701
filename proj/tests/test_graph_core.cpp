#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "dspectra/graph.hpp"
#include "dspectra/numlin.hpp"

using namespace dspectra;

TEST_CASE("cycle generator") {
    const Graph c3 = make_cycle(3);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(c3 == make_complete(3));

    const Spectrum s4 = eigen_sym(make_cycle(4).adjacency());
    const double expected[4] = {2.0, 0.0, 0.0, -2.0};
    for (int i = 0; i < 4; ++i)
        CHECK(s4.values[i] == doctest::Approx(expected[i]).epsilon(1e-10));

    const Graph c5 = make_cycle(5);
    CHECK(regularity(c5) == 2);
    CHECK(is_triangle_free(c5));
    CHECK(is_connected(c5));

    CHECK_THROWS_AS(make_cycle(2), SizeError);
}

TEST_CASE("complete and empty generators") {
    CHECK(make_complete(1).edge_count() == 0);
    CHECK(make_complete(2).edge_count() == 1);
    CHECK(make_complete(4).edge_count() == 6);

    const Spectrum k4 = eigen_sym(make_complete(4).adjacency());
    CHECK(k4.values[0] == doctest::Approx(3.0).epsilon(1e-10));
    for (int i = 1; i < 4; ++i)
        CHECK(k4.values[i] == doctest::Approx(-1.0).epsilon(1e-10));

    CHECK(make_empty(3).edge_count() == 0);
    CHECK(complement(make_empty(4)) == make_complete(4));
    CHECK_THROWS_AS(make_complete(0), SizeError);
    CHECK_THROWS_AS(make_empty(0), SizeError);
}

TEST_CASE("complement behaviour") {
    CHECK(complement(make_complete(4)) == make_empty(4));

    // C5 is self-complementary up to isomorphism: same degree sequence and spectrum
    const Graph c5 = make_cycle(5);
    const Graph cc5 = complement(c5);
    CHECK(regularity(cc5) == 2);
    const Spectrum a = eigen_sym(c5.adjacency());
    const Spectrum b = eigen_sym(cc5.adjacency());
    CHECK(multiset_compare(a, b, 1e-9).equal);

    // complement of C4 is a perfect matching on 4 vertices
    const Graph cc4 = complement(make_cycle(4));
    CHECK(cc4.edge_count() == 2);
    CHECK(regularity(cc4) == 1);
    CHECK_FALSE(is_connected(cc4));

    for (const Graph& g : {make_cycle(6), make_complete(5), make_empty(3)})
        CHECK(complement(complement(g)) == g);
}

TEST_CASE("disjoint union concatenates blocks") {
    const Graph u = disjoint_union({make_cycle(3), make_cycle(4)});
    CHECK(u.vertex_count() == 7);
    CHECK(u.edge_count() == 7);
    CHECK(regularity(u) == 2);
    CHECK_FALSE(is_connected(u));

    CHECK(disjoint_union({make_complete(2)}) == make_complete(2));

    // spectrum of a union is the union of spectra
    const Spectrum s = eigen_sym(disjoint_union({make_cycle(3), make_cycle(3)}).adjacency());
    const std::vector<double> expected = {2.0, 2.0, -1.0, -1.0, -1.0, -1.0};
    for (int i = 0; i < 6; ++i)
        CHECK(s.values[i] == doctest::Approx(expected[i]).epsilon(1e-9));

    CHECK_THROWS_AS(disjoint_union({}), EmptyListError);
}

TEST_CASE("line graph construction") {
    const Graph lc4 = line_graph(make_cycle(4));
    CHECK(lc4.vertex_count() == 4);
    CHECK(regularity(lc4) == 2);
    CHECK(multiset_compare(eigen_sym(lc4.adjacency()), eigen_sym(make_cycle(4).adjacency()), 1e-9).equal);

    CHECK(line_graph(make_complete(3)) == make_complete(3));
    CHECK(line_graph(make_complete(2)).vertex_count() == 1);

    CHECK_THROWS_AS(line_graph(make_empty(3)), NoEdgesError);
}

TEST_CASE("line graph spectrum is the shifted base spectrum plus a -2 block") {
    for (const Graph& g : {make_cycle(5), make_complete(4), make_cycle(6), make_complete(5)}) {
        const int r = *regularity(g);
        const int n = g.vertex_count();
        const int m = g.edge_count();
        const Spectrum base = eigen_sym(g.adjacency());
        std::vector<double> expected;
        for (int i = 0; i < n; ++i)
            expected.push_back(base.values[i] + r - 2);
        for (int i = n; i < m; ++i)
            expected.push_back(-2.0);
        const Spectrum actual = eigen_sym(line_graph(g).adjacency());
        CHECK(multiset_compare(Spectrum::numeric(expected), actual, 1e-8).equal);
    }
}

TEST_CASE("incidence matrix") {
    const Matrix m3 = incidence(make_cycle(3));
    CHECK(m3.rows() == 3);
    CHECK(m3.cols() == 3);
    for (int i = 0; i < 3; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < 3; ++j)
            row_sum += m3(i, j);
        CHECK(row_sum == 2.0);
    }

    // M^T M = A + r I exactly, for regular g
    for (const Graph& g : {make_cycle(3), make_cycle(5), make_complete(4)}) {
        const Matrix m = incidence(g);
        const Matrix gram = m.transposed() * m;
        const SymmetricMatrix a = g.adjacency();
        const int r = *regularity(g);
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int j = 0; j < g.vertex_count(); ++j)
                CHECK(gram(i, j) == a(i, j) + (i == j ? r : 0));
    }

    const Matrix m2 = incidence(make_complete(2));
    CHECK(m2.rows() == 1);
    CHECK(m2.cols() == 2);
    CHECK(m2(0, 0) == 1.0);
    CHECK(m2(0, 1) == 1.0);

    CHECK_THROWS_AS(incidence(make_empty(2)), NoEdgesError);
}

TEST_CASE("structure checks") {
    const GraphChecks c5 = checks(make_cycle(5));
    CHECK(c5.is_connected);
    CHECK(c5.regularity == 2);
    CHECK(c5.is_triangle_free);

    const GraphChecks k4 = checks(make_complete(4));
    CHECK(k4.is_connected);
    CHECK(k4.regularity == 3);
    CHECK_FALSE(k4.is_triangle_free);

    const GraphChecks u = checks(disjoint_union({make_cycle(3), make_cycle(4)}));
    CHECK_FALSE(u.is_connected);
    CHECK(u.regularity == 2);

    const GraphChecks single = checks(make_empty(1));
    CHECK(single.is_connected);
    CHECK(single.regularity == 0);
    CHECK(single.is_triangle_free);

    // path on 3 vertices is irregular
    const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(checks(path).regularity.has_value());
}

TEST_CASE("edge list is canonical and validated") {
    const Graph g = Graph::from_edges(4, {{3, 1}, {0, 2}, {1, 0}});
    const std::vector<Edge> expected = {{0, 1}, {0, 2}, {1, 3}};
    CHECK(g.edges() == expected);
    CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), SizeError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), SizeError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), SizeError);
}

TEST_CASE("adjacency matrices are symmetric with zero diagonal") {
    for (const Graph& g : {make_cycle(6), make_complete(5), complement(make_cycle(7))}) {
        const SymmetricMatrix a = g.adjacency();
        for (int i = 0; i < a.order(); ++i) {
            CHECK(a(i, i) == 0.0);
            for (int j = 0; j < a.order(); ++j)
                CHECK(a(i, j) == a(j, i));
        }
    }
}
