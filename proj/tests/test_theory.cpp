#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <vector>

#include "dspectra/distance.hpp"
#include "dspectra/theory.hpp"
#include "dspectra/transforms.hpp"

using namespace dspectra;

namespace {

BlockedGraph make_instance(const Graph& base, H1Kind h1, H2Kind h2, const Graph& g1,
                           const Graph& g2) {
    return double_join(merged_subdivision(base, h1, h2), g1, g2);
}

// Faddeev-LeVerrier characteristic polynomial of a 4x4 matrix: an independent
// route to the quartic coefficients.
std::array<double, 4> char_poly_fl(const Matrix& m) {
    Matrix b = m;
    std::array<double, 4> c{};
    Matrix identity = Matrix::identity(4);
    for (int k = 1; k <= 4; ++k) {
        if (k > 1) {
            Matrix shifted(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    shifted(i, j) = b(i, j) + (i == j ? c[k - 2] : 0.0);
            b = m * shifted;
        }
        double tr = 0.0;
        for (int i = 0; i < 4; ++i)
            tr += b(i, i);
        c[k - 1] = -tr / k;
    }
    return c; // x^4 + c[0] x^3 + c[1] x^2 + c[2] x + c[3]
}

} // namespace

TEST_CASE("quotient matrix of the plain-subdivision instance on a 4-cycle") {
    const AlignedSpectralData data =
        align_plain_subdivision(make_cycle(4), make_cycle(3), make_cycle(3));
    const Matrix qm = quotient_matrix(data);
    const double expected[4][4] = {{6, 8, 3, 6}, {8, 6, 6, 3}, {4, 8, 2, 9}, {8, 4, 9, 2}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(qm(i, j) == doctest::Approx(expected[i][j]).epsilon(1e-12));
}

TEST_CASE("quartic roots, symmetrized quotient, and the printed coefficients agree") {
    const AlignedSpectralData data =
        align_plain_subdivision(make_cycle(4), make_cycle(3), make_cycle(3));
    const Quartic f = f_coefficients(data);
    const auto roots = quartic_roots(f);

    // frozen from an independent dense eigensolver run on the quotient matrix
    const double frozen[4] = {23.0, 2.0, -0.22799812734123495, -8.772001872658764};
    for (int i = 0; i < 4; ++i)
        CHECK(roots[i] == doctest::Approx(frozen[i]).epsilon(1e-8));

    const Spectrum sym = eigen_sym(symmetrized_quotient(data));
    for (int i = 0; i < 4; ++i) {
        CHECK(sym.values[i] == doctest::Approx(roots[i]).epsilon(1e-8));
        CHECK(std::abs(f.evaluate(sym.values[i])) <= 1e-6 * f.coefficient_scale());
    }
}

TEST_CASE("printed quartic equals the Faddeev-LeVerrier characteristic polynomial") {
    const std::vector<AlignedSpectralData> datas = {
        align_plain_subdivision(make_cycle(4), make_cycle(3), make_cycle(3)),
        align_complement_vertices(make_cycle(6), H1Kind::LineOfG, make_cycle(3), make_complete(4)),
        align_complete_edges(make_cycle(5), H2Kind::SameAsG, make_complete(4), make_cycle(3)),
    };
    for (const AlignedSpectralData& data : datas) {
        const Quartic f = f_coefficients(data);
        const auto fl = char_poly_fl(quotient_matrix(data));
        const double scale = f.coefficient_scale();
        CHECK(std::abs(f.c3 - fl[0]) <= 1e-9 * scale);
        CHECK(std::abs(f.c2 - fl[1]) <= 1e-9 * scale);
        CHECK(std::abs(f.c1 - fl[2]) <= 1e-9 * scale);
        CHECK(std::abs(f.c0 - fl[3]) <= 1e-9 * scale);
    }
}

TEST_CASE("decoupled blocks factor the quartic completely") {
    AlignedSpectralData data;
    data.m = 3;
    data.n = 2;
    data.p = 2;
    data.q = 2;
    data.s = data.k = data.l = 0.0;
    data.t = 0.0;
    data.a = {2.0, -1.0, -1.0};
    data.b = {3.0, -1.5};
    data.c = {4.0, -2.0};
    data.d = {5.0, -2.5};
    data.sigma = {0.0, 0.0};
    const Quartic f = f_coefficients(data);
    const double a = 2.0, b = 3.0, c = 4.0, d = 5.0;
    CHECK(f.c3 == doctest::Approx(-(a + b + c + d)).epsilon(1e-12));
    CHECK(f.c2 == doctest::Approx(a * b + a * c + a * d + b * c + b * d + c * d).epsilon(1e-12));
    CHECK(f.c1 == doctest::Approx(-(a * b * c + a * b * d + a * c * d + b * c * d)).epsilon(1e-12));
    CHECK(f.c0 == doctest::Approx(a * b * c * d).epsilon(1e-12));
}

TEST_CASE("full closed-form spectrum of the 4-cycle plain instance") {
    const BlockedGraph bg =
        make_instance(make_cycle(4), H1Kind::Empty, H2Kind::Empty, make_cycle(3), make_cycle(3));
    const Spectrum closed = closed_form_distance_spectrum(bg);
    REQUIRE(closed.size() == 14);

    const double root8 = std::sqrt(8.0);
    const Spectrum frozen = Spectrum::numeric({23.0, 2.0, -2.0 + root8, -2.0 + root8,
                                               -0.22799812734123495, -1.0, -1.0, -1.0, -1.0, -2.0,
                                               -2.0, -2.0 - root8, -2.0 - root8,
                                               -8.772001872658764});
    CHECK(multiset_compare(closed, frozen, 1e-8).equal);
    CHECK(std::abs(closed.sum()) <= 1e-8);
    CHECK(closed.provenance == Provenance::ClosedForm);
}

TEST_CASE("closed form matches the BFS oracle across all four templates") {
    const std::vector<BlockedGraph> instances = {
        make_instance(make_cycle(4), H1Kind::Empty, H2Kind::Empty, make_cycle(3), make_cycle(3)),
        make_instance(make_complete(5), H1Kind::Empty, H2Kind::Empty, make_cycle(4), make_complete(4)),
        make_instance(make_cycle(5), H1Kind::Empty, H2Kind::ComplementOfG, make_cycle(3), make_cycle(3)),
        make_instance(make_cycle(6), H1Kind::ComplementLineOfG, H2Kind::ComplementOfG, make_cycle(3),
                      make_complete(4)),
        make_instance(make_cycle(4), H1Kind::Complete, H2Kind::SameAsG, make_cycle(3), make_complete(4)),
        make_instance(make_complete(4), H1Kind::Complete, H2Kind::Complete, make_cycle(3), make_complete(4)),
        make_instance(make_cycle(6), H1Kind::LineOfG, H2Kind::Complete, make_cycle(3), make_cycle(3)),
    };
    for (const BlockedGraph& bg : instances) {
        const Spectrum closed = closed_form_distance_spectrum(bg);
        const Spectrum oracle = distance_spectrum_numeric(bg.graph);
        const MultisetComparison cmp = multiset_compare(closed, oracle, 1e-8);
        CHECK(cmp.equal);
        CHECK(static_cast<int>(closed.size()) == bg.sizes.total());
        CHECK(std::abs(closed.sum()) <= 1e-8);
    }
}

TEST_CASE("excess directions populate their clause with the right multiplicity") {
    const BlockedGraph plain =
        make_instance(make_complete(5), H1Kind::Empty, H2Kind::Empty, make_cycle(3), make_cycle(3));
    const Spectrum s1 = closed_form_distance_spectrum(plain);
    int excess = 0;
    for (std::size_t i = 0; i < s1.size(); ++i) {
        if (s1.labels[i] == "a_excess") {
            ++excess;
            CHECK(s1.values[i] == doctest::Approx(-2.0).epsilon(1e-10));
        }
    }
    CHECK(excess == 5); // K5 has 10 edges over 5 vertices

    const BlockedGraph complete_edges =
        make_instance(make_complete(4), H1Kind::Complete, H2Kind::Empty, make_cycle(3), make_cycle(3));
    const Spectrum s2 = closed_form_distance_spectrum(complete_edges);
    excess = 0;
    for (std::size_t i = 0; i < s2.size(); ++i) {
        if (s2.labels[i] == "a_excess") {
            ++excess;
            CHECK(s2.values[i] == doctest::Approx(-1.0).epsilon(1e-10));
        }
    }
    CHECK(excess == 2);
}

TEST_CASE("complete-vertices quotient has the expected second row") {
    const AlignedSpectralData data =
        align_complete_vertices(make_cycle(6), H1Kind::LineOfG, make_cycle(3), make_cycle(3));
    const Matrix qm = quotient_matrix(data);
    // (2m - r, n - 1, 2p, q) for a 2-regular base on 6 vertices
    CHECK(qm(1, 0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(qm(1, 1) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(qm(1, 2) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(qm(1, 3) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("pair-clause radicand matches its expanded form for line overlays") {
    const Graph g = make_cycle(6);
    const int r = 2;
    const AlignedSpectralData data =
        align_complement_vertices(g, H1Kind::LineOfG, make_cycle(3), make_cycle(3));
    const std::vector<double> lambda = eigen_sym(g.adjacency()).values;
    for (int i = 1; i < data.n; ++i) {
        const double lam = lambda[i];
        const double eta = lam + r - 2; // paired line-graph eigenvalue
        const double radicand = (data.a[i] - data.b[i]) * (data.a[i] - data.b[i]) +
                                4.0 * data.sigma[i] * data.sigma[i];
        const double expanded = (lam + eta) * (lam + eta) + 2.0 * eta + 6.0 * lam + 4.0 * r + 1.0;
        CHECK(radicand == doctest::Approx(expanded).epsilon(1e-9));
        // and the midpoint is the per-index average, not a constant
        CHECK(0.5 * (data.a[i] + data.b[i]) == doctest::Approx(0.5 * (lam - eta - 3.0)).epsilon(1e-9));
    }
}

TEST_CASE("the oracle supports the per-index pair midpoint, not the constant one") {
    const BlockedGraph bg =
        make_instance(make_cycle(5), H1Kind::Empty, H2Kind::ComplementOfG, make_cycle(3), make_cycle(3));
    const Spectrum oracle = distance_spectrum_numeric(bg.graph);
    CHECK(multiset_compare(closed_form_distance_spectrum(bg), oracle, 1e-8).equal);
    CHECK_FALSE(multiset_compare(complement_vertices_constant_midpoint(bg), oracle, 1e-8).equal);

    const BlockedGraph plain =
        make_instance(make_cycle(4), H1Kind::Empty, H2Kind::Empty, make_cycle(3), make_cycle(3));
    CHECK_THROWS_AS(complement_vertices_constant_midpoint(plain), TemplateMismatchError);
}

TEST_CASE("template classification dispatch") {
    const Graph g1 = make_cycle(3);
    const Graph g2 = make_cycle(3);
    CHECK(classify_template(make_instance(make_cycle(4), H1Kind::Empty, H2Kind::Empty, g1, g2)) ==
          TemplateId::PlainSubdivision);
    CHECK(classify_template(make_instance(make_cycle(4), H1Kind::Complete, H2Kind::Empty, g1, g2)) ==
          TemplateId::CompleteEdges);
    CHECK(classify_template(make_instance(make_cycle(4), H1Kind::Complete, H2Kind::Complete, g1, g2)) ==
          TemplateId::CompleteEdges);
    CHECK(classify_template(make_instance(make_cycle(4), H1Kind::LineOfG, H2Kind::Complete, g1, g2)) ==
          TemplateId::CompleteVertices);
    CHECK(classify_template(make_instance(make_cycle(4), H1Kind::LineOfG, H2Kind::ComplementOfG, g1, g2)) ==
          TemplateId::ComplementVertices);

    CHECK_THROWS_AS(classify_template(make_instance(make_cycle(4), H1Kind::LineOfG, H2Kind::Empty, g1, g2)),
                    TemplateMismatchError);
    CHECK_THROWS_AS(classify_template(make_instance(make_cycle(4), H1Kind::Empty, H2Kind::SameAsG, g1, g2)),
                    TemplateMismatchError);
    CHECK_THROWS_AS(classify_template(double_join_raw(make_cycle(6), 3, g1, g2)),
                    TemplateMismatchError);
}

TEST_CASE("alignment preconditions fail loudly") {
    const Graph g1 = make_cycle(3);
    const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});

    // triangles in the base break the vertex-complement template
    CHECK_THROWS_AS(align_complement_vertices(make_complete(4), H1Kind::Empty, g1, g1),
                    PreconditionError);
    // irregular base
    CHECK_THROWS_AS(align_plain_subdivision(path, g1, g1), PreconditionError);
    // degree below 2
    CHECK_THROWS_AS(align_plain_subdivision(make_complete(2), g1, g1), PreconditionError);
    // disconnected base
    CHECK_THROWS_AS(align_plain_subdivision(disjoint_union({g1, g1}), g1, g1), PreconditionError);
    // irregular joined side
    CHECK_THROWS_AS(align_plain_subdivision(make_cycle(4), path, g1), PreconditionError);
    // complete overlay is not admissible on the edge side of these templates
    CHECK_THROWS_AS(align_complete_vertices(make_cycle(4), H1Kind::Complete, g1, g1),
                    PreconditionError);
}

TEST_CASE("inconsistent aligned data is rejected") {
    AlignedSpectralData data = align_plain_subdivision(make_cycle(4), make_cycle(3), make_cycle(3));
    AlignedSpectralData tampered = data;
    tampered.sigma[0] += 0.5;
    CHECK_THROWS_AS(spectrum_of_P(tampered), AlignmentError);

    tampered = data;
    tampered.t = 0.0;
    tampered.sigma[0] = 0.0;
    CHECK_THROWS_AS(spectrum_of_P(tampered), AlignmentError);

    tampered = data;
    tampered.b.pop_back();
    CHECK_THROWS_AS(spectrum_of_P(tampered), AlignmentError);
}

TEST_CASE("zero coupling on a shared direction degenerates the pair clause") {
    AlignedSpectralData data;
    data.m = 2;
    data.n = 2;
    data.p = 1;
    data.q = 1;
    data.t = 2.0;
    data.a = {4.0, 1.0};
    data.b = {3.0, 1.0};
    data.c = {5.0};
    data.d = {6.0};
    data.sigma = {2.0, 0.0};
    const Spectrum s = spectrum_of_P(data);
    REQUIRE(s.size() == 6);
    int ones = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.labels[i] == "pair+" || s.labels[i] == "pair-") {
            CHECK(s.values[i] == doctest::Approx(1.0).epsilon(1e-12));
            ++ones;
        }
    CHECK(ones == 2);
}
