#include "dspectra/theory.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace dspectra {

namespace {

// Adjacency eigenvalues of integer graphs never sit this close to the cut
// without being exactly on it, so noise from the eigensolver is clamped out
// before the square root can amplify it.
double sqrt_clamped(double x) {
    return x <= 1e-10 ? 0.0 : std::sqrt(x);
}

struct BaseData {
    int n = 0;
    int m = 0;
    int r = 0;
    std::vector<double> lambda; // adjacency eigenvalues, descending
};

BaseData analyze_base(const Graph& g) {
    if (g.vertex_count() < 1)
        throw PreconditionError("base graph must be non-empty");
    if (!is_connected(g))
        throw PreconditionError("base graph must be connected");
    const auto reg = regularity(g);
    if (!reg)
        throw PreconditionError("base graph must be regular");
    if (*reg < 2)
        throw PreconditionError("base graph degree must be at least 2");
    BaseData bd;
    bd.n = g.vertex_count();
    bd.m = g.edge_count();
    bd.r = *reg;
    bd.lambda = eigen_sym(g.adjacency()).values;
    return bd;
}

// Eigenvalues of the block 2(J-I)-A(h) for a regular graph h on its own
// vertices: Perron value first, then -(2+eigenvalue) in descending eigenvalue
// order.
std::vector<double> join_block_eigs(const Graph& h, const char* side) {
    const auto reg = regularity(h);
    if (!reg)
        throw PreconditionError(std::string(side) + " joined graph must be regular");
    const int size = h.vertex_count();
    std::vector<double> out;
    out.reserve(size);
    out.push_back(2.0 * (size - 1) - *reg);
    if (size > 1) {
        const std::vector<double> mu = eigen_sym(h.adjacency()).values;
        for (int i = 1; i < size; ++i)
            out.push_back(-(2.0 + mu[i]));
    }
    return out;
}

// Eigenvalues of the edge-side overlay in the shared order: row sum first,
// the values paired with lambda[1..n-1] next, then the m-n leftovers from the
// line graph's kernel directions.
struct OverlayEigs {
    double row_sum = 0.0;
    std::vector<double> paired; // n-1 values
    double extra = 0.0;         // value repeated m-n times
};

OverlayEigs h1_overlay_eigs(const BaseData& bd, H1Kind kind) {
    OverlayEigs oe;
    oe.paired.assign(bd.n - 1, 0.0);
    switch (kind) {
    case H1Kind::Empty:
        break;
    case H1Kind::LineOfG:
        oe.row_sum = 2.0 * bd.r - 2.0;
        for (int i = 1; i < bd.n; ++i)
            oe.paired[i - 1] = bd.lambda[i] + bd.r - 2.0;
        oe.extra = -2.0;
        break;
    case H1Kind::ComplementLineOfG:
        oe.row_sum = bd.m - 2.0 * bd.r + 1.0;
        for (int i = 1; i < bd.n; ++i)
            oe.paired[i - 1] = 1.0 - bd.r - bd.lambda[i];
        oe.extra = 1.0;
        break;
    case H1Kind::Complete:
        throw PreconditionError("edge-side overlay kind not covered by this template");
    }
    return oe;
}

// Vertex-side overlay eigenvalues in the shared order. Every kind shares the
// base graph's eigenvectors, so the pairing is a pointwise function of lambda.
OverlayEigs h2_overlay_eigs(const BaseData& bd, H2Kind kind) {
    OverlayEigs oe;
    oe.paired.assign(bd.n - 1, 0.0);
    switch (kind) {
    case H2Kind::Empty:
        break;
    case H2Kind::Complete:
        oe.row_sum = bd.n - 1.0;
        for (auto& v : oe.paired)
            v = -1.0;
        break;
    case H2Kind::SameAsG:
        oe.row_sum = bd.r;
        for (int i = 1; i < bd.n; ++i)
            oe.paired[i - 1] = bd.lambda[i];
        break;
    case H2Kind::ComplementOfG:
        oe.row_sum = bd.n - 1.0 - bd.r;
        for (int i = 1; i < bd.n; ++i)
            oe.paired[i - 1] = -1.0 - bd.lambda[i];
        break;
    }
    return oe;
}

AlignedSpectralData base_skeleton(const BaseData& bd, const Graph& g1, const Graph& g2) {
    AlignedSpectralData data;
    data.m = bd.m;
    data.n = bd.n;
    data.p = g1.vertex_count();
    data.q = g2.vertex_count();
    if (data.p < 1 || data.q < 1)
        throw PreconditionError("joined graphs must be non-empty");
    data.c = join_block_eigs(g1, "first");
    data.d = join_block_eigs(g2, "second");
    return data;
}

// a-vector for an edge block of the form 2(J-I)-A(overlay).
std::vector<double> edge_block_from_overlay(const BaseData& bd, const OverlayEigs& oe) {
    std::vector<double> a;
    a.reserve(bd.m);
    a.push_back(2.0 * (bd.m - 1) - oe.row_sum);
    for (double eta : oe.paired)
        a.push_back(-2.0 - eta);
    for (int i = bd.n; i < bd.m; ++i)
        a.push_back(-2.0 - oe.extra);
    return a;
}

void fill_sigma(AlignedSpectralData& data, const BaseData& bd, double coupling_scale) {
    data.sigma.assign(bd.n, 0.0);
    data.sigma[0] = data.t * std::sqrt(static_cast<double>(bd.m) / bd.n);
    for (int i = 1; i < bd.n; ++i)
        data.sigma[i] = coupling_scale * sqrt_clamped(bd.lambda[i] + bd.r);
}

} // namespace

Matrix quotient_matrix(const AlignedSpectralData& data) {
    Matrix qm(4, 4);
    const double a1 = data.a.at(0), b1 = data.b.at(0), c1 = data.c.at(0), d1 = data.d.at(0);
    qm(0, 0) = a1;
    qm(0, 1) = data.t;
    qm(0, 2) = data.s * data.p;
    qm(0, 3) = data.k * data.q;
    qm(1, 0) = data.t * data.m / data.n;
    qm(1, 1) = b1;
    qm(1, 2) = data.k * data.p;
    qm(1, 3) = data.s * data.q;
    qm(2, 0) = data.s * data.m;
    qm(2, 1) = data.k * data.n;
    qm(2, 2) = c1;
    qm(2, 3) = data.l * data.q;
    qm(3, 0) = data.k * data.m;
    qm(3, 1) = data.s * data.n;
    qm(3, 2) = data.l * data.p;
    qm(3, 3) = d1;
    return qm;
}

SymmetricMatrix symmetrized_quotient(const AlignedSpectralData& data) {
    const double m = data.m, n = data.n, p = data.p, q = data.q;
    SymmetricMatrix sq(4);
    sq.set(0, 0, data.a.at(0));
    sq.set(1, 1, data.b.at(0));
    sq.set(2, 2, data.c.at(0));
    sq.set(3, 3, data.d.at(0));
    sq.set(0, 1, data.t * std::sqrt(m / n));
    sq.set(0, 2, data.s * std::sqrt(m * p));
    sq.set(0, 3, data.k * std::sqrt(m * q));
    sq.set(1, 2, data.k * std::sqrt(n * p));
    sq.set(1, 3, data.s * std::sqrt(n * q));
    sq.set(2, 3, data.l * std::sqrt(p * q));
    return sq;
}

Quartic f_coefficients(const AlignedSpectralData& data) {
    const double a = data.a.at(0), b = data.b.at(0), c = data.c.at(0), d = data.d.at(0);
    const double s = data.s, k = data.k, l = data.l, t = data.t;
    const double m = data.m, n = data.n, p = data.p, q = data.q;
    const double m1sq = t * t * m / n; // square of the leading coupling weight

    Quartic f;
    f.c3 = -(a + b + c + d);
    f.c2 = (a + b) * (c + d) + a * b + c * d - k * k * (m * q + n * p) - s * s * (m * p + n * q) -
           l * l * p * q - m1sq;
    f.c1 = -c * d * (a + b) - a * b * (c + d) + s * s * (p * m * (b + d) + n * q * (a + c)) +
           k * k * (n * p * (a + d) + q * m * (b + c)) + l * l * p * q * (a + b) -
           2.0 * k * s * (l * p * q * (m + n) + m * t * (p + q)) + m1sq * (c + d);
    f.c0 = n * p * q * m * (s * s * s * s + k * k * k * k) -
           s * s * (n * a * c * q + b * d * p * m + 2.0 * l * p * q * m * t) -
           k * k * (n * a * d * p + 2.0 * l * p * q * m * t + b * c * q * m) -
           2.0 * n * k * k * p * q * m * s * s - l * l * (a * b * p * q - m1sq * p * q) +
           2.0 * m * k * s * t * (c * q + d * p) + 2.0 * k * p * q * s * l * (n * a + m * b) -
           c * d * m1sq + a * b * c * d;
    return f;
}

namespace {

void check_alignment(const AlignedSpectralData& data) {
    if (data.m < 1 || data.n < 1 || data.p < 1 || data.q < 1)
        throw AlignmentError("all four blocks must be non-empty");
    if (data.m < data.n)
        throw AlignmentError("first block must be at least as large as the second");
    if (data.a.size() != static_cast<std::size_t>(data.m) ||
        data.b.size() != static_cast<std::size_t>(data.n) ||
        data.c.size() != static_cast<std::size_t>(data.p) ||
        data.d.size() != static_cast<std::size_t>(data.q) ||
        data.sigma.size() != static_cast<std::size_t>(data.n))
        throw AlignmentError("eigenvalue vector lengths must match the block sizes");
    const double expected = data.t * std::sqrt(static_cast<double>(data.m) / data.n);
    if (expected == 0.0)
        throw AlignmentError("coupling row sum must be non-zero");
    if (std::abs(data.sigma[0] - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
        throw AlignmentError("leading singular value disagrees with the coupling row sum");
}

Spectrum assemble_spectrum(const AlignedSpectralData& data, std::optional<double> midpoint_override) {
    check_alignment(data);

    std::vector<double> values;
    std::vector<std::string> labels;
    values.reserve(static_cast<std::size_t>(data.m + data.n + data.p + data.q));
    labels.reserve(values.capacity());

    for (int i = 1; i < data.p; ++i) {
        values.push_back(data.c[i]);
        labels.emplace_back("c");
    }
    for (int i = 1; i < data.q; ++i) {
        values.push_back(data.d[i]);
        labels.emplace_back("d");
    }
    for (int i = data.n; i < data.m; ++i) {
        values.push_back(data.a[i]);
        labels.emplace_back("a_excess");
    }
    for (int i = 1; i < data.n; ++i) {
        const double mid = midpoint_override ? *midpoint_override : 0.5 * (data.a[i] + data.b[i]);
        const double half_gap =
            0.5 * std::sqrt((data.a[i] - data.b[i]) * (data.a[i] - data.b[i]) +
                            4.0 * data.sigma[i] * data.sigma[i]);
        values.push_back(mid + half_gap);
        labels.emplace_back("pair+");
        values.push_back(mid - half_gap);
        labels.emplace_back("pair-");
    }
    const EigenDecomposition quot = jacobi_eigensystem(symmetrized_quotient(data));
    for (double v : quot.values) {
        values.push_back(v);
        labels.emplace_back("quotient");
    }
    return Spectrum::closed_form(std::move(values), std::move(labels));
}

} // namespace

Spectrum spectrum_of_P(const AlignedSpectralData& data) {
    return assemble_spectrum(data, std::nullopt);
}

TemplateId classify_template(const BlockedGraph& bg) {
    if (!bg.core)
        throw TemplateMismatchError("raw block constructions have no closed-form template");
    const H1Kind h1 = bg.core->h1;
    const H2Kind h2 = bg.core->h2;
    if (h1 == H1Kind::Complete)
        return TemplateId::CompleteEdges;
    if (h2 == H2Kind::Complete)
        return TemplateId::CompleteVertices;
    if (h2 == H2Kind::ComplementOfG)
        return TemplateId::ComplementVertices;
    if (h1 == H1Kind::Empty && h2 == H2Kind::Empty)
        return TemplateId::PlainSubdivision;
    throw TemplateMismatchError(std::string("no closed form covers overlays h1=") + to_string(h1) +
                                ", h2=" + to_string(h2));
}

AlignedSpectralData align_plain_subdivision(const Graph& g, const Graph& g1, const Graph& g2) {
    const BaseData bd = analyze_base(g);
    AlignedSpectralData data = base_skeleton(bd, g1, g2);
    data.a = edge_block_from_overlay(bd, h1_overlay_eigs(bd, H1Kind::Empty));
    data.b.assign(bd.n, -2.0);
    data.b[0] = 2.0 * (bd.n - 1);
    data.t = 3.0 * bd.n - 4.0;
    fill_sigma(data, bd, 2.0);
    return data;
}

AlignedSpectralData align_complement_vertices(const Graph& g, H1Kind h1, const Graph& g1,
                                              const Graph& g2) {
    const BaseData bd = analyze_base(g);
    if (!is_triangle_free(g))
        throw PreconditionError("base graph must be triangle-free for the vertex-complement template");
    AlignedSpectralData data = base_skeleton(bd, g1, g2);
    data.a = edge_block_from_overlay(bd, h1_overlay_eigs(bd, h1));
    data.b.reserve(bd.n);
    data.b.push_back(bd.n - 1.0 + bd.r);
    for (int i = 1; i < bd.n; ++i)
        data.b.push_back(bd.lambda[i] - 1.0);
    data.t = 2.0 * bd.n - 2.0;
    fill_sigma(data, bd, 1.0);
    return data;
}

AlignedSpectralData align_complete_edges(const Graph& g, H2Kind h2, const Graph& g1,
                                         const Graph& g2) {
    const BaseData bd = analyze_base(g);
    AlignedSpectralData data = base_skeleton(bd, g1, g2);
    data.a.assign(bd.m, -1.0);
    data.a[0] = bd.m - 1.0;
    const OverlayEigs oe = h2_overlay_eigs(bd, h2);
    data.b.reserve(bd.n);
    data.b.push_back(2.0 * (bd.n - 1) - oe.row_sum);
    for (double theta : oe.paired)
        data.b.push_back(-2.0 - theta);
    data.t = 2.0 * bd.n - 2.0;
    fill_sigma(data, bd, 1.0);
    return data;
}

AlignedSpectralData align_complete_vertices(const Graph& g, H1Kind h1, const Graph& g1,
                                            const Graph& g2) {
    const BaseData bd = analyze_base(g);
    AlignedSpectralData data = base_skeleton(bd, g1, g2);
    data.a = edge_block_from_overlay(bd, h1_overlay_eigs(bd, h1));
    data.b.assign(bd.n, -1.0);
    data.b[0] = bd.n - 1.0;
    data.t = 2.0 * bd.n - 2.0;
    fill_sigma(data, bd, 1.0);
    return data;
}

AlignedSpectralData aligned_data(const BlockedGraph& bg) {
    const TemplateId id = classify_template(bg);
    const MergedSubdivision& core = *bg.core;
    switch (id) {
    case TemplateId::PlainSubdivision:
        return align_plain_subdivision(core.base, bg.g1, bg.g2);
    case TemplateId::ComplementVertices:
        return align_complement_vertices(core.base, core.h1, bg.g1, bg.g2);
    case TemplateId::CompleteEdges:
        return align_complete_edges(core.base, core.h2, bg.g1, bg.g2);
    case TemplateId::CompleteVertices:
        return align_complete_vertices(core.base, core.h1, bg.g1, bg.g2);
    }
    throw TemplateMismatchError("unknown template");
}

Spectrum closed_form_distance_spectrum(const BlockedGraph& bg) {
    return spectrum_of_P(aligned_data(bg));
}

Spectrum complement_vertices_constant_midpoint(const BlockedGraph& bg) {
    if (classify_template(bg) != TemplateId::ComplementVertices)
        throw TemplateMismatchError("constant-midpoint variant only applies to the vertex-complement template");
    return assemble_spectrum(aligned_data(bg), -1.0);
}

} // namespace dspectra
