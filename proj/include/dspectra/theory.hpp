#pragma once

#include <vector>

#include "dspectra/distance.hpp"
#include "dspectra/graph.hpp"
#include "dspectra/numlin.hpp"
#include "dspectra/transforms.hpp"

namespace dspectra {

// Eigendata of a 4x4-partitioned symmetric matrix whose off-diagonal coupling
// blocks are constant except for the edge/vertex coupling block, which shares
// its singular directions with the eigenbases of the two diagonal blocks it
// connects. All closed-form distance spectra reduce to this shape.
//
//   a: eigenvalues of the first diagonal block (size m, a[0] = Perron value)
//   b: eigenvalues of the second block (size n <= m), b[i] paired with a[i]
//   c, d: eigenvalues of the third/fourth blocks (sizes p, q)
//   sigma: singular values of the coupling block in the shared order;
//          sigma[0] = t*sqrt(m/n) where t is the coupling row sum
//   s, k, l: the constant coupling coefficients to/between the joined blocks
struct AlignedSpectralData {
    int m = 0;
    int n = 0;
    int p = 0;
    int q = 0;
    double s = 1.0;
    double k = 2.0;
    double l = 3.0;
    double t = 0.0;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c;
    std::vector<double> d;
    std::vector<double> sigma;
};

// Full spectrum of the partitioned matrix: inherited c/d values, the excess
// a values, the coupled two-by-two pairs, and the four quotient eigenvalues.
// AlignmentError when the data is internally inconsistent.
Spectrum spectrum_of_P(const AlignedSpectralData& data);

// The 4x4 quotient of the partition (row sums of each block).
Matrix quotient_matrix(const AlignedSpectralData& data);

// Similarity transform by diag(sqrt m, sqrt n, sqrt p, sqrt q) makes the
// quotient symmetric, so its eigenvalues are safely computable by rotations.
SymmetricMatrix symmetrized_quotient(const AlignedSpectralData& data);

// Characteristic quartic of the quotient matrix, in its expanded closed form.
Quartic f_coefficients(const AlignedSpectralData& data);

// Which closed-form template covers this construction. TemplateMismatchError
// for raw block graphs and for overlay combinations without a closed form.
TemplateId classify_template(const BlockedGraph& bg);

// Template-specific alignments. Each checks its own preconditions (base
// connected and regular of degree >= 2, joined graphs regular, overlay kind
// admissible, triangle-freeness where the vertex-side complement needs it)
// and throws PreconditionError naming the failed check.
AlignedSpectralData align_plain_subdivision(const Graph& g, const Graph& g1, const Graph& g2);
AlignedSpectralData align_complement_vertices(const Graph& g, H1Kind h1, const Graph& g1, const Graph& g2);
AlignedSpectralData align_complete_edges(const Graph& g, H2Kind h2, const Graph& g1, const Graph& g2);
AlignedSpectralData align_complete_vertices(const Graph& g, H1Kind h1, const Graph& g1, const Graph& g2);

// classify + align in one step.
AlignedSpectralData aligned_data(const BlockedGraph& bg);

// The closed-form distance spectrum of a double join built from a merged
// subdivision, with per-value clause labels.
Spectrum closed_form_distance_spectrum(const BlockedGraph& bg);

// Variant of the vertex-complement template with the coupled-pair midpoints
// forced to the constant -1 instead of (a_i+b_i)/2. The two readings
// circulate; verification reports which one the BFS oracle supports.
Spectrum complement_vertices_constant_midpoint(const BlockedGraph& bg);

} // namespace dspectra
