#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dspectra/graph.hpp"
#include "dspectra/numlin.hpp"
#include "dspectra/transforms.hpp"

namespace dspectra {

// All-pairs shortest path distances of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int order, std::vector<int> entries);

    int order() const { return n_; }
    int operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

    int max_entry() const;
    SymmetricMatrix to_symmetric() const;
    std::string to_csv() const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

// BFS from every vertex; DisconnectedError if any pair is unreachable.
DistanceMatrix distance_matrix(const Graph& g);

int diameter(const Graph& g);

// Numeric distance spectrum (eigenvalues of the distance matrix, descending).
Spectrum distance_spectrum_numeric(const Graph& g, double tol = 1e-12);

double distance_energy(const Graph& g);

// The four closed-form distance templates, named for the structure that pins
// them down: the plain subdivision core, a complement overlay on the vertex
// side, or a complete overlay on the edge resp. vertex side.
enum class TemplateId { PlainSubdivision, ComplementVertices, CompleteEdges, CompleteVertices };

const char* to_string(TemplateId t);

// Structured description of the predicted distance matrix of a double join,
// block by block. Each entry of block (r,c) is
//     j_coeff - i_coeff*[i==j] - ref_coeff*ref(i,j)
// where ref reads adjacency (or incidence) out of the blocked graph itself.
struct TemplateSpec {
    enum class Ref { None, H1Adjacency, H2Adjacency, Incidence, G1Adjacency, G2Adjacency };

    struct BlockPattern {
        int j_coeff = 0;
        int i_coeff = 0;
        Ref ref = Ref::None;
        int ref_coeff = 0;
    };

    TemplateId id = TemplateId::PlainSubdivision;
    std::array<std::array<BlockPattern, 4>, 4> blocks{};

    static TemplateSpec for_template(TemplateId id);

    // Predicted distance between global vertex indices i and j.
    int expected(const BlockedGraph& bg, int i, int j) const;
};

struct TemplateViolation {
    int i = 0;
    int j = 0;
    int expected = 0;
    int actual = 0;
};

struct TemplateValidation {
    bool ok = true;
    std::optional<TemplateViolation> first_violation;
    int violation_count = 0;
};

// Compare the template's predicted distances against BFS on the actual graph.
TemplateValidation validate_template(const BlockedGraph& bg, const TemplateSpec& spec);

} // namespace dspectra
