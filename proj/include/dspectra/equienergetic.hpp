#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dspectra/distance.hpp"
#include "dspectra/graph.hpp"
#include "dspectra/theory.hpp"
#include "dspectra/transforms.hpp"

namespace dspectra {

using Partition = std::vector<int>;

// All partitions of n into parts >= 3, parts non-increasing, partitions in
// the order that puts larger leading parts first. SizeError for n < 3.
std::vector<Partition> partitions_ge3(int n);

// One disjoint union of cycles per partition of n, in partition order. These
// are exactly the connected-component shapes a 2-regular graph on n vertices
// can have.
std::vector<Graph> cycle_family(int n);

// The four catalogued ways of producing same-order, same-energy double joins
// by swapping one joined side through all cycle unions of a fixed size.
enum class FamilyCase { I, II, III, IV };
enum class VarySide { G1Side, G2Side };

const char* to_string(FamilyCase fc);
const char* to_string(VarySide v);

struct FamilySpec {
    FamilyCase family_case = FamilyCase::I;
    Graph base;
    // Free overlay slot: h1 for cases II and IV, h2 for case III. Case I has
    // no free slot. The other slot is fixed by the case and must stay at its
    // default.
    H1Kind h1 = H1Kind::Empty;
    H2Kind h2 = H2Kind::Empty;
    VarySide vary = VarySide::G1Side;
    Graph fixed_other;
    int n_target = 0;
};

// The (h1, h2) overlay pair the case prescribes; PreconditionError when the
// free/fixed slots are used inconsistently.
std::pair<H1Kind, H2Kind> overlay_kinds(const FamilySpec& spec);

// One double join per cycle union of n_target vertices, varying the chosen
// side and keeping everything else fixed. SizeError when n_target exceeds
// max_n (guards against accidentally huge eigenproblems).
std::vector<BlockedGraph> build_family(const FamilySpec& spec, int max_n = 30);

struct FamilyReport {
    int member_count = 0;
    int order = 0;                    // common vertex count
    VarySide vary = VarySide::G1Side; // detected varying side
    std::optional<TemplateId> covering_template;
    std::vector<Partition> partitions;
    std::vector<double> energies;     // numeric distance energies, member order
    double common_energy = 0.0;       // mean energy
    double max_deviation = 0.0;       // max - min energy
    bool equienergetic = false;       // max_deviation <= tol
    bool all_diameter_three = false;
    // Why the energies agree: each varying side is 2-regular, so its
    // adjacency eigenvalues sit in [-2, 2] and sum(|mu_i|) over the join
    // block reduces to a function of the part count only.
    double mechanism_gap = 0.0; // spread of sum_{i>=2}(mu_i + 2) across members
    double min_adjacency_eigenvalue = 0.0;
    bool shared_clauses_match = false; // non-varying closed-form clauses agree
};

// Check a family numerically: BFS distance energies, the -2-boundedness
// mechanism on the varying side, and agreement of the closed-form clauses the
// members share. FamilySizeError for fewer than two members or mixed orders.
FamilyReport verify_family(const std::vector<BlockedGraph>& members, double tol = 1e-6);

} // namespace dspectra
