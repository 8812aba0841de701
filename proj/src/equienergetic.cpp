#include "dspectra/equienergetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace dspectra {

namespace {

void partitions_rec(int remaining, int max_part, Partition& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 3; --first) {
        if (remaining - first != 0 && remaining - first < 3)
            continue;
        current.push_back(first);
        partitions_rec(remaining - first, first, current, out);
        current.pop_back();
    }
}

std::vector<int> component_sizes(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> sizes;
    for (int s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        int count = 0;
        std::queue<int> work;
        work.push(s);
        seen[s] = 1;
        while (!work.empty()) {
            const int v = work.front();
            work.pop();
            ++count;
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    work.push(u);
                }
            }
        }
        sizes.push_back(count);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

} // namespace

std::vector<Partition> partitions_ge3(int n) {
    if (n < 3)
        throw SizeError("partitions with parts >= 3 need n >= 3, got " + std::to_string(n));
    std::vector<Partition> out;
    Partition current;
    partitions_rec(n, n, current, out);
    return out;
}

std::vector<Graph> cycle_family(int n) {
    std::vector<Graph> out;
    for (const Partition& parts : partitions_ge3(n)) {
        std::vector<Graph> cycles;
        cycles.reserve(parts.size());
        for (int part : parts)
            cycles.push_back(make_cycle(part));
        out.push_back(disjoint_union(cycles));
    }
    return out;
}

const char* to_string(FamilyCase fc) {
    switch (fc) {
    case FamilyCase::I: return "i";
    case FamilyCase::II: return "ii";
    case FamilyCase::III: return "iii";
    case FamilyCase::IV: return "iv";
    }
    return "?";
}

const char* to_string(VarySide v) {
    return v == VarySide::G1Side ? "g1" : "g2";
}

std::pair<H1Kind, H2Kind> overlay_kinds(const FamilySpec& spec) {
    switch (spec.family_case) {
    case FamilyCase::I:
        if (spec.h1 != H1Kind::Empty || spec.h2 != H2Kind::Empty)
            throw PreconditionError("case i has no free overlay slot");
        return {H1Kind::Empty, H2Kind::Empty};
    case FamilyCase::II:
        if (spec.h2 != H2Kind::Empty)
            throw PreconditionError("case ii fixes the vertex-side overlay; only h1 is free");
        if (spec.h1 == H1Kind::Complete)
            throw PreconditionError("case ii does not admit a complete edge-side overlay");
        return {spec.h1, H2Kind::ComplementOfG};
    case FamilyCase::III:
        if (spec.h1 != H1Kind::Empty)
            throw PreconditionError("case iii fixes the edge-side overlay; only h2 is free");
        return {H1Kind::Complete, spec.h2};
    case FamilyCase::IV:
        if (spec.h2 != H2Kind::Empty)
            throw PreconditionError("case iv fixes the vertex-side overlay; only h1 is free");
        if (spec.h1 == H1Kind::Complete)
            throw PreconditionError("case iv does not admit a complete edge-side overlay");
        return {spec.h1, H2Kind::Complete};
    }
    throw PreconditionError("unknown family case");
}

std::vector<BlockedGraph> build_family(const FamilySpec& spec, int max_n) {
    if (spec.n_target > max_n)
        throw SizeError("family target size " + std::to_string(spec.n_target) +
                        " exceeds the cap of " + std::to_string(max_n));
    if (spec.fixed_other.vertex_count() < 1)
        throw SizeError("fixed side of the family must be non-empty");
    const auto [h1, h2] = overlay_kinds(spec);
    const MergedSubdivision core = merged_subdivision(spec.base, h1, h2);

    std::vector<BlockedGraph> members;
    for (const Graph& varying : cycle_family(spec.n_target)) {
        if (spec.vary == VarySide::G1Side)
            members.push_back(double_join(core, varying, spec.fixed_other));
        else
            members.push_back(double_join(core, spec.fixed_other, varying));
        const BlockedGraph& bg = members.back();
        const TemplateValidation tv =
            validate_template(bg, TemplateSpec::for_template(classify_template(bg)));
        if (!tv.ok)
            throw TemplateMismatchError("family member over partition index " +
                                        std::to_string(members.size() - 1) +
                                        " fails its distance template");
    }
    return members;
}

FamilyReport verify_family(const std::vector<BlockedGraph>& members, double tol) {
    if (members.size() < 2)
        throw FamilySizeError("family verification needs at least two members");
    const int order = members.front().graph.vertex_count();
    for (const BlockedGraph& bg : members)
        if (bg.graph.vertex_count() != order)
            throw FamilySizeError("family members must all have the same vertex count");

    FamilyReport report;
    report.member_count = static_cast<int>(members.size());
    report.order = order;
    try {
        report.covering_template = classify_template(members.front());
    } catch (const TemplateMismatchError&) {
        report.covering_template = std::nullopt;
    }

    // which side actually varies across the members
    report.vary = VarySide::G1Side;
    bool g1_varies = false, g2_varies = false;
    for (const BlockedGraph& bg : members) {
        if (!(bg.g1 == members.front().g1))
            g1_varies = true;
        if (!(bg.g2 == members.front().g2))
            g2_varies = true;
    }
    if (!g1_varies && g2_varies)
        report.vary = VarySide::G2Side;

    report.all_diameter_three = true;
    double min_energy = 0.0, max_energy = 0.0;
    double min_mech = 0.0, max_mech = 0.0;
    report.min_adjacency_eigenvalue = std::numeric_limits<double>::infinity();
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
        const BlockedGraph& bg = members[idx];
        const Graph& varying = report.vary == VarySide::G1Side ? bg.g1 : bg.g2;
        report.partitions.push_back(component_sizes(varying));

        const double e = distance_energy(bg.graph);
        report.energies.push_back(e);
        if (diameter(bg.graph) != 3)
            report.all_diameter_three = false;

        const std::vector<double> mu = eigen_sym(varying.adjacency()).values;
        report.min_adjacency_eigenvalue =
            std::min(report.min_adjacency_eigenvalue, mu.empty() ? 0.0 : mu.back());
        double shifted_sum = 0.0;
        for (std::size_t i = 1; i < mu.size(); ++i)
            shifted_sum += mu[i] + 2.0;

        if (idx == 0) {
            min_energy = max_energy = e;
            min_mech = max_mech = shifted_sum;
        } else {
            min_energy = std::min(min_energy, e);
            max_energy = std::max(max_energy, e);
            min_mech = std::min(min_mech, shifted_sum);
            max_mech = std::max(max_mech, shifted_sum);
        }
    }
    report.common_energy =
        std::accumulate(report.energies.begin(), report.energies.end(), 0.0) / report.energies.size();
    report.max_deviation = max_energy - min_energy;
    report.equienergetic = report.max_deviation <= tol;
    report.mechanism_gap = max_mech - min_mech;

    // the clauses that do not involve the varying side must agree exactly
    // across members (up to eigensolver tolerance)
    report.shared_clauses_match = true;
    const std::string varying_label = report.vary == VarySide::G1Side ? "c" : "d";
    std::vector<double> reference;
    for (std::size_t idx = 0; idx < members.size() && report.shared_clauses_match; ++idx) {
        std::vector<double> shared;
        try {
            const Spectrum closed = closed_form_distance_spectrum(members[idx]);
            for (std::size_t i = 0; i < closed.values.size(); ++i)
                if (closed.labels[i] != varying_label)
                    shared.push_back(closed.values[i]);
        } catch (const Error&) {
            report.shared_clauses_match = false;
            break;
        }
        std::sort(shared.begin(), shared.end(), std::greater<>());
        if (idx == 0) {
            reference = std::move(shared);
        } else if (shared.size() != reference.size()) {
            report.shared_clauses_match = false;
        } else {
            for (std::size_t i = 0; i < shared.size(); ++i)
                if (std::abs(shared[i] - reference[i]) > 1e-9)
                    report.shared_clauses_match = false;
        }
    }
    return report;
}

} // namespace dspectra
