#pragma once

#include "mgstab/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mgstab {

struct Component {
    std::string id;
    long long genus = 0;
};

/// Dual graph of a nodal curve: one vertex per irreducible component
/// (weighted by its geometric genus), one edge per node. Self-edges and
/// multi-edges are allowed. Metadata (markings, target variety, curve class)
/// is carried verbatim and never read by any computation.
struct DualGraph {
    std::vector<Component> components;
    // Node endpoints by component id, in input order; the position in this
    // list is the node index referenced by RankOneSheaf::not_locally_free.
    std::vector<std::pair<std::string, std::string>> nodes;
    std::string metadata_json; // opaque; empty when absent

    std::size_t component_count() const { return components.size(); }
    std::size_t node_count() const { return nodes.size(); }

    /// Index of the component with the given id; throws UnknownComponent.
    std::size_t component_index(std::string_view id) const;

    /// Node endpoints resolved to component indices.
    std::vector<std::array<std::size_t, 2>> node_endpoints() const;
};

/// Checks connectedness, id uniqueness and node endpoint validity.
void validate_graph(const DualGraph& graph);

/// g = sum of component genera + #nodes - #components + 1.
long long arithmetic_genus(const DualGraph& graph);

/// Nonempty proper subset of the components, stored as sorted indices.
struct Subcurve {
    std::vector<std::size_t> component_indices;

    bool contains(std::size_t index) const;
};

/// Builds a subcurve from component ids, enforcing nonemptiness, properness
/// and known ids. Connectivity is not required here.
Subcurve make_subcurve(const DualGraph& graph, const std::vector<std::string>& ids);

Subcurve complement(const DualGraph& graph, const Subcurve& sub);

std::vector<std::string> subcurve_ids(const DualGraph& graph, const Subcurve& sub);

/// All nonempty proper component subsets inducing a connected subgraph,
/// ordered by size and then lexicographically by sorted id lists.
std::vector<Subcurve> connected_proper_subcurves(const DualGraph& graph);

struct SubcurveInvariants {
    long long k_D = 0;         // nodes joining D to its complement, with multiplicity
    long long internal_nodes = 0; // e(D): nodes with both branches in D
    long long chi_O_D = 0;     // sum over D of (1 - genus_j) minus e(D)
    long long genus_D = 0;     // 1 - chi_O_D
    long long deg_omega_D = 0; // 2 genus_D - 2 + k_D
};

SubcurveInvariants subcurve_invariants(const DualGraph& graph, const Subcurve& sub);

/// Rank-one torsion-free sheaf, presented as the direct image of a line
/// bundle on the partial normalisation at the node set S: a per-component
/// degree on the normalisation plus the set of nodes where the sheaf fails
/// to be locally free.
struct RankOneSheaf {
    std::vector<long long> tilde_multidegree;   // by component index
    std::vector<std::size_t> not_locally_free;  // sorted node indices (0-based)
};

void validate_sheaf(const DualGraph& graph, const RankOneSheaf& sheaf);

long long delta(const RankOneSheaf& sheaf); // |S|

struct ChiDeg {
    long long chi = 0;
    long long deg = 0;
};

/// deg = sum of tilde degrees + |S|; chi = deg + 1 - g.
ChiDeg sheaf_chi_deg(const DualGraph& graph, const RankOneSheaf& sheaf);

/// Degree of the restriction to D modulo torsion: tilde degrees over D plus
/// the S-nodes with both branches in D.
long long deg_on_subcurve(const DualGraph& graph, const RankOneSheaf& sheaf, const Subcurve& sub);

/// Numerical class of a sheaf: uniform rank r, Euler characteristic, and the
/// generic rank on each component.
struct SheafClass {
    long long rank = 1;
    long long chi = 0;
    std::vector<long long> multirank; // by component index, entries in [0, rank]
};

void validate_class(const DualGraph& graph, const SheafClass& cls);

/// The uniform-rank class: multirank identically r, chi = d + r(1 - g).
SheafClass uniform_class(const DualGraph& graph, long long rank, long long degree);

} // namespace mgstab
