#include "mgstab/curve.hpp"

#include "mgstab/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace mgstab {

std::size_t DualGraph::component_index(std::string_view id) const {
    for (std::size_t j = 0; j < components.size(); ++j) {
        if (components[j].id == id) return j;
    }
    fail(Errc::UnknownComponent, "no component with id '" + std::string(id) + "'");
}

std::vector<std::array<std::size_t, 2>> DualGraph::node_endpoints() const {
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t j = 0; j < components.size(); ++j) {
        index.emplace(components[j].id, j);
    }
    std::vector<std::array<std::size_t, 2>> out;
    out.reserve(nodes.size());
    for (const auto& [a, b] : nodes) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end() || ib == index.end()) {
            fail(Errc::UnknownComponentInNode,
                 "node [" + a + ", " + b + "] references a component not in the graph");
        }
        out.push_back({ia->second, ib->second});
    }
    return out;
}

void validate_graph(const DualGraph& graph) {
    if (graph.components.empty()) {
        fail(Errc::Disconnected, "graph has no components");
    }
    std::set<std::string> seen;
    for (const auto& comp : graph.components) {
        if (!seen.insert(comp.id).second) {
            fail(Errc::DuplicateComponentId, "component id '" + comp.id + "' appears twice");
        }
        if (comp.genus < 0) {
            fail(Errc::NegativeEntry, "component '" + comp.id + "' has negative genus");
        }
    }
    const auto endpoints = graph.node_endpoints(); // throws UnknownComponentInNode

    // Connectivity over the vertex set, self-edges contribute nothing.
    const std::size_t n = graph.components.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : endpoints) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> stack{0};
    visited[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v]) {
            if (!visited[w]) {
                visited[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) {
        fail(Errc::Disconnected, "dual graph is not connected");
    }
}

long long arithmetic_genus(const DualGraph& graph) {
    long long genus_sum = 0;
    for (const auto& comp : graph.components) {
        genus_sum += comp.genus;
    }
    return genus_sum + static_cast<long long>(graph.nodes.size()) -
           static_cast<long long>(graph.components.size()) + 1;
}

bool Subcurve::contains(std::size_t index) const {
    return std::binary_search(component_indices.begin(), component_indices.end(), index);
}

Subcurve make_subcurve(const DualGraph& graph, const std::vector<std::string>& ids) {
    std::set<std::size_t> indices;
    for (const auto& id : ids) {
        indices.insert(graph.component_index(id));
    }
    if (indices.empty()) {
        fail(Errc::ImproperSubcurve, "subcurve must be nonempty");
    }
    if (indices.size() == graph.components.size()) {
        fail(Errc::ImproperSubcurve, "subcurve must be a proper subset of the components");
    }
    return Subcurve{std::vector<std::size_t>(indices.begin(), indices.end())};
}

Subcurve complement(const DualGraph& graph, const Subcurve& sub) {
    Subcurve out;
    for (std::size_t j = 0; j < graph.components.size(); ++j) {
        if (!sub.contains(j)) out.component_indices.push_back(j);
    }
    if (out.component_indices.empty()) {
        fail(Errc::ImproperSubcurve, "complement of the whole curve is empty");
    }
    return out;
}

std::vector<std::string> subcurve_ids(const DualGraph& graph, const Subcurve& sub) {
    std::vector<std::string> ids;
    ids.reserve(sub.component_indices.size());
    for (std::size_t j : sub.component_indices) {
        ids.push_back(graph.components[j].id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<Subcurve> connected_proper_subcurves(const DualGraph& graph) {
    const std::size_t n = graph.components.size();
    const auto endpoints = graph.node_endpoints();
    std::vector<Subcurve> out;
    if (n < 2) return out;

    // Subset enumeration with a connectivity filter; intended scale is a
    // handful of components, so 2^n is fine.
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::uint64_t{1} << j)) members.push_back(j);
        }
        // BFS inside the subset.
        std::vector<bool> in_subset(n, false);
        for (std::size_t j : members) in_subset[j] = true;
        std::vector<bool> visited(n, false);
        std::vector<std::size_t> stack{members.front()};
        visited[members.front()] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& e : endpoints) {
                std::size_t w = n;
                if (e[0] == v && in_subset[e[1]]) w = e[1];
                else if (e[1] == v && in_subset[e[0]]) w = e[0];
                if (w < n && !visited[w]) {
                    visited[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached == members.size()) {
            out.push_back(Subcurve{std::move(members)});
        }
    }

    std::sort(out.begin(), out.end(), [&](const Subcurve& a, const Subcurve& b) {
        if (a.component_indices.size() != b.component_indices.size()) {
            return a.component_indices.size() < b.component_indices.size();
        }
        return subcurve_ids(graph, a) < subcurve_ids(graph, b);
    });
    return out;
}

SubcurveInvariants subcurve_invariants(const DualGraph& graph, const Subcurve& sub) {
    for (std::size_t j : sub.component_indices) {
        if (j >= graph.components.size()) {
            fail(Errc::UnknownComponent, "subcurve references component index out of range");
        }
    }
    SubcurveInvariants inv;
    const auto endpoints = graph.node_endpoints();
    for (const auto& e : endpoints) {
        const bool a = sub.contains(e[0]);
        const bool b = sub.contains(e[1]);
        if (a && b) ++inv.internal_nodes;
        else if (a || b) ++inv.k_D;
    }
    long long chi = 0;
    for (std::size_t j : sub.component_indices) {
        chi += 1 - graph.components[j].genus;
    }
    inv.chi_O_D = chi - inv.internal_nodes;
    inv.genus_D = 1 - inv.chi_O_D;
    inv.deg_omega_D = 2 * inv.genus_D - 2 + inv.k_D;
    return inv;
}

void validate_sheaf(const DualGraph& graph, const RankOneSheaf& sheaf) {
    if (sheaf.tilde_multidegree.size() != graph.components.size()) {
        fail(Errc::ComponentMismatch, "multidegree length does not match the component count");
    }
    for (std::size_t s : sheaf.not_locally_free) {
        if (s >= graph.nodes.size()) {
            fail(Errc::UnknownNode, "not_locally_free references a node index out of range");
        }
    }
    for (std::size_t i = 1; i < sheaf.not_locally_free.size(); ++i) {
        if (sheaf.not_locally_free[i - 1] >= sheaf.not_locally_free[i]) {
            fail(Errc::UnknownNode, "not_locally_free must be strictly increasing");
        }
    }
}

long long delta(const RankOneSheaf& sheaf) {
    return static_cast<long long>(sheaf.not_locally_free.size());
}

ChiDeg sheaf_chi_deg(const DualGraph& graph, const RankOneSheaf& sheaf) {
    validate_sheaf(graph, sheaf);
    long long deg = delta(sheaf);
    for (long long d : sheaf.tilde_multidegree) deg += d;
    ChiDeg out;
    out.deg = deg;
    out.chi = deg + 1 - arithmetic_genus(graph);
    return out;
}

long long deg_on_subcurve(const DualGraph& graph, const RankOneSheaf& sheaf, const Subcurve& sub) {
    validate_sheaf(graph, sheaf);
    long long deg = 0;
    for (std::size_t j : sub.component_indices) {
        if (j >= graph.components.size()) {
            fail(Errc::UnknownComponent, "subcurve references component index out of range");
        }
        deg += sheaf.tilde_multidegree[j];
    }
    const auto endpoints = graph.node_endpoints();
    for (std::size_t s : sheaf.not_locally_free) {
        if (sub.contains(endpoints[s][0]) && sub.contains(endpoints[s][1])) ++deg;
    }
    return deg;
}

void validate_class(const DualGraph& graph, const SheafClass& cls) {
    if (cls.rank < 1) {
        fail(Errc::InvalidMultirank, "rank must be positive");
    }
    if (cls.multirank.size() != graph.components.size()) {
        fail(Errc::ComponentMismatch, "multirank length does not match the component count");
    }
    bool any = false;
    for (long long r : cls.multirank) {
        if (r < 0 || r > cls.rank) {
            fail(Errc::InvalidMultirank, "multirank entries must lie in [0, rank]");
        }
        if (r != 0) any = true;
    }
    if (!any) {
        fail(Errc::ZeroMultirank, "multirank is identically zero");
    }
}

SheafClass uniform_class(const DualGraph& graph, long long rank, long long degree) {
    SheafClass cls;
    cls.rank = rank;
    cls.chi = degree + rank * (1 - arithmetic_genus(graph));
    cls.multirank.assign(graph.components.size(), rank);
    validate_class(graph, cls);
    return cls;
}

} // namespace mgstab
