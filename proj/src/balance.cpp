#include "mwnet/balance.hpp"

#include <algorithm>
#include <unordered_map>

#include "mwnet/linalg.hpp"

namespace mwnet {

std::vector<int> Partition::v1() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < side.size(); ++i)
        if (side[i] == 0) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> Partition::v2() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < side.size(); ++i)
        if (side[i] == 1) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> inconsistent_edges(const MatrixWeightedGraph& g, const Partition& p) {
    std::vector<int> out;
    for (int i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edges[i];
        const bool same_side = p.side[e.u] == p.side[e.v];
        if ((same_side && e.sign_class.sign < 0) || (!same_side && e.sign_class.sign > 0))
            out.push_back(i);
    }
    return out;
}

GaugeAssignment gauge_from_partition(const Partition& p) {
    GaugeAssignment gauge;
    gauge.sigma.resize(p.side.size());
    for (std::size_t i = 0; i < p.side.size(); ++i) gauge.sigma[i] = p.side[i] == 0 ? 1 : -1;
    return gauge;
}

namespace {

Matrix common_null(const MatrixWeightedGraph& g, const std::vector<int>& edge_indices,
                   const Tolerances& tol) {
    std::vector<Matrix> nulls;
    for (int ei : edge_indices)
        nulls.push_back(null_space(g.edges[ei].sign_class.sign * g.edges[ei].weight, tol));
    return intersect_subspaces(nulls, g.dim, tol);
}

}  // namespace

NbsResult enumerate_nbs(const MatrixWeightedGraph& g, const std::vector<Continent>& continents,
                        std::size_t cap, const Tolerances& tol) {
    NbsResult result;
    const std::size_t w = continents.size();
    if (g.num_nodes() == 0) return result;

    // Canonical assignments: one sign per continent, the continent of node 0
    // pinned to +1. Within a continent the split is forced by the internal
    // gauge; any other split puts a definite edge in the candidate set, whose
    // null space is {0}.
    std::size_t anchor = 0;
    for (std::size_t c = 0; c < w; ++c)
        if (continents[c].contains(0)) anchor = c;

    const std::size_t free_bits = w - 1;
    if (free_bits >= 8 * sizeof(std::size_t) || (std::size_t{1} << free_bits) > cap)
        throw Error(ErrorCode::SearchBudgetExceeded, "partition cap exceeded");

    std::vector<std::vector<int>> seen_edge_sets;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free_bits); ++mask) {
        ++result.partitions_enumerated;
        Partition p;
        p.side.assign(g.num_nodes(), 0);
        std::size_t bit = 0;
        for (std::size_t c = 0; c < w; ++c) {
            int csign = 1;
            if (c != anchor) {
                csign = (mask >> bit) & 1 ? -1 : 1;
                ++bit;
            }
            for (std::size_t i = 0; i < continents[c].nodes.size(); ++i)
                p.side[continents[c].nodes[i]] = csign * continents[c].gauge[i] > 0 ? 0 : 1;
        }

        BalancingSet set;
        set.partition = std::move(p);
        set.edge_indices = inconsistent_edges(g, set.partition);
        set.null_basis = common_null(g, set.edge_indices, tol);
        set.nontrivial = set.null_basis.cols() > 0;
        if (!set.nontrivial) continue;
        if (std::find(seen_edge_sets.begin(), seen_edge_sets.end(), set.edge_indices) !=
            seen_edge_sets.end())
            continue;
        seen_edge_sets.push_back(set.edge_indices);
        result.sets.push_back(std::move(set));
    }
    result.unique = result.sets.size() == 1;
    return result;
}

NbsResult enumerate_nbs(const MatrixWeightedGraph& g, std::size_t cap, const Tolerances& tol) {
    return enumerate_nbs(g, detect_continents(g), cap, tol);
}

MatrixWeightedGraph induced_subgraph(const MatrixWeightedGraph& g, const std::vector<int>& nodes,
                                     std::vector<int>* edge_map) {
    MatrixWeightedGraph sub;
    sub.dim = g.dim;
    std::vector<int> local(g.num_nodes(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        local[nodes[i]] = static_cast<int>(i);
        sub.node_ids.push_back(g.node_ids[nodes[i]]);
    }
    if (edge_map) edge_map->clear();
    for (int ei = 0; ei < g.num_edges(); ++ei) {
        const Edge& e = g.edges[ei];
        if (local[e.u] < 0 || local[e.v] < 0) continue;
        Edge copy = e;
        copy.u = local[e.u];
        copy.v = local[e.v];
        sub.edges.push_back(std::move(copy));
        if (edge_map) edge_map->push_back(ei);
    }
    // connectivity of the subgraph
    std::vector<std::vector<int>> adj(nodes.size());
    for (const Edge& e : sub.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(nodes.size(), 0);
    if (!nodes.empty()) {
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    sub.connected = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    return sub;
}

NbsResult continent_nbs(const MatrixWeightedGraph& g, const Continent& k, std::size_t cap,
                        const Tolerances& tol) {
    std::vector<int> edge_map;
    MatrixWeightedGraph sub = induced_subgraph(g, k.nodes, &edge_map);
    NbsResult result = enumerate_nbs(sub, detect_continents(sub), cap, tol);
    for (BalancingSet& set : result.sets)
        for (int& ei : set.edge_indices) ei = edge_map[ei];
    return result;
}

Matrix nbs_null_basis(const MatrixWeightedGraph& g, const BalancingSet& nbs,
                      const std::vector<Continent>& continents, const Tolerances& tol) {
    const Matrix direct = common_null(g, nbs.edge_indices, tol);

    // Factorized route: group the NBS edges by the continent that contains
    // them (cross-continent edges form their own group), intersect each
    // group's common null, then intersect the group results.
    std::vector<int> continent_of_edge(static_cast<std::size_t>(g.num_edges()), -1);
    for (std::size_t c = 0; c < continents.size(); ++c)
        for (int ei : continents[c].edge_indices) continent_of_edge[ei] = static_cast<int>(c);

    std::unordered_map<int, std::vector<int>> groups;
    for (int ei : nbs.edge_indices) groups[continent_of_edge[ei]].push_back(ei);

    std::vector<Matrix> group_nulls;
    for (auto& [c, edges] : groups) group_nulls.push_back(common_null(g, edges, tol));
    const Matrix factored = intersect_subspaces(group_nulls, g.dim, tol);

    if (!same_subspace(direct, factored, tol))
        throw Error(ErrorCode::FactorizationMismatch,
                    "direct and factorized NBS null spaces disagree");
    return direct;
}

}  // namespace mwnet
