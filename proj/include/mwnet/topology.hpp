#pragma once

#include "mwnet/graph.hpp"

namespace mwnet {

/// Connected component of the definite-edge subgraph plus everything the
/// component induces: all nonzero-weight edges among its nodes, a definite
/// spanning tree, and the internal gauge relative to the component root.
struct Continent {
    std::vector<int> nodes;              ///< ascending node indices
    std::vector<int> edge_indices;       ///< all induced edges (incl. semidefinite)
    std::vector<int> tree_edge_indices;  ///< BFS spanning tree over definite edges
    std::vector<int> gauge;              ///< per entry of nodes; gauge[root] = +1
    bool gauge_consistent = true;        ///< false iff a definite cycle has sign -1
    std::vector<int> conflict_cycle;     ///< offending edge indices when inconsistent
    bool has_definite_edge = false;

    bool contains(int node) const;
    int gauge_of(int node) const;  ///< sign of `node`, which must be a member
};

std::vector<Continent> detect_continents(const MatrixWeightedGraph& g);

/// Per-node signs of a continent: sigma(root) = +1, sigma(v) = product of
/// tree-edge signs root -> v. Throws Error{GaugeConflict} when a non-tree
/// definite edge contradicts the gauge.
std::vector<int> continent_gauge(const MatrixWeightedGraph& g, const Continent& k);

/// Simple semidefinite path connecting two continents.
struct PathDescriptor {
    std::vector<int> node_sequence;  ///< tau_1 .. tau_{rho+1}
    std::vector<int> edge_indices;   ///< rho edges in traversal order
    int sign = 1;                    ///< product of edge signs
    int effective_sign = 1;          ///< sign * endpoint internal gauges
    std::vector<Matrix> edge_null_bases;
    Matrix null_span;                ///< orthonormal basis of span of the union
    bool union_equals_span = true;   ///< true when the union of edge nulls is already a subspace
    std::vector<int> nbs_edge_positions;  ///< filled by the conditions stage
    bool primary = false;                 ///< at most one NBS edge (conditions stage)

    int length() const { return static_cast<int>(edge_indices.size()); }
    int interior_begin() const { return 1; }
};

struct PathEnumeration {
    std::vector<PathDescriptor> paths;
    bool node_independent = true;  ///< pairwise interior-disjoint
};

/// All simple semidefinite paths between continents l and m whose interior
/// nodes belong to no continent carrying a definite edge. Paths through a
/// third definite continent are excluded (they are covered by that pair's
/// own analysis). Throws Error{PathBudgetExceeded} beyond `cap` paths.
PathEnumeration enumerate_connecting_paths(const MatrixWeightedGraph& g,
                                           const std::vector<Continent>& continents,
                                           int l, int m, std::size_t cap = 10000,
                                           const Tolerances& tol = {});

}  // namespace mwnet
