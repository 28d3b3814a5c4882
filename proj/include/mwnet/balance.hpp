#pragma once

#include "mwnet/graph.hpp"
#include "mwnet/topology.hpp"

namespace mwnet {

/// Node bipartition in canonical form: side[first node] = 0.
struct Partition {
    std::vector<int> side;  ///< 0 for V1, 1 for V2, per node index

    std::vector<int> v1() const;
    std::vector<int> v2() const;
    bool operator==(const Partition&) const = default;
};

/// Edge set whose sign negation balances the graph under `partition`, with
/// the common null space of its weights.
struct BalancingSet {
    Partition partition;
    std::vector<int> edge_indices;  ///< sorted
    Matrix null_basis;              ///< orthonormal in R^d; I_d when edge set empty
    bool nontrivial = true;
};

/// Edges whose sign violates the partition: negative within a side or
/// positive across sides.
std::vector<int> inconsistent_edges(const MatrixWeightedGraph& g, const Partition& p);

struct NbsResult {
    std::vector<BalancingSet> sets;
    bool unique = false;
    std::size_t partitions_enumerated = 0;
};

/// Enumerates canonical partitions with continent pruning: within a continent
/// the split is forced by the internal gauge, so only whole-continent sign
/// assignments are scanned. Throws Error{SearchBudgetExceeded} beyond `cap`.
NbsResult enumerate_nbs(const MatrixWeightedGraph& g, const std::vector<Continent>& continents,
                        std::size_t cap = (std::size_t{1} << 20), const Tolerances& tol = {});

NbsResult enumerate_nbs(const MatrixWeightedGraph& g, std::size_t cap = (std::size_t{1} << 20),
                        const Tolerances& tol = {});

/// null(E^nb) computed directly and via the continent factorization
/// (intersection of the continents' own NBS nulls with the nulls of NBS edges
/// outside every continent); throws Error{FactorizationMismatch} when the two
/// routes disagree.
Matrix nbs_null_basis(const MatrixWeightedGraph& g, const BalancingSet& nbs,
                      const std::vector<Continent>& continents, const Tolerances& tol = {});

GaugeAssignment gauge_from_partition(const Partition& p);

/// NBS of the subgraph induced by a continent; used by the factorization and
/// the pair analysis (B_K bases).
NbsResult continent_nbs(const MatrixWeightedGraph& g, const Continent& k,
                        std::size_t cap = (std::size_t{1} << 20), const Tolerances& tol = {});

/// Subgraph induced by a node subset, preserving node order. Also returns the
/// original edge index per kept edge.
MatrixWeightedGraph induced_subgraph(const MatrixWeightedGraph& g, const std::vector<int>& nodes,
                                     std::vector<int>* edge_map = nullptr);

}  // namespace mwnet
