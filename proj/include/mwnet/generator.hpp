#pragma once

#include <cstdint>
#include <random>

#include "mwnet/conditions.hpp"

namespace mwnet {

enum class ViolationTarget {
    None,
    Condition2,
    Condition3,
    Condition4,
    Condition5,
    IndefiniteCycle,
};

const char* to_string(ViolationTarget v);
ViolationTarget violation_from_string(const std::string& s);

/// Seeded construction plan. The recipe plus seed fully determine the instance.
struct InstanceRecipe {
    std::uint64_t seed = 0;
    int dim = 3;
    int continent_count = 2;
    int nodes_per_continent = 3;
    std::vector<int> path_lengths = {1};  ///< paths between each consecutive continent pair
    bool random_gauge = false;            ///< apply a random gauge switch (bipartite target)
    bool axis_aligned = false;            ///< axis-aligned null directions for readable fixtures
    ViolationTarget violation = ViolationTarget::None;
};

struct SynthesizedInstance {
    MatrixWeightedGraph graph;
    SolutionKind expected = SolutionKind::Consensus;
    std::optional<GaugeAssignment> expected_gauge;
    Matrix expected_psi;  ///< d x s, predicted common block space
    Vector witness;       ///< non-bipartite null vector for condition violations
    ViolationTarget violation = ViolationTarget::None;
};

/// PSD matrix with null space exactly span(null_basis) (orthonormal columns,
/// possibly zero columns) and smallest nonzero eigenvalue >= 0.1.
Matrix make_psd(int dim, const Matrix& null_basis, std::mt19937_64& rng);

/// Builds a graph realizing the recipe together with its expected verdict.
/// Throws Error{InfeasibleRecipe} when the plan cannot be realized.
SynthesizedInstance synthesize(const InstanceRecipe& recipe);

/// Disjoint union with node ids prefixed to stay unique; the result is flagged
/// disconnected.
MatrixWeightedGraph disjoint_union(const MatrixWeightedGraph& a, const MatrixWeightedGraph& b);

/// Uniform [-1,1]^n initial state from a seeded generator.
Vector random_state(int n, std::mt19937_64& rng);

}  // namespace mwnet
