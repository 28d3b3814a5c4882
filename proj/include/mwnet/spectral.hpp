#pragma once

#include "mwnet/graph.hpp"

namespace mwnet {

/// Orthonormal column set spanning a subspace of R^m.
struct SubspaceBasis {
    Matrix columns;

    int rank() const { return static_cast<int>(columns.cols()); }
    int ambient_dim() const { return static_cast<int>(columns.rows()); }
};

struct SpectralDecomposition {
    Vector eigenvalues;   ///< ascending
    Matrix eigenvectors;  ///< orthonormal, column i pairs with eigenvalues[i]

    /// Smallest eigenvalue above the rank cutoff, or 0 if none.
    double smallest_positive(const Tolerances& tol = {}) const;
    double largest() const { return eigenvalues.size() ? eigenvalues(eigenvalues.size() - 1) : 0.0; }
};

SpectralDecomposition decompose(const Laplacian& lap);

/// Orthonormal basis of the zero eigenspace of L.
SubspaceBasis null_space_basis(const Laplacian& lap, const Tolerances& tol = {});
SubspaceBasis null_space_basis(const SpectralDecomposition& spec, const Tolerances& tol = {});

/// Orthogonal projection of x0 onto null(L): the t -> infinity limit of
/// xdot = -L x.
Vector asymptotic_state(const Laplacian& lap, const Vector& x0, const Tolerances& tol = {});

struct EdgeResidual {
    int edge_index;
    double residual;  ///< || A_uv (x_u - sgn(A_uv) x_v) ||_inf
};

struct NullVectorReport {
    std::vector<EdgeResidual> residuals;
    double max_residual = 0.0;
    bool passes = false;
};

/// Edge-wise membership test for null(L): x is in the null space iff every
/// per-edge residual vanishes.
NullVectorReport verify_null_vector(const MatrixWeightedGraph& g, const Vector& x, double tol);

enum class SolutionKind { Consensus, Bipartite, Cluster, Trivial };

const char* to_string(SolutionKind kind);

struct SolutionClass {
    SolutionKind kind = SolutionKind::Trivial;
    int null_dimension = 0;
    std::optional<GaugeAssignment> gauge;  ///< set for Consensus/Bipartite
    Matrix psi;                            ///< d x s common block basis, when gauge form
};

/// Decides whether null(L) is of gauge form span(D(1_N (x) Psi)).
SolutionClass classify_solution_space(const SubspaceBasis& basis, int num_nodes, int dim,
                                      const Tolerances& tol = {});

}  // namespace mwnet
