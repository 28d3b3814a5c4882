#pragma once

#include "mwnet/graph.hpp"

namespace mwnet {

/// Numerical rank of an arbitrary matrix: singular values above
/// tol.rank * max(sigma_max, 1).
int numerical_rank(const Matrix& m, const Tolerances& tol = {});

/// Orthonormal basis of the column span (d x r, r = rank).
Matrix column_span(const Matrix& m, const Tolerances& tol = {});

/// Orthonormal basis of null(m) for an arbitrary matrix (via SVD).
Matrix null_space(const Matrix& m, const Tolerances& tol = {});

/// Orthonormal basis of the intersection of subspaces given by orthonormal
/// bases. An empty list yields the full space R^dim.
Matrix intersect_subspaces(const std::vector<Matrix>& bases, int dim, const Tolerances& tol = {});

/// Orthonormal basis of the sum (span of the union) of subspaces.
Matrix sum_subspaces(const std::vector<Matrix>& bases, int dim, const Tolerances& tol = {});

/// True iff the two orthonormal bases span the same subspace
/// (projector distance below tol.subspace).
bool same_subspace(const Matrix& a, const Matrix& b, const Tolerances& tol = {});

/// True iff span(a) is contained in span(b) within tol.subspace.
bool subspace_contained(const Matrix& a, const Matrix& b, const Tolerances& tol = {});

/// Largest principal-angle sine between equal-dimension subspaces
/// (infinity norm of the projector difference).
double projector_distance(const Matrix& a, const Matrix& b);

}  // namespace mwnet
