#include "mwnet/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace mwnet {

namespace {

double rank_cutoff(const Vector& singular_values, const Tolerances& tol) {
    const double top = singular_values.size() ? singular_values(0) : 0.0;
    return tol.rank * std::max(top, 1.0);
}

}  // namespace

int numerical_rank(const Matrix& m, const Tolerances& tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    const Vector sv = svd.singularValues();
    const double cut = rank_cutoff(sv, tol);
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    return r;
}

Matrix column_span(const Matrix& m, const Tolerances& tol) {
    if (m.cols() == 0) return Matrix(m.rows(), 0);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
    const Vector sv = svd.singularValues();
    const double cut = rank_cutoff(sv, tol);
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    return svd.matrixU().leftCols(r);
}

Matrix null_space(const Matrix& m, const Tolerances& tol) {
    if (m.rows() == 0) return Matrix::Identity(m.cols(), m.cols());
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const Vector sv = svd.singularValues();
    const double cut = rank_cutoff(sv, tol);
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

Matrix intersect_subspaces(const std::vector<Matrix>& bases, int dim, const Tolerances& tol) {
    // Intersection = zero eigenspace of the sum of complement projectors.
    Matrix m = Matrix::Zero(dim, dim);
    for (const Matrix& b : bases) m += Matrix::Identity(dim, dim) - b * b.transpose();
    if (bases.empty()) return Matrix::Identity(dim, dim);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    const Vector ev = es.eigenvalues();
    const double cut = tol.rank * std::max(ev(dim - 1), 1.0);
    int k = 0;
    while (k < dim && ev(k) <= cut) ++k;
    return es.eigenvectors().leftCols(k);
}

Matrix sum_subspaces(const std::vector<Matrix>& bases, int dim, const Tolerances& tol) {
    int cols = 0;
    for (const Matrix& b : bases) cols += static_cast<int>(b.cols());
    Matrix stacked(dim, cols);
    int at = 0;
    for (const Matrix& b : bases) {
        stacked.middleCols(at, b.cols()) = b;
        at += static_cast<int>(b.cols());
    }
    return column_span(stacked, tol);
}

double projector_distance(const Matrix& a, const Matrix& b) {
    const Matrix pa = a * a.transpose();
    const Matrix pb = b * b.transpose();
    if (pa.size() == 0) return 0.0;
    return (pa - pb).cwiseAbs().maxCoeff();
}

bool same_subspace(const Matrix& a, const Matrix& b, const Tolerances& tol) {
    if (a.rows() != b.rows()) return false;
    return projector_distance(a, b) <= tol.subspace;
}

bool subspace_contained(const Matrix& a, const Matrix& b, const Tolerances& tol) {
    if (a.cols() == 0) return true;
    const Matrix residual = a - b * (b.transpose() * a);
    return residual.cwiseAbs().maxCoeff() <= tol.subspace;
}

}  // namespace mwnet
