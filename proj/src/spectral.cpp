#include "mwnet/spectral.hpp"

#include <Eigen/Eigenvalues>

#include "mwnet/linalg.hpp"

namespace mwnet {

const char* to_string(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::Consensus: return "consensus";
        case SolutionKind::Bipartite: return "bipartite";
        case SolutionKind::Cluster: return "cluster";
        case SolutionKind::Trivial: return "trivial";
    }
    return "?";
}

double SpectralDecomposition::smallest_positive(const Tolerances& tol) const {
    const double cut = tol.rank * std::max(largest(), 1.0);
    for (int i = 0; i < eigenvalues.size(); ++i)
        if (eigenvalues(i) > cut) return eigenvalues(i);
    return 0.0;
}

SpectralDecomposition decompose(const Laplacian& lap) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(lap.blocks);
    return {es.eigenvalues(), es.eigenvectors()};
}

SubspaceBasis null_space_basis(const SpectralDecomposition& spec, const Tolerances& tol) {
    const double cut = tol.rank * std::max(spec.largest(), 1.0);
    int k = 0;
    while (k < spec.eigenvalues.size() && spec.eigenvalues(k) <= cut) ++k;
    return {spec.eigenvectors.leftCols(k)};
}

SubspaceBasis null_space_basis(const Laplacian& lap, const Tolerances& tol) {
    return null_space_basis(decompose(lap), tol);
}

Vector asymptotic_state(const Laplacian& lap, const Vector& x0, const Tolerances& tol) {
    const SubspaceBasis basis = null_space_basis(lap, tol);
    return basis.columns * (basis.columns.transpose() * x0);
}

NullVectorReport verify_null_vector(const MatrixWeightedGraph& g, const Vector& x, double tol) {
    NullVectorReport report;
    const int d = g.dim;
    for (int i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edges[i];
        const Vector diff =
            x.segment(e.u * d, d) - static_cast<double>(e.sign_class.sign) * x.segment(e.v * d, d);
        const double res = (e.weight * diff).cwiseAbs().maxCoeff();
        report.residuals.push_back({i, res});
        report.max_residual = std::max(report.max_residual, res);
    }
    report.passes = report.max_residual <= tol;
    return report;
}

SolutionClass classify_solution_space(const SubspaceBasis& basis, int num_nodes, int dim,
                                      const Tolerances& tol) {
    SolutionClass out;
    out.null_dimension = basis.rank();
    if (out.null_dimension == 0) {
        out.kind = SolutionKind::Trivial;
        return out;
    }
    const int m = out.null_dimension;
    out.kind = SolutionKind::Cluster;
    if (m > dim) return out;  // gauge form needs s <= d

    // Gauge form iff every node's d x m block equals +/- the first node's block.
    // Any orthonormal basis of span(D(1 (x) Psi)) has node blocks sigma_i Psi T,
    // so the comparison is exact up to roundoff.
    const double scale = basis.columns.cwiseAbs().maxCoeff();
    const double eps = tol.subspace * std::max(scale, 1.0);
    const Matrix ref = basis.columns.topRows(dim);
    if (ref.cwiseAbs().maxCoeff() <= eps) return out;  // zero block at node 1

    GaugeAssignment gauge;
    gauge.sigma.assign(num_nodes, 1);
    for (int i = 1; i < num_nodes; ++i) {
        const Matrix block = basis.columns.middleRows(i * dim, dim);
        if ((block - ref).cwiseAbs().maxCoeff() <= eps)
            gauge.sigma[i] = 1;
        else if ((block + ref).cwiseAbs().maxCoeff() <= eps)
            gauge.sigma[i] = -1;
        else
            return out;
    }

    out.psi = column_span(ref, tol);
    out.gauge = gauge;
    out.kind = gauge.is_identity() ? SolutionKind::Consensus : SolutionKind::Bipartite;
    return out;
}

}  // namespace mwnet
