#include "mwnet/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "mwnet/linalg.hpp"

namespace mwnet {

Trajectory integrate(const Laplacian& lap, const Vector& x0, double horizon, int steps,
                     IntegrationMethod method) {
    if (steps < 1) throw Error(ErrorCode::InvalidDocument, "steps must be positive");
    if (!(horizon >= 0.0)) throw Error(ErrorCode::InvalidDocument, "horizon must be nonnegative");

    Trajectory traj;
    traj.method = method;
    traj.times.resize(steps + 1);
    traj.states.resize(x0.size(), steps + 1);
    const double h = horizon / steps;
    for (int k = 0; k <= steps; ++k) traj.times[k] = h * k;

    if (method == IntegrationMethod::ExactSpectral) {
        const SpectralDecomposition spec = decompose(lap);
        const Vector coeff = spec.eigenvectors.transpose() * x0;
        for (int k = 0; k <= steps; ++k) {
            const Vector damped =
                (-traj.times[k] * spec.eigenvalues.array()).exp() * coeff.array();
            traj.states.col(k) = spec.eigenvectors * damped;
        }
        return traj;
    }

    // Fixed-step RK4 on xdot = -L x; the linear stability bound for RK4 allows
    // h * lambda_max up to ~2.785, reject beyond the conservative 2.
    const double lambda_max = decompose(lap).largest();
    if (h * lambda_max > 2.0)
        throw Error(ErrorCode::StepTooLarge,
                    "RK4 step " + std::to_string(h) + " exceeds 2/lambda_max = " +
                        std::to_string(2.0 / lambda_max));
    Vector x = x0;
    traj.states.col(0) = x;
    const Matrix& l = lap.blocks;
    for (int k = 1; k <= steps; ++k) {
        const Vector k1 = -(l * x);
        const Vector k2 = -(l * (x + 0.5 * h * k1));
        const Vector k3 = -(l * (x + 0.5 * h * k2));
        const Vector k4 = -(l * (x + h * k3));
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        traj.states.col(k) = x;
    }
    return traj;
}

double default_horizon(const SpectralDecomposition& spec, double fallback, const Tolerances& tol) {
    const double lambda2 = spec.smallest_positive(tol);
    return lambda2 > 0.0 ? 30.0 / lambda2 : fallback;
}

OutcomeLabel classify_outcome(const Laplacian& lap, const Trajectory& traj, const Vector& x0,
                              const OutcomeTolerances& tol) {
    const Vector terminal = traj.terminal();
    const double x0_scale = std::max(x0.cwiseAbs().maxCoeff(), 1e-300);
    const double l_scale = std::max(lap.blocks.cwiseAbs().maxCoeff(), 1e-300);

    OutcomeLabel out;
    out.terminal_residual = (lap.blocks * terminal).cwiseAbs().maxCoeff();
    const double settle = tol.settle_rel * l_scale * x0_scale;
    if (out.terminal_residual > settle) {
        const double lambda2 = decompose(lap).smallest_positive();
        throw Error(ErrorCode::NotSettled,
                    "trajectory has not settled (residual " +
                        std::to_string(out.terminal_residual) + "); suggested horizon " +
                        std::to_string(lambda2 > 0.0 ? 10.0 / lambda2 : 10.0));
    }

    const int d = lap.dim;
    const int n = lap.num_nodes;
    const double tol_zero = tol.zero_rel * x0_scale;
    if (terminal.cwiseAbs().maxCoeff() <= tol_zero) {
        out.kind = SolutionKind::Trivial;
        return out;
    }

    out.agree_tolerance = tol.agree_rel * terminal.cwiseAbs().maxCoeff();
    // Gauge recovery: anchor on the first node block above the zero floor and
    // compare every block against +/- it.
    int anchor = -1;
    for (int i = 0; i < n && anchor < 0; ++i)
        if (terminal.segment(i * d, d).cwiseAbs().maxCoeff() > tol_zero) anchor = i;
    const Vector ref = terminal.segment(anchor * d, d);

    out.signs.assign(n, 1);
    bool gauge_form = anchor == 0;
    for (int i = 0; i < n && gauge_form; ++i) {
        const Vector block = terminal.segment(i * d, d);
        if ((block - ref).cwiseAbs().maxCoeff() <= out.agree_tolerance)
            out.signs[i] = 1;
        else if ((block + ref).cwiseAbs().maxCoeff() <= out.agree_tolerance)
            out.signs[i] = -1;
        else
            gauge_form = false;
    }
    if (!gauge_form) {
        out.kind = SolutionKind::Cluster;
        out.signs.clear();
        return out;
    }
    const bool identity =
        std::all_of(out.signs.begin(), out.signs.end(), [](int s) { return s == 1; });
    out.kind = identity ? SolutionKind::Consensus : SolutionKind::Bipartite;
    return out;
}

std::string trajectory_csv(const Trajectory& traj, const MatrixWeightedGraph& g) {
    const int d = g.dim;
    std::ostringstream os;
    os.precision(17);
    os << "t";
    for (int i = 0; i < g.num_nodes(); ++i)
        for (int k = 0; k < d; ++k) os << ",node" << g.node_ids[i] << "_" << k;
    os << "\n";
    for (std::size_t row = 0; row < traj.times.size(); ++row) {
        os << traj.times[row];
        for (int j = 0; j < traj.states.rows(); ++j) os << "," << traj.states(j, row);
        os << "\n";
    }
    return os.str();
}

}  // namespace mwnet
