#pragma once

#include "mwnet/spectral.hpp"

namespace mwnet {

enum class IntegrationMethod { ExactSpectral, Rk4 };

struct Trajectory {
    std::vector<double> times;  ///< uniform grid including t = 0 and t = horizon
    Matrix states;              ///< dN x (steps+1), one column per stamp
    IntegrationMethod method = IntegrationMethod::ExactSpectral;

    Vector terminal() const { return states.col(states.cols() - 1); }
};

/// Integrates xdot = -L x on [0, horizon]. The exact method evaluates
/// Q e^{-Lambda t} Q^T x0; RK4 uses a fixed step and rejects
/// step > 2 / lambda_max (Error{StepTooLarge}).
Trajectory integrate(const Laplacian& lap, const Vector& x0, double horizon, int steps,
                     IntegrationMethod method);

struct OutcomeTolerances {
    double zero_rel = 1e-7;    ///< tol_zero = zero_rel * ||x0||_inf
    double agree_rel = 1e-6;   ///< tol_agree = agree_rel * ||x(T)||_inf
    double settle_rel = 1e-8;  ///< settle = settle_rel * ||L||_inf * ||x0||_inf
};

struct OutcomeLabel {
    SolutionKind kind = SolutionKind::Trivial;
    std::vector<int> signs;  ///< per node, for Bipartite (all +1 for Consensus)
    double terminal_residual = 0.0;
    double agree_tolerance = 0.0;
};

/// Labels the terminal state. Throws Error{NotSettled} (message carries the
/// suggested horizon 10/lambda_2) when ||L x(T)||_inf is above the settle
/// tolerance.
OutcomeLabel classify_outcome(const Laplacian& lap, const Trajectory& traj, const Vector& x0,
                              const OutcomeTolerances& tol = {});

/// Default horizon 30 / lambda_2 with lambda_2 the smallest nonzero eigenvalue;
/// falls back to `fallback` for zero Laplacians.
double default_horizon(const SpectralDecomposition& spec, double fallback = 1.0,
                       const Tolerances& tol = {});

/// CSV export: header "t,node<id>_<k>,...", one row per stamp.
std::string trajectory_csv(const Trajectory& traj, const MatrixWeightedGraph& g);

}  // namespace mwnet
