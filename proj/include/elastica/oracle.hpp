#pragma once
#include "elastica/expmap.hpp"
#include "elastica/maxwell.hpp"
#include "elastica/phase.hpp"

#include <functional>
#include <string>
#include <vector>

namespace elastica {

struct IntegratorConfig {
    double step = 1e-4;
    long max_steps = 100'000'000;
};

struct ExtremalSolution {
    State q;
    Covector lam;
    double J = 0.0;
};

/// Fixed-step RK4 on the full Hamiltonian system with J as a seventh state.
ExtremalSolution integrate_extremal(const Covector& lam, double t, const IntegratorConfig& cfg = {});

/// Adaptive Simpson quadrature of the elliptic integrands, phi in [0, pi/2].
double quad_F(double phi, double k, double tol = 1e-13, int depth = 60);
double quad_E(double phi, double k, double tol = 1e-13, int depth = 60);

/// Adaptive Simpson on [a, b]; exposed for energy checks.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13, int depth = 60);

/// True iff q1 lies in the attainable set at time t1 from the identity.
bool attainable(const State& q1, double t1);

struct BvpSolution {
    Covector lam;
    Stratum stratum = Stratum::N7;
    double J = 0.0;
    double residual = 0.0;
    double bound = 0.0;
    bool optimal_candidate = false;  ///< t1 <= bound
};

struct BvpConfig {
    int starts = 0;      ///< number of grid starts to use, 0 for all
    int jobs = 1;        ///< worker threads
    double tol = 1e-9;   ///< accepted residual
    int max_iter = 60;
    double merge = 1e-6;
};

struct BvpResult {
    std::vector<BvpSolution> solutions;
    int starts_tried = 0;
    int converged = 0;
    std::string diagnostics;
};

/// Multistart damped Newton on Exp_{t1}(lam) = q1 over (beta, c, r).
BvpResult bvp_shoot(const State& q1, double t1, const BvpConfig& cfg = {});

/// The grid of initial guesses in its fixed order.
std::vector<Covector> bvp_start_grid();

} // namespace elastica
