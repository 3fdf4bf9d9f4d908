#pragma once
#include "elastica/expmap.hpp"
#include "elastica/phase.hpp"

namespace elastica {

/// Reflections eps^1, eps^2, eps^3; together with Id they form the group D2.
enum class Reflection { Eps1 = 1, Eps2 = 2, Eps3 = 3 };

/// eps^i eps^j for i != j is the third reflection.
Reflection compose(Reflection a, Reflection b);

/// Midpoint coordinates: tau is the rectified midpoint, p half the rectified length.
struct MaxwellCoords {
    double tau = 0.0;
    double p = 0.0;
};

State reflect_state(Reflection i, const State& q);
Covector reflect_covector(Reflection i, const Covector& lam, double t, double tol = kDefaultStratTol);

/// Uses the representative theta/2 in (-pi/2, pi/2]; only the zero sets and
/// the absolute values are independent of that choice.
double P_of(const State& q);
double Q_of(const State& q);

/// Fixed point test in M. For eps^3 the branch is reported through `minus`
/// (true for the component theta = pi).
bool is_fixed_state(Reflection i, const State& q, double tol, bool* minus = nullptr);

/// Fixed point test in N, using the per-stratum conditions on tau.
bool is_fixed_covector(Reflection i, const Covector& lam, double t, double tol, double strat_tol = kDefaultStratTol);

MaxwellCoords maxwell_coords(const Covector& lam, double t, double tol = kDefaultStratTol);

} // namespace elastica
