#pragma once
#include "elastica/phase.hpp"

#include <set>
#include <string>

namespace elastica {

enum class MaxwellStratum { MAX1, MAX2, MAX3plus, MAX3minus };

std::string to_string(MaxwellStratum m);

constexpr double kDefaultMaxwellTol = 1e-9;

/// First Maxwell times per reflection and the cut-time bound; +inf where absent.
struct MaxwellReport {
    Stratum stratum = Stratum::N7;
    double t1_max1 = 0.0;
    double t1_max2 = 0.0;
    double t1_max3plus = 0.0;
    double t1_max3minus = 0.0;
    double bound = 0.0;
    /// N1 covector with cn(tau) sn(tau) = 0 at t = bound; the bound then
    /// rests on conjugate points rather than on a Maxwell point.
    bool caveat = false;
};

double f1(double p, double k);
double f2(double p, double k);
double g1_N1(double p, double k);
double g1_N2(double p, double k);
double a1(double u, double k);
double h1(double u, double k);
/// Throws DomainError at a zero of 1 - k^2 + k^2 cos^4 u.
double h2(double u, double k);
double dh2_du(double u, double k);
double compat_N1(double u, double k);

/// Unique root of 2E(k) - K(k) on (1/sqrt 2, 1). Cached.
double find_k0();

struct KStar {
    double kstar = 0.0;
    double ustar = 0.0;
};
/// Largest root of h1(pi - u_a1(k), k) below k0. Cached.
KStar find_kstar();

/// n-th root of f1 (n = 0 gives 0, odd in n).
double p1_roots(double k, int n);
double u_a1(double k);
double u_h1(double k);
double p_g1(double k);

std::set<MaxwellStratum> in_maxwell(const Covector& lam, double t, double tol = kDefaultMaxwellTol,
                                    double strat_tol = kDefaultStratTol);

MaxwellReport cut_time_bound(const Covector& lam, double tol = kDefaultMaxwellTol,
                             double strat_tol = kDefaultStratTol);

} // namespace elastica
