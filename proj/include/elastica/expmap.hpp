#pragma once
#include "elastica/phase.hpp"

#include <string>
#include <vector>

namespace elastica {

/// Element q = (x, y, theta) of E(2).
struct State {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;  ///< normalized to (-pi, pi]
};

enum class ElasticaClass {
    Line,
    InflectionalSmallK,
    Rectangular,
    InflectionalMidK,
    FigureEight,
    InflectionalLargeK,
    Critical,
    NonInflectional,
    Circle,
};

std::string to_string(ElasticaClass c);

/// Endpoint of the extremal with initial covector lam at time t >= 0.
State exp_map(const Covector& lam, double t, double tol = kDefaultStratTol);

/// n uniformly spaced points of the elastica on [0, t1].
std::vector<State> sample_elastica(const Covector& lam, double t1, int n, double tol = kDefaultStratTol);

/// Class tolerance applies to the thresholds 1/sqrt(2) and k0.
ElasticaClass classify(const Covector& lam, double tol = kDefaultStratTol, double class_tol = 1e-9);

/// J = 1/2 int_0^t c_s^2 ds from closed-form antiderivatives.
double elastic_energy_closed(const Covector& lam, double t, double tol = kDefaultStratTol);

} // namespace elastica
