#pragma once
#include <functional>

namespace elastica {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
};

/// Brent's method on a bracket [a, b] with f(a) f(b) <= 0.
/// Throws ConvergenceError if the bracket has no sign change.
RootResult brent(const std::function<double(double)>& f, double a, double b,
                 double xtol = 1e-15, int max_iter = 200);

} // namespace elastica
