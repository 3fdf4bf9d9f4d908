#include "elastica/symmetry.hpp"
#include "elastica/elliptic.hpp"
#include "elastica/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;

double half_angle(double theta)
{
    double h = 0.5 * wrap_angle(theta);
    if (h <= -0.5 * kPi) h += kPi;
    return h;
}

} // namespace

Reflection compose(Reflection a, Reflection b)
{
    if (a == b) throw DomainError("compose: eps^i eps^i is the identity");
    return static_cast<Reflection>(6 - static_cast<int>(a) - static_cast<int>(b));
}

State reflect_state(Reflection i, const State& q)
{
    const double c = std::cos(q.theta), s = std::sin(q.theta);
    switch (i) {
    case Reflection::Eps1: return {q.x * c + q.y * s, -q.x * s + q.y * c, wrap_angle(-q.theta)};
    case Reflection::Eps2: return {q.x * c + q.y * s, q.x * s - q.y * c, q.theta};
    case Reflection::Eps3: return {q.x, -q.y, wrap_angle(-q.theta)};
    }
    return q;
}

Covector reflect_covector(Reflection i, const Covector& lam, double t, double tol)
{
    if (i == Reflection::Eps3) return {wrap_angle(-lam.beta), -lam.c, lam.r};
    const Covector f = flow_vertical(lam, t, tol);
    if (i == Reflection::Eps1) return {f.beta, -f.c, f.r};
    return {wrap_angle(-f.beta), f.c, f.r};
}

double P_of(const State& q)
{
    const double h = half_angle(q.theta);
    return q.x * std::sin(h) - q.y * std::cos(h);
}

double Q_of(const State& q)
{
    const double h = half_angle(q.theta);
    return q.x * std::cos(h) + q.y * std::sin(h);
}

bool is_fixed_state(Reflection i, const State& q, double tol, bool* minus)
{
    const double th = wrap_angle(q.theta);
    switch (i) {
    case Reflection::Eps1: return std::abs(th) < tol;
    case Reflection::Eps2: return std::abs(P_of(q)) < tol * std::max(1.0, std::hypot(q.x, q.y));
    case Reflection::Eps3: {
        if (std::abs(q.y) >= tol) return false;
        const bool plus = std::abs(th) < tol;
        const bool neg = std::abs(std::abs(th) - kPi) < tol;
        if (minus) *minus = neg;
        return plus || neg;
    }
    }
    return false;
}

MaxwellCoords maxwell_coords(const Covector& lam, double t, double tol)
{
    const EllipticCoords ec = to_elliptic(lam, tol);
    const double sr = std::sqrt(ec.r);
    MaxwellCoords m;
    if (is_N2(ec.stratum)) {
        m.p = sr * t / (2.0 * ec.k);
        m.tau = sr * ec.phi + m.p;
    } else {
        m.p = 0.5 * sr * t;
        m.tau = sr * ec.phi + m.p;
    }
    return m;
}

bool is_fixed_covector(Reflection i, const Covector& lam, double t, double tol, double strat_tol)
{
    const Stratum s = stratify(lam, strat_tol);
    if (is_line(s)) {
        // constant solutions: every reflection acts by (beta, c) -> (+-beta, +-c) on a rest point
        const Covector li = reflect_covector(i, lam, t, strat_tol);
        return std::abs(wrap_angle(li.beta - lam.beta)) < tol && std::abs(li.c - lam.c) < tol;
    }
    if (is_N6(s)) {
        if (i != Reflection::Eps2) return false;
        return std::abs(wrap_angle(2.0 * lam.beta + lam.c * t)) < tol;
    }
    const MaxwellCoords m = maxwell_coords(lam, t, strat_tol);
    if (is_N3(s)) return i == Reflection::Eps2 && std::abs(m.tau) < tol;
    const double k = to_elliptic(lam, strat_tol).k;
    const JacobiValues j = jacobi(m.tau, k);
    if (is_N2(s)) return i == Reflection::Eps2 && std::abs(j.sn * j.cn) < tol;
    if (i == Reflection::Eps1) return std::abs(j.cn) < tol;
    if (i == Reflection::Eps2) return std::abs(j.sn) < tol;
    return false;
}

} // namespace elastica
