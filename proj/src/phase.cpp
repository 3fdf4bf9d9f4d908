#include "elastica/phase.hpp"
#include "elastica/elliptic.hpp"
#include "elastica/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;

double reduce(double x, double period)
{
    double y = std::fmod(x, period);
    if (y < 0.0) y += period;
    if (y >= period) y -= period;
    return y;
}

bool minus_branch(Stratum s)
{
    return s == Stratum::N2minus || s == Stratum::N3minus || s == Stratum::N6minus;
}

} // namespace

std::string to_string(Stratum s)
{
    switch (s) {
    case Stratum::N1: return "N1";
    case Stratum::N2plus: return "N2plus";
    case Stratum::N2minus: return "N2minus";
    case Stratum::N3plus: return "N3plus";
    case Stratum::N3minus: return "N3minus";
    case Stratum::N4: return "N4";
    case Stratum::N5: return "N5";
    case Stratum::N6plus: return "N6plus";
    case Stratum::N6minus: return "N6minus";
    case Stratum::N7: return "N7";
    }
    return "?";
}

Stratum stratum_from_string(const std::string& s)
{
    for (Stratum t : {Stratum::N1, Stratum::N2plus, Stratum::N2minus, Stratum::N3plus, Stratum::N3minus,
                      Stratum::N4, Stratum::N5, Stratum::N6plus, Stratum::N6minus, Stratum::N7})
        if (to_string(t) == s) return t;
    throw DomainError("unknown stratum '" + s + "'");
}

double wrap_angle(double a)
{
    double y = std::remainder(a, 2.0 * kPi);
    if (y <= -kPi) y += 2.0 * kPi;
    return y;
}

double energy(const Covector& lam)
{
    return 0.5 * lam.c * lam.c - lam.r * std::cos(lam.beta);
}

std::array<double, 3> to_h(const Covector& lam)
{
    return {-lam.r * std::cos(lam.beta), lam.c, -lam.r * std::sin(lam.beta)};
}

Stratum stratify(const Covector& lam, double tol)
{
    const double atol = tol * std::max({lam.r, lam.c * lam.c, 1.0});
    if (lam.r <= atol) {
        if (std::abs(lam.c) > atol) return lam.c > 0.0 ? Stratum::N6plus : Stratum::N6minus;
        return Stratum::N7;
    }
    const double E = energy(lam);
    if (std::abs(E + lam.r) <= atol) return Stratum::N4;
    if (std::abs(E - lam.r) <= atol) {
        if (lam.c == 0.0 || std::abs(wrap_angle(lam.beta - kPi)) <= tol) return Stratum::N5;
        return lam.c > 0.0 ? Stratum::N3plus : Stratum::N3minus;
    }
    if (E < lam.r) return Stratum::N1;
    return lam.c > 0.0 ? Stratum::N2plus : Stratum::N2minus;
}

EllipticCoords to_elliptic(const Covector& lam, double tol)
{
    EllipticCoords ec;
    ec.stratum = stratify(lam, tol);
    ec.r = lam.r;
    const double sr = std::sqrt(lam.r);
    const double E = energy(lam);
    switch (ec.stratum) {
    case Stratum::N1: {
        ec.k = std::clamp(std::sqrt((E + lam.r) / (2.0 * lam.r)), 0.0, 1.0);
        const double am = std::atan2(2.0 * sr * std::sin(0.5 * lam.beta), lam.c);
        const double a = ellint_F_inc(am, ec.k);
        ec.phi = reduce(a, 4.0 * ellint_K(ec.k)) / sr;
        return ec;
    }
    case Stratum::N2plus:
    case Stratum::N2minus: {
        ec.k = std::clamp(std::sqrt(2.0 * lam.r / (E + lam.r)), 0.0, 1.0);
        const double am = minus_branch(ec.stratum) ? -0.5 * lam.beta : 0.5 * lam.beta;
        ec.phi = reduce(ellint_F_inc(am, ec.k), 2.0 * ellint_K(ec.k)) / sr;
        return ec;
    }
    case Stratum::N3plus:
    case Stratum::N3minus: {
        ec.k = 1.0;
        const double a = std::asinh(std::tan(0.5 * lam.beta));
        ec.phi = (minus_branch(ec.stratum) ? -a : a) / sr;
        return ec;
    }
    default:
        throw UnsupportedStratum("to_elliptic: stratum " + to_string(ec.stratum) + " has no elliptic coordinates");
    }
}

Covector from_elliptic(const EllipticCoords& ec)
{
    if (!(ec.r > 0.0)) throw DomainError("from_elliptic: r must be positive");
    const double sr = std::sqrt(ec.r);
    Covector lam;
    lam.r = ec.r;
    switch (ec.stratum) {
    case Stratum::N1: {
        if (!(ec.k > 0.0 && ec.k < 1.0)) throw DomainError("from_elliptic: N1 needs k in (0, 1)");
        const JacobiValues j = jacobi(sr * ec.phi, ec.k);
        lam.beta = wrap_angle(2.0 * std::atan2(ec.k * j.sn, j.dn));
        lam.c = 2.0 * ec.k * sr * j.cn;
        return lam;
    }
    case Stratum::N2plus:
    case Stratum::N2minus: {
        if (!(ec.k > 0.0 && ec.k < 1.0)) throw DomainError("from_elliptic: N2 needs k in (0, 1)");
        const double s = minus_branch(ec.stratum) ? -1.0 : 1.0;
        const JacobiValues j = jacobi(sr * ec.phi, ec.k);
        lam.beta = wrap_angle(2.0 * s * std::atan2(j.sn, j.cn));
        lam.c = 2.0 * s * sr / ec.k * j.dn;
        return lam;
    }
    case Stratum::N3plus:
    case Stratum::N3minus: {
        const double s = minus_branch(ec.stratum) ? -1.0 : 1.0;
        const double a = sr * ec.phi;
        lam.beta = 2.0 * s * std::atan(std::sinh(a));
        lam.c = 2.0 * s * sr / std::cosh(a);
        return lam;
    }
    default:
        throw UnsupportedStratum("from_elliptic: stratum " + to_string(ec.stratum) + " has no elliptic coordinates");
    }
}

double period(const EllipticCoords& ec)
{
    const double sr = std::sqrt(ec.r);
    switch (ec.stratum) {
    case Stratum::N1: return 4.0 * ellint_K(ec.k) / sr;
    case Stratum::N2plus:
    case Stratum::N2minus: return 2.0 * ellint_K(ec.k) * ec.k / sr;
    case Stratum::N3plus:
    case Stratum::N3minus: return std::numeric_limits<double>::infinity();
    default: throw UnsupportedStratum("period: stratum " + to_string(ec.stratum));
    }
}

double period(const Covector& lam, double tol)
{
    const Stratum s = stratify(lam, tol);
    if (is_N6(s)) return 2.0 * kPi / std::abs(lam.c);
    return period(to_elliptic(lam, tol));
}

Covector flow_vertical(const Covector& lam, double t, double tol)
{
    const Stratum s = stratify(lam, tol);
    if (is_line(s)) return lam;
    if (is_N6(s)) return {wrap_angle(lam.beta + lam.c * t), lam.c, lam.r};
    EllipticCoords ec = to_elliptic(lam, tol);
    const double sr = std::sqrt(ec.r);
    if (s == Stratum::N1)
        ec.phi = reduce(ec.phi + t, 4.0 * ellint_K(ec.k) / sr);
    else if (is_N2(s))
        ec.phi = reduce(ec.phi + t / ec.k, 2.0 * ellint_K(ec.k) / sr);
    else
        ec.phi += t;
    return from_elliptic(ec);
}

} // namespace elastica
