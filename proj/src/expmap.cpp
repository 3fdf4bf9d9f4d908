#include "elastica/expmap.hpp"
#include "elastica/elliptic.hpp"
#include "elastica/errors.hpp"
#include "elastica/maxwell.hpp"

#include <cmath>
#include <numbers>

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;

// Reflection i: (beta, c) -> (-beta, -c) on covectors, (theta, x, y) -> (-theta, x, -y) on states.
Covector invert(const Covector& lam) { return {wrap_angle(-lam.beta), -lam.c, lam.r}; }
State invert(const State& q) { return {q.x, -q.y, wrap_angle(-q.theta)}; }

// Endpoint for N1 written with a generic modulus m. N2+ is the same
// expression at m = 1/k, with A, B evaluated by the reciprocal transform.
State inflectional(double m, const JacobiValues& A, const JacobiValues& B, double sr, double t)
{
    const double m2 = m * m;
    const double s = m * A.dn * B.sn - m * A.sn * B.dn;
    const double c = A.dn * B.dn + m2 * A.sn * B.sn;
    const double dE = B.eps - A.eps;
    State q;
    q.theta = wrap_angle(2.0 * std::atan2(s, c));
    q.x = 2.0 / sr * A.dn * A.dn * dE
        + 4.0 * m2 / sr * A.dn * A.sn * (A.cn - B.cn)
        + 2.0 * m2 / sr * A.sn * A.sn * (sr * t - dE) - t;
    q.y = 2.0 * m / sr * (2.0 * A.dn * A.dn - 1.0) * (A.cn - B.cn)
        - 2.0 * m / sr * A.sn * A.dn * (2.0 * dE - sr * t);
    return q;
}

State critical(double A, double sr, double t)
{
    const double B = A + sr * t;
    const double tA = std::tanh(A), tB = std::tanh(B);
    const double hA = 1.0 / std::cosh(A), hB = 1.0 / std::cosh(B);
    State q;
    q.theta = wrap_angle(2.0 * std::atan2(tB * hA - tA * hB, hA * hB + tA * tB));
    q.x = 2.0 / sr * (2.0 * hA * hA - 1.0) * (tB - tA)
        + 4.0 / sr * tA * hA * (hA - hB)
        + (2.0 * tA * tA - 1.0) * t;
    q.y = 2.0 / sr * (2.0 * hA * hA - 1.0) * (hA - hB)
        - 2.0 / sr * tA * hA * (2.0 * (tB - tA) - sr * t);
    return q;
}

// Precomputed data for evaluating Exp_t(lam) at many t.
struct Extremal {
    Stratum stratum;
    Covector lam;
    double sr = 0.0;
    double k = 0.0;
    double a = 0.0;      // sqrt(r) phi on the plus representative
    JacobiValues A;      // values at a with the stratum's modulus
    bool inverted = false;

    Extremal(const Covector& l, double tol) : stratum(stratify(l, tol)), lam(l)
    {
        if (stratum == Stratum::N2minus || stratum == Stratum::N3minus) {
            inverted = true;
            lam = invert(l);
            stratum = stratum == Stratum::N2minus ? Stratum::N2plus : Stratum::N3plus;
        }
        if (stratum == Stratum::N1 || stratum == Stratum::N2plus || stratum == Stratum::N3plus) {
            EllipticCoords ec = to_elliptic(lam, tol);
            // keep the stratum fixed under the inversion even if tolerances disagree
            ec.stratum = stratum;
            sr = std::sqrt(ec.r);
            k = ec.k;
            if (stratum == Stratum::N1) {
                a = sr * ec.phi;
                A = jacobi(a, k);
            } else if (stratum == Stratum::N2plus) {
                a = sr * k * ec.phi;
                A = jacobi_recip_modulus(a, k);
            } else {
                a = sr * ec.phi;
            }
        }
    }

    double modulus() const { return stratum == Stratum::N1 ? k : 1.0 / k; }

    JacobiValues at(double t) const
    {
        const double b = a + sr * t;
        return stratum == Stratum::N1 ? jacobi(b, k) : jacobi_recip_modulus(b, k);
    }

    State endpoint(double t) const
    {
        State q;
        if (t == 0.0) return q;
        if (is_line(stratum)) {
            q.x = t;
        } else if (is_N6(stratum)) {
            const double c = lam.c;
            q.theta = wrap_angle(c * t);
            q.x = std::sin(c * t) / c;
            q.y = (1.0 - std::cos(c * t)) / c;
        } else if (stratum == Stratum::N3plus) {
            q = critical(a, sr, t);
        } else {
            q = inflectional(modulus(), A, at(t), sr, t);
        }
        return inverted ? invert(q) : q;
    }

    double energy_J(double t) const
    {
        if (is_line(stratum)) return 0.0;
        if (is_N6(stratum)) return 0.5 * lam.c * lam.c * t;
        if (stratum == Stratum::N3plus) return 2.0 * sr * (std::tanh(a + sr * t) - std::tanh(a));
        const double m = modulus();
        const JacobiValues B = at(t);
        return 2.0 * sr * sr * ((B.eps - A.eps) / sr - (1.0 - m * m) * t);
    }
};

} // namespace

std::string to_string(ElasticaClass c)
{
    switch (c) {
    case ElasticaClass::Line: return "Line";
    case ElasticaClass::InflectionalSmallK: return "InflectionalSmallK";
    case ElasticaClass::Rectangular: return "Rectangular";
    case ElasticaClass::InflectionalMidK: return "InflectionalMidK";
    case ElasticaClass::FigureEight: return "FigureEight";
    case ElasticaClass::InflectionalLargeK: return "InflectionalLargeK";
    case ElasticaClass::Critical: return "Critical";
    case ElasticaClass::NonInflectional: return "NonInflectional";
    case ElasticaClass::Circle: return "Circle";
    }
    return "?";
}

State exp_map(const Covector& lam, double t, double tol)
{
    if (!(t >= 0.0)) throw DomainError("exp_map: t must be non-negative");
    return Extremal(lam, tol).endpoint(t);
}

std::vector<State> sample_elastica(const Covector& lam, double t1, int n, double tol)
{
    if (n < 2) throw DomainError("sample_elastica: need n >= 2");
    if (!(t1 > 0.0)) throw DomainError("sample_elastica: t1 must be positive");
    const Extremal ext(lam, tol);
    std::vector<State> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = ext.endpoint(t1 * i / (n - 1));
    return out;
}

ElasticaClass classify(const Covector& lam, double tol, double class_tol)
{
    const Stratum s = stratify(lam, tol);
    if (is_line(s)) return ElasticaClass::Line;
    if (is_N6(s)) return ElasticaClass::Circle;
    if (is_N3(s)) return ElasticaClass::Critical;
    if (is_N2(s)) return ElasticaClass::NonInflectional;
    const double k = to_elliptic(lam, tol).k;
    const double kr = 1.0 / std::numbers::sqrt2;
    const double k0 = find_k0();
    if (std::abs(k - kr) <= class_tol) return ElasticaClass::Rectangular;
    if (std::abs(k - k0) <= class_tol) return ElasticaClass::FigureEight;
    if (k < kr) return ElasticaClass::InflectionalSmallK;
    if (k < k0) return ElasticaClass::InflectionalMidK;
    return ElasticaClass::InflectionalLargeK;
}

double elastic_energy_closed(const Covector& lam, double t, double tol)
{
    if (!(t >= 0.0)) throw DomainError("elastic_energy_closed: t must be non-negative");
    return Extremal(lam, tol).energy_J(t);
}

} // namespace elastica
