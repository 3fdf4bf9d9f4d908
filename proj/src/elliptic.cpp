#include "elastica/elliptic.hpp"
#include "elastica/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kLandenCap = 32;
constexpr double kLandenEps = 1e-15;

void check_modulus(double k, const char* who)
{
    if (!(k >= 0.0 && k <= 1.0))
        throw DomainError(std::string(who) + ": modulus outside [0, 1]");
}

// Arithmetic-geometric mean sequence a_n, b_n, c_n with a_0 = 1, b_0 = k'.
struct Agm {
    std::array<double, kLandenCap + 1> a{};
    std::array<double, kLandenCap + 1> c{};
    int n = 0;
};

Agm agm_sequence(double k)
{
    Agm s;
    double a = 1.0, b = kcomplement(k);
    s.a[0] = a;
    s.c[0] = k;
    int i = 0;
    while (i < kLandenCap && std::abs(s.c[i]) > kLandenEps * s.a[i]) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        ++i;
        s.c[i] = 0.5 * (a - b);
        s.a[i] = an;
        a = an;
        b = bn;
    }
    s.n = i;
    return s;
}

// F and E on [0, pi/2] by the AGM with phase doubling.
void incomplete_reduced(double phi, double k, double& F, double& E)
{
    if (phi == 0.0) {
        F = E = 0.0;
        return;
    }
    if (k == 0.0) {
        F = E = phi;
        return;
    }
    if (k == 1.0) {
        F = std::atanh(std::sin(phi));
        E = std::sin(phi);
        return;
    }
    const double Kk = ellint_K(k);
    const double Ek = ellint_E(k);
    if (phi == 0.5 * kPi) {
        F = Kk;
        E = Ek;
        return;
    }
    double a = 1.0, b = kcomplement(k), p = phi;
    double sum = 0.0, scale = 1.0;
    for (int i = 0; i < kLandenCap; ++i) {
        const double s = std::sin(p), co = std::cos(p);
        p = 2.0 * p + std::atan((b - a) * s * co / (a * co * co + b * s * s));
        const double c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        scale *= 2.0;
        sum += c * std::sin(p);
        if (std::abs(c) <= kLandenEps * a) break;
    }
    F = p / (scale * a);
    E = Ek / Kk * F + sum;
}

} // namespace

double kcomplement(double k)
{
    return std::sqrt((1.0 - k) * (1.0 + k));
}

double ellint_K(double k)
{
    check_modulus(k, "ellint_K");
    if (k == 1.0) throw DivergenceError("ellint_K: diverges at k = 1");
    double a = 1.0, b = kcomplement(k);
    for (int i = 0; i < kLandenCap && std::abs(a - b) > kLandenEps * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (2.0 * a);
}

double ellint_E(double k)
{
    check_modulus(k, "ellint_E");
    if (k == 1.0) return 1.0;
    if (k == 0.0) return 0.5 * kPi;
    double a = 1.0, b = kcomplement(k);
    double sum = 0.5 * k * k, w = 0.5;
    for (int i = 0; i < kLandenCap && std::abs(a - b) > kLandenEps * a; ++i) {
        const double c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        w *= 2.0;
        sum += w * c * c;
    }
    return kPi / (2.0 * a) * (1.0 - sum);
}

double ellint_dK_dk(double k)
{
    if (!(k > 0.0 && k < 1.0)) throw DomainError("ellint_dK_dk: k outside (0, 1)");
    const double kp2 = (1.0 - k) * (1.0 + k);
    return (ellint_E(k) - kp2 * ellint_K(k)) / (k * kp2);
}

double ellint_dE_dk(double k)
{
    if (!(k > 0.0 && k < 1.0)) throw DomainError("ellint_dE_dk: k outside (0, 1)");
    return (ellint_E(k) - ellint_K(k)) / k;
}

double ellint_F_inc(double phi, double k)
{
    check_modulus(k, "ellint_F_inc");
    const double n = std::round(phi / kPi);
    double v = phi - n * kPi;
    if (k == 1.0) {
        if (std::abs(phi) >= 0.5 * kPi) throw DivergenceError("ellint_F_inc: diverges for k = 1, |phi| >= pi/2");
        return std::atanh(std::sin(phi));
    }
    const double sgn = v < 0.0 ? -1.0 : 1.0;
    v = std::min(std::abs(v), 0.5 * kPi);
    double F, E;
    incomplete_reduced(v, k, F, E);
    return sgn * F + (n != 0.0 ? 2.0 * n * ellint_K(k) : 0.0);
}

double ellint_E_inc(double phi, double k)
{
    check_modulus(k, "ellint_E_inc");
    const double n = std::round(phi / kPi);
    double v = phi - n * kPi;
    const double sgn = v < 0.0 ? -1.0 : 1.0;
    v = std::min(std::abs(v), 0.5 * kPi);
    double F, E;
    incomplete_reduced(v, k, F, E);
    return sgn * E + (n != 0.0 ? 2.0 * n * ellint_E(k) : 0.0);
}

JacobiValues jacobi(double u, double k)
{
    check_modulus(k, "jacobi");
    JacobiValues r;
    if (k == 0.0) {
        r.sn = std::sin(u);
        r.cn = std::cos(u);
        r.dn = 1.0;
        r.am = u;
        r.eps = u;
        return r;
    }
    if (k == 1.0) {
        r.sn = std::tanh(u);
        r.cn = r.dn = 1.0 / std::cosh(u);
        r.am = std::atan(std::sinh(u));
        r.eps = r.sn;
        return r;
    }

    const double Kk = ellint_K(k);
    const double Ek = ellint_E(k);
    const double n = std::round(u / (2.0 * Kk));
    const double w = u - 2.0 * n * Kk;

    const Agm s = agm_sequence(k);
    std::array<double, kLandenCap + 1> phi{};
    double scale = std::ldexp(1.0, s.n);
    phi[s.n] = scale * s.a[s.n] * w;
    for (int i = s.n; i > 0; --i)
        phi[i - 1] = 0.5 * (phi[i] + std::asin(s.c[i] / s.a[i] * std::sin(phi[i])));

    double sum = 0.0;
    for (int i = 1; i <= s.n; ++i) sum += s.c[i] * std::sin(phi[i]);

    const double sn = std::sin(phi[0]);
    const double cn = std::cos(phi[0]);
    // the Landen ratio is 0/0 at odd multiples of K; take whichever of the two
    // forms of dn^2 has no cancellation
    const double ks2 = k * k * sn * sn;
    const double dn = ks2 < 0.5 ? std::sqrt(1.0 - ks2) : std::sqrt((1.0 - k) * (1.0 + k) + k * k * cn * cn);
    const double sign = std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0;
    r.sn = sign * sn;
    r.cn = sign * cn;
    r.dn = dn;
    r.am = phi[0] + n * kPi;
    r.eps = Ek / Kk * w + sum + 2.0 * n * Ek;
    return r;
}

JacobiValues recip_transform(const JacobiValues& v, double w, double k)
{
    if (!(k > 0.0)) throw DomainError("recip_transform: k must be positive");
    JacobiValues r;
    r.sn = k * v.sn;
    r.cn = v.dn;
    r.dn = v.cn;
    r.am = std::atan2(r.sn, r.cn);
    r.eps = v.eps / k - (1.0 - k * k) / k * w;
    return r;
}

JacobiValues jacobi_recip_modulus(double u, double k)
{
    if (!(k > 0.0 && k <= 1.0)) throw DomainError("jacobi_recip_modulus: k outside (0, 1]");
    const double w = u / k;
    return recip_transform(jacobi(w, k), w, k);
}

JacobiValues jacobi_add(double u, double v, double k)
{
    const JacobiValues a = jacobi(u, k);
    const JacobiValues b = jacobi(v, k);
    const double k2 = k * k;
    const double D = 1.0 - k2 * a.sn * a.sn * b.sn * b.sn;
    if (D == 0.0) throw DomainError("jacobi_add: singular denominator");
    JacobiValues r;
    r.sn = (a.sn * b.cn * b.dn + a.cn * a.dn * b.sn) / D;
    r.cn = (a.cn * b.cn - a.sn * a.dn * b.sn * b.dn) / D;
    r.dn = (a.dn * b.dn - k2 * a.sn * a.cn * b.sn * b.cn) / D;
    r.eps = a.eps + b.eps - k2 * a.sn * b.sn * r.sn;
    // am(u+v) stays within pi/2 of its secular part pi (u+v) / (2K).
    const double base = std::atan2(r.sn, r.cn);
    const double secular = k < 1.0 ? 0.5 * kPi * (u + v) / ellint_K(k) : a.am + b.am;
    r.am = base + 2.0 * kPi * std::round((secular - base) / (2.0 * kPi));
    return r;
}

JacobiDerivsK jacobi_derivs_k(double u, double k)
{
    if (!(k > 0.0 && k < 1.0)) throw DomainError("jacobi_derivs_k: k outside (0, 1)");
    const JacobiValues j = jacobi(u, k);
    const double kp2 = (1.0 - k) * (1.0 + k);
    const double sn = j.sn, cn = j.cn, dn = j.dn, E = j.eps;
    JacobiDerivsK d;
    d.dsn_dk = u * cn * dn / k + k / kp2 * sn * cn * cn - E * cn * dn / (k * kp2);
    d.dcn_dk = -u * sn * dn / k - k / kp2 * sn * sn * cn + E * sn * dn / (k * kp2);
    d.ddn_dk = -k / kp2 * sn * sn * dn - k * u * sn * cn + k / kp2 * E * sn * cn;
    d.deps_dk = k / kp2 * sn * cn * dn - k * u * sn * sn - k / kp2 * E * cn * cn;
    return d;
}

} // namespace elastica
