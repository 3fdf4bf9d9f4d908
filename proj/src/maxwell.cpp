#include "elastica/maxwell.hpp"
#include "elastica/elliptic.hpp"
#include "elastica/errors.hpp"
#include "elastica/roots.hpp"
#include "elastica/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRect = 1.0 / std::numbers::sqrt2;
constexpr int kMaxwellSearch = 4;

void check_open(double k, const char* who)
{
    if (!(k > 0.0 && k < 1.0)) throw DomainError(std::string(who) + ": k outside (0, 1)");
}

double alpha(double k) { return h1(kPi - u_a1(k), k); }

} // namespace

std::string to_string(MaxwellStratum m)
{
    switch (m) {
    case MaxwellStratum::MAX1: return "MAX1";
    case MaxwellStratum::MAX2: return "MAX2";
    case MaxwellStratum::MAX3plus: return "MAX3plus";
    case MaxwellStratum::MAX3minus: return "MAX3minus";
    }
    return "?";
}

double f1(double p, double k)
{
    check_open(k, "f1");
    const JacobiValues j = jacobi(p, k);
    return j.sn * j.dn - (2.0 * j.eps - p) * j.cn;
}

double f2(double p, double k)
{
    check_open(k, "f2");
    const JacobiValues j = jacobi(p, k);
    return (k * k * j.sn * j.cn + j.dn * ((2.0 - k * k) * p - 2.0 * j.eps)) / k;
}

double g1_N1(double p, double k)
{
    check_open(k, "g1_N1");
    const JacobiValues j = jacobi(p, k);
    const double k2 = k * k, cn2 = j.cn * j.cn;
    return (1.0 - k2 + k2 * cn2 * cn2) * (2.0 * j.eps - p)
         + j.cn * j.sn * j.dn * (2.0 * k2 * j.sn * j.sn - 1.0);
}

double g1_N2(double p, double k)
{
    check_open(k, "g1_N2");
    const JacobiValues j = jacobi(p, k);
    const double k2 = k * k, sn2 = j.sn * j.sn;
    return (k2 * j.cn * j.sn * j.dn * (2.0 * sn2 - 1.0)
            + (1.0 - 2.0 * sn2 + k2 * sn2 * sn2) * (2.0 * j.eps - (2.0 - k2) * p)) / k;
}

double a1(double u, double k)
{
    const double k2 = k * k, k4 = k2 * k2;
    const double c0 = 8.0 - 10.0 * k2 + 4.0 * k4;
    const double c1 = 4.0 * k2 * (3.0 - 2.0 * k2);
    const double c2 = 2.0 * k2 * (2.0 * k2 - 1.0);
    const double t = std::cos(2.0 * u);
    return c0 + c1 * t + c2 * t * t;
}

double h1(double u, double k)
{
    const double k2 = k * k;
    const double s = std::sin(u), c = std::cos(u);
    return (1.0 - k2 + k2 * c * c * c * c) * (2.0 * ellint_E_inc(u, k) - ellint_F_inc(u, k))
         + c * s * std::sqrt(1.0 - k2 * s * s) * (2.0 * k2 * s * s - 1.0);
}

double h2(double u, double k)
{
    const double c = std::cos(u);
    const double w = 1.0 - k * k + k * k * c * c * c * c;
    if (w == 0.0) throw DomainError("h2: pole at 1 - k^2 + k^2 cos^4 u = 0");
    return h1(u, k) / w;
}

double dh2_du(double u, double k)
{
    const double k2 = k * k;
    const double s = std::sin(u), c = std::cos(u);
    const double w = 1.0 - k2 + k2 * c * c * c * c;
    return s * s * std::sqrt(2.0 - k2 + k2 * std::cos(2.0 * u)) / (4.0 * std::numbers::sqrt2 * w * w) * a1(u, k);
}

double compat_N1(double u, double k)
{
    const double s = std::sin(u);
    return 2.0 * k * k * s * s - 1.0;
}

double find_k0()
{
    static const double k0 = brent([](double k) { return 2.0 * ellint_E(k) - ellint_K(k); }, kRect, 0.99).x;
    return k0;
}

KStar find_kstar()
{
    static const KStar ks = [] {
        const double k0 = find_k0();
        constexpr double step = 1e-3;
        double hi = k0, a_hi = alpha(k0);
        for (double lo = k0 - step; lo > kRect; lo -= step) {
            const double a_lo = alpha(lo);
            if (a_hi < 0.0 && a_lo >= 0.0) {
                KStar r;
                r.kstar = brent(alpha, lo, hi).x;
                r.ustar = kPi - u_a1(r.kstar);
                for (double k = k0; k > r.kstar; k -= step)
                    if (!(alpha(k) < 0.0)) throw ConvergenceError("find_kstar: alpha changes sign above k*");
                return r;
            }
            hi = lo;
            a_hi = a_lo;
        }
        throw ConvergenceError("find_kstar: no sign change of alpha below k0");
    }();
    return ks;
}

double p1_roots(double k, int n)
{
    check_open(k, "p1_roots");
    if (n == 0) return 0.0;
    if (n < 0) return -p1_roots(k, -n);
    const double K = ellint_K(k);
    const double k0 = find_k0();
    const double base = 2.0 * K * n;
    if (std::abs(k - k0) < 1e-14) return base;
    auto f = [k](double p) { return f1(p, k); };
    const double lo = k < k0 ? base : base - K;
    const double hi = k < k0 ? base + K : base;
    return brent(f, lo, hi).x;
}

double u_a1(double k)
{
    if (!(k >= kRect - 1e-15 && k <= 1.0)) throw DomainError("u_a1: k outside [1/sqrt 2, 1]");
    const double k2 = k * k, k4 = k2 * k2;
    const double c0 = 8.0 - 10.0 * k2 + 4.0 * k4;
    const double c1 = 4.0 * k2 * (3.0 - 2.0 * k2);
    const double c2 = 2.0 * k2 * (2.0 * k2 - 1.0);
    // small root of c0 + c1 t + c2 t^2 in the cancellation-free form
    const double q = -0.5 * (c1 + std::sqrt(std::max(c1 * c1 - 4.0 * c0 * c2, 0.0)));
    const double t = std::clamp(c0 / q, -1.0, 1.0);
    return 0.5 * std::acos(t);
}

double u_h1(double k)
{
    const KStar ks = find_kstar();
    if (!(k >= ks.kstar - 1e-12 && k < 1.0)) throw DomainError("u_h1: k outside [k*, 1)");
    const double lo = u_a1(k), hi = kPi - lo;
    if (!(h1(hi, k) < 0.0)) return hi;
    return brent([k](double u) { return h1(u, k); }, lo, hi).x;
}

double p_g1(double k)
{
    return ellint_F_inc(u_h1(k), k);
}

std::set<MaxwellStratum> in_maxwell(const Covector& lam, double t, double tol, double strat_tol)
{
    if (!(t > 0.0)) throw DomainError("in_maxwell: t must be positive");
    std::set<MaxwellStratum> out;
    const Stratum s = stratify(lam, strat_tol);

    if (is_N6(s)) {
        const double n = std::round(lam.c * t / (2.0 * kPi));
        if (n != 0.0 && std::abs(lam.c * t - 2.0 * kPi * n) < tol) {
            out.insert(MaxwellStratum::MAX1);
            out.insert(MaxwellStratum::MAX3plus);
        }
        return out;
    }
    if (s != Stratum::N1 && !is_N2(s)) return out;

    const double k = to_elliptic(lam, strat_tol).k;
    const MaxwellCoords m = maxwell_coords(lam, t, strat_tol);
    const double K = ellint_K(k);
    const JacobiValues jt = jacobi(m.tau, k);
    const JacobiValues jp = jacobi(m.p, k);
    const double sn2p = jp.sn * jp.sn;

    if (is_N2(s)) {
        const double n = std::round(m.p / K);
        if (n >= 1.0 && std::abs(m.p - K * n) < tol)
            out.insert(std::abs(jt.sn * jt.cn) > tol ? MaxwellStratum::MAX1 : MaxwellStratum::MAX3plus);
        if (sn2p > 0.0 && std::abs(g1_N2(m.p, k)) < tol
            && std::abs(jt.sn * jt.sn - (2.0 * sn2p - 1.0) / (k * k * sn2p)) < tol)
            out.insert(MaxwellStratum::MAX3minus);
        return out;
    }

    const double n = std::round(m.p / (2.0 * K));
    const bool on_2Kn = n >= 1.0 && std::abs(m.p - 2.0 * K * n) < tol;
    bool on_pn1 = false;
    for (double cand : {std::floor(m.p / (2.0 * K)), std::ceil(m.p / (2.0 * K))}) {
        if (cand >= 1.0 && std::abs(m.p - p1_roots(k, static_cast<int>(cand))) < tol) on_pn1 = true;
    }
    const bool cn0 = std::abs(jt.cn) < tol;
    const bool sn0 = std::abs(jt.sn) < tol;
    if (on_2Kn && !cn0) out.insert(MaxwellStratum::MAX1);
    if (on_pn1 && !sn0) out.insert(MaxwellStratum::MAX2);
    if ((on_2Kn && std::abs(k - find_k0()) < tol) || (on_pn1 && cn0) || (on_2Kn && sn0))
        out.insert(MaxwellStratum::MAX3plus);
    if (sn2p > 0.0 && std::abs(g1_N1(m.p, k)) < tol
        && std::abs(jt.sn * jt.sn - (2.0 * k * k * sn2p - 1.0) / (k * k * sn2p)) < tol)
        out.insert(MaxwellStratum::MAX3minus);
    return out;
}

MaxwellReport cut_time_bound(const Covector& lam, double tol, double strat_tol)
{
    MaxwellReport rep;
    rep.stratum = stratify(lam, strat_tol);
    rep.t1_max1 = rep.t1_max2 = rep.t1_max3plus = rep.t1_max3minus = rep.bound = kInf;

    if (is_N6(rep.stratum)) {
        rep.bound = rep.t1_max1 = rep.t1_max3plus = 2.0 * kPi / std::abs(lam.c);
        return rep;
    }
    if (rep.stratum != Stratum::N1 && !is_N2(rep.stratum)) return rep;

    const EllipticCoords ec = to_elliptic(lam, strat_tol);
    const double k = ec.k, sr = std::sqrt(ec.r);
    const double K = ellint_K(k);

    if (is_N2(rep.stratum)) {
        const double a = sr * ec.phi;
        const JacobiValues j = jacobi(a + K, k);
        const double t = 2.0 * k * K / sr;
        if (std::abs(j.sn * j.cn) > tol) rep.t1_max1 = t;
        else rep.t1_max3plus = t;
        rep.bound = t;
        return rep;
    }

    const double a = sr * ec.phi;
    const double k0 = find_k0();
    const bool at_k0 = std::abs(k - k0) < tol;
    auto time_of = [sr](double p) { return 2.0 * p / sr; };

    for (int n = 1; n <= kMaxwellSearch; ++n) {
        const double p = 2.0 * K * n;
        const JacobiValues j = jacobi(a + p, k);
        if (rep.t1_max1 == kInf && std::abs(j.cn) > tol) rep.t1_max1 = time_of(p);
        if (rep.t1_max3plus == kInf && (at_k0 || std::abs(j.sn) < tol)) rep.t1_max3plus = time_of(p);
    }
    for (int n = 1; n <= kMaxwellSearch; ++n) {
        const double p = p1_roots(k, n);
        const JacobiValues j = jacobi(a + p, k);
        if (rep.t1_max2 == kInf && std::abs(j.sn) > tol) rep.t1_max2 = time_of(p);
        if (std::abs(j.cn) < tol) rep.t1_max3plus = std::min(rep.t1_max3plus, time_of(p));
    }
    if (k >= find_kstar().kstar) {
        const double p = p_g1(k);
        const JacobiValues jp = jacobi(p, k);
        const JacobiValues jt = jacobi(a + p, k);
        const double sn2p = jp.sn * jp.sn;
        if (std::abs(jt.sn * jt.sn - (2.0 * k * k * sn2p - 1.0) / (k * k * sn2p)) < tol)
            rep.t1_max3minus = time_of(p);
    }

    const double p1 = k <= k0 ? 2.0 * K : p1_roots(k, 1);
    rep.bound = time_of(p1);
    const JacobiValues jb = jacobi(a + p1, k);
    rep.caveat = std::abs(jb.sn * jb.cn) < tol;
    return rep;
}

} // namespace elastica
