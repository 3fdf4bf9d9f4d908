// Reference routines used by the tests. They deliberately share no code with
// the library so that agreement means something.
#pragma once

#include "elastica/expmap.hpp"
#include "elastica/phase.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace ref {

constexpr double pi = std::numbers::pi;

inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000)
{
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

// Gauss-Legendre, 20 nodes per panel; plenty for smooth integrands.
inline double gauss(const std::function<double(double)>& f, double a, double b, int panels = 64)
{
    static const double x[10] = {0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
                                 0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
                                 0.9639719272779138, 0.9931285991850949};
    static const double w[10] = {0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
                                 0.1181945319615184, 0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
                                 0.0406014298003869, 0.0176140071391521};
    const double h = (b - a) / panels;
    double s = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double m = a + (p + 0.5) * h, r = 0.5 * h;
        for (int i = 0; i < 10; ++i) s += w[i] * (f(m - r * x[i]) + f(m + r * x[i]));
    }
    return s * 0.5 * h;
}

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N>
Vec<N> rk4(const std::function<Vec<N>(const Vec<N>&)>& f, Vec<N> y, double t, double h)
{
    const long n = std::max(1L, static_cast<long>(std::ceil(t / h)));
    const double dt = t / n;
    auto add = [](const Vec<N>& a, double s, const Vec<N>& b) {
        Vec<N> o;
        for (std::size_t i = 0; i < N; ++i) o[i] = a[i] + s * b[i];
        return o;
    };
    for (long i = 0; i < n; ++i) {
        const Vec<N> k1 = f(y), k2 = f(add(y, 0.5 * dt, k1)), k3 = f(add(y, 0.5 * dt, k2)), k4 = f(add(y, dt, k3));
        for (std::size_t j = 0; j < N; ++j) y[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    return y;
}

// Pendulum plus the planar curve: (beta, c, x, y, theta, J).
inline Vec<6> extremal(const elastica::Covector& lam, double t, double h = 1e-4)
{
    const double r = lam.r;
    return rk4<6>([r](const Vec<6>& z) -> Vec<6> {
        return {z[1], -r * std::sin(z[0]), std::cos(z[4]), std::sin(z[4]), z[1], 0.5 * z[1] * z[1]};
    }, {lam.beta, lam.c, 0.0, 0.0, 0.0, 0.0}, t, h);
}

// (am, eps) from am' = dn = sqrt(1 - k^2 sin^2 am), eps' = dn^2.
inline Vec<2> amplitude(double u, double k, double h = 1e-4)
{
    return rk4<2>([k](const Vec<2>& z) -> Vec<2> {
        const double s = std::sin(z[0]);
        const double d2 = 1.0 - k * k * s * s;
        return {std::sqrt(d2), d2};
    }, {0.0, 0.0}, u, h);
}

inline double central(const std::function<double(double)>& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double angle_gap(double a, double b)
{
    return std::abs(std::remainder(a - b, 2.0 * pi));
}

inline double state_gap(const elastica::State& a, const elastica::State& b)
{
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), angle_gap(a.theta, b.theta)});
}

// Covectors spanning every stratum; the line strata appear in all their forms.
inline std::vector<elastica::Covector> stratum_fixture()
{
    using elastica::Covector;
    return {
        {0.0, 1.0, 1.0},          {0.3, 1.1, 1.0},        {-1.2, 0.4, 2.5},    {2.5, -0.3, 0.7},
        {1.0, -1.5, 4.0},         {0.0, 3.0, 1.0},        {1.4, 2.6, 1.2},     {-2.0, 1.9, 0.3},
        {0.5, -2.5, 1.0},         {-0.8, -3.1, 2.0},      {0.4, 2.0 * std::cos(0.2), 1.0},
        {-1.1, 2.0 * std::cos(0.55) * std::sqrt(2.0), 2.0},
        {0.4, -2.0 * std::cos(0.2), 1.0}, {2.2, -2.0 * std::cos(1.1) * 0.5, 0.25},
        {0.0, 0.0, 1.0},          {0.0, 0.0, 3.0},        {pi, 0.0, 1.0},      {pi, 0.0, 2.0},
        {0.3, 1.5, 0.0},          {-2.0, 0.7, 0.0},       {0.0, -1.2, 0.0},    {1.0, -2.5, 0.0},
        {0.0, 0.0, 0.0},          {0.2, 0.0, 0.0},        {-3.0, 0.0, 0.0},
    };
}

} // namespace ref
