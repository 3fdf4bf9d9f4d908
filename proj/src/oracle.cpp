#include "elastica/oracle.hpp"
#include "elastica/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;

using Vec7 = std::array<double, 7>;  // beta, c, r, x, y, theta, J

Vec7 rhs(const Vec7& z)
{
    return {z[1], -z[2] * std::sin(z[0]), 0.0, std::cos(z[5]), std::sin(z[5]), z[1], 0.5 * z[1] * z[1]};
}

Vec7 axpy(const Vec7& z, double h, const Vec7& d)
{
    Vec7 out;
    for (std::size_t i = 0; i < 7; ++i) out[i] = z[i] + h * d[i];
    return out;
}

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0) throw ConvergenceError("adaptive_simpson: depth exhausted");
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
         + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

using Vec3 = std::array<double, 3>;

Vec3 residual(const Covector& lam, const State& q1, double t1)
{
    constexpr double kBig = 1e300;
    try {
        const State q = exp_map(lam, t1);
        return {q.x - q1.x, q.y - q1.y, wrap_angle(q.theta - q1.theta)};
    } catch (const std::exception&) {
        return {kBig, kBig, kBig};
    }
}

double norm_inf(const Vec3& v)
{
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

Covector apply(const Covector& lam, const Vec3& d, double s)
{
    return {wrap_angle(lam.beta + s * d[0]), lam.c + s * d[1], std::max(0.0, lam.r + s * d[2])};
}

// Solve A x = b by Gaussian elimination with partial pivoting; false if singular.
bool solve3(std::array<Vec3, 3> A, Vec3 b, Vec3& x)
{
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (std::abs(A[piv][col]) < 1e-300) return false;
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (int r = col + 1; r < 3; ++r) {
            const double f = A[r][col] / A[col][col];
            for (int c = col; c < 3; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    for (int r = 2; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < 3; ++c) s -= A[r][c] * x[c];
        x[r] = s / A[r][r];
    }
    return std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2]);
}

struct NewtonOutcome {
    Covector lam;
    double res = 0.0;
    bool ok = false;
};

NewtonOutcome newton(Covector lam, const State& q1, double t1, const BvpConfig& cfg)
{
    Vec3 R = residual(lam, q1, t1);
    double nr = norm_inf(R);
    for (int it = 0; it < cfg.max_iter && nr > 1e-14; ++it) {
        std::array<Vec3, 3> J{};
        const double v[3] = {lam.beta, lam.c, lam.r};
        for (int j = 0; j < 3; ++j) {
            const double h = 1e-7 * std::max(1.0, std::abs(v[j]));
            Vec3 e{0.0, 0.0, 0.0};
            e[static_cast<std::size_t>(j)] = 1.0;
            Vec3 fp, fm;
            double span;
            if (j == 2 && lam.r < h) {
                fp = residual(apply(lam, e, h), q1, t1);
                fm = R;
                span = h;
            } else {
                fp = residual(apply(lam, e, h), q1, t1);
                fm = residual(apply(lam, e, -h), q1, t1);
                span = 2.0 * h;
            }
            for (int i = 0; i < 3; ++i) {
                double d = fp[static_cast<std::size_t>(i)] - fm[static_cast<std::size_t>(i)];
                if (i == 2) d = wrap_angle(d);
                J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d / span;
            }
        }
        Vec3 d;
        if (!solve3(J, {-R[0], -R[1], -R[2]}, d)) {
            // singular Jacobian (r = 0 makes beta inert): Levenberg-Marquardt step instead
            std::array<Vec3, 3> N{};
            Vec3 g{0.0, 0.0, 0.0};
            double trace = 0.0;
            for (std::size_t a = 0; a < 3; ++a) {
                for (std::size_t b = 0; b < 3; ++b)
                    for (std::size_t i = 0; i < 3; ++i) N[a][b] += J[i][a] * J[i][b];
                for (std::size_t i = 0; i < 3; ++i) g[a] -= J[i][a] * R[i];
                trace += N[a][a];
            }
            for (std::size_t a = 0; a < 3; ++a) N[a][a] += 1e-6 * trace + 1e-300;
            if (!solve3(N, g, d)) break;
        }
        // cap the step so near-singular systems cannot throw the iterate across the phase cylinder
        const double cap = std::min({1.0, 1.0 / std::max(std::abs(d[0]), 1e-300),
                                     std::max(1.0, std::abs(lam.c)) / std::max(std::abs(d[1]), 1e-300),
                                     std::max(1.0, lam.r) / std::max(std::abs(d[2]), 1e-300)});
        for (double& x : d) x *= cap;
        double s = 1.0;
        bool improved = false;
        for (int h = 0; h < 30; ++h, s *= 0.5) {
            const Covector cand = apply(lam, d, s);
            const Vec3 Rc = residual(cand, q1, t1);
            const double nc = norm_inf(Rc);
            if (nc < nr) {
                lam = cand;
                R = Rc;
                nr = nc;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    return {lam, nr, nr < cfg.tol};
}

// With r = 0 the angle beta drops out and Newton stalls on a singular
// Jacobian. Gauss-Newton in c alone on the circle family finishes the job.
NewtonOutcome polish_circle(const NewtonOutcome& o, const State& q1, double t1, const BvpConfig& cfg)
{
    Covector lam{0.0, o.lam.c, 0.0};
    Vec3 R = residual(lam, q1, t1);
    for (int it = 0; it < cfg.max_iter && norm_inf(R) > 1e-14; ++it) {
        const double h = 1e-7 * std::max(1.0, std::abs(lam.c));
        const Vec3 fp = residual({0.0, lam.c + h, 0.0}, q1, t1);
        const Vec3 fm = residual({0.0, lam.c - h, 0.0}, q1, t1);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            double d = fp[i] - fm[i];
            if (i == 2) d = wrap_angle(d);
            d /= 2.0 * h;
            num += d * R[i];
            den += d * d;
        }
        if (den == 0.0) break;
        const Covector cand{0.0, lam.c - num / den, 0.0};
        const Vec3 Rc = residual(cand, q1, t1);
        if (!(norm_inf(Rc) < norm_inf(R))) break;
        lam = cand;
        R = Rc;
    }
    const double res = norm_inf(R);
    if (res < cfg.tol && res <= o.res) return {lam, res, true};
    return o;
}

double covector_distance(const Covector& a, const Covector& b)
{
    return std::max({std::abs(wrap_angle(a.beta - b.beta)), std::abs(a.c - b.c), std::abs(a.r - b.r)});
}

} // namespace

ExtremalSolution integrate_extremal(const Covector& lam, double t, const IntegratorConfig& cfg)
{
    if (!(t >= 0.0)) throw DomainError("integrate_extremal: t must be non-negative");
    if (!(cfg.step > 0.0)) throw DomainError("integrate_extremal: step must be positive");
    const long n = static_cast<long>(std::ceil(t / cfg.step - 1e-9));
    if (n > cfg.max_steps) throw ConvergenceError("integrate_extremal: max_steps exceeded");
    Vec7 z{lam.beta, lam.c, lam.r, 0.0, 0.0, 0.0, 0.0};
    if (n > 0) {
        const double h = t / static_cast<double>(n);
        for (long i = 0; i < n; ++i) {
            const Vec7 k1 = rhs(z);
            const Vec7 k2 = rhs(axpy(z, 0.5 * h, k1));
            const Vec7 k3 = rhs(axpy(z, 0.5 * h, k2));
            const Vec7 k4 = rhs(axpy(z, h, k3));
            for (std::size_t j = 0; j < 7; ++j) z[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
    }
    ExtremalSolution out;
    out.q = {z[3], z[4], wrap_angle(z[5])};
    out.lam = {wrap_angle(z[0]), z[1], z[2]};
    out.J = z[6];
    return out;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int depth)
{
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

double quad_F(double phi, double k, double tol, int depth)
{
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("quad_F: k outside [0, 1)");
    if (!(phi >= 0.0 && phi <= 0.5 * kPi)) throw DomainError("quad_F: phi outside [0, pi/2]");
    if (phi == 0.0) return 0.0;
    return adaptive_simpson([k](double t) { const double s = std::sin(t); return 1.0 / std::sqrt(1.0 - k * k * s * s); },
                            0.0, phi, tol, depth);
}

double quad_E(double phi, double k, double tol, int depth)
{
    if (!(k >= 0.0 && k <= 1.0)) throw DomainError("quad_E: k outside [0, 1]");
    if (!(phi >= 0.0 && phi <= 0.5 * kPi)) throw DomainError("quad_E: phi outside [0, pi/2]");
    if (phi == 0.0) return 0.0;
    return adaptive_simpson([k](double t) { const double s = std::sin(t); return std::sqrt(1.0 - k * k * s * s); },
                            0.0, phi, tol, depth);
}

bool attainable(const State& q1, double t1)
{
    if (!(t1 > 0.0)) throw DomainError("attainable: t1 must be positive");
    if (q1.x * q1.x + q1.y * q1.y < t1 * t1) return true;
    return q1.x == t1 && q1.y == 0.0 && wrap_angle(q1.theta) == 0.0;
}

std::vector<Covector> bvp_start_grid()
{
    std::vector<Covector> grid;
    for (double beta : {0.0, 0.5 * kPi, -0.5 * kPi, kPi})
        for (double c : {0.5, 1.0, 2.0, 4.0, 8.0, -0.5, -1.0, -2.0, -4.0, -8.0})
            for (double r : {0.0, 0.5, 1.0, 4.0, 16.0})
                grid.push_back({beta, c, r});
    return grid;
}

BvpResult bvp_shoot(const State& q1, double t1, const BvpConfig& cfg)
{
    BvpResult res;
    if (!attainable(q1, t1)) {
        res.diagnostics = "target not attainable: need x^2 + y^2 < t1^2 or q1 = (t1, 0, 0)";
        return res;
    }

    std::vector<Covector> starts = bvp_start_grid();
    if (cfg.starts > 0 && static_cast<std::size_t>(cfg.starts) < starts.size())
        starts.resize(static_cast<std::size_t>(cfg.starts));
    // the grid is laid out for t1 = 1; dilate it to the requested horizon
    for (Covector& s : starts) {
        s.c /= t1;
        s.r /= t1 * t1;
    }
    res.starts_tried = static_cast<int>(starts.size());

    std::vector<NewtonOutcome> out(starts.size());
    const int jobs = std::max(1, cfg.jobs);
    auto work = [&](int w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < starts.size(); i += static_cast<std::size_t>(jobs)) {
            out[i] = newton(starts[i], q1, t1, cfg);
            if (out[i].lam.r <= 1e-4 * std::max(1.0, out[i].lam.c * out[i].lam.c))
                out[i] = polish_circle(out[i], q1, t1, cfg);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    const bool line_target = std::abs(q1.x - t1) <= cfg.tol && std::abs(q1.y) <= cfg.tol
                          && std::abs(wrap_angle(q1.theta)) <= cfg.tol;
    std::vector<NewtonOutcome> found;
    if (line_target) found.push_back({Covector{0.0, 0.0, 0.0}, 0.0, true});
    for (const NewtonOutcome& o : out) {
        if (!o.ok) continue;
        ++res.converged;
        const bool line = is_line(stratify(o.lam));
        bool dup = false;
        for (const NewtonOutcome& f : found) {
            if ((line && is_line(stratify(f.lam))) || covector_distance(f.lam, o.lam) < cfg.merge) {
                dup = true;
                break;
            }
        }
        if (!dup) found.push_back(o);
    }

    for (const NewtonOutcome& f : found) {
        BvpSolution s;
        s.lam = f.lam;
        s.stratum = stratify(f.lam);
        s.J = elastic_energy_closed(f.lam, t1);
        s.residual = f.res;
        s.bound = cut_time_bound(f.lam).bound;
        s.optimal_candidate = t1 <= s.bound * (1.0 + 1e-12);
        res.solutions.push_back(s);
    }
    std::sort(res.solutions.begin(), res.solutions.end(),
              [](const BvpSolution& a, const BvpSolution& b) { return a.J < b.J; });

    std::ostringstream diag;
    diag << res.converged << " of " << res.starts_tried << " starts converged, "
         << res.solutions.size() << " distinct solutions";
    res.diagnostics = diag.str();
    return res;
}

} // namespace elastica
