#include "commands.hpp"

#include "elastica/elliptic.hpp"
#include "elastica/errors.hpp"
#include "elastica/expmap.hpp"
#include "elastica/maxwell.hpp"
#include "elastica/oracle.hpp"
#include "elastica/phase.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

namespace elastica::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kDeg = std::numbers::pi / 180.0;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Unattainable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON has no infinities; they are written as strings.
ordered_json num(double x)
{
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

std::string csv_num(double x)
{
    const ordered_json j = num(x);
    return j.is_string() ? j.get<std::string>() : j.dump();
}

int default_jobs()
{
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

void require_finite(std::initializer_list<double> xs)
{
    for (double x : xs)
        if (!std::isfinite(x)) throw DomainError("arguments must be finite");
}

struct LamFlags {
    double beta = 0.0;
    double c = 0.0;
    double r = 0.0;
    bool deg = false;

    void add(CLI::App* sub)
    {
        sub->add_option("--beta", beta, "pendulum angle beta");
        sub->add_option("--c", c, "angular velocity c");
        sub->add_option("--r", r, "pendulum parameter r >= 0");
        sub->add_flag("--deg", deg, "read angles in degrees");
    }

    Covector get() const
    {
        require_finite({beta, c, r});
        if (r < 0.0) throw DomainError("r must be non-negative");
        return {deg ? beta * kDeg : beta, c, r};
    }
};

// ---- exp / oracle-exp ------------------------------------------------------

std::string cmd_exp(const Covector& lam, double t, double tol, const std::string& format)
{
    require_finite({t});
    const State q = exp_map(lam, t, tol);
    const Stratum s = stratify(lam, tol);
    const ElasticaClass cls = classify(lam, tol);
    const double J = elastic_energy_closed(lam, t, tol);
    std::ostringstream os;
    if (format == "csv") {
        os << "x,y,theta,stratum,class,J\n"
           << csv_num(q.x) << ',' << csv_num(q.y) << ',' << csv_num(q.theta) << ',' << to_string(s) << ','
           << to_string(cls) << ',' << csv_num(J) << '\n';
    } else {
        ordered_json j;
        j["x"] = num(q.x);
        j["y"] = num(q.y);
        j["theta"] = num(q.theta);
        j["stratum"] = to_string(s);
        j["class"] = to_string(cls);
        j["J"] = num(J);
        os << j.dump(2) << '\n';
    }
    return os.str();
}

std::string cmd_oracle_exp(const Covector& lam, double t, double step, const std::string& format)
{
    require_finite({t, step});
    IntegratorConfig cfg;
    cfg.step = step;
    const ExtremalSolution sol = integrate_extremal(lam, t, cfg);
    std::ostringstream os;
    if (format == "csv") {
        os << "x,y,theta,beta_t,c_t,J\n"
           << csv_num(sol.q.x) << ',' << csv_num(sol.q.y) << ',' << csv_num(sol.q.theta) << ','
           << csv_num(sol.lam.beta) << ',' << csv_num(sol.lam.c) << ',' << csv_num(sol.J) << '\n';
    } else {
        ordered_json j;
        j["x"] = num(sol.q.x);
        j["y"] = num(sol.q.y);
        j["theta"] = num(sol.q.theta);
        j["beta_t"] = num(sol.lam.beta);
        j["c_t"] = num(sol.lam.c);
        j["J"] = num(sol.J);
        j["step"] = num(step);
        os << j.dump(2) << '\n';
    }
    return os.str();
}

// ---- constants ---------------------------------------------------------------

std::string cmd_constants()
{
    const double k0 = find_k0();
    const KStar ks = find_kstar();
    ordered_json j;
    j["k0"] = num(k0);
    j["kstar"] = num(ks.kstar);
    j["ustar"] = num(ks.ustar);
    j["residual_k0"] = num(std::abs(2.0 * ellint_E(k0) - ellint_K(k0)));
    j["residual_kstar"] = num(std::abs(h1(std::numbers::pi - u_a1(ks.kstar), ks.kstar)));
    j["residual_ustar"] = num(std::abs(a1(ks.ustar, ks.kstar)));
    return j.dump(2) + "\n";
}

// ---- sweep -------------------------------------------------------------------

struct SweepRow {
    double k = 0.0;
    double value = 0.0;
    double ratio = 0.0;
};

std::string cmd_sweep(const std::string& curve, double kmin, double kmax, int n, const std::string& family,
                      double r, double tol, int jobs, const std::string& format)
{
    require_finite({kmin, kmax, r});
    if (n < 1) throw DomainError("sweep: n must be >= 1");
    if (kmin > kmax) throw DomainError("sweep: kmin > kmax");

    double lo = 0.0, hi = 1.0;
    bool lo_open = true, hi_open = true;
    if (curve == "pg1" || curve == "uh1") {
        lo = find_kstar().kstar;
        lo_open = false;
    } else if (curve == "ua1") {
        lo = 1.0 / std::numbers::sqrt2;
        lo_open = hi_open = false;
    } else if (curve == "cutbound" && !(r > 0.0)) {
        throw DomainError("sweep cutbound: r must be positive");
    }
    const bool lo_bad = lo_open ? !(kmin > lo) : !(kmin >= lo - 1e-15);
    const bool hi_bad = hi_open ? !(kmax < hi) : !(kmax <= hi);
    if (lo_bad || hi_bad) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "sweep " << curve << ": [kmin, kmax] must lie in " << (lo_open ? '(' : '[') << lo << ", " << hi
            << (hi_open ? ')' : ']');
        throw DomainError(msg.str());
    }

    auto eval = [&](double k) -> double {
        if (curve == "p11") return p1_roots(k, 1);
        if (curve == "pg1") return p_g1(k);
        if (curve == "ua1") return u_a1(k);
        if (curve == "uh1") return u_h1(k);
        EllipticCoords ec;
        ec.stratum = family == "N2" ? Stratum::N2plus : Stratum::N1;
        ec.k = k;
        ec.r = r;
        ec.phi = 0.0;
        return cut_time_bound(from_elliptic(ec), tol, tol).bound;
    };

    std::vector<SweepRow> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)].k = n == 1 ? kmin : kmin + (kmax - kmin) * i / (n - 1);

    // workers record the first failure; the table is only emitted if every row succeeds
    std::vector<std::string> failure(static_cast<std::size_t>(std::max(1, jobs)));
    auto work = [&](int w) {
        try {
            for (std::size_t i = static_cast<std::size_t>(w); i < rows.size(); i += failure.size()) {
                SweepRow& row = rows[i];
                row.value = eval(row.k);
                row.ratio = row.k < 1.0 ? row.value / ellint_K(row.k) : 0.0;
            }
        } catch (const std::exception& e) {
            failure[static_cast<std::size_t>(w)] = e.what();
        }
    };
    if (failure.size() == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < static_cast<int>(failure.size()); ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    for (const std::string& f : failure)
        if (!f.empty()) throw DomainError(f);

    std::ostringstream os;
    if (format == "json") {
        ordered_json j;
        j["curve"] = curve;
        if (curve == "cutbound") {
            j["family"] = family;
            j["r"] = num(r);
        }
        j["rows"] = ordered_json::array();
        for (const SweepRow& row : rows)
            j["rows"].push_back({{"k", num(row.k)}, {"value", num(row.value)}, {"value_over_K", num(row.ratio)}});
        os << j.dump(2) << '\n';
    } else {
        os << "k,value,value_over_K\n";
        for (const SweepRow& row : rows)
            os << csv_num(row.k) << ',' << csv_num(row.value) << ',' << csv_num(row.ratio) << '\n';
    }
    return os.str();
}

// ---- elastica ----------------------------------------------------------------

std::string svg_document(const std::vector<State>& pts, const std::string& title)
{
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const State& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double w = xmax - xmin, h = ymax - ymin;
    const double side = std::max({w, h, 1e-12});
    const double scale = 900.0 / side;
    const double W = 100.0 + w * scale, H = 100.0 + h * scale;

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << W << ' ' << H
       << "\" width=\"" << W << "\" height=\"" << H << "\">\n"
       << "<title>" << title << "</title>\n"
       << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2.000\" stroke-linejoin=\"round\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << 50.0 + (pts[i].x - xmin) * scale << ',' << 50.0 + (ymax - pts[i].y) * scale;
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

std::string cmd_elastica(const Covector& lam, double t1, int n, double tol, const std::string& format)
{
    require_finite({t1});
    const std::vector<State> pts = sample_elastica(lam, t1, n, tol);
    const ElasticaClass cls = classify(lam, tol);
    if (format == "svg") {
        std::ostringstream title;
        title << to_string(cls) << " (" << to_string(stratify(lam, tol)) << "), t1=" << csv_num(t1);
        return svg_document(pts, title.str());
    }
    std::ostringstream os;
    os << "s,x,y,theta\n";
    for (int i = 0; i < n; ++i) {
        const State& p = pts[static_cast<std::size_t>(i)];
        os << csv_num(t1 * i / (n - 1)) << ',' << csv_num(p.x) << ',' << csv_num(p.y) << ',' << csv_num(p.theta)
           << '\n';
    }
    return os.str();
}

// ---- maxwell -----------------------------------------------------------------

std::string cmd_maxwell(const Covector& lam, double t, double tol, const std::string& format)
{
    require_finite({t, tol});
    const std::set<MaxwellStratum> member = in_maxwell(lam, t, tol, tol);
    const MaxwellReport rep = cut_time_bound(lam, tol, tol);
    std::ostringstream os;
    if (format == "csv") {
        std::string joined;
        for (MaxwellStratum m : member) joined += (joined.empty() ? "" : ";") + to_string(m);
        os << "stratum,membership,t1_max1,t1_max2,t1_max3plus,t1_max3minus,bound,caveat\n"
           << to_string(rep.stratum) << ',' << joined << ',' << csv_num(rep.t1_max1) << ','
           << csv_num(rep.t1_max2) << ',' << csv_num(rep.t1_max3plus) << ',' << csv_num(rep.t1_max3minus) << ','
           << csv_num(rep.bound) << ',' << (rep.caveat ? "true" : "false") << '\n';
        return os.str();
    }
    ordered_json j;
    j["stratum"] = to_string(rep.stratum);
    j["t"] = num(t);
    j["membership"] = ordered_json::array();
    for (MaxwellStratum m : member) j["membership"].push_back(to_string(m));
    j["t1_max1"] = num(rep.t1_max1);
    j["t1_max2"] = num(rep.t1_max2);
    j["t1_max3plus"] = num(rep.t1_max3plus);
    j["t1_max3minus"] = num(rep.t1_max3minus);
    j["bound"] = num(rep.bound);
    j["caveat"] = rep.caveat;
    os << j.dump(2) << '\n';
    return os.str();
}

// ---- bvp ---------------------------------------------------------------------

std::string cmd_bvp(const State& q1, double t1, int starts, int jobs, const std::string& format)
{
    require_finite({q1.x, q1.y, q1.theta, t1});
    if (!(t1 > 0.0)) throw DomainError("bvp: t1 must be positive");
    if (!attainable(q1, t1))
        throw Unattainable("target not attainable: need x^2 + y^2 < t1^2, or (x, y, theta) = (t1, 0, 0)");
    BvpConfig cfg;
    cfg.starts = starts;
    cfg.jobs = jobs;
    const BvpResult res = bvp_shoot(q1, t1, cfg);

    std::ostringstream os;
    if (format == "csv") {
        os << "beta,c,r,stratum,J,bound,optimal_candidate,residual\n";
        for (const BvpSolution& s : res.solutions)
            os << csv_num(s.lam.beta) << ',' << csv_num(s.lam.c) << ',' << csv_num(s.lam.r) << ','
               << to_string(s.stratum) << ',' << csv_num(s.J) << ',' << csv_num(s.bound) << ','
               << (s.optimal_candidate ? "true" : "false") << ',' << csv_num(s.residual) << '\n';
        return os.str();
    }
    ordered_json j;
    j["target"] = {{"x", num(q1.x)}, {"y", num(q1.y)}, {"theta", num(q1.theta)}};
    j["t1"] = num(t1);
    j["starts_tried"] = res.starts_tried;
    j["converged"] = res.converged;
    j["solutions"] = ordered_json::array();
    for (const BvpSolution& s : res.solutions) {
        ordered_json row;
        row["beta"] = num(s.lam.beta);
        row["c"] = num(s.lam.c);
        row["r"] = num(s.lam.r);
        row["stratum"] = to_string(s.stratum);
        row["J"] = num(s.J);
        row["bound"] = num(s.bound);
        row["optimal_candidate"] = s.optimal_candidate;
        row["residual"] = num(s.residual);
        j["solutions"].push_back(row);
    }
    j["diagnostics"] = res.diagnostics;
    os << j.dump(2) << '\n';
    return os.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("write to '" + path + "' failed");
}

} // namespace

double default_tol()
{
    if (const char* env = std::getenv("ELASTICA_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && std::isfinite(v) && v > 0.0) return v;
    }
    return kDefaultStratTol;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Euler elastica: exponential map, Maxwell strata and cut-time bounds"};
    app.name("elastica");
    app.require_subcommand(1);

    const double tol0 = default_tol();
    std::string format = "json";
    std::string out_path;
    const std::vector<std::string> tabular{"json", "csv"};

    LamFlags lf;
    double t = 0.0;
    double tol = tol0;
    double step = 1e-4;

    auto* exp = app.add_subcommand("exp", "endpoint, stratum, class and energy of an extremal");
    lf.add(exp);
    exp->add_option("--t", t, "time t >= 0")->required();
    exp->add_option("--tol", tol, "stratification tolerance");
    exp->add_option("--format", format)->check(CLI::IsMember(tabular));

    LamFlags lf_o;
    auto* oexp = app.add_subcommand("oracle-exp", "endpoint by RK4 integration of the Hamiltonian system");
    lf_o.add(oexp);
    oexp->add_option("--t", t, "time t >= 0")->required();
    oexp->add_option("--step", step, "RK4 step");
    oexp->add_option("--format", format)->check(CLI::IsMember(tabular));

    app.add_subcommand("constants", "k0, k*, u* and their residuals");

    std::string curve, family = "N1";
    double kmin = 0.0, kmax = 0.0, r_sweep = 1.0;
    int n = 200, jobs = default_jobs();
    auto* sweep = app.add_subcommand("sweep", "tabulate a root curve over k");
    sweep->add_option("--curve", curve)->required()->check(CLI::IsMember({"p11", "pg1", "ua1", "uh1", "cutbound"}));
    sweep->add_option("--kmin", kmin)->required();
    sweep->add_option("--kmax", kmax)->required();
    sweep->add_option("--n", n, "number of grid points");
    sweep->add_option("--family", family, "cutbound covector family")->check(CLI::IsMember({"N1", "N2"}));
    sweep->add_option("--r", r_sweep, "cutbound r");
    sweep->add_option("--tol", tol);
    sweep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    sweep->add_option("--format", format)->check(CLI::IsMember(tabular));
    sweep->add_option("--out", out_path);

    LamFlags lf_e;
    double t1 = 0.0;
    int npts = 400;
    std::string geo_format = "svg";
    auto* ela = app.add_subcommand("elastica", "sample an elastica as SVG or CSV");
    lf_e.add(ela);
    ela->add_option("--t1", t1, "arc length")->required();
    ela->add_option("--n", npts, "number of points");
    ela->add_option("--tol", tol);
    ela->add_option("--format", geo_format)->check(CLI::IsMember({"svg", "csv"}));
    ela->add_option("--out", out_path);

    LamFlags lf_m;
    auto* mx = app.add_subcommand("maxwell", "Maxwell strata membership and cut-time bound");
    lf_m.add(mx);
    mx->add_option("--t", t, "time t > 0")->required();
    mx->add_option("--tol", tol);
    mx->add_option("--format", format)->check(CLI::IsMember(tabular));

    State q1;
    bool bvp_deg = false;
    int starts = 0;
    auto* bvp = app.add_subcommand("bvp", "solve Exp_t1(lambda) = q1 by multistart shooting");
    bvp->add_option("--x", q1.x)->required();
    bvp->add_option("--y", q1.y)->required();
    bvp->add_option("--theta", q1.theta)->required();
    bvp->add_option("--t1", t1)->required();
    bvp->add_option("--starts", starts, "grid starts to use, 0 for all")->check(CLI::NonNegativeNumber);
    bvp->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    bvp->add_flag("--deg", bvp_deg, "read theta in degrees");
    bvp->add_option("--format", format)->check(CLI::IsMember(tabular));

    std::vector<const char*> argv{"elastica"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParse;
    }

    try {
        std::string text;
        if (*exp) {
            text = cmd_exp(lf.get(), t, tol, format);
        } else if (*oexp) {
            text = cmd_oracle_exp(lf_o.get(), t, step, format);
        } else if (app.got_subcommand("constants")) {
            text = cmd_constants();
        } else if (*sweep) {
            text = cmd_sweep(curve, kmin, kmax, n, family, r_sweep, tol, jobs, format);
        } else if (*ela) {
            text = cmd_elastica(lf_e.get(), t1, npts, tol, geo_format);
        } else if (*mx) {
            text = cmd_maxwell(lf_m.get(), t, tol, format);
        } else if (*bvp) {
            if (bvp_deg) q1.theta *= kDeg;
            text = cmd_bvp(q1, t1, starts, jobs, format);
        }
        emit(text, out_path, out);
        return kOk;
    } catch (const Unattainable& e) {
        err << "error: " << e.what() << '\n';
        return kUnattainable;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace elastica::cli
