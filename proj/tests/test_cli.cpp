#include "commands.hpp"

#include "elastica/elliptic.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

using doctest::Approx;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = elastica::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json cli_json(std::vector<std::string> args)
{
    const Run r = cli(std::move(args));
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("exp")
{
    const json a = cli_json({"exp", "--beta", "0", "--c", "0", "--r", "0", "--t", "3"});
    CHECK(a["x"] == 3.0);
    CHECK(a["y"] == 0.0);
    CHECK(a["theta"] == 0.0);
    CHECK(a["stratum"] == "N7");
    CHECK(a["class"] == "Line");

    const json c = cli_json({"exp", "--beta", "0", "--c", "3.14159265", "--r", "0", "--t", "1"});
    CHECK(std::abs(c["x"].get<double>()) < 1e-8);
    CHECK(c["y"].get<double>() == Approx(2.0 / std::numbers::pi).epsilon(1e-8));
    CHECK(c["theta"].get<double>() == Approx(std::numbers::pi).epsilon(1e-8));

    const json e = cli_json({"exp", "--beta", "0.3", "--c", "1.1", "--r", "1", "--t", "2"});
    const json o = cli_json({"oracle-exp", "--beta", "0.3", "--c", "1.1", "--r", "1", "--t", "2"});
    for (const char* key : {"x", "y", "theta", "J"})
        CHECK(std::abs(e[key].get<double>() - o[key].get<double>()) < 1e-7);

    const json d = cli_json({"exp", "--beta", "90", "--deg", "--c", "0", "--r", "0", "--t", "1"});
    CHECK(d["stratum"] == "N7");
    const json dr = cli_json({"exp", "--beta", "90", "--deg", "--c", "1", "--r", "1", "--t", "1"});
    const json rr = cli_json({"exp", "--beta", "1.5707963267948966", "--c", "1", "--r", "1", "--t", "1"});
    CHECK(dr["x"].get<double>() == Approx(rr["x"].get<double>()).epsilon(1e-14));

    const Run csv = cli({"exp", "--c", "1", "--r", "1", "--t", "1", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("x,y,theta,stratum,class,J\n", 0) == 0);
}

TEST_CASE("exit codes")
{
    CHECK(cli({"exp", "--beta", "abc", "--t", "1"}).code == 2);
    CHECK(cli({"exp", "--t", "1", "--format", "svg"}).code == 2);
    CHECK(cli({"exp"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"--help"}).code == 0);

    CHECK(cli({"exp", "--r", "-1", "--t", "1"}).code == 3);
    CHECK(cli({"exp", "--c", "1", "--t", "-1"}).code == 3);
    CHECK(cli({"sweep", "--curve", "pg1", "--kmin", "0.5", "--kmax", "0.9"}).code == 3);
    CHECK(cli({"sweep", "--curve", "p11", "--kmin", "0.5", "--kmax", "1.0"}).code == 3);
    CHECK(cli({"elastica", "--c", "1", "--t1", "1", "--n", "1"}).code == 3);
    CHECK(cli({"maxwell", "--c", "1", "--t", "0"}).code == 3);

    CHECK(cli({"elastica", "--c", "1", "--t1", "1", "--out", "/nonexistent-dir/x.svg"}).code == 4);

    const Run far = cli({"bvp", "--x", "2", "--y", "0", "--theta", "0", "--t1", "1"});
    CHECK(far.code == 5);
    CHECK(far.err.find("x^2 + y^2 < t1^2") != std::string::npos);
}

TEST_CASE("constants")
{
    const json a = cli_json({"constants"});
    CHECK(std::abs(a["k0"].get<double>() - 0.909) < 1e-3);
    CHECK(std::abs(a["kstar"].get<double>() - 0.841) < 1e-3);
    CHECK(std::abs(a["ustar"].get<double>() - 1.954) < 1e-3);
    CHECK(a["residual_k0"].get<double>() < 1e-12);
    CHECK(a["residual_kstar"].get<double>() < 1e-12);
    CHECK(a["residual_ustar"].get<double>() < 1e-12);
    CHECK(cli({"constants"}).out == cli({"constants"}).out);
}

TEST_CASE("sweep")
{
    const json n2 = cli_json({"sweep", "--curve", "cutbound", "--family", "N2", "--kmin", "0.1", "--kmax", "0.9",
                              "--n", "9", "--format", "json"});
    REQUIRE(n2["rows"].size() == 9);
    for (const json& row : n2["rows"]) {
        const double k = row["k"];
        CHECK(row["value"].get<double>() == Approx(2.0 * k * elastica::ellint_K(k)).epsilon(1e-13));
    }

    const json ua = cli_json({"sweep", "--curve", "ua1", "--kmin", "0.7071067811865476", "--kmax", "1", "--n", "2",
                              "--format", "json"});
    CHECK(ua["rows"][0]["value"].get<double>() == Approx(std::numbers::pi / 2).epsilon(1e-7));
    CHECK(ua["rows"][1]["value"].get<double>() == Approx(std::numbers::pi / 2).epsilon(1e-12));

    const Run p = cli({"sweep", "--curve", "p11", "--kmin", "0.5", "--kmax", "0.95", "--n", "10", "--jobs", "3", "--format", "csv"});
    const Run q = cli({"sweep", "--curve", "p11", "--kmin", "0.5", "--kmax", "0.95", "--n", "10", "--jobs", "1", "--format", "csv"});
    CHECK(p.code == 0);
    CHECK(p.out == q.out);
    CHECK(p.out.rfind("k,value,value_over_K\n", 0) == 0);

    // the ratio crosses 2 at k0
    const json near = cli_json({"sweep", "--curve", "p11", "--kmin", "0.9088", "--kmax", "0.909", "--n", "2",
                                "--format", "json"});
    CHECK(near["rows"][0]["value_over_K"].get<double>() > 2.0);
    CHECK(near["rows"][1]["value_over_K"].get<double>() < 2.0);
}

TEST_CASE("maxwell")
{
    const json c = cli_json({"maxwell", "--beta", "0", "--c", "1", "--r", "0", "--t", "6.283185307179586"});
    CHECK(c["membership"] == json::array({"MAX1", "MAX3plus"}));
    CHECK(c["bound"].get<double>() == Approx(2.0 * std::numbers::pi));

    const json n4 = cli_json({"maxwell", "--beta", "0", "--c", "0", "--r", "1", "--t", "1"});
    CHECK(n4["bound"] == "inf");
    CHECK(n4["membership"].empty());

    // N1 with k = 1/2 at phi = 0.3: t = 4K, tau off the lattice
    const double K = elastica::ellint_K(0.5);
    const double beta = 2.0 * std::asin(0.5 * std::sin(0.3));  // any point of the k = 1/2 orbit with cn, sn != 0
    const double c1 = 2.0 * std::sqrt(0.25 - 0.25 * std::sin(0.3) * std::sin(0.3));
    std::ostringstream b, cc, t;
    b.precision(17);
    cc.precision(17);
    t.precision(17);
    b << beta;
    cc << c1;
    t << 4.0 * K;
    const json m = cli_json({"maxwell", "--beta", b.str(), "--c", cc.str(), "--r", "1", "--t", t.str()});
    CHECK(m["stratum"] == "N1");
    CHECK(m["membership"] == json::array({"MAX1"}));
}

TEST_CASE("elastica")
{
    const Run svg = cli({"elastica", "--beta", "0", "--c", "1", "--r", "1", "--t1", "5", "--n", "50"});
    CHECK(svg.code == 0);
    CHECK(svg.out.find("viewBox=\"0 0 1000.000") != std::string::npos);
    CHECK(svg.out.find("<title>InflectionalSmallK") != std::string::npos);
    CHECK(svg.out.find("stroke-width=\"2.000\"") != std::string::npos);

    const Run csv = cli({"elastica", "--c", "1", "--r", "1", "--t1", "5", "--n", "5", "--format", "csv"});
    CHECK(csv.out.rfind("s,x,y,theta\n", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 6);

    const std::string path = "elastica_cli_test.svg";
    CHECK(cli({"elastica", "--c", "2", "--t1", "3", "--out", path}).code == 0);
    std::ifstream f(path);
    CHECK(f.good());
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("bvp")
{
    const json line = cli_json({"bvp", "--x", "1", "--y", "0", "--theta", "0", "--t1", "1"});
    REQUIRE(line["solutions"].size() == 1);
    CHECK(line["solutions"][0]["J"] == 0.0);

    const json circ = cli_json({"bvp", "--x", "0", "--y", "0.6366197723675814", "--theta", "180", "--deg", "--t1",
                                "1", "--jobs", "2"});
    bool found = false;
    for (const json& s : circ["solutions"])
        if (std::abs(s["c"].get<double>() - std::numbers::pi) < 1e-8 && s["r"] == 0.0) found = true;
    CHECK(found);
}

TEST_CASE("ELASTICA_TOL")
{
    CHECK(elastica::cli::default_tol() == 1e-9);
    ::setenv("ELASTICA_TOL", "1e-5", 1);
    CHECK(elastica::cli::default_tol() == 1e-5);
    const json a = cli_json({"exp", "--c", "2.000001", "--r", "1", "--t", "1"});
    CHECK(a["stratum"] == "N3plus");
    ::setenv("ELASTICA_TOL", "garbage", 1);
    CHECK(elastica::cli::default_tol() == 1e-9);
    ::unsetenv("ELASTICA_TOL");
    const json b = cli_json({"exp", "--c", "2.000001", "--r", "1", "--t", "1"});
    CHECK(b["stratum"] == "N2plus");
}
