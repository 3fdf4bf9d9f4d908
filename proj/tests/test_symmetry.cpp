#include "support.hpp"

#include "elastica/elliptic.hpp"
#include "elastica/symmetry.hpp"

#include <doctest.h>

#include <random>

using namespace elastica;
using doctest::Approx;

TEST_CASE("group structure")
{
    CHECK(compose(Reflection::Eps1, Reflection::Eps2) == Reflection::Eps3);
    CHECK(compose(Reflection::Eps2, Reflection::Eps3) == Reflection::Eps1);
    CHECK(compose(Reflection::Eps3, Reflection::Eps1) == Reflection::Eps2);
}

TEST_CASE("reflections of states")
{
    const State q{2.0, 3.0, 1.0};
    const State e3 = reflect_state(Reflection::Eps3, q);
    CHECK(e3.x == 2.0);
    CHECK(e3.y == -3.0);
    CHECK(e3.theta == -1.0);

    const State e1 = reflect_state(Reflection::Eps1, {1.5, 0.0, 0.0});
    CHECK(e1.x == 1.5);
    CHECK(e1.y == 0.0);
    CHECK(e1.theta == 0.0);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int n = 0; n < 100; ++n) {
        const State s{u(rng), u(rng), u(rng)};
        for (Reflection i : {Reflection::Eps1, Reflection::Eps2, Reflection::Eps3}) {
            const State back = reflect_state(i, reflect_state(i, s));
            CHECK(ref::state_gap(back, s) < 1e-14);
        }
        // eps^1 eps^2 = eps^3 on M as well
        const State c = reflect_state(Reflection::Eps1, reflect_state(Reflection::Eps2, s));
        CHECK(ref::state_gap(c, reflect_state(Reflection::Eps3, s)) < 1e-14);
    }
}

TEST_CASE("reflections of covectors")
{
    const Covector e3 = reflect_covector(Reflection::Eps3, {0.4, 1.1, 1.0}, 2.7);
    CHECK(e3.beta == -0.4);
    CHECK(e3.c == -1.1);
    CHECK(e3.r == 1.0);

    const Covector lam{0.0, 1.3, 1.0};
    const Covector e2 = reflect_covector(Reflection::Eps2, lam, period(lam));
    CHECK(ref::angle_gap(e2.beta, 0.0) < 1e-12);
    CHECK(e2.c == Approx(lam.c).epsilon(1e-12));

    // the reflected trajectory is the original one traversed backwards
    const Covector mu{0.9, -0.6, 2.0};
    const double t = 1.7;
    const Covector e1 = reflect_covector(Reflection::Eps1, mu, t);
    for (double s : {0.3, 1.0}) {
        const Covector a = flow_vertical(e1, s), b = flow_vertical(mu, t - s);
        CHECK(ref::angle_gap(a.beta, b.beta) < 1e-12);
        CHECK(a.c == Approx(-b.c).epsilon(1e-12));
    }
}

TEST_CASE("P and Q")
{
    CHECK(P_of({1.0, 2.0, 0.0}) == -2.0);
    CHECK(Q_of({1.0, 2.0, 0.0}) == 1.0);
    const State q{0.3, -1.2, 0.8};
    CHECK(std::hypot(P_of(q), Q_of(q)) == Approx(std::hypot(q.x, q.y)));
}

TEST_CASE("fixed points in the state space")
{
    const double tol = 1e-12;
    bool minus = true;
    const State id{1.0, 0.0, 0.0};
    CHECK(is_fixed_state(Reflection::Eps1, id, tol));
    CHECK(is_fixed_state(Reflection::Eps2, id, tol));
    CHECK(is_fixed_state(Reflection::Eps3, id, tol, &minus));
    CHECK_FALSE(minus);

    const State pi_pt{0.0, 0.0, ref::pi};
    CHECK(is_fixed_state(Reflection::Eps3, pi_pt, tol, &minus));
    CHECK(minus);
    CHECK(is_fixed_state(Reflection::Eps2, pi_pt, tol));
    CHECK_FALSE(is_fixed_state(Reflection::Eps1, pi_pt, tol));

    const State none{1.0, 1.0, 1.0};
    for (Reflection i : {Reflection::Eps1, Reflection::Eps2, Reflection::Eps3})
        CHECK_FALSE(is_fixed_state(i, none, tol));

    // a fixed point really is fixed
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int n = 0; n < 50; ++n) {
        const State s{u(rng), u(rng), u(rng)};
        const State h = reflect_state(Reflection::Eps2, s);
        const State mid{0.5 * (s.x + h.x), 0.5 * (s.y + h.y), s.theta};
        if (is_fixed_state(Reflection::Eps2, mid, 1e-9))
            CHECK(ref::state_gap(reflect_state(Reflection::Eps2, mid), mid) < 1e-9);
    }
}

TEST_CASE("fixed points in the covector space")
{
    const double tol = 1e-10;
    const double k = 0.6, r = 1.0;
    const double K = ellint_K(k);
    // with phi = 0 the midpoint coordinate is tau = p = t/2
    const Covector lam = from_elliptic({Stratum::N1, k, 0.0, r});
    CHECK(is_fixed_covector(Reflection::Eps1, lam, 2.0 * K, tol));
    CHECK_FALSE(is_fixed_covector(Reflection::Eps2, lam, 2.0 * K, tol));
    CHECK(is_fixed_covector(Reflection::Eps2, lam, 4.0 * K, tol));

    const Covector shifted = from_elliptic({Stratum::N1, k, -1.0, r});
    CHECK(is_fixed_covector(Reflection::Eps2, shifted, 2.0, tol));
    CHECK_FALSE(is_fixed_covector(Reflection::Eps3, shifted, 2.0, tol));

    for (double t : {0.5, 2.0, 7.0})
        CHECK_FALSE(is_fixed_covector(Reflection::Eps1, {0.3, 2.0 * std::cos(0.15), 1.0}, t, tol));

    // fixed in N means the reflected covector is the covector itself
    const Covector e1 = reflect_covector(Reflection::Eps1, lam, 2.0 * K);
    CHECK(ref::angle_gap(e1.beta, lam.beta) < 1e-10);
    CHECK(std::abs(e1.c - lam.c) < 1e-10);
}

TEST_CASE("Maxwell coordinates")
{
    const MaxwellCoords a = maxwell_coords(from_elliptic({Stratum::N1, 0.5, 0.0, 1.0}), 2.0);
    CHECK(a.tau == Approx(1.0).epsilon(1e-14));
    CHECK(a.p == Approx(1.0).epsilon(1e-14));
    const double k = 0.6;
    const MaxwellCoords b = maxwell_coords(from_elliptic({Stratum::N2plus, k, 0.0, 1.0}), 2.0 * k);
    CHECK(b.tau == Approx(1.0).epsilon(1e-14));
    CHECK(b.p == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("commutation with the exponential map")
{
    for (const Covector& lam : ref::stratum_fixture()) {
        for (Reflection i : {Reflection::Eps1, Reflection::Eps2, Reflection::Eps3}) {
            const double t = 2.3;
            const Covector li = reflect_covector(i, lam, t);
            CHECK(ref::state_gap(reflect_state(i, exp_map(lam, t)), exp_map(li, t)) < 1e-10);
            CHECK(std::abs(elastic_energy_closed(lam, t) - elastic_energy_closed(li, t)) < 1e-10);
        }
    }
}
