#include "elastica/elliptic.hpp"
#include "elastica/expmap.hpp"
#include "elastica/maxwell.hpp"
#include "elastica/oracle.hpp"
#include "elastica/phase.hpp"
#include "elastica/symmetry.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace elastica;

PYBIND11_MODULE(_elastica, m)
{
    m.doc() = "Euler elastica: closed-form exponential map, Maxwell strata and cut-time bounds";

    py::class_<Covector>(m, "Covector")
        .def(py::init<>())
        .def(py::init([](double beta, double c, double r) { return Covector{beta, c, r}; }),
             py::arg("beta"), py::arg("c"), py::arg("r"))
        .def_readwrite("beta", &Covector::beta)
        .def_readwrite("c", &Covector::c)
        .def_readwrite("r", &Covector::r)
        .def("__repr__", [](const Covector& l) {
            return "Covector(beta=" + py::repr(py::float_(l.beta)).cast<std::string>()
                 + ", c=" + py::repr(py::float_(l.c)).cast<std::string>()
                 + ", r=" + py::repr(py::float_(l.r)).cast<std::string>() + ")";
        });

    py::class_<State>(m, "State")
        .def(py::init<>())
        .def(py::init([](double x, double y, double theta) { return State{x, y, theta}; }),
             py::arg("x"), py::arg("y"), py::arg("theta"))
        .def_readwrite("x", &State::x)
        .def_readwrite("y", &State::y)
        .def_readwrite("theta", &State::theta)
        .def("__iter__", [](const State& q) { return py::iter(py::make_tuple(q.x, q.y, q.theta)); })
        .def("__repr__", [](const State& q) {
            return "State(x=" + py::repr(py::float_(q.x)).cast<std::string>()
                 + ", y=" + py::repr(py::float_(q.y)).cast<std::string>()
                 + ", theta=" + py::repr(py::float_(q.theta)).cast<std::string>() + ")";
        });

    py::enum_<Stratum>(m, "Stratum")
        .value("N1", Stratum::N1)
        .value("N2plus", Stratum::N2plus)
        .value("N2minus", Stratum::N2minus)
        .value("N3plus", Stratum::N3plus)
        .value("N3minus", Stratum::N3minus)
        .value("N4", Stratum::N4)
        .value("N5", Stratum::N5)
        .value("N6plus", Stratum::N6plus)
        .value("N6minus", Stratum::N6minus)
        .value("N7", Stratum::N7);

    py::enum_<ElasticaClass>(m, "ElasticaClass")
        .value("Line", ElasticaClass::Line)
        .value("InflectionalSmallK", ElasticaClass::InflectionalSmallK)
        .value("Rectangular", ElasticaClass::Rectangular)
        .value("InflectionalMidK", ElasticaClass::InflectionalMidK)
        .value("FigureEight", ElasticaClass::FigureEight)
        .value("InflectionalLargeK", ElasticaClass::InflectionalLargeK)
        .value("Critical", ElasticaClass::Critical)
        .value("NonInflectional", ElasticaClass::NonInflectional)
        .value("Circle", ElasticaClass::Circle);

    py::enum_<MaxwellStratum>(m, "MaxwellStratum")
        .value("MAX1", MaxwellStratum::MAX1)
        .value("MAX2", MaxwellStratum::MAX2)
        .value("MAX3plus", MaxwellStratum::MAX3plus)
        .value("MAX3minus", MaxwellStratum::MAX3minus);

    py::enum_<Reflection>(m, "Reflection")
        .value("Eps1", Reflection::Eps1)
        .value("Eps2", Reflection::Eps2)
        .value("Eps3", Reflection::Eps3);

    py::class_<JacobiValues>(m, "JacobiValues")
        .def_readonly("sn", &JacobiValues::sn)
        .def_readonly("cn", &JacobiValues::cn)
        .def_readonly("dn", &JacobiValues::dn)
        .def_readonly("am", &JacobiValues::am)
        .def_readonly("eps", &JacobiValues::eps);

    py::class_<EllipticCoords>(m, "EllipticCoords")
        .def(py::init<>())
        .def_readwrite("stratum", &EllipticCoords::stratum)
        .def_readwrite("k", &EllipticCoords::k)
        .def_readwrite("phi", &EllipticCoords::phi)
        .def_readwrite("r", &EllipticCoords::r);

    py::class_<MaxwellReport>(m, "MaxwellReport")
        .def_readonly("stratum", &MaxwellReport::stratum)
        .def_readonly("t1_max1", &MaxwellReport::t1_max1)
        .def_readonly("t1_max2", &MaxwellReport::t1_max2)
        .def_readonly("t1_max3plus", &MaxwellReport::t1_max3plus)
        .def_readonly("t1_max3minus", &MaxwellReport::t1_max3minus)
        .def_readonly("bound", &MaxwellReport::bound)
        .def_readonly("caveat", &MaxwellReport::caveat);

    py::class_<BvpSolution>(m, "BvpSolution")
        .def_readonly("lam", &BvpSolution::lam)
        .def_readonly("stratum", &BvpSolution::stratum)
        .def_readonly("J", &BvpSolution::J)
        .def_readonly("residual", &BvpSolution::residual)
        .def_readonly("bound", &BvpSolution::bound)
        .def_readonly("optimal_candidate", &BvpSolution::optimal_candidate);

    py::class_<BvpResult>(m, "BvpResult")
        .def_readonly("solutions", &BvpResult::solutions)
        .def_readonly("starts_tried", &BvpResult::starts_tried)
        .def_readonly("converged", &BvpResult::converged)
        .def_readonly("diagnostics", &BvpResult::diagnostics);

    // elliptic
    m.def("ellint_K", &ellint_K, py::arg("k"));
    m.def("ellint_E", &ellint_E, py::arg("k"));
    m.def("ellint_F_inc", &ellint_F_inc, py::arg("phi"), py::arg("k"));
    m.def("ellint_E_inc", &ellint_E_inc, py::arg("phi"), py::arg("k"));
    m.def("jacobi", &jacobi, py::arg("u"), py::arg("k"));
    m.def("jacobi_recip_modulus", &jacobi_recip_modulus, py::arg("u"), py::arg("k"));

    // phase
    m.def("energy", &energy, py::arg("lam"));
    m.def("stratify", &stratify, py::arg("lam"), py::arg("tol") = kDefaultStratTol);
    m.def("to_elliptic", &to_elliptic, py::arg("lam"), py::arg("tol") = kDefaultStratTol);
    m.def("from_elliptic", &from_elliptic, py::arg("ec"));
    m.def("flow_vertical", &flow_vertical, py::arg("lam"), py::arg("t"), py::arg("tol") = kDefaultStratTol);
    m.def("period", py::overload_cast<const Covector&, double>(&period), py::arg("lam"),
          py::arg("tol") = kDefaultStratTol);

    // expmap
    m.def("exp_map", &exp_map, py::arg("lam"), py::arg("t"), py::arg("tol") = kDefaultStratTol);
    m.def("sample_elastica", &sample_elastica, py::arg("lam"), py::arg("t1"), py::arg("n"),
          py::arg("tol") = kDefaultStratTol);
    m.def("classify", &classify, py::arg("lam"), py::arg("tol") = kDefaultStratTol, py::arg("class_tol") = 1e-9);
    m.def("elastic_energy_closed", &elastic_energy_closed, py::arg("lam"), py::arg("t"),
          py::arg("tol") = kDefaultStratTol);

    // symmetry
    m.def("reflect_state", &reflect_state, py::arg("i"), py::arg("q"));
    m.def("reflect_covector", &reflect_covector, py::arg("i"), py::arg("lam"), py::arg("t"),
          py::arg("tol") = kDefaultStratTol);

    // maxwell
    m.def("find_k0", &find_k0);
    m.def("find_kstar", [] {
        const KStar ks = find_kstar();
        return py::make_tuple(ks.kstar, ks.ustar);
    });
    m.def("p1_roots", &p1_roots, py::arg("k"), py::arg("n"));
    m.def("u_a1", &u_a1, py::arg("k"));
    m.def("u_h1", &u_h1, py::arg("k"));
    m.def("p_g1", &p_g1, py::arg("k"));
    m.def("in_maxwell", &in_maxwell, py::arg("lam"), py::arg("t"), py::arg("tol") = kDefaultMaxwellTol,
          py::arg("strat_tol") = kDefaultStratTol);
    m.def("cut_time_bound", &cut_time_bound, py::arg("lam"), py::arg("tol") = kDefaultMaxwellTol,
          py::arg("strat_tol") = kDefaultStratTol);

    // oracle
    m.def("integrate_extremal", [](const Covector& lam, double t, double step) {
        IntegratorConfig cfg;
        cfg.step = step;
        const ExtremalSolution s = integrate_extremal(lam, t, cfg);
        return py::make_tuple(s.q, s.lam, s.J);
    }, py::arg("lam"), py::arg("t"), py::arg("step") = 1e-4);
    m.def("attainable", &attainable, py::arg("q1"), py::arg("t1"));
    m.def("bvp_shoot", [](const State& q1, double t1, int starts, int jobs) {
        BvpConfig cfg;
        cfg.starts = starts;
        cfg.jobs = jobs;
        py::gil_scoped_release release;
        return bvp_shoot(q1, t1, cfg);
    }, py::arg("q1"), py::arg("t1"), py::arg("starts") = 0, py::arg("jobs") = 1);
}
