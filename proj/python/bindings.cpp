#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gesolve/report.hpp"
#include "gesolve/tangent.hpp"

namespace py = pybind11;
using namespace gesolve;

namespace {

py::object json_to_py(const Json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(dump_json(j, 0));
}

SolveOptions make_opts(double tol, int max_iter, std::uint64_t seed) {
    SolveOptions o;
    o.tol = tol;
    o.max_iter = max_iter;
    o.seed = seed;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "solver and certification toolkit for degenerate generalized equations";

    py::class_<ProblemSpec>(m, "Problem")
        .def_readonly("m", &ProblemSpec::m)
        .def_readonly("n", &ProblemSpec::n)
        .def_readonly("p", &ProblemSpec::p)
        .def_property_readonly("cone", [](const ProblemSpec& s) { return s.cone.to_string(); })
        .def_property_readonly("x0", [](const ProblemSpec& s) { return s.x0; })
        .def_property_readonly("y0", [](const ProblemSpec& s) { return s.y0; })
        .def("eval", &ProblemSpec::eval, py::arg("x"), py::arg("y"))
        .def("__repr__", [](const ProblemSpec& s) {
            return "<Problem m=" + std::to_string(s.m) + " n=" + std::to_string(s.n) +
                   " p=" + std::to_string(s.p) + " cone=" + s.cone.to_string() + ">";
        });

    m.def("builtin", &builtin_problem, py::arg("name"));
    m.def("load", &load_problem, py::arg("path_or_builtin"));
    m.def("parse", &parse_problem, py::arg("text"));
    m.def("serialize", &serialize_problem, py::arg("problem"));

    m.def(
        "degeneracy_profile",
        [](const ProblemSpec& p, double tol) { return json_to_py(to_json(degeneracy_profile(p, tol))); },
        py::arg("problem"), py::arg("tol") = 1e-8);

    m.def("robinson_check", &robinson_check, py::arg("problem"), py::arg("tol") = 1e-9,
          py::arg("seed") = 0);

    m.def("approximation_delta", &approximation_delta, py::arg("problem"), py::arg("x"),
          py::arg("radius") = 0.1, py::arg("samples") = 1000, py::arg("seed") = 0);

    m.def(
        "solve_banach",
        [](const ProblemSpec& p, const Vector& x, double tol, int max_iter, std::uint64_t seed) {
            return json_to_py(to_json(solve_banach(p, x, make_opts(tol, max_iter, seed))));
        },
        py::arg("problem"), py::arg("x"), py::arg("tol") = 1e-9, py::arg("max_iter") = 200,
        py::arg("seed") = 0);

    m.def(
        "solve",
        [](const ProblemSpec& p, const Vector& x, double tol, int max_iter, std::uint64_t seed) {
            return json_to_py(to_json(solve_implicit(p, x, make_opts(tol, max_iter, seed))));
        },
        py::arg("problem"), py::arg("x"), py::arg("tol") = 1e-9, py::arg("max_iter") = 200,
        py::arg("seed") = 0);

    m.def(
        "scaling_study",
        [](const ProblemSpec& p, const std::vector<Vector>& xs, double tol, int max_iter,
           std::uint64_t seed) {
            return json_to_py(to_json(scaling_study(p, xs, make_opts(tol, max_iter, seed))));
        },
        py::arg("problem"), py::arg("xs"), py::arg("tol") = 1e-9, py::arg("max_iter") = 200,
        py::arg("seed") = 0);

    m.def(
        "strong_regularity_estimate",
        [](const ProblemSpec& p, const Vector& h, int samples, double radius, double tol,
           std::uint64_t seed) {
            PFactorOperator op =
                build_p_factor(p.derivative_tensor(p.p), h, p.cone, p.p, p.y0);
            RegularityReport rr = strong_regularity_estimate(
                op, ball_pair_sampler(Vector::Zero(p.n), radius, seed), samples, tol);
            rr.seed = seed;
            rr.radius = radius;
            return json_to_py(to_json(rr));
        },
        py::arg("problem"), py::arg("h"), py::arg("samples") = 1000, py::arg("radius") = 0.1,
        py::arg("tol") = 1e-9, py::arg("seed") = 0);

    m.def(
        "kernel_check",
        [](const ProblemSpec& p, const Vector& h, std::vector<double> ts, double tol) {
            if (ts.empty()) ts = default_t_grid();
            return kernel_check(p, h, ts, tol);
        },
        py::arg("problem"), py::arg("h_bar"), py::arg("t_grid") = std::vector<double>{},
        py::arg("tol") = 1e-9);

    m.def(
        "certify_tangent",
        [](const ProblemSpec& p, const Vector& h, std::vector<double> ts, double tol,
           double slope_min, std::uint64_t seed) {
            if (ts.empty()) ts = default_t_grid();
            TangentOptions o;
            o.tol = tol;
            o.slope_min = slope_min;
            o.seed = seed;
            return json_to_py(to_json(certify_tangent(p, h, ts, o)));
        },
        py::arg("problem"), py::arg("h_bar"), py::arg("t_grid") = std::vector<double>{},
        py::arg("tol") = 1e-9, py::arg("slope_min") = 1.5, py::arg("seed") = 0);

    py::register_exception<HypothesisError>(m, "HypothesisError");
    py::register_exception<ParseError>(m, "ParseError");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
