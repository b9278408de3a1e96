#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "probkit/json_io.hpp"
#include "probkit/lebesgue.hpp"
#include "probkit/suite.hpp"

namespace py = pybind11;
using namespace probkit;

namespace {

Json json_from_str(const std::string& text) { return Json::parse(text); }

Integrand integrand_from(const py::object& f) {
    if (py::isinstance<py::list>(f) || py::isinstance<py::tuple>(f))
        return Integrand(Polynomial(f.cast<std::vector<double>>()));
    return Integrand{f.cast<std::function<double(double)>>()};
}

py::dict dict_of(const Json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_probkit, m) {
    m.doc() = "measure-theoretic probability toolkit";

    py::register_exception<infinite_length_error>(m, "InfiniteLengthError");
    py::register_exception<non_integrable_error>(m, "NonIntegrableError");
    py::register_exception<hypothesis_error>(m, "HypothesisError");

    py::enum_<Bracket>(m, "Bracket")
        .value("OPEN_CLOSED", Bracket::OpenClosed)
        .value("OPEN", Bracket::Open)
        .value("CLOSED_OPEN", Bracket::ClosedOpen)
        .value("CLOSED", Bracket::Closed);

    py::class_<DistributionFunction>(m, "Distribution")
        .def_static("bernoulli", &DistributionFunction::bernoulli, py::arg("p"))
        .def_static("binomial", &DistributionFunction::binomial, py::arg("n"), py::arg("p"))
        .def_static("poisson", &DistributionFunction::poisson, py::arg("lam"))
        .def_static("normal01", &DistributionFunction::normal01)
        .def_static("exponential1", &DistributionFunction::exponential1)
        .def_static("point_mass", &DistributionFunction::point_mass, py::arg("c"))
        .def_static("discrete", &DistributionFunction::discrete, py::arg("points"), py::arg("masses"))
        .def_static("mixed", &DistributionFunction::mixed, py::arg("w"), py::arg("discrete_part"),
                    py::arg("continuous_part"))
        .def_static("from_json", [](const std::string& s) { return distribution_from_json(json_from_str(s)); })
        .def("cdf", &DistributionFunction::cdf)
        .def("cdf_left", &DistributionFunction::cdf_left)
        .def("jump", &DistributionFunction::jump)
        .def("prob_interval", &DistributionFunction::prob_interval, py::arg("bracket"), py::arg("a"),
             py::arg("b"))
        .def("support_and_mass", &DistributionFunction::support_and_mass)
        .def("median", &DistributionFunction::median)
        .def("quantile", &DistributionFunction::quantile)
        .def("sample", &DistributionFunction::sample, py::arg("n"), py::arg("seed"))
        .def("discontinuities", &DistributionFunction::discontinuities)
        .def("purely_discrete", &DistributionFunction::purely_discrete)
        .def("to_json", [](const DistributionFunction& f) { return distribution_to_json(f).dump(); });

    py::class_<IntervalUnion>(m, "IntervalUnion")
        .def_static("from_json",
                    [](const std::string& s) { return interval_union_from_json(json_from_str(s)); })
        .def_static("of", &IntervalUnion::of, py::arg("lo"), py::arg("hi"))
        .def("contains", &IntervalUnion::contains)
        .def("is_empty", &IntervalUnion::is_empty)
        .def("to_json", [](const IntervalUnion& b) { return interval_union_to_json(b).dump(); })
        .def("__repr__",
             [](const IntervalUnion& b) { return "IntervalUnion(" + interval_union_to_json(b).dump() + ")"; });

    m.def("union_", &set_union);
    m.def("intersect", &set_intersect);
    m.def("complement", &set_complement);
    m.def("lebesgue_length", &lebesgue_length);
    m.def("length_under", &length_under, py::arg("dist"), py::arg("set"));

    m.def(
        "integrate",
        [](const py::object& f, const py::object& dist, double a, double b, double tol) {
            const Integrand integ = integrand_from(f);
            const Integrator F = dist.is_none()
                                     ? Integrator::identity()
                                     : Integrator::from_distribution(dist.cast<DistributionFunction>());
            return dict_of(to_json(integrate(integ, F, a, b, tol)));
        },
        py::arg("f"), py::arg("dist"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9,
        "Riemann-Stieltjes integral; f is a callable or polynomial coefficient list, dist None for plain "
        "length");

    m.def("finite_sum_as_integral",
          [](const std::vector<double>& values) { return finite_sum_as_integral(values); });
    m.def(
        "euler_summation",
        [](const std::vector<double>& coeffs, double a, double b) {
            return euler_summation(Polynomial(coeffs), a, b);
        },
        py::arg("poly"), py::arg("a"), py::arg("b"));

    m.def(
        "expect",
        [](const DistributionFunction& law, double tol) { return dict_of(to_json(expect({law, ""}, tol))); },
        py::arg("dist"), py::arg("tol") = 1e-6);
    m.def("expect_closed_form", &expect_closed_form);
    m.def(
        "moment",
        [](const DistributionFunction& law, int k, double tol) {
            return dict_of(to_json(moment({law, ""}, k, tol)));
        },
        py::arg("dist"), py::arg("k"), py::arg("tol") = 1e-6);
    m.def(
        "variance",
        [](const DistributionFunction& law, double tol) {
            return dict_of(to_json(variance({law, ""}, tol)));
        },
        py::arg("dist"), py::arg("tol") = 1e-6);
    m.def(
        "lp_norm",
        [](const DistributionFunction& law, double p, double tol) {
            return dict_of(to_json(lp_norm({law, ""}, p, tol)));
        },
        py::arg("dist"), py::arg("p"), py::arg("tol") = 1e-6);
    m.def(
        "expect_of_function",
        [](const std::function<double(double)>& g, const DistributionFunction& law, double tol) {
            return dict_of(to_json(expect_of_function(g, {law, ""}, tol)));
        },
        py::arg("g"), py::arg("dist"), py::arg("tol") = 1e-6);

    m.def(
        "run_case",
        [](const std::string& case_json, std::uint64_t seed) {
            return dict_of(to_json(run_case(json_from_str(case_json), seed)));
        },
        py::arg("case_json"), py::arg("seed") = 0);
    m.def(
        "run_default_suite",
        [](std::uint64_t seed) {
            const auto reports = run_suite(default_suite_config(seed), seed);
            py::list out;
            for (const auto& r : reports) out.append(dict_of(to_json(r)));
            return out;
        },
        py::arg("seed") = 42);
    m.def("default_suite_config", [](std::uint64_t seed) { return default_suite_config(seed).dump(); });
}
