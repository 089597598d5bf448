// Python bindings for the main operations: eigenset construction, the
// reference statistics, classification, the truncated uniformization series,
// and the homotopy maps. Families and homotopy kinds cross the boundary as
// strings; exact rationals cross as decimal strings.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eigenflow/dynamics.hpp"
#include "eigenflow/homotopy.hpp"
#include "eigenflow/jungreis.hpp"
#include "eigenflow/spectra.hpp"
#include "eigenflow/stats.hpp"

namespace py = pybind11;
using eigenflow::Complex;
namespace spectra = eigenflow::spectra;
namespace stats = eigenflow::stats;
namespace dynamics = eigenflow::dynamics;
namespace jungreis = eigenflow::jungreis;
namespace homotopy = eigenflow::homotopy;

namespace {

homotopy::HomotopySpec make_spec(const std::string& kind, Complex linear_target,
                                 int jungreis_m, bool rotated_translate) {
    homotopy::HomotopySpec spec;
    spec.kind = homotopy::parse_kind(kind);
    spec.linear_target = linear_target;
    spec.jungreis_m = jungreis_m;
    spec.rotated_translate = rotated_translate;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reciprocal eigensets of generalized Lucas companion matrices";

    py::register_exception<eigenflow::InvalidArgument>(m, "InvalidArgumentError",
                                                       PyExc_ValueError);
    py::register_exception<eigenflow::RangeError>(m, "RangeError", PyExc_ValueError);

    py::class_<spectra::EigenRecord>(m, "EigenRecord")
        .def_property_readonly(
            "family",
            [](const spectra::EigenRecord& r) { return spectra::family_name(r.family); })
        .def_readonly("k", &spectra::EigenRecord::k)
        .def_readonly("index", &spectra::EigenRecord::index)
        .def_readonly("eigenvalue", &spectra::EigenRecord::lambda)
        .def_readonly("reciprocal", &spectra::EigenRecord::reciprocal)
        .def_readonly("modulus_recip", &spectra::EigenRecord::modulus_recip)
        .def_readonly("residual", &spectra::EigenRecord::residual)
        .def("__repr__", [](const spectra::EigenRecord& r) {
            return "EigenRecord(k=" + std::to_string(r.k) +
                   ", index=" + std::to_string(r.index) + ")";
        });

    py::class_<spectra::EigenSet>(m, "EigenSet")
        .def_property_readonly(
            "family",
            [](const spectra::EigenSet& es) { return spectra::family_name(es.family); })
        .def_readonly("n_max", &spectra::EigenSet::n_max)
        .def_readonly("tol", &spectra::EigenSet::tol)
        .def_readonly("records", &spectra::EigenSet::records)
        .def("__len__",
             [](const spectra::EigenSet& es) { return es.records.size(); })
        .def("__repr__", [](const spectra::EigenSet& es) {
            return "EigenSet(family='" + std::string(spectra::family_name(es.family)) +
                   "', n_max=" + std::to_string(es.n_max) +
                   ", records=" + std::to_string(es.records.size()) + ")";
        });

    py::class_<stats::UnitCircleRow>(m, "UnitCircleRow")
        .def_readonly("n", &stats::UnitCircleRow::n)
        .def_readonly("pct_within", &stats::UnitCircleRow::pct_within)
        .def_readonly("total", &stats::UnitCircleRow::total)
        .def_readonly("within", &stats::UnitCircleRow::within)
        .def_readonly("left_out", &stats::UnitCircleRow::left_out);

    py::class_<stats::BinHistogram>(m, "BinHistogram")
        .def_readonly("n", &stats::BinHistogram::n)
        .def_readonly("bin_start", &stats::BinHistogram::bin_start)
        .def_readonly("bin_width", &stats::BinHistogram::bin_width)
        .def_readonly("bin_count", &stats::BinHistogram::bin_count)
        .def_readonly("counts", &stats::BinHistogram::counts)
        .def_readonly("out_of_range", &stats::BinHistogram::out_of_range)
        .def("lower_edge", &stats::BinHistogram::lower_edge, py::arg("index"))
        .def("upper_edge", &stats::BinHistogram::upper_edge, py::arg("index"))
        .def("total", &stats::BinHistogram::total);

    py::class_<stats::LogisticFit>(m, "LogisticFit")
        .def_readonly("L", &stats::LogisticFit::L)
        .def_readonly("k", &stats::LogisticFit::k)
        .def_readonly("x0", &stats::LogisticFit::x0)
        .def_readonly("sse", &stats::LogisticFit::sse);

    py::class_<stats::ExpDecayFit>(m, "ExpDecayFit")
        .def_readonly("b", &stats::ExpDecayFit::b)
        .def_readonly("c", &stats::ExpDecayFit::c)
        .def_readonly("sse", &stats::ExpDecayFit::sse);

    py::class_<dynamics::ClassTableRow>(m, "ClassTableRow")
        .def_readonly("n", &dynamics::ClassTableRow::n)
        .def_readonly("hyperbolic", &dynamics::ClassTableRow::hyperbolic)
        .def_readonly("misiurewicz", &dynamics::ClassTableRow::misiurewicz)
        .def_readonly("parabolic", &dynamics::ClassTableRow::parabolic)
        .def_readonly("siegel", &dynamics::ClassTableRow::siegel)
        .def_readonly("others", &dynamics::ClassTableRow::others)
        .def_readonly("classified_total", &dynamics::ClassTableRow::classified_total)
        .def_readonly("grand_total", &dynamics::ClassTableRow::grand_total);

    py::class_<dynamics::EscapeResult>(m, "EscapeResult")
        .def_readonly("escaped", &dynamics::EscapeResult::escaped)
        .def_readonly("iterations", &dynamics::EscapeResult::iterations)
        .def_readonly("final_modulus", &dynamics::EscapeResult::final_modulus);

    m.def(
        "build_eigenset",
        [](const std::string& family, int n_max, double tol) {
            return spectra::build_eigenset(spectra::parse_family(family), n_max, tol);
        },
        py::arg("family"), py::arg("n_max"), py::arg("tol") = 1e-12,
        "Reciprocal eigenvalues of the companion matrices of sizes 2..n_max.");

    m.def(
        "dominant_root",
        [](const std::string& family, int degree) {
            return spectra::dominant_root(spectra::parse_family(family), degree);
        },
        py::arg("family"), py::arg("degree"));

    m.def("unit_circle_table", &stats::unit_circle_table, py::arg("eigenset"),
          py::arg("eps"), py::arg("sizes"));

    m.def("bin_histogram", &stats::bin_histogram, py::arg("eigenset"), py::arg("n"),
          py::arg("bin_start") = 0.49, py::arg("bin_width") = 0.02,
          py::arg("bin_count") = 57);

    m.def("fit_logistic", &stats::fit_logistic, py::arg("xs"), py::arg("ys"));

    m.def("fit_exp_decay_constrained", &stats::fit_exp_decay_constrained, py::arg("xs"),
          py::arg("ys"));

    m.def("density_probe", &stats::density_probe, py::arg("eigenset"), py::arg("angles"),
          py::arg("eps_ring") = 0.01);

    m.def(
        "classify_point",
        [](Complex z, double eps_ring, double arg_tol, int denominator_cap) {
            dynamics::ClassThresholds th;
            th.eps_ring = eps_ring;
            th.arg_tol = arg_tol;
            th.denominator_cap = denominator_cap;
            return std::string(dynamics::dyn_class_name(dynamics::classify_point(z, th)));
        },
        py::arg("z"), py::arg("eps_ring") = 0.01, py::arg("arg_tol") = 0.01,
        py::arg("denominator_cap") = 64);

    m.def(
        "classification_table",
        [](const spectra::EigenSet& es, const std::vector<int>& sizes, double eps_ring,
           double arg_tol, int denominator_cap) {
            dynamics::ClassThresholds th;
            th.eps_ring = eps_ring;
            th.arg_tol = arg_tol;
            th.denominator_cap = denominator_cap;
            return dynamics::classification_table(es, sizes, th);
        },
        py::arg("eigenset"), py::arg("sizes"), py::arg("eps_ring") = 0.01,
        py::arg("arg_tol") = 0.01, py::arg("denominator_cap") = 64);

    m.def("mandelbrot_escape", &dynamics::mandelbrot_escape, py::arg("c"),
          py::arg("max_iter") = 1000, py::arg("radius") = 2.0);

    m.def("in_main_cardioid", &dynamics::in_main_cardioid, py::arg("c"));
    m.def("in_period2_bulb", &dynamics::in_period2_bulb, py::arg("c"));

    m.def("psi_truncated", &jungreis::psi_truncated, py::arg("w"), py::arg("m") = 65,
          "Truncated uniformization series w + sum a_k w^{-(k-1)}.");

    m.def(
        "jungreis_coefficient",
        [](int k) {
            const auto& entry = jungreis::coefficients().a(k);
            return py::make_tuple(entry.numerator.str(), entry.denominator.str(),
                                  entry.double_value);
        },
        py::arg("k"),
        "Exact coefficient a_k as (numerator, denominator) decimal strings plus "
        "the nearest double.");

    m.def("cardioid_param", &homotopy::cardioid_param, py::arg("theta"));
    m.def("boundary_map", &homotopy::boundary_map, py::arg("z"));
    m.def(
        "tuning_map", [](Complex c) { return homotopy::tuning_map(c); }, py::arg("c"));

    m.def(
        "apply_homotopy",
        [](const std::string& kind, Complex z, double t, Complex linear_target,
           int jungreis_m, bool rotated_translate) {
            return make_spec(kind, linear_target, jungreis_m, rotated_translate)
                .apply(z, t);
        },
        py::arg("kind"), py::arg("z"), py::arg("t"),
        py::arg("linear_target") = Complex(0.0, 0.0), py::arg("jungreis_m") = 65,
        py::arg("rotated_translate") = true,
        "Dispatch one of: linear, cardioid, jungreis, tuned_cardioid, "
        "radial_bulb, scale.");
}
