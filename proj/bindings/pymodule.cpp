// Python bindings for the main operations of the toolkit.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kk/contour.hpp"
#include "kk/hilbert.hpp"
#include "kk/signal_catalog.hpp"
#include "kk/transforms.hpp"
#include "kk/version.hpp"

namespace py = pybind11;
using namespace kk;

namespace {

HilbertEngine engine_from_string(const std::string& s) {
    if (s == "pv") return HilbertEngine::PV;
    if (s == "spectral") return HilbertEngine::Spectral;
    throw std::invalid_argument("engine must be 'pv' or 'spectral'");
}

HilbertDirection direction_from_string(const std::string& s) {
    if (s == "real_from_imag") return HilbertDirection::RealFromImag;
    if (s == "imag_from_real") return HilbertDirection::ImagFromReal;
    throw std::invalid_argument(
        "direction must be 'real_from_imag' or 'imag_from_real'");
}

py::dict report_to_dict(const KKReport& r) {
    py::dict d;
    d["engine"] = to_string(r.engine);
    d["residual_rel_l2_real"] = r.residual_rel_l2_real;
    d["residual_rel_l2_imag"] = r.residual_rel_l2_imag;
    d["max_abs_real"] = r.max_abs_real;
    d["max_abs_imag"] = r.max_abs_imag;
    d["verdict"] = to_string(r.verdict);
    d["interior_fraction"] = r.interior_fraction;
    d["interior_begin"] = r.interior_begin;
    d["interior_end"] = r.interior_end;
    d["reconstructed_real"] = r.reconstructed_real;
    d["reconstructed_imag"] = r.reconstructed_imag;
    return d;
}

}  // namespace

PYBIND11_MODULE(_kklaplace, m) {
    m.doc() = "Laplace/Fourier transforms, contour verification and "
              "Kramers-Kronig consistency checks for causal signals";
    m.attr("__version__") = kToolVersion;

    py::class_<CausalSignal>(m, "CausalSignal")
        .def_readonly("id", &CausalSignal::id)
        .def_readonly("causal", &CausalSignal::causal)
        .def_property_readonly(
            "l1", [](const CausalSignal& s) { return to_string(s.l1_membership); })
        .def_property_readonly(
            "l2", [](const CausalSignal& s) { return to_string(s.l2_membership); })
        .def_property_readonly(
            "lambda0",
            [](const CausalSignal& s) -> py::object {
                if (!s.lambda0) return py::none();
                return py::float_(*s.lambda0);
            })
        .def_readonly("parameters", &CausalSignal::parameters)
        .def("__repr__", [](const CausalSignal& s) {
            return "<CausalSignal '" + s.id + "'>";
        });

    py::class_<FrequencyGrid>(m, "FrequencyGrid")
        .def(py::init([](double lo, double hi, int n) {
                 FrequencyGrid g{lo, hi, n};
                 g.validate();
                 return g;
             }),
             py::arg("omega_min"), py::arg("omega_max"), py::arg("n_points"))
        .def_readonly("omega_min", &FrequencyGrid::omega_min)
        .def_readonly("omega_max", &FrequencyGrid::omega_max)
        .def_readonly("n_points", &FrequencyGrid::n_points)
        .def("point", &FrequencyGrid::point)
        .def("spacing", &FrequencyGrid::spacing);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("grid", &Spectrum::grid)
        .def_readonly("values", &Spectrum::values)
        .def_property_readonly("tail_model", [](const Spectrum& s) {
            return s.tail_model.kind == TailModel::Kind::Rational ? "rational"
                                                                  : "none";
        });

    m.def("catalog_ids", &catalog_ids);
    m.def("catalog_get", &catalog_get, py::arg("id"),
          py::arg("parameters") = std::map<std::string, double>{});
    m.def("evaluate", &evaluate, py::arg("signal"), py::arg("t"));
    m.def(
        "classify_integrability",
        [](const CausalSignal& s, const std::vector<double>& schedule,
           double tol) {
            IntegrabilityVerdict v = classify_integrability(s, schedule, tol);
            py::dict d;
            d["l1"] = to_string(v.l1);
            d["l2"] = to_string(v.l2);
            d["l1_partial_integral"] = v.l1_partial_integral;
            d["l2_partial_integral"] = v.l2_partial_integral;
            d["t_max_probed"] = v.t_max_probed;
            return d;
        },
        py::arg("signal"),
        py::arg("schedule") = default_integrability_schedule(),
        py::arg("tol") = kDefaultIntegrabilityTol);

    m.def(
        "laplace_transform",
        [](const CausalSignal& s, Complex z) {
            return laplace_transform(s, ComplexPoint::from_complex(z));
        },
        py::arg("signal"), py::arg("s"));
    m.def(
        "fourier_transform",
        [](const CausalSignal& s, double w) { return fourier_transform(s, w); },
        py::arg("signal"), py::arg("omega"));
    m.def(
        "estimate_lambda0",
        [](const CausalSignal& s, double lo, double hi) {
            LambdaEstimate e = estimate_lambda0(s, {lo, hi});
            py::dict d;
            d["value"] = e.value;
            d["at_lower_bound"] = e.at_lower_bound;
            return d;
        },
        py::arg("signal"), py::arg("bracket_low"), py::arg("bracket_high"));
    m.def(
        "riemann_lebesgue_probe",
        [](const CausalSignal& s, double sdp, const std::vector<double>& seq) {
            return riemann_lebesgue_probe(s, sdp, seq);
        },
        py::arg("signal"), py::arg("s_double_prime") = 0.0,
        py::arg("s_prime_sequence") = default_riemann_lebesgue_sequence());
    m.def(
        "truncated_fourier_sequence",
        [](const CausalSignal& s, const std::vector<int>& n, double w) {
            return truncated_fourier_sequence(s, n, w);
        },
        py::arg("signal"), py::arg("n_values"), py::arg("omega"));
    m.def(
        "bromwich_inverse",
        [](const CausalSignal& s, double t, double a, double cutoff) {
            if (!s.closed_form_laplace)
                throw std::invalid_argument(
                    "signal has no closed-form transform; supply one via the "
                    "generic overload");
            if (!s.lambda0)
                throw std::invalid_argument("signal has unknown lambda0");
            BromwichResult r =
                bromwich_inverse(s.closed_form_laplace, *s.lambda0, t, a, cutoff);
            py::dict d;
            d["value"] = r.value;
            d["quadrature_error"] = r.quadrature_error;
            d["truncation_error"] = r.truncation_error;
            return d;
        },
        py::arg("signal"), py::arg("t"), py::arg("a") = 0.0,
        py::arg("cutoff") = 1e4);

    m.def(
        "integrate_contour",
        [](const CausalSignal& s, double omega, double radius, double epsilon) {
            if (s.l1_membership != Membership::Yes)
                throw std::invalid_argument("contour requires an L1 signal");
            LaplaceFn fn = s.closed_form_laplace;
            if (!fn)
                fn = [s](Complex z) {
                    return laplace_transform(s, ComplexPoint::from_complex(z));
                };
            ContourBreakdown bd =
                integrate_contour(fn, {omega, radius, epsilon});
            py::dict d;
            d["segment_lower"] = bd.segment_lower;
            d["segment_upper"] = bd.segment_upper;
            d["small_arc"] = bd.small_arc;
            d["large_arc"] = bd.large_arc;
            d["total"] = bd.total;
            d["error_budget"] = bd.error_budget;
            return d;
        },
        py::arg("signal"), py::arg("omega"), py::arg("radius"),
        py::arg("epsilon"));
    m.def("kernel_bound_check", &kernel_bound_check, py::arg("omega"),
          py::arg("ell"), py::arg("R"), py::arg("theta_samples"));

    m.def(
        "pv_hilbert",
        [](const std::vector<double>& samples, const FrequencyGrid& grid,
           double omega, const std::string& tail) {
            TailModel t = tail == "rational" ? TailModel::rational()
                                             : TailModel::none();
            return pv_hilbert(std::span<const double>(samples), grid, omega, t);
        },
        py::arg("samples"), py::arg("grid"), py::arg("omega"),
        py::arg("tail") = "rational");
    m.def(
        "spectral_hilbert",
        [](const std::vector<double>& samples, const std::string& direction) {
            return spectral_hilbert(samples, direction_from_string(direction));
        },
        py::arg("samples"), py::arg("direction") = "real_from_imag");
    m.def("spectrum_from_signal",
          [](const CausalSignal& s, const FrequencyGrid& g) {
              return spectrum_from_signal(s, g);
          },
          py::arg("signal"), py::arg("grid"));
    m.def(
        "kk_check",
        [](const Spectrum& sp, const std::string& engine, double consistent_below,
           double inconsistent_above) {
            return report_to_dict(kk_check(
                sp, engine_from_string(engine),
                KKThresholds{consistent_below, inconsistent_above}));
        },
        py::arg("spectrum"), py::arg("engine") = "pv",
        py::arg("consistent_below") = 0.05, py::arg("inconsistent_above") = 0.25);
    m.def("convolution_form_residual", &convolution_form_residual,
          py::arg("spectrum"));
}
