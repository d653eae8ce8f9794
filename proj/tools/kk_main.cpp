// kk: Kramers-Kronig toolkit front end.
//
// Subcommands:
//   demo      build a catalog spectrum and run the consistency check
//   contour   integrate the pole-excluding path and report closure
//   classify  probe L1/L2 integrability of a catalog signal
//   check     run the consistency check on a user-supplied spectrum CSV
//
// Exit codes: 0 consistent/closed/match, 1 usage or I/O error,
//             2 inconsistent/not-closed/mismatch, 3 inconclusive.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "kk/contour.hpp"
#include "kk/hilbert.hpp"
#include "kk/interp.hpp"
#include "kk/report_json.hpp"
#include "kk/signal_catalog.hpp"
#include "kk/spectrum_io.hpp"
#include "kk/transforms.hpp"
#include "kk/version.hpp"

namespace {

using namespace kk;

std::map<std::string, double> parse_params(
    const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const std::string& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--param expects k=v, got '" + kv + "'");
        char* end = nullptr;
        std::string val = kv.substr(eq + 1);
        double v = std::strtod(val.c_str(), &end);
        if (end == val.c_str() || *end != '\0')
            throw std::invalid_argument("--param value is not a number: '" +
                                        kv + "'");
        out[kv.substr(0, eq)] = v;
    }
    return out;
}

HilbertEngine parse_engine(const std::string& s) {
    if (s == "pv") return HilbertEngine::PV;
    if (s == "spectral") return HilbertEngine::Spectral;
    throw std::invalid_argument("--engine must be pv or spectral");
}

TailModel parse_tail(const std::string& s) {
    if (s == "none") return TailModel::none();
    if (s == "rational") return TailModel::rational();
    throw std::invalid_argument("--tail must be none or rational");
}

int verdict_exit_code(KKVerdict v) {
    switch (v) {
        case KKVerdict::Consistent: return 0;
        case KKVerdict::Inconsistent: return 2;
        default: return 3;
    }
}

// Spectra for the non-L1 negative controls named in the catalog.
Spectrum formal_spectrum(const std::string& id, const FrequencyGrid& grid) {
    Spectrum sp;
    sp.grid = grid;
    sp.tail_model = TailModel::none();
    sp.values.resize(grid.n_points);
    if (id == "constant") {
        for (int i = 0; i < grid.n_points; ++i) sp.values[i] = {1.0, 0.0};
        return sp;
    }
    if (id == "sign") {
        for (int i = 0; i < grid.n_points; ++i) {
            double w = grid.point(i);
            if (std::abs(w) < 1e-12 * grid.spacing())
                throw std::invalid_argument(
                    "sign-function spectrum is singular at omega = 0; choose a "
                    "grid that does not contain 0");
            sp.values[i] = Complex(0.0, 2.0 / w);
        }
        return sp;
    }
    throw std::invalid_argument("signal '" + id +
                                "' is not L1 and has no sampled formal "
                                "transform; demo supports the constant and "
                                "sign negative controls only");
}

void emit_config_signal(JsonWriter& w, const std::string& id,
                        const std::map<std::string, double>& params) {
    w.field("signal", id);
    w.begin_object("parameters");
    for (const auto& [k, v] : params) w.field(k, v);
    w.end_object();
}

void emit_kk_results(JsonWriter& w, const KKReport& rep,
                     const std::vector<std::string>& warnings) {
    w.begin_object("results");
    w.field("engine", to_string(rep.engine));
    w.field("residual_rel_l2_real", rep.residual_rel_l2_real);
    w.field("residual_rel_l2_imag", rep.residual_rel_l2_imag);
    w.field("max_abs_real", rep.max_abs_real);
    w.field("max_abs_imag", rep.max_abs_imag);
    w.begin_object("thresholds");
    w.field("consistent_below", rep.thresholds.consistent_below);
    w.field("inconsistent_above", rep.thresholds.inconsistent_above);
    w.end_object();
    w.field("interior_fraction", rep.interior_fraction);
    w.begin_array("warnings");
    for (const auto& s : warnings) w.element(s);
    w.end_array();
    w.end_object();
}

std::string plot_csv(const Spectrum& sp, const KKReport& rep) {
    std::string out =
        "omega,re_given,im_given,re_reconstructed,im_reconstructed\n";
    for (int i = 0; i < sp.grid.n_points; ++i) {
        out += JsonWriter::format_double(sp.grid.point(i));
        out += ',';
        out += JsonWriter::format_double(sp.values[i].real());
        out += ',';
        out += JsonWriter::format_double(sp.values[i].imag());
        out += ',';
        if (i >= rep.interior_begin && i < rep.interior_end) {
            out += JsonWriter::format_double(
                rep.reconstructed_real[i - rep.interior_begin]);
            out += ',';
            out += JsonWriter::format_double(
                rep.reconstructed_imag[i - rep.interior_begin]);
        } else {
            out += ',';
        }
        out += '\n';
    }
    return out;
}

const char* to_string_tail(const TailModel& t) {
    return t.kind == TailModel::Kind::Rational ? "rational" : "none";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kramers-Kronig numerical toolkit"};
    app.set_version_flag("--version", kk::kToolVersion);
    app.require_subcommand(1);

    // ---- demo ----
    std::string d_signal, d_grid, d_engine = "pv", d_report, d_plot;
    std::string d_tail = "rational";
    std::vector<std::string> d_params;
    double d_cons = 0.05, d_incons = 0.25;
    CLI::App* demo = app.add_subcommand(
        "demo", "catalog signal -> spectrum -> consistency check");
    demo->add_option("--signal", d_signal, "catalog id")->required();
    demo->add_option("--param", d_params, "signal parameter k=v (repeatable)");
    demo->add_option("--grid", d_grid, "MIN:MAX:N")->required();
    demo->add_option("--engine", d_engine, "pv|spectral");
    demo->add_option("--report", d_report, "report JSON path")->required();
    demo->add_option("--plot", d_plot, "plot CSV path");
    demo->add_option("--consistent-below", d_cons);
    demo->add_option("--inconsistent-above", d_incons);
    demo->add_option("--tail", d_tail, "none|rational (negative controls only)");

    // ---- contour ----
    std::string c_signal, c_out;
    std::vector<std::string> c_params;
    double c_omega = 0.0, c_radius = 0.0, c_epsilon = 0.0;
    CLI::App* contour = app.add_subcommand(
        "contour", "four-segment path integral of L(s)/(s+i*omega)");
    contour->add_option("--signal", c_signal)->required();
    contour->add_option("--param", c_params);
    contour->add_option("--omega", c_omega)->required();
    contour->add_option("--radius", c_radius)->required();
    contour->add_option("--epsilon", c_epsilon)->required();
    contour->add_option("--out", c_out, "breakdown JSON path")->required();

    // ---- classify ----
    std::string l_signal, l_out;
    std::vector<std::string> l_params;
    CLI::App* classify =
        app.add_subcommand("classify", "L1/L2 integrability probe");
    classify->add_option("--signal", l_signal)->required();
    classify->add_option("--param", l_params);
    classify->add_option("--out", l_out, "verdict JSON path")->required();

    // ---- check ----
    std::string k_input, k_columns = "omega,re,im", k_grid, k_engine = "pv";
    std::string k_report, k_plot, k_tail = "rational";
    double k_cons = 0.05, k_incons = 0.25;
    CLI::App* check =
        app.add_subcommand("check", "consistency check of a spectrum CSV");
    check->add_option("--input", k_input)->required();
    check->add_option("--columns", k_columns, "omega,re,im column names");
    check->add_option("--grid", k_grid, "MIN:MAX:N resampling grid")->required();
    check->add_option("--engine", k_engine, "pv|spectral");
    check->add_option("--report", k_report)->required();
    check->add_option("--plot", k_plot);
    check->add_option("--consistent-below", k_cons);
    check->add_option("--inconsistent-above", k_incons);
    check->add_option("--tail", k_tail, "none|rational");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace kk;
        if (demo->parsed()) {
            auto params = parse_params(d_params);
            FrequencyGrid grid = parse_grid_spec(d_grid);
            CausalSignal sig = catalog_get(d_signal, params);
            Spectrum sp;
            if (sig.l1_membership == Membership::Yes) {
                sp = spectrum_from_signal(sig, grid);
            } else {
                sp = formal_spectrum(d_signal, grid);
            }
            if (d_tail == "none") sp.tail_model = TailModel::none();
            KKReport rep = kk_check(sp, parse_engine(d_engine),
                                    {d_cons, d_incons});

            JsonWriter w;
            w.begin_object();
            w.field("tool_version", kToolVersion);
            w.field("subcommand", "demo");
            w.begin_object("config");
            emit_config_signal(w, sig.id, sig.parameters);
            w.field("grid", d_grid);
            w.field("engine", d_engine);
            w.field("tail", to_string_tail(sp.tail_model));
            w.end_object();
            emit_kk_results(w, rep, {});
            w.field("verdict", to_string(rep.verdict));
            w.end_object();
            atomic_write_file(d_report, w.str() + "\n");
            if (!d_plot.empty()) atomic_write_file(d_plot, plot_csv(sp, rep));
            return verdict_exit_code(rep.verdict);
        }

        if (contour->parsed()) {
            auto params = parse_params(c_params);
            CausalSignal sig = catalog_get(c_signal, params);
            if (sig.l1_membership != Membership::Yes)
                throw std::domain_error(
                    "contour requires an L1 signal (transform analytic on the "
                    "closed right half-plane)");
            LaplaceFn laplace;
            if (sig.closed_form_laplace) {
                laplace = sig.closed_form_laplace;
            } else {
                laplace = [sig](Complex s) {
                    return laplace_transform(sig, ComplexPoint::from_complex(s));
                };
            }
            ContourSpec spec{c_omega, c_radius, c_epsilon};
            ContourBreakdown bd = integrate_contour(laplace, spec);
            double budget = 10.0 * bd.error_budget;
            bool closed = std::abs(bd.total) <= budget;

            JsonWriter w;
            w.begin_object();
            w.field("tool_version", kToolVersion);
            w.field("subcommand", "contour");
            w.begin_object("config");
            emit_config_signal(w, sig.id, sig.parameters);
            w.field("omega", c_omega);
            w.field("radius", c_radius);
            w.field("epsilon", c_epsilon);
            w.end_object();
            w.begin_object("results");
            auto emit_c = [&](const char* key, Complex v) {
                w.begin_object(key);
                w.field("re", v.real());
                w.field("im", v.imag());
                w.end_object();
            };
            emit_c("segment_lower", bd.segment_lower);
            emit_c("segment_upper", bd.segment_upper);
            emit_c("small_arc", bd.small_arc);
            emit_c("large_arc", bd.large_arc);
            emit_c("total", bd.total);
            w.field("abs_total", std::abs(bd.total));
            w.field("closure_budget", budget);
            w.end_object();
            w.field("verdict", closed ? "Closed" : "NotClosed");
            w.end_object();
            atomic_write_file(c_out, w.str() + "\n");
            return closed ? 0 : 2;
        }

        if (classify->parsed()) {
            auto params = parse_params(l_params);
            CausalSignal sig = catalog_get(l_signal, params);
            IntegrabilityVerdict v = classify_integrability(sig);
            bool match =
                std::string(to_string(v.l1)) == to_string(sig.l1_membership) &&
                std::string(to_string(v.l2)) == to_string(sig.l2_membership);

            JsonWriter w;
            w.begin_object();
            w.field("tool_version", kToolVersion);
            w.field("subcommand", "classify");
            w.begin_object("config");
            emit_config_signal(w, sig.id, sig.parameters);
            w.end_object();
            w.begin_object("results");
            w.field("l1", to_string(v.l1));
            w.field("l2", to_string(v.l2));
            w.field("l1_partial_integral", v.l1_partial_integral);
            w.field("l2_partial_integral", v.l2_partial_integral);
            w.field("t_max_probed", v.t_max_probed);
            w.field("catalog_l1", to_string(sig.l1_membership));
            w.field("catalog_l2", to_string(sig.l2_membership));
            w.end_object();
            w.field("verdict", match ? "Match" : "Mismatch");
            w.end_object();
            atomic_write_file(l_out, w.str() + "\n");
            return match ? 0 : 2;
        }

        if (check->parsed()) {
            std::vector<std::string> cols;
            {
                std::stringstream ss(k_columns);
                std::string c;
                while (std::getline(ss, c, ',')) cols.push_back(c);
                if (cols.size() != 3)
                    throw std::invalid_argument(
                        "--columns must name three columns: omega,re,im");
            }
            FrequencyGrid grid = parse_grid_spec(k_grid);
            SpectrumRows rows =
                read_spectrum_csv(k_input, cols[0], cols[1], cols[2]);
            std::vector<std::string> warnings;
            if (grid.omega_min < rows.omega.front() ||
                grid.omega_max > rows.omega.back())
                throw std::runtime_error(
                    "requested grid extends beyond the data range "
                    "(extrapolation is not supported)");
            if (rows.omega.front() < grid.omega_min ||
                rows.omega.back() > grid.omega_max)
                warnings.push_back(
                    "requested grid is narrower than the data; edge content "
                    "was discarded");

            std::vector<double> re(rows.omega.size()), im(rows.omega.size());
            for (std::size_t i = 0; i < rows.values.size(); ++i) {
                re[i] = rows.values[i].real();
                im[i] = rows.values[i].imag();
            }
            PchipInterpolant ire(rows.omega, re), iim(rows.omega, im);
            Spectrum sp;
            sp.grid = grid;
            sp.tail_model = parse_tail(k_tail);
            sp.values.resize(grid.n_points);
            for (int i = 0; i < grid.n_points; ++i) {
                double w = grid.point(i);
                sp.values[i] = Complex(ire(w), iim(w));
            }
            KKReport rep = kk_check(sp, parse_engine(k_engine),
                                    {k_cons, k_incons});

            JsonWriter w;
            w.begin_object();
            w.field("tool_version", kToolVersion);
            w.field("subcommand", "check");
            w.begin_object("config");
            w.field("input", k_input);
            w.field("columns", k_columns);
            w.field("grid", k_grid);
            w.field("engine", k_engine);
            w.field("tail", k_tail);
            w.end_object();
            emit_kk_results(w, rep, warnings);
            w.field("verdict", to_string(rep.verdict));
            w.end_object();
            atomic_write_file(k_report, w.str() + "\n");
            if (!k_plot.empty()) atomic_write_file(k_plot, plot_csv(sp, rep));
            return verdict_exit_code(rep.verdict);
        }
    } catch (const std::exception& e) {
        std::cerr << "kk: error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
