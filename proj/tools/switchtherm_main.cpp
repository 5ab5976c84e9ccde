// switchtherm — batch CLI for quantum-switch qubit thermometry numerics.
// Subcommands: sweep, optimize, threshold, tur, reproduce. Units: k_B = hbar = 1.
// Exit codes: 0 success, 2 usage error, 3 numerical failure; failures print a
// single-line JSON diagnostic to stderr.

#include "switchtherm/analysis.hpp"
#include "switchtherm/report.hpp"
#include "switchtherm/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace st = switchtherm;
using nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

// Stand-ins for the beta -> 0 and beta -> infinity limits (gap 1).
constexpr double kBetaHighT = 1e-8;
constexpr double kBetaLowT = 50.0;

void emit_error(const std::string& command, const std::string& type,
                const std::string& message) {
    ordered_json j;
    j["error"] = {{"command", command}, {"type", type}, {"message", message}};
    std::cerr << j.dump() << std::endl;
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) {
        throw std::invalid_argument("cannot open output file: " + out_path);
    }
    os << text;
}

ordered_json report_header(const std::string& command) {
    ordered_json j;
    j["command"] = command;
    j["tool_version"] = st::report::kToolVersion;
    j["timestamp"] = st::report::utc_timestamp();
    return j;
}

st::sweep::ProbeSet parse_probes(const std::string& spec) {
    if (spec == "all") return {true, true, true};
    st::sweep::ProbeSet probes{false, false, false};
    std::stringstream ss(spec);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name == "qubit_noswitch") {
            probes.qubit_noswitch = true;
        } else if (name == "qubit_switch") {
            probes.qubit_switch = true;
        } else if (name == "harmonic_oscillator") {
            probes.harmonic_oscillator = true;
        } else {
            throw std::invalid_argument("unknown probe name: " + name);
        }
    }
    return probes;
}

st::sweep::SweepParameter parse_parameter(const std::string& name) {
    if (name == "temperature") return st::sweep::SweepParameter::temperature;
    if (name == "beta") return st::sweep::SweepParameter::beta;
    if (name == "gap") return st::sweep::SweepParameter::gap;
    if (name == "alpha") return st::sweep::SweepParameter::alpha;
    throw std::invalid_argument("unknown sweep parameter: " + name);
}

int run_guarded(const std::string& command, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const st::NumericalError& e) {
        emit_error(command, "numerical", e.what());
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        emit_error(command, "usage", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        emit_error(command, "usage", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        emit_error(command, "error", e.what());
        return kExitNumerical;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "switchtherm: qubit thermometry with a quantum switch.\n"
        "Computes quantum Fisher information for thermal qubit probes with and\n"
        "without a superposed interaction order, plus harmonic-oscillator\n"
        "comparisons, optimal-gap roots, and thermodynamic uncertainty bounds.\n"
        "Units: k_B = hbar = 1 throughout; beta = 1/T."};
    app.require_subcommand(1);

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Sweep one parameter and emit QFI columns as CSV or JSON");
    std::string sw_param = "temperature";
    double sw_start = 0.0, sw_stop = 0.0;
    int sw_points = 101;
    double sw_gap = 1.0, sw_alpha = 0.5, sw_xi = 1.0, sw_beta = 0.0, sw_temp = 0.0;
    double sw_lambda = 1.0;
    std::string sw_probes = "all", sw_out, sw_format = "csv";
    sweep_cmd->add_option("--param", sw_param, "Swept parameter")
        ->check(CLI::IsMember({"temperature", "beta", "gap", "alpha"}));
    sweep_cmd->add_option("--start", sw_start, "First swept value")->required();
    sweep_cmd->add_option("--stop", sw_stop, "Last swept value")->required();
    sweep_cmd->add_option("--points", sw_points, "Grid points (default 101)");
    auto* sw_gap_opt = sweep_cmd->add_option("--gap", sw_gap, "Probe gap epsilon (default 1)");
    auto* sw_alpha_opt =
        sweep_cmd->add_option("--alpha", sw_alpha, "Control weight alpha (default 0.5)");
    auto* sw_xi_opt = sweep_cmd->add_option("--xi", sw_xi, "Control coherence xi = 4a(1-a)");
    auto* sw_beta_opt = sweep_cmd->add_option("--beta", sw_beta, "Fixed inverse temperature");
    auto* sw_temp_opt = sweep_cmd->add_option("--temp", sw_temp, "Fixed temperature");
    sweep_cmd->add_option("--lambda", sw_lambda,
                          "Damping weight; values < 1 run the exploratory spectral path");
    sweep_cmd->add_option("--probes", sw_probes,
                          "Comma list of qubit_noswitch,qubit_switch,harmonic_oscillator or 'all'");
    sweep_cmd->add_option("--out", sw_out, "Output path (default stdout)");
    sweep_cmd->add_option("--format", sw_format, "csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sw_alpha_opt->excludes(sw_xi_opt);
    sw_xi_opt->excludes(sw_alpha_opt);
    sw_beta_opt->excludes(sw_temp_opt);
    sw_temp_opt->excludes(sw_beta_opt);

    // ---- optimize ----
    auto* opt_cmd = app.add_subcommand(
        "optimize", "Solve the optimal-gap condition x* for a given coherence xi");
    double opt_xi = 0.0, opt_alpha = 0.0;
    std::string opt_out;
    auto* opt_xi_opt = opt_cmd->add_option("--xi", opt_xi, "Control coherence xi in [0, 1]");
    auto* opt_alpha_opt = opt_cmd->add_option("--alpha", opt_alpha, "Control weight alpha");
    opt_cmd->add_option("--out", opt_out, "Output path (default stdout)");
    opt_xi_opt->excludes(opt_alpha_opt);
    opt_alpha_opt->excludes(opt_xi_opt);

    // ---- threshold ----
    auto* thr_cmd = app.add_subcommand(
        "threshold", "Temperature below which the switched qubit beats the oscillator probe");
    double thr_gap = 1.0;
    std::string thr_out;
    thr_cmd->add_option("--gap", thr_gap, "Probe gap epsilon (default 1)");
    thr_cmd->add_option("--out", thr_out, "Output path (default stdout)");

    // ---- tur ----
    auto* tur_cmd =
        app.add_subcommand("tur", "Thermodynamic uncertainty bound and consistency report");
    double tur_beta = 1.0, tur_gap = 1.0, tur_alpha = 0.5, tur_xi = 1.0;
    long tur_nu = 1;
    std::string tur_out;
    tur_cmd->add_option("--beta", tur_beta, "Inverse temperature (default 1)");
    tur_cmd->add_option("--gap", tur_gap, "Probe gap epsilon (default 1)");
    auto* tur_alpha_opt = tur_cmd->add_option("--alpha", tur_alpha, "Control weight alpha");
    auto* tur_xi_opt = tur_cmd->add_option("--xi", tur_xi, "Control coherence xi (default 1)");
    tur_cmd->add_option("--nu", tur_nu, "Number of measurements (default 1)");
    tur_cmd->add_option("--out", tur_out, "Output path (default stdout)");
    tur_alpha_opt->excludes(tur_xi_opt);
    tur_xi_opt->excludes(tur_alpha_opt);

    // ---- reproduce ----
    auto* rep_cmd = app.add_subcommand(
        "reproduce", "Emit the data sets behind the comparison figures or the headline numbers");
    std::string rep_figure;
    int rep_points = 0;
    std::string rep_out, rep_format = "csv";
    rep_cmd->add_option("figure", rep_figure, "One of fig2, fig3, fig4, headline")->required();
    rep_cmd->add_option("--points", rep_points, "Grid points per axis (0 = defaults)");
    rep_cmd->add_option("--out", rep_out, "Output path (figures default to <figure>.csv)");
    rep_cmd->add_option("--format", rep_format, "csv or json for figure tables")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        emit_error("parse", "usage", e.what());
        return kExitUsage;
    }

    auto resolve_alpha = [](const CLI::Option* alpha_opt, double alpha, const CLI::Option* xi_opt,
                            double xi, double fallback_alpha) {
        if (xi_opt->count() > 0) return st::channels::SwitchConfig::from_xi(xi).alpha;
        if (alpha_opt->count() > 0) return alpha;
        return fallback_alpha;
    };

    if (*sweep_cmd) {
        return run_guarded("sweep", [&] {
            st::sweep::SweepConfig config;
            config.parameter = parse_parameter(sw_param);
            config.start = sw_start;
            config.stop = sw_stop;
            config.points = sw_points;
            config.probes = parse_probes(sw_probes);
            if (config.parameter == st::sweep::SweepParameter::gap && sw_gap_opt->count() > 0) {
                throw std::invalid_argument("--gap conflicts with sweeping the gap");
            }
            if (config.parameter == st::sweep::SweepParameter::alpha &&
                (sw_alpha_opt->count() > 0 || sw_xi_opt->count() > 0)) {
                throw std::invalid_argument("--alpha/--xi conflict with sweeping alpha");
            }
            config.fixed.gap = sw_gap;
            config.fixed.alpha = resolve_alpha(sw_alpha_opt, sw_alpha, sw_xi_opt, sw_xi, 0.5);
            config.fixed.lambda = sw_lambda;
            if (sw_beta_opt->count() > 0) config.fixed.beta = sw_beta;
            if (sw_temp_opt->count() > 0) config.fixed.temperature = sw_temp;
            const bool sweeps_bath = config.parameter == st::sweep::SweepParameter::temperature ||
                                     config.parameter == st::sweep::SweepParameter::beta;
            if (!sweeps_bath && !config.fixed.beta && !config.fixed.temperature) {
                config.fixed.temperature = 1.0;  // documented default for gap/alpha sweeps
            }

            const st::sweep::Table table = st::sweep::run(config);
            if (sw_format == "csv") {
                std::ostringstream os;
                st::report::write_csv(os, table);
                write_text(sw_out, os.str());
                return;
            }
            ordered_json j = report_header("sweep");
            ordered_json cj;
            cj["parameter"] = sw_param;
            cj["start"] = sw_start;
            cj["stop"] = sw_stop;
            cj["points"] = sw_points;
            cj["gap"] = config.fixed.gap;
            cj["alpha"] = config.fixed.alpha;
            cj["xi"] = st::channels::SwitchConfig(config.fixed.alpha).xi();
            cj["lambda"] = config.fixed.lambda;
            if (config.fixed.beta) cj["beta"] = *config.fixed.beta;
            if (config.fixed.temperature) cj["temperature"] = *config.fixed.temperature;
            std::vector<std::string> probe_names;
            if (config.probes.qubit_noswitch) probe_names.push_back("qubit_noswitch");
            if (config.probes.qubit_switch) probe_names.push_back("qubit_switch");
            if (config.probes.harmonic_oscillator) probe_names.push_back("harmonic_oscillator");
            cj["probes"] = probe_names;
            cj["method"] = st::sweep::uses_spectral_path(config) ? "spectral" : "analytic";
            cj["parameterization"] =
                (config.parameter == st::sweep::SweepParameter::temperature ||
                 config.fixed.temperature)
                    ? "temperature"
                    : "beta";
            j["config"] = cj;
            j.update(st::report::table_json(table));
            write_text(sw_out, j.dump(2) + "\n");
        });
    }

    if (*opt_cmd) {
        return run_guarded("optimize", [&] {
            if (opt_xi_opt->count() == 0 && opt_alpha_opt->count() == 0) {
                throw std::invalid_argument("optimize needs --xi or --alpha");
            }
            const double xi = opt_xi_opt->count() > 0
                                  ? opt_xi
                                  : st::channels::SwitchConfig(opt_alpha).xi();
            const st::analysis::RootResult root = st::analysis::solve_optimal_gap(xi);
            const double argmax = st::analysis::optimal_gap_argmax(xi);
            ordered_json j = report_header("optimize");
            j["xi"] = xi;
            j["x_star"] = root.x_star;
            j["residual"] = root.residual;
            j["iterations"] = root.iterations;
            j["bracket"] = {root.bracket_lo, root.bracket_hi};
            j["argmax_crosscheck"] = argmax;
            j["argmax_gap"] = std::abs(root.x_star - argmax);
            j["optimal_T_for_unit_gap"] = 1.0 / root.x_star;
            write_text(opt_out, j.dump(2) + "\n");
        });
    }

    if (*thr_cmd) {
        return run_guarded("threshold", [&] {
            const st::analysis::HoThreshold th =
                st::analysis::ho_threshold(st::channels::ProbeSpec(thr_gap));
            ordered_json j = report_header("threshold");
            j["gap"] = thr_gap;
            j["x_star"] = th.x_star;
            j["t_threshold"] = th.t_threshold;
            j["residual"] = th.residual;
            write_text(thr_out, j.dump(2) + "\n");
        });
    }

    if (*tur_cmd) {
        return run_guarded("tur", [&] {
            const st::channels::ProbeSpec probe(tur_gap);
            const st::channels::SwitchConfig control(
                resolve_alpha(tur_alpha_opt, tur_alpha, tur_xi_opt, tur_xi, 0.5));
            const st::analysis::PrecisionQuery query(tur_nu, tur_beta, probe, control);
            const st::analysis::TurReport rep = st::analysis::tur_consistency(query);
            ordered_json j = report_header("tur");
            j["beta"] = tur_beta;
            j["gap"] = tur_gap;
            j["xi"] = control.xi();
            j["nu"] = tur_nu;
            j["bound"] = rep.tur_bound;
            j["delta_h"] = st::analysis::delta_h(tur_beta, probe);
            j["f_switch"] = st::qfi::switch_analytic(tur_beta, probe, control).value;
            j["consistency_pass"] = rep.pass;
            j["cramer_rao_side"] = rep.cramer_rao_side;
            j["bound_side"] = rep.bound_side;
            j["relative_gap"] = rep.relative_gap;
            j["low_T_limit"] = rep.low_t_limit;
            j["high_T_limit"] = rep.high_t_limit;
            write_text(tur_out, j.dump(2) + "\n");
        });
    }

    if (*rep_cmd) {
        return run_guarded("reproduce", [&] {
            if (rep_figure == "headline") {
                const st::analysis::RootResult r0 = st::analysis::solve_optimal_gap(0.0);
                const st::analysis::RootResult r1 = st::analysis::solve_optimal_gap(1.0);
                const st::channels::ProbeSpec unit(1.0);
                const st::channels::SwitchConfig full(0.5);
                const double chi_high = st::analysis::gain_ratio(kBetaHighT, unit, full);
                const double chi_low = st::analysis::gain_ratio(kBetaLowT, unit, full);
                const st::analysis::HoThreshold th = st::analysis::ho_threshold(unit);
                ordered_json j = report_header("reproduce");
                j["figure"] = "headline";
                j["x_star_xi0"] = r0.x_star;
                j["x_star_xi1"] = r1.x_star;
                j["chi_limits"] = {{"high_T", chi_high},
                                   {"low_T", chi_low},
                                   {"beta_high_T", kBetaHighT},
                                   {"beta_low_T", kBetaLowT}};
                j["precision_gain_percent"] = {
                    {"high_T", st::analysis::precision_gain_percent(chi_high)},
                    {"low_T", st::analysis::precision_gain_percent(chi_low)}};
                j["t_threshold"] = th.t_threshold;
                j["threshold_x_star"] = th.x_star;
                write_text(rep_out, j.dump(2) + "\n");
                return;
            }

            st::sweep::Table table;
            if (rep_figure == "fig2") {
                table = rep_points > 0 ? st::sweep::fig2_table(rep_points, rep_points)
                                       : st::sweep::fig2_table();
            } else if (rep_figure == "fig3") {
                table = st::sweep::fig3_table(rep_points > 0 ? rep_points : 300);
            } else if (rep_figure == "fig4") {
                table = st::sweep::fig4_table(rep_points > 0 ? rep_points : 300);
            } else {
                throw std::invalid_argument("unknown figure name: " + rep_figure);
            }

            const std::string path =
                rep_out.empty() ? rep_figure + (rep_format == "csv" ? ".csv" : ".json") : rep_out;
            if (rep_format == "csv") {
                std::ostringstream os;
                st::report::write_csv(os, table);
                write_text(path, os.str());
            } else {
                ordered_json j = report_header("reproduce");
                j["figure"] = rep_figure;
                j.update(st::report::table_json(table));
                write_text(path, j.dump(2) + "\n");
            }
        });
    }

    emit_error("", "usage", "no subcommand given");
    return kExitUsage;
}
