#include "switchtherm/sweep.hpp"

#include <cmath>
#include <sstream>

namespace switchtherm::sweep {

namespace {

double grid_value(double start, double stop, int points, int i) {
    if (i == points - 1) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
}

struct PointParams {
    double gap = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<double> temperature;
};

PointParams resolve_point(const SweepConfig& config, double swept) {
    PointParams p;
    p.gap = config.parameter == SweepParameter::gap ? swept : config.fixed.gap;
    p.alpha = config.parameter == SweepParameter::alpha ? swept : config.fixed.alpha;
    switch (config.parameter) {
        case SweepParameter::temperature:
            p.temperature = swept;
            p.beta = 1.0 / swept;
            break;
        case SweepParameter::beta:
            p.beta = swept;
            break;
        default:
            if (config.fixed.temperature) {
                p.temperature = *config.fixed.temperature;
                p.beta = 1.0 / *p.temperature;
            } else {
                p.beta = *config.fixed.beta;
            }
            break;
    }
    return p;
}

}  // namespace

const char* parameter_name(SweepParameter p) {
    switch (p) {
        case SweepParameter::temperature: return "T";
        case SweepParameter::beta: return "beta";
        case SweepParameter::gap: return "epsilon";
        case SweepParameter::alpha: return "alpha";
    }
    return "?";
}

bool uses_spectral_path(const SweepConfig& config) {
    return config.fixed.lambda != 1.0;
}

void validate(const SweepConfig& config) {
    if (!(config.start < config.stop)) {
        throw std::invalid_argument("sweep: start must be < stop");
    }
    if (config.points < 2) {
        throw std::invalid_argument("sweep: points must be >= 2");
    }
    if (!config.probes.qubit_noswitch && !config.probes.qubit_switch &&
        !config.probes.harmonic_oscillator) {
        throw std::invalid_argument("sweep: at least one probe must be requested");
    }
    if (config.fixed.beta && config.fixed.temperature) {
        throw std::invalid_argument("sweep: beta and temperature are mutually exclusive");
    }
    const bool sweeps_bath = config.parameter == SweepParameter::temperature ||
                             config.parameter == SweepParameter::beta;
    if (sweeps_bath && (config.fixed.beta || config.fixed.temperature)) {
        throw std::invalid_argument("sweep: swept parameter must not also be fixed");
    }
    if (!sweeps_bath && !config.fixed.beta && !config.fixed.temperature) {
        throw std::invalid_argument("sweep: gap/alpha sweeps need a fixed beta or temperature");
    }
    switch (config.parameter) {
        case SweepParameter::temperature:
            if (!(config.start > 0.0)) {
                throw std::invalid_argument("sweep: temperatures must be positive");
            }
            break;
        case SweepParameter::beta:
            if (!(config.start >= 0.0)) {
                throw std::invalid_argument("sweep: beta must be >= 0");
            }
            break;
        case SweepParameter::gap:
            if (!(config.start > 0.0)) {
                throw std::invalid_argument("sweep: gaps must be positive");
            }
            break;
        case SweepParameter::alpha:
            if (!(config.start >= 0.0 && config.stop <= 1.0)) {
                throw std::invalid_argument("sweep: alpha must lie in [0, 1]");
            }
            break;
    }
    if (config.fixed.temperature && !(*config.fixed.temperature > 0.0)) {
        throw std::invalid_argument("sweep: fixed temperature must be positive");
    }
    if (config.fixed.beta && !(*config.fixed.beta >= 0.0)) {
        throw std::invalid_argument("sweep: fixed beta must be >= 0");
    }
    if (!(config.fixed.lambda >= 0.0 && config.fixed.lambda <= 1.0)) {
        throw std::invalid_argument("sweep: lambda must lie in [0, 1]");
    }
    if (uses_spectral_path(config)) {
        // central differences in beta need room on both sides of every point
        const double min_beta = config.parameter == SweepParameter::temperature
                                    ? 1.0 / config.stop
                                : config.parameter == SweepParameter::beta
                                    ? config.start
                                : config.fixed.temperature ? 1.0 / *config.fixed.temperature
                                                           : *config.fixed.beta;
        if (min_beta <= 0.0) {
            throw std::invalid_argument("sweep: the spectral path (lambda < 1) needs beta > 0");
        }
    }
}

Table run(const SweepConfig& config, Exec policy) {
    validate(config);

    const bool use_temperature = config.parameter == SweepParameter::temperature ||
                                 config.fixed.temperature.has_value();
    const bool spectral = uses_spectral_path(config);
    const bool emit_chi =
        config.include_chi && config.probes.qubit_noswitch && config.probes.qubit_switch;

    Table table;
    table.columns.push_back(parameter_name(config.parameter));
    if (config.probes.qubit_noswitch) table.columns.push_back("F_noswitch");
    if (config.probes.qubit_switch) table.columns.push_back("F_switch");
    if (config.probes.harmonic_oscillator) table.columns.push_back("F_ho");
    if (emit_chi) table.columns.push_back("chi");

    table.rows.assign(static_cast<std::size_t>(config.points), {});
    for_each_index(static_cast<std::size_t>(config.points), policy, [&](std::size_t i) {
        const double swept =
            grid_value(config.start, config.stop, config.points, static_cast<int>(i));
        const PointParams pt = resolve_point(config, swept);
        const channels::ProbeSpec probe(pt.gap);
        const channels::SwitchConfig control(pt.alpha);

        auto parameterize = [&](qfi::QfiResult r) {
            if (use_temperature) r = qfi::to_temperature_parameter(r, *pt.temperature);
            return r.value;
        };

        std::vector<double> row;
        row.reserve(table.columns.size());
        row.push_back(swept);

        std::optional<double> f_ns;
        std::optional<double> f_sw;
        if (config.probes.qubit_noswitch) {
            f_ns = parameterize(spectral
                                    ? qfi::spectral(qfi::sequential_state_family(
                                                        probe, config.fixed.lambda),
                                                    pt.beta)
                                    : qfi::qubit_noswitch(pt.beta, probe));
            row.push_back(*f_ns);
        }
        if (config.probes.qubit_switch) {
            f_sw = parameterize(spectral
                                    ? qfi::spectral(qfi::switch_state_family_general(
                                                        probe, control, config.fixed.lambda),
                                                    pt.beta)
                                    : qfi::switch_analytic(pt.beta, probe, control));
            row.push_back(*f_sw);
        }
        if (config.probes.harmonic_oscillator) {
            row.push_back(
                parameterize(qfi::harmonic_oscillator(pt.beta, qfi::HOProbeSpec(pt.gap))));
        }
        if (emit_chi) {
            row.push_back(spectral ? *f_sw / *f_ns : analysis::gain_ratio(pt.beta, probe, control));
        }
        table.rows[i] = std::move(row);
    });
    return table;
}

Table gap_alpha_grid(double gap_lo, double gap_hi, int gap_points, int alpha_points,
                     Exec policy) {
    if (!(gap_lo > 0.0 && gap_lo < gap_hi)) {
        throw std::invalid_argument("gap_alpha_grid: need 0 < gap_lo < gap_hi");
    }
    if (gap_points < 2 || alpha_points < 2) {
        throw std::invalid_argument("gap_alpha_grid: need at least 2 points per axis");
    }
    const double beta = 1.0;  // T fixed at 1

    Table table;
    table.columns = {"epsilon", "alpha", "F_beta"};
    const std::size_t total =
        static_cast<std::size_t>(gap_points) * static_cast<std::size_t>(alpha_points);
    table.rows.assign(total, {});
    for_each_index(total, policy, [&](std::size_t i) {
        const int gi = static_cast<int>(i) / alpha_points;
        const int ai = static_cast<int>(i) % alpha_points;
        const double gap = grid_value(gap_lo, gap_hi, gap_points, gi);
        const double alpha = grid_value(0.0, 1.0, alpha_points, ai);
        const double f =
            qfi::switch_analytic(beta, channels::ProbeSpec(gap), channels::SwitchConfig(alpha))
                .value;
        table.rows[i] = {gap, alpha, f};
    });
    return table;
}

Table fig2_table(int gap_points, int alpha_points, Exec policy) {
    return gap_alpha_grid(0.1, 10.0, gap_points, alpha_points, policy);
}

Table fig3_table(int points, Exec policy) {
    SweepConfig config;
    config.parameter = SweepParameter::temperature;
    config.start = 0.05;
    config.stop = 3.0;
    config.points = points;
    config.fixed.gap = 1.0;
    config.fixed.alpha = 0.5;
    config.probes = {true, true, false};
    config.include_chi = true;
    return run(config, policy);
}

Table fig4_table(int points, Exec policy) {
    SweepConfig config;
    config.parameter = SweepParameter::temperature;
    config.start = 0.05;
    config.stop = 3.0;
    config.points = points;
    config.fixed.gap = 1.0;
    config.fixed.alpha = 0.5;
    config.probes = {true, true, true};
    config.include_chi = false;
    return run(config, policy);
}

}  // namespace switchtherm::sweep
