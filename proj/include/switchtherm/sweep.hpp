// sweep.hpp — grid evaluation engine behind the CLI: parameter sweeps and the
// 2D gap/superposition grid, each point independent. Two execution paths share
// one per-point kernel: a serial reference loop kept for testing and an OpenMP
// loop that must produce bit-identical rows.

#pragma once

#include "switchtherm/analysis.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace switchtherm::sweep {

enum class Exec { serial, parallel };

// Apply fn(i) for i in [0, n). fn must be re-entrant and write only to its own
// index's slot; each point's arithmetic is identical on both paths, so outputs
// match bit for bit.
template <typename Fn>
void for_each_index(std::size_t n, Exec policy, Fn&& fn) {
#ifdef _OPENMP
    if (policy == Exec::parallel) {
        const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            fn(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)policy;
#endif
    for (std::size_t i = 0; i < n; ++i) {
        fn(i);
    }
}

enum class SweepParameter { temperature, beta, gap, alpha };

const char* parameter_name(SweepParameter p);

struct ProbeSet {
    bool qubit_noswitch = true;
    bool qubit_switch = true;
    bool harmonic_oscillator = true;
};

// Values held fixed while one parameter is swept. Exactly one of beta /
// temperature may be set; it decides the QFI parameterization of the output.
struct FixedParams {
    double gap = 1.0;
    double alpha = 0.5;
    double lambda = 1.0;
    std::optional<double> beta;
    std::optional<double> temperature;
};

struct SweepConfig {
    SweepParameter parameter = SweepParameter::temperature;
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    FixedParams fixed;
    ProbeSet probes;
    bool include_chi = true;  // emitted only when both qubit probes are present
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Throws std::invalid_argument on bad ranges, an empty probe set, or a swept
// parameter that is also fixed.
void validate(const SweepConfig& config);

// One row per grid point, swept values strictly increasing. lambda = 1 runs the
// closed forms; lambda < 1 switches to the spectral engine on the brute-force
// Kraus families (exploratory path).
Table run(const SweepConfig& config, Exec policy = Exec::parallel);

// True when `run` would evaluate through the spectral engine.
bool uses_spectral_path(const SweepConfig& config);

// QFI (for beta) of the switched probe over a gap x alpha grid at T = 1;
// columns epsilon, alpha, F_beta.
Table gap_alpha_grid(double gap_lo, double gap_hi, int gap_points, int alpha_points,
                     Exec policy = Exec::parallel);

// Default data sets behind the comparison figures.
Table fig2_table(int gap_points = 100, int alpha_points = 41, Exec policy = Exec::parallel);
Table fig3_table(int points = 300, Exec policy = Exec::parallel);
Table fig4_table(int points = 300, Exec policy = Exec::parallel);

}  // namespace switchtherm::sweep
