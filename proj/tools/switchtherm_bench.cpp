// Benchmark comparing the serial reference sweep kernels against the OpenMP
// path, on the cheap closed-form grid and on the eigensolver-heavy spectral
// sweep. Also cross-checks that both paths return identical bytes.

#include "switchtherm/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

double max_abs_diff(const switchtherm::sweep::Table& a, const switchtherm::sweep::Table& b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        for (std::size_t c = 0; c < a.rows[r].size(); ++c) {
            worst = std::max(worst, std::abs(a.rows[r][c] - b.rows[r][c]));
        }
    }
    return worst;
}

template <typename Fn>
void bench_case(const char* name, std::size_t points, Fn&& make_table) {
    using switchtherm::sweep::Exec;
    const double t0 = now_seconds();
    const auto serial = make_table(Exec::serial);
    const double t1 = now_seconds();
    const auto parallel = make_table(Exec::parallel);
    const double t2 = now_seconds();

    const double serial_ms = (t1 - t0) * 1e3;
    const double parallel_ms = (t2 - t1) * 1e3;
    std::printf("%-28s %9zu %12.2f %12.2f %9.2fx %12.3g\n", name, points, serial_ms, parallel_ms,
                serial_ms / parallel_ms, max_abs_diff(serial, parallel));
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both paths run serially\n");
#endif
    std::printf("%-28s %9s %12s %12s %9s %12s\n", "case", "points", "serial[ms]", "parallel[ms]",
                "speedup", "max|diff|");

    bench_case("gap_alpha_grid (analytic)", 600u * 201u, [](switchtherm::sweep::Exec policy) {
        return switchtherm::sweep::gap_alpha_grid(0.1, 10.0, 600, 201, policy);
    });

    switchtherm::sweep::SweepConfig spectral;
    spectral.parameter = switchtherm::sweep::SweepParameter::temperature;
    spectral.start = 0.05;
    spectral.stop = 3.0;
    spectral.points = 4000;
    spectral.fixed.lambda = 0.6;
    spectral.probes = {true, true, false};
    bench_case("temperature sweep (spectral)", 4000, [&](switchtherm::sweep::Exec policy) {
        return switchtherm::sweep::run(spectral, policy);
    });

    return 0;
}
