#include "switchtherm/analysis.hpp"

#include <cmath>
#include <sstream>

namespace switchtherm::analysis {

namespace {

constexpr double kBracketLo = 2.0 + 1e-6;
constexpr double kBracketHi = 10.0;
constexpr double kRootXTol = 1e-13;
constexpr double kRootFTol = 1e-10;
constexpr int kRootMaxIter = 200;

struct RawRoot {
    double x = 0.0;
    int iterations = 0;
};

// Bisection safeguarded by secant steps: the secant proposal is taken when it
// falls inside the bracket, with a forced bisection whenever the bracket fails
// to halve, so convergence is guaranteed.
template <typename F>
RawRoot bracketed_root(F&& f, double lo, double hi) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0};
    if (fb == 0.0) return {b, 0};
    if ((fa > 0.0) == (fb > 0.0)) {
        std::ostringstream msg;
        msg << "bracketed_root: no sign change in [" << lo << ", " << hi << "], f(lo) = " << fa
            << ", f(hi) = " << fb;
        throw NumericalError(msg.str());
    }
    int it = 0;
    bool force_bisect = false;
    while (it < kRootMaxIter && b - a > kRootXTol) {
        ++it;
        const double width = b - a;
        double x = a + 0.5 * width;
        if (!force_bisect && fb != fa) {
            const double s = b - fb * width / (fb - fa);
            if (s > a && s < b) x = s;
        }
        const double fx = f(x);
        if (fx == 0.0) return {x, it};
        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        force_bisect = (b - a) > 0.5 * width;
    }
    return {std::abs(fa) <= std::abs(fb) ? a : b, it};
}

template <typename F>
double golden_section_max(F&& f, double lo, double hi, double x_tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > x_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

double validate_xi(double xi, const char* who) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw std::invalid_argument(std::string(who) + ": xi must lie in [0, 1]");
    }
    return xi;
}

// The stationarity condition dF/dx = 0 rearranges into
//   xi * A(x) = B(x),
//   A(x) = e^{2x} [(2+3x) + (6+4x) e^x + (4-2x) e^{2x}],
//   B(x) = (1+e^x)(1+2e^x)^2 [(x-2) e^x - (x+2)].
// The cross-multiplied difference below keeps the bracket free of the pole
// where A vanishes (near x = 2.62).
double condition_a(double x) {
    const double e = std::exp(x);
    return e * e * ((2.0 + 3.0 * x) + (6.0 + 4.0 * x) * e + (4.0 - 2.0 * x) * e * e);
}

double condition_b(double x) {
    const double e = std::exp(x);
    const double two_e = 1.0 + 2.0 * e;
    return (1.0 + e) * two_e * two_e * ((x - 2.0) * e - (x + 2.0));
}

// At xi = 0 the condition reduces to e^x (x-2) = x+2.
double condition_noswitch(double x) {
    return std::exp(x) * (x - 2.0) - (x + 2.0);
}

}  // namespace

PrecisionQuery::PrecisionQuery(long nu_, double beta_, channels::ProbeSpec probe_,
                               channels::SwitchConfig control_)
    : nu(nu_), beta(beta_), probe(probe_), control(control_) {
    if (nu < 1) {
        throw std::invalid_argument("PrecisionQuery: nu must be >= 1");
    }
    if (std::isnan(beta) || beta < 0.0) {
        throw std::invalid_argument("PrecisionQuery: beta must be >= 0");
    }
}

double design_objective(double x, double xi) {
    const double q = std::exp(-x);
    return x * x * q * ((2.0 + xi) + 3.0 * q + q * q) / (std::pow(1.0 + q, 3) * (2.0 + q));
}

double optimal_gap_argmax(double xi) {
    validate_xi(xi, "optimal_gap_argmax");
    return golden_section_max([xi](double x) { return design_objective(x, xi); }, 0.1, 20.0,
                              1e-9);
}

RootResult solve_optimal_gap(double xi) {
    validate_xi(xi, "solve_optimal_gap");

    RawRoot raw;
    double residual = 0.0;
    if (xi == 0.0) {
        raw = bracketed_root(condition_noswitch, kBracketLo, kBracketHi);
        residual = condition_noswitch(raw.x);
    } else {
        raw = bracketed_root([xi](double x) { return xi * condition_a(x) - condition_b(x); },
                             kBracketLo, kBracketHi);
        residual = xi - condition_b(raw.x) / condition_a(raw.x);
    }
    if (std::abs(residual) > kRootFTol) {
        std::ostringstream msg;
        msg << "solve_optimal_gap: residual " << residual << " exceeds " << kRootFTol
            << " at x = " << raw.x;
        throw NumericalError(msg.str());
    }

    const double argmax = optimal_gap_argmax(xi);
    if (std::abs(raw.x - argmax) > 1e-6) {
        std::ostringstream msg;
        msg << "solve_optimal_gap: stationarity root " << raw.x
            << " disagrees with derivative-free argmax " << argmax;
        throw ConsistencyError(msg.str());
    }

    return {raw.x, residual, kBracketLo, kBracketHi, raw.iterations};
}

double gain_ratio(double beta, const channels::ProbeSpec& probe,
                  const channels::SwitchConfig& control) {
    if (std::isnan(beta) || beta < 0.0) {
        throw std::invalid_argument("gain_ratio: beta must be >= 0");
    }
    const double q = std::exp(-beta * probe.gap);
    return ((2.0 + control.xi()) + 3.0 * q + q * q) / (2.0 + 3.0 * q + q * q);
}

double precision_gain_percent(double chi) {
    if (!(chi >= 1.0)) {
        throw std::invalid_argument("precision_gain_percent: chi must be >= 1");
    }
    return 100.0 * (std::sqrt(chi) - 1.0);
}

HoThreshold ho_threshold(const channels::ProbeSpec& probe) {
    // Switched-probe QFI (xi = 1) minus oscillator QFI per unit gap^2, both as
    // functions of x = beta*gap; the shared gap^2 factor cancels, so the
    // crossing x* is gap-free and the threshold temperature scales as gap/x*.
    auto diff = [](double x) {
        const double q = std::exp(-x);
        const double sw = q * (3.0 + 3.0 * q + q * q) / (std::pow(1.0 + q, 3) * (2.0 + q));
        const double one_minus_q = -std::expm1(-x);
        return sw - q / (one_minus_q * one_minus_q);
    };
    const RawRoot raw = bracketed_root(diff, kBracketLo, kBracketHi);
    const double residual = diff(raw.x);
    if (std::abs(residual) > kRootFTol) {
        std::ostringstream msg;
        msg << "ho_threshold: residual " << residual << " exceeds " << kRootFTol;
        throw NumericalError(msg.str());
    }
    return {raw.x, probe.gap / raw.x, residual, raw.iterations};
}

double tur_bound(double beta, const channels::ProbeSpec& probe,
                 const channels::SwitchConfig& control) {
    if (std::isnan(beta) || beta < 0.0) {
        throw std::invalid_argument("tur_bound: beta must be >= 0");
    }
    const double q = std::exp(-beta * probe.gap);
    const double xi_eps2 = control.xi() * probe.gap * probe.gap;
    return 1.0 / std::sqrt(1.0 + xi_eps2 / ((1.0 + q) * (2.0 + q)));
}

double delta_h(double beta, const channels::ProbeSpec& probe) {
    if (std::isnan(beta) || beta < 0.0) {
        throw std::invalid_argument("delta_h: beta must be >= 0");
    }
    const double q = std::exp(-beta * probe.gap);
    return probe.gap * std::sqrt(q) / (1.0 + q);
}

TurReport tur_consistency(const PrecisionQuery& query) {
    const double f_switch =
        qfi::switch_analytic(query.beta, query.probe, query.control).value;
    if (!(f_switch > 0.0)) {
        throw NumericalError("tur_consistency: switch QFI vanishes at this beta");
    }
    const double nu = static_cast<double>(query.nu);
    const double lhs = delta_h(query.beta, query.probe) / std::sqrt(nu * f_switch);
    const double chi = gain_ratio(query.beta, query.probe, query.control);
    const double rhs = 1.0 / std::sqrt(nu * chi);
    const double rel = std::abs(lhs - rhs) / rhs;

    TurReport report;
    report.cramer_rao_side = lhs;
    report.bound_side = rhs;
    report.relative_gap = rel;
    report.tur_bound = tur_bound(query.beta, query.probe, query.control);
    const double xi_eps2 = query.control.xi() * query.probe.gap * query.probe.gap;
    report.low_t_limit = 1.0 / std::sqrt(1.0 + xi_eps2 / 2.0);
    report.high_t_limit = 1.0 / std::sqrt(1.0 + xi_eps2 / 6.0);
    report.pass = rel <= 1e-10;
    if (!report.pass) {
        std::ostringstream msg;
        msg << "tur_consistency: bound is not the Cramer-Rao rearrangement, sides " << lhs
            << " vs " << rhs;
        throw ConsistencyError(msg.str());
    }
    return report;
}

}  // namespace switchtherm::analysis
