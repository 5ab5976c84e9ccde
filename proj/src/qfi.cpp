#include "switchtherm/qfi.hpp"

#include <cmath>
#include <sstream>

namespace switchtherm::qfi {

namespace {

// Pairs whose combined weight falls below this are outside the support of rho
// and carry no information.
constexpr double kPairTol = 1e-12;
constexpr double kDegenerateTol = 1e-12;

double validate_beta(double beta, const char* who) {
    if (std::isnan(beta) || beta < 0.0) {
        throw std::invalid_argument(std::string(who) + ": beta must be >= 0");
    }
    return beta;
}

}  // namespace

HOProbeSpec::HOProbeSpec(double gap_) : gap(gap_) {
    if (!(gap > 0.0) || !std::isfinite(gap)) {
        throw std::invalid_argument("HOProbeSpec: gap must be positive and finite");
    }
}

double fd_step(double beta) {
    return std::max(1e-5, 1e-6 * beta);
}

QfiResult spectral(const ParameterizedState& family, double beta) {
    if (!family.state_at) {
        throw std::invalid_argument("qfi::spectral: family has no state function");
    }
    const ComplexMatrix rho = family.state_at(beta);
    require_density_matrix(rho, "qfi::spectral");

    ComplexMatrix drho;
    DerivativeMethod deriv;
    if (family.derivative_at) {
        drho = family.derivative_at(beta);
        deriv = {DerivativeMethod::Kind::analytic, 0.0};
        const double trace_err = std::abs(drho.trace());
        if (trace_err > 1e-10) {
            std::ostringstream msg;
            msg << "qfi::spectral: analytic derivative not traceless, |tr| = " << trace_err;
            throw std::invalid_argument(msg.str());
        }
    } else {
        const double h = fd_step(beta);
        drho = (family.state_at(beta + h) - family.state_at(beta - h)) / (2.0 * h);
        deriv = {DerivativeMethod::Kind::central_difference, h};
    }
    if (drho.rows() != rho.rows() || drho.cols() != rho.cols()) {
        throw std::invalid_argument("qfi::spectral: derivative dimension mismatch");
    }

    const EigenDecomposition eig = hermitian_eig(rho);
    const ComplexMatrix d = eig.eigenvectors.adjoint() * drho * eig.eigenvectors;
    const RealVector& p = eig.eigenvalues;
    const Eigen::Index n = p.size();

    // Route A: SLD in the eigenbasis, F = sum 2 |d_mn|^2 / (p_m + p_n).
    double f_sld = 0.0;
    for (Eigen::Index m = 0; m < n; ++m) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double s = p[m] + p[k];
            if (s > kPairTol) {
                f_sld += 2.0 * std::norm(d(m, k)) / s;
            }
        }
    }

    // Route B: the classical / eigenvector split. Eigenvalue derivatives are the
    // diagonal of d; overlaps <psi_k | d_beta psi_m> come from the off-diagonal
    // divided by the eigenvalue gap. Degenerate pairs contribute nothing.
    double f_split = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double dp = d(k, k).real();
        if (2.0 * p[k] > kPairTol) {
            f_split += dp * dp / p[k];
        } else if (std::abs(d(k, k)) > 1e-12) {
            std::ostringstream msg;
            msg << "qfi::spectral: eigenvalue " << p[k] << " vanishes while moving at rate "
                << std::abs(d(k, k)) << "; rank-changing point";
            throw ConsistencyError(msg.str());
        }
    }
    for (Eigen::Index m = 0; m < n; ++m) {
        for (Eigen::Index k = 0; k < n; ++k) {
            if (k == m) continue;
            const double s = p[m] + p[k];
            const double gap = p[m] - p[k];
            if (s <= kPairTol || std::abs(gap) <= kDegenerateTol) continue;
            const double overlap_sq = std::norm(d(k, m)) / (gap * gap);
            f_split += 2.0 * gap * gap / s * overlap_sq;
        }
    }

    if (f_sld < -1e-10) {
        std::ostringstream msg;
        msg << "qfi::spectral: negative value " << f_sld;
        throw NumericalError(msg.str());
    }
    if (std::abs(f_sld - f_split) > std::max(1e-10, 1e-9 * std::abs(f_sld))) {
        std::ostringstream msg;
        msg << "qfi::spectral: evaluation routes disagree, " << f_sld << " vs " << f_split;
        throw ConsistencyError(msg.str());
    }

    QfiResult result;
    result.value = f_sld < 0.0 ? 0.0 : f_sld;
    result.parameter = Parameter::beta;
    result.method = Method::spectral;
    result.derivative = deriv;
    result.inputs.beta = beta;
    return result;
}

QfiResult switch_analytic(double beta, const channels::ProbeSpec& probe,
                          const channels::SwitchConfig& control) {
    validate_beta(beta, "qfi::switch_analytic");
    const double eps = probe.gap;
    const double xi = control.xi();
    // Rewritten in q = exp(-beta*eps) so large beta*eps cannot overflow.
    const double q = std::exp(-beta * eps);
    const double value =
        eps * eps * q * ((2.0 + xi) + 3.0 * q + q * q) / (std::pow(1.0 + q, 3) * (2.0 + q));

    QfiResult result;
    result.value = value;
    result.parameter = Parameter::beta;
    result.method = Method::analytic;
    result.inputs.beta = beta;
    result.inputs.gap = eps;
    result.inputs.xi = xi;
    result.inputs.lambda = 1.0;
    return result;
}

QfiResult qubit_noswitch(double beta, const channels::ProbeSpec& probe) {
    validate_beta(beta, "qfi::qubit_noswitch");
    const double eps = probe.gap;
    const double q = std::exp(-beta * eps);
    QfiResult result;
    result.value = eps * eps * q / ((1.0 + q) * (1.0 + q));
    result.parameter = Parameter::beta;
    result.method = Method::analytic;
    result.inputs.beta = beta;
    result.inputs.gap = eps;
    result.inputs.xi = 0.0;
    result.inputs.lambda = 1.0;
    return result;
}

QfiResult harmonic_oscillator(double beta, const HOProbeSpec& probe) {
    if (std::isnan(beta) || beta <= 0.0) {
        throw std::domain_error("qfi::harmonic_oscillator: diverges as beta -> 0; beta must be > 0");
    }
    const double eps = probe.gap;
    const double q = std::exp(-beta * eps);
    const double one_minus_q = -std::expm1(-beta * eps);
    QfiResult result;
    result.value = eps * eps * q / (one_minus_q * one_minus_q);
    result.parameter = Parameter::beta;
    result.method = Method::analytic;
    result.inputs.beta = beta;
    result.inputs.gap = eps;
    return result;
}

QfiResult to_temperature_parameter(const QfiResult& f_beta, double temperature) {
    if (f_beta.parameter != Parameter::beta) {
        throw std::invalid_argument("to_temperature_parameter: input is not beta-parameterized");
    }
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("to_temperature_parameter: temperature must be > 0");
    }
    if (f_beta.inputs.beta) {
        const double implied = 1.0 / temperature;
        if (std::abs(*f_beta.inputs.beta - implied) > 1e-9 * std::max(1.0, implied)) {
            throw std::invalid_argument(
                "to_temperature_parameter: temperature inconsistent with recorded beta");
        }
    }
    QfiResult result = f_beta;
    const double t2 = temperature * temperature;
    result.value = f_beta.value / (t2 * t2);
    result.parameter = Parameter::temperature;
    result.inputs.temperature = temperature;
    return result;
}

ComplexMatrix d_rho_d_beta_switch(double beta, const channels::ProbeSpec& probe,
                                  const channels::SwitchConfig& control) {
    validate_beta(beta, "qfi::d_rho_d_beta_switch");
    const double eps = probe.gap;
    const double alpha = control.alpha;
    const double q = std::exp(-beta * eps);
    const double p = 1.0 / (1.0 + q);
    const double dp = eps * q / ((1.0 + q) * (1.0 + q));  // eps p (1-p)
    const double dcoh = 2.0 * p * dp * std::sqrt(alpha * (1.0 - alpha));

    ComplexMatrix d = ComplexMatrix::Zero(4, 4);
    d(0, 0) = alpha * dp;
    d(1, 1) = (1.0 - alpha) * dp;
    d(2, 2) = -alpha * dp;
    d(3, 3) = -(1.0 - alpha) * dp;
    d(0, 1) = dcoh;
    d(1, 0) = dcoh;
    return d;
}

ParameterizedState switch_state_family(const channels::ProbeSpec& probe,
                                       const channels::SwitchConfig& control) {
    ParameterizedState family;
    family.state_at = [probe, control](double beta) {
        return channels::switch_output_closed_form(control,
                                                   channels::thermal_population(beta, probe.gap));
    };
    family.derivative_at = [probe, control](double beta) {
        return d_rho_d_beta_switch(beta, probe, control);
    };
    return family;
}

ParameterizedState switch_state_family_general(const channels::ProbeSpec& probe,
                                               const channels::SwitchConfig& control,
                                               double lambda) {
    // Built from (p, lambda) directly so finite differences may probe slightly
    // negative beta near beta = 0.
    ParameterizedState family;
    family.state_at = [probe, control, lambda](double beta) {
        const double p = channels::thermal_population(beta, probe.gap);
        return channels::switch_apply(channels::gad_kraus_from_p(p, lambda),
                                      channels::ground_state(), control);
    };
    return family;
}

ParameterizedState sequential_state_family(const channels::ProbeSpec& probe, double lambda) {
    ParameterizedState family;
    family.state_at = [probe, lambda](double beta) {
        const double p = channels::thermal_population(beta, probe.gap);
        return channels::apply_sequential(channels::gad_kraus_from_p(p, lambda),
                                          channels::ground_state());
    };
    return family;
}

}  // namespace switchtherm::qfi
