#include "switchtherm/channels.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace switchtherm::channels {

ProbeSpec::ProbeSpec(double gap_) : gap(gap_) {
    if (!(gap > 0.0) || !std::isfinite(gap)) {
        throw std::invalid_argument("ProbeSpec: gap must be positive and finite");
    }
}

BathSpec::BathSpec(double beta_, double lambda_) : beta(beta_), lambda(lambda_) {
    if (std::isnan(beta) || beta < 0.0) {
        throw std::invalid_argument("BathSpec: beta must be >= 0");
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("BathSpec: lambda must lie in [0, 1]");
    }
}

BathSpec BathSpec::from_interaction_time(double beta, double t, double tau) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("BathSpec: interaction time must be >= 0");
    }
    if (!(tau > 0.0)) {
        throw std::invalid_argument("BathSpec: relaxation time must be > 0");
    }
    return BathSpec(beta, -std::expm1(-t / tau));
}

SwitchConfig::SwitchConfig(double alpha_) : alpha(alpha_) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("SwitchConfig: alpha must lie in [0, 1]");
    }
}

SwitchConfig SwitchConfig::from_xi(double xi) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw std::invalid_argument("SwitchConfig: xi must lie in [0, 1]");
    }
    return SwitchConfig(0.5 * (1.0 + std::sqrt(1.0 - xi)));
}

double SwitchConfig::c_l1() const {
    return 2.0 * std::sqrt(alpha * (1.0 - alpha));
}

ComplexMatrix SwitchConfig::state() const {
    const double c = std::sqrt(alpha * (1.0 - alpha));
    ComplexMatrix rho(2, 2);
    rho << alpha, c, c, 1.0 - alpha;
    return rho;
}

double completeness_gap(Eigen::Index dim, const std::vector<ComplexMatrix>& operators) {
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const auto& k : operators) {
        sum += k.adjoint() * k;
    }
    return (sum - identity(dim)).cwiseAbs().maxCoeff();
}

KrausChannel::KrausChannel(Eigen::Index dim_, std::vector<ComplexMatrix> operators_)
    : dim(dim_), operators(std::move(operators_)) {
    if (dim <= 0 || operators.empty()) {
        throw std::invalid_argument("KrausChannel: need a positive dimension and operators");
    }
    for (const auto& k : operators) {
        if (k.rows() != dim || k.cols() != dim) {
            throw std::invalid_argument("KrausChannel: operator dimension mismatch");
        }
    }
    const double gap = completeness_gap(dim, operators);
    if (gap > kCompletenessTol) {
        std::ostringstream msg;
        msg << "KrausChannel: completeness violated, max deviation " << gap;
        throw std::invalid_argument(msg.str());
    }
}

double thermal_population(double beta, double gap) {
    // exp(-inf) == 0 in IEEE arithmetic, so beta = +inf yields exactly p = 1.
    return 1.0 / (1.0 + std::exp(-beta * gap));
}

ComplexMatrix thermal_state(const ProbeSpec& probe, double beta) {
    const double q = std::exp(-beta * probe.gap);
    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
    rho(0, 0) = 1.0 / (1.0 + q);
    rho(1, 1) = q / (1.0 + q);
    return rho;
}

ComplexMatrix ground_state() {
    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
    rho(0, 0) = 1.0;
    return rho;
}

KrausChannel gad_kraus(const ProbeSpec& probe, const BathSpec& bath) {
    return gad_kraus_from_p(thermal_population(bath.beta, probe.gap), bath.lambda);
}

KrausChannel gad_kraus_from_p(double p, double lambda) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("gad_kraus: p must lie in [0, 1]");
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("gad_kraus: lambda must lie in [0, 1]");
    }
    const double sp = std::sqrt(p);
    const double sq = std::sqrt(1.0 - p);
    const double keep = std::sqrt(1.0 - lambda);
    const double decay = std::sqrt(lambda);

    ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
    k0(0, 0) = sp;
    k0(1, 1) = sp * keep;
    ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
    k1(0, 1) = sp * decay;
    ComplexMatrix k2 = ComplexMatrix::Zero(2, 2);
    k2(0, 0) = sq * keep;
    k2(1, 1) = sq;
    ComplexMatrix k3 = ComplexMatrix::Zero(2, 2);
    k3(1, 0) = sq * decay;

    return KrausChannel(2, {k0, k1, k2, k3});
}

ComplexMatrix apply_channel(const KrausChannel& channel, const ComplexMatrix& rho) {
    if (rho.rows() != channel.dim || rho.cols() != channel.dim) {
        throw std::invalid_argument("apply: state dimension does not match channel");
    }
    ComplexMatrix out = ComplexMatrix::Zero(channel.dim, channel.dim);
    for (const auto& k : channel.operators) {
        out += k * rho * k.adjoint();
    }
    return out;
}

ComplexMatrix apply_sequential(const KrausChannel& channel, const ComplexMatrix& rho) {
    return apply_channel(channel, apply_channel(channel, rho));
}

KrausChannel switch_kraus(const KrausChannel& channel) {
    if (channel.dim != 2) {
        throw std::invalid_argument("switch_kraus: expected a qubit channel");
    }
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;

    std::vector<ComplexMatrix> ws;
    ws.reserve(channel.operators.size() * channel.operators.size());
    for (const auto& ki : channel.operators) {
        for (const auto& kj : channel.operators) {
            ws.push_back(tensor(ki * kj, p0) + tensor(kj * ki, p1));
        }
    }
    return KrausChannel(4, std::move(ws));
}

ComplexMatrix switch_apply(const KrausChannel& channel, const ComplexMatrix& probe_state,
                           const SwitchConfig& control) {
    if (probe_state.rows() != 2 || probe_state.cols() != 2) {
        throw std::invalid_argument("switch_apply: probe state must be 2x2");
    }
    require_density_matrix(probe_state, "switch_apply");
    const ComplexMatrix joint = tensor(probe_state, control.state());
    return apply_channel(switch_kraus(channel), joint);
}

ComplexMatrix switch_output_closed_form(const SwitchConfig& control, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("switch_output_closed_form: p must lie in [0, 1]");
    }
    const double alpha = control.alpha;
    const double coh = p * p * std::sqrt(alpha * (1.0 - alpha));
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = alpha * p;
    rho(1, 1) = (1.0 - alpha) * p;
    rho(2, 2) = alpha * (1.0 - p);
    rho(3, 3) = (1.0 - alpha) * (1.0 - p);
    rho(0, 1) = coh;
    rho(1, 0) = coh;
    return rho;
}

}  // namespace switchtherm::channels
