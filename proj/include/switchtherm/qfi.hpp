// qfi.hpp — quantum Fisher information: a general spectral engine for arbitrary
// one-parameter families of density matrices, closed forms for the switched and
// plain thermal qubit and the harmonic-oscillator probe, and the beta <-> T
// reparameterization.

#pragma once

#include "switchtherm/channels.hpp"

#include <functional>
#include <optional>

namespace switchtherm::qfi {

// Harmonic-oscillator probe with level spacing gap. Deliberately a distinct type
// from channels::ProbeSpec so the two probes cannot be mixed up in comparisons.
struct HOProbeSpec {
    explicit HOProbeSpec(double gap);
    double gap;
};

enum class Parameter { beta, temperature };
enum class Method { analytic, spectral };

struct DerivativeMethod {
    enum class Kind { analytic, central_difference };
    Kind kind = Kind::analytic;
    double step = 0.0;  // finite-difference step, 0 for analytic
};

struct QfiInputs {
    std::optional<double> beta;
    std::optional<double> temperature;
    std::optional<double> gap;
    std::optional<double> xi;
    std::optional<double> lambda;
};

struct QfiResult {
    double value = 0.0;
    Parameter parameter = Parameter::beta;
    Method method = Method::analytic;
    DerivativeMethod derivative;
    QfiInputs inputs;
};

// One-parameter family beta -> rho(beta). When derivative_at is empty the
// spectral engine falls back to central finite differences; the analytic route
// is the default wherever one exists, finite differences are the cross-check.
struct ParameterizedState {
    std::function<ComplexMatrix(double)> state_at;
    std::function<ComplexMatrix(double)> derivative_at;
};

// Central-difference step h = max(1e-5, 1e-6 * beta).
double fd_step(double beta);

// Spectral evaluation: eigendecompose rho, transform d_beta rho into the
// eigenbasis, and sum 2|(d rho)_mn|^2 / (p_m + p_n) over pairs with
// p_m + p_n > 1e-12. A second bookkeeping route splitting the classical and
// eigenvector contributions is evaluated alongside; disagreement throws.
QfiResult spectral(const ParameterizedState& family, double beta);

// Closed form for the switched probe at full damping:
//   eps^2 ((2+xi) e^{3 beta eps} + 3 e^{2 beta eps} + e^{beta eps})
//         / ((1+e^{beta eps})^3 (1+2 e^{beta eps})).
QfiResult switch_analytic(double beta, const channels::ProbeSpec& probe,
                          const channels::SwitchConfig& control);

// Thermal qubit without a switch: eps^2 e^{beta eps} / (1+e^{beta eps})^2,
// equal to the Hamiltonian variance.
QfiResult qubit_noswitch(double beta, const channels::ProbeSpec& probe);

// Harmonic oscillator: eps^2 e^{-beta eps} / (1-e^{-beta eps})^2. Diverges as
// beta -> 0, hence beta must be positive.
QfiResult harmonic_oscillator(double beta, const HOProbeSpec& probe);

// F_T = F_beta / T^4 (Jacobian of beta = 1/T); flips the parameter tag.
QfiResult to_temperature_parameter(const QfiResult& f_beta, double temperature);

// Analytic d/d beta of the closed-form switch output, via dp/d beta = eps p (1-p).
// Traceless Hermitian 4x4.
ComplexMatrix d_rho_d_beta_switch(double beta, const channels::ProbeSpec& probe,
                                  const channels::SwitchConfig& control);

// beta -> closed-form switch output (full damping) with its analytic derivative.
ParameterizedState switch_state_family(const channels::ProbeSpec& probe,
                                       const channels::SwitchConfig& control);

// beta -> brute-force switched Kraus output at general lambda, ground-state
// input; finite-difference derivative.
ParameterizedState switch_state_family_general(const channels::ProbeSpec& probe,
                                               const channels::SwitchConfig& control,
                                               double lambda);

// beta -> the channel applied twice to the ground state at general lambda.
ParameterizedState sequential_state_family(const channels::ProbeSpec& probe, double lambda);

}  // namespace switchtherm::qfi
