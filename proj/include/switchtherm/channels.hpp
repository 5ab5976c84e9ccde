// channels.hpp — generalized amplitude damping, thermal states, and the
// quantum-switch evolution that runs the channel twice in a superposition of
// the two possible orders.

#pragma once

#include "switchtherm/matcore.hpp"

#include <vector>

namespace switchtherm::channels {

// Qubit probe with Hamiltonian H = diag(0, gap). Units: k_B = hbar = 1.
struct ProbeSpec {
    explicit ProbeSpec(double gap);
    double gap;
};

// Thermal bath parameters: inverse temperature beta (may be +infinity) and the
// damping weight lambda in [0, 1].
struct BathSpec {
    BathSpec(double beta, double lambda);
    // lambda = 1 - exp(-t / tau) for interaction time t and bath relaxation time tau.
    static BathSpec from_interaction_time(double beta, double t, double tau);
    double beta;
    double lambda;
};

// Control qubit prepared in sqrt(alpha)|0> + sqrt(1-alpha)|1>. The derived
// coherence weight xi = 4 alpha (1 - alpha) is the squared l1-norm of coherence;
// xi = 0 means a definite order, xi = 1 the maximal superposition.
struct SwitchConfig {
    explicit SwitchConfig(double alpha);
    static SwitchConfig from_xi(double xi);  // picks the alpha >= 1/2 branch

    double alpha;
    double xi() const { return 4.0 * alpha * (1.0 - alpha); }
    double c_l1() const;
    ComplexMatrix state() const;  // 2x2 control density matrix
};

// Ordered Kraus operators with a common dimension. Construction enforces the
// completeness relation sum_i K_i^dag K_i = I within 1e-12 per entry.
struct KrausChannel {
    KrausChannel(Eigen::Index dim, std::vector<ComplexMatrix> operators);
    Eigen::Index dim;
    std::vector<ComplexMatrix> operators;
};

inline constexpr double kCompletenessTol = 1e-12;

// max entry of |sum_i K_i^dag K_i - I|.
double completeness_gap(Eigen::Index dim, const std::vector<ComplexMatrix>& operators);

// Ground-state population p = 1/(1 + exp(-beta*gap)). Accepts any real beta;
// beta = +infinity yields exactly 1 (no NaN), beta = 0 yields exactly 1/2.
double thermal_population(double beta, double gap);

// diag(p, 1-p); unit trace, PSD.
ComplexMatrix thermal_state(const ProbeSpec& probe, double beta);

// |0><0|, the canonical probe input sent through the switched interaction.
ComplexMatrix ground_state();

// The four damping operators of the thermalizing channel.
KrausChannel gad_kraus(const ProbeSpec& probe, const BathSpec& bath);
KrausChannel gad_kraus_from_p(double p, double lambda);

// Single application sum_i K_i rho K_i^dag. (Named to stay clear of std::apply,
// which ADL would otherwise drag into overload resolution.)
ComplexMatrix apply_channel(const KrausChannel& channel, const ComplexMatrix& rho);

// Two successive applications of the same channel (the definite-order baseline).
ComplexMatrix apply_sequential(const KrausChannel& channel, const ComplexMatrix& rho);

// The 16 joint probe-control operators
//   W_ij = K_i K_j (x) |0><0| + K_j K_i (x) |1><1|
// in probe (x) control ordering.
KrausChannel switch_kraus(const KrausChannel& channel);

// Joint 4x4 output sum_ij W_ij (rho (x) rho_c) W_ij^dag of the switched double
// interaction. probe_state must be a valid qubit density matrix.
ComplexMatrix switch_apply(const KrausChannel& channel, const ComplexMatrix& probe_state,
                           const SwitchConfig& control);

// Closed-form joint output for full damping (lambda = 1) with the ground-state
// probe input, in probe (x) control ordering:
//
//   diag(alpha*p, (1-alpha)*p, alpha*(1-p), (1-alpha)*(1-p))
//   with entries (0,1) and (1,0) equal to p^2 sqrt(alpha(1-alpha)).
//
// The coherence couples the two control branches at probe level 0; it is what
// the switched protocol adds over the definite-order channel.
ComplexMatrix switch_output_closed_form(const SwitchConfig& control, double p);

}  // namespace switchtherm::channels
