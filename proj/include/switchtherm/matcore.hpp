// matcore.hpp — small dense complex linear algebra: Hermitian eigendecomposition,
// tensor products, and partial traces for probe-control joint states.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace switchtherm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Thrown when an iterative routine fails or a computed value is out of range.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when two independent evaluation routes disagree beyond tolerance.
struct ConsistencyError : NumericalError {
    using NumericalError::NumericalError;
};

// Tolerances shared across modules. Hermiticity is loose enough for accumulated
// float error, tight enough to catch construction bugs; PSD allows -1e-12 slack.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = -1e-12;
inline constexpr double kTraceTol = 1e-10;

struct EigenDecomposition {
    RealVector eigenvalues;      // ascending
    ComplexMatrix eigenvectors;  // orthonormal columns, k-th column pairs with eigenvalues[k]
};

ComplexMatrix identity(Eigen::Index dim);

// max_ij |a(i,j) - conj(a(j,i))|; zero for exactly Hermitian input.
double hermiticity_gap(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

// Throws std::invalid_argument unless rho is square, Hermitian, unit trace,
// and PSD within the shared tolerances. `who` prefixes the error message.
void require_density_matrix(const ComplexMatrix& rho, const std::string& who);

// Dense Hermitian eigendecomposition. Rejects non-square or non-Hermitian input
// (the error names the max asymmetry).
EigenDecomposition hermitian_eig(const ComplexMatrix& a);

// Kronecker product. Index convention is probe (x) control throughout: the first
// factor owns the slow (major) index, matching partial_trace_control below.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced probe state of a (probe_dim * control_dim)-dimensional joint state,
// probe index major. Trace is preserved.
ComplexMatrix partial_trace_control(const ComplexMatrix& joint, Eigen::Index probe_dim,
                                    Eigen::Index control_dim);

}  // namespace switchtherm
