#include "switchtherm/matcore.hpp"

#include <Eigen/Eigenvalues>

#include <sstream>

namespace switchtherm {

ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

double hermiticity_gap(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hermiticity_gap: matrix must be square");
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    return a.rows() == a.cols() && hermiticity_gap(a) <= tol;
}

void require_density_matrix(const ComplexMatrix& rho, const std::string& who) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument(who + ": state must be square");
    }
    const double gap = hermiticity_gap(rho);
    if (gap > kHermitianTol) {
        std::ostringstream msg;
        msg << who << ": state not Hermitian, max asymmetry " << gap;
        throw std::invalid_argument(msg.str());
    }
    const double trace_err = std::abs(rho.trace() - Complex{1.0, 0.0});
    if (trace_err > kTraceTol) {
        std::ostringstream msg;
        msg << who << ": state trace deviates from 1 by " << trace_err;
        throw std::invalid_argument(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < kPsdTol) {
        std::ostringstream msg;
        msg << who << ": state not positive semidefinite, min eigenvalue "
            << solver.eigenvalues().minCoeff();
        throw std::invalid_argument(msg.str());
    }
}

EigenDecomposition hermitian_eig(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hermitian_eig: matrix must be square");
    }
    const double gap = hermiticity_gap(a);
    if (gap > kHermitianTol) {
        std::ostringstream msg;
        msg << "hermitian_eig: matrix not Hermitian, max asymmetry " << gap;
        throw std::invalid_argument(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_eig: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace_control(const ComplexMatrix& joint, Eigen::Index probe_dim,
                                    Eigen::Index control_dim) {
    if (probe_dim <= 0 || control_dim <= 0) {
        throw std::invalid_argument("partial_trace_control: dimensions must be positive");
    }
    const Eigen::Index dim = probe_dim * control_dim;
    if (joint.rows() != dim || joint.cols() != dim) {
        std::ostringstream msg;
        msg << "partial_trace_control: joint state is " << joint.rows() << "x" << joint.cols()
            << ", expected " << dim << "x" << dim;
        throw std::invalid_argument(msg.str());
    }
    ComplexMatrix out = ComplexMatrix::Zero(probe_dim, probe_dim);
    for (Eigen::Index a = 0; a < probe_dim; ++a) {
        for (Eigen::Index b = 0; b < probe_dim; ++b) {
            for (Eigen::Index c = 0; c < control_dim; ++c) {
                out(a, b) += joint(a * control_dim + c, b * control_dim + c);
            }
        }
    }
    return out;
}

}  // namespace switchtherm
