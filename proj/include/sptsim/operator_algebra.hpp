// operator_algebra.hpp — dense complex linear-algebra kernel: tensor products,
// Hermitian eigendecomposition, matrix exponentials of Hermitian generators,
// partial traces, and the quantum-state container shared by all modules.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sptsim/tolerances.hpp"

namespace sptsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Composite spaces larger than this are rejected outright.
inline constexpr Index kMaxDim = Index{1} << 16;

// Numeric failures (non-convergence, norm drift, negative variance, ...).
// Validation failures use std::invalid_argument, precondition violations
// std::domain_error.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double rel_tol = tol::hermiticity_rel);
void require_hermitian(const Matrix& m, const std::string& what);

Matrix identity(Index dim);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix pauli_plus();   // |0><1| in the sigma_z = diag(1,-1) basis
Matrix pauli_minus();

// Tensor product, first factor major: entry (i*dimB+k, j*dimB+l) = A(i,j) B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

struct EigResult {
    RealVector values;  // ascending
    Matrix vectors;     // orthonormal columns
};

// Dense Hermitian eigendecomposition. Input is validated against the
// hermiticity tolerance; non-convergence raises numeric_error.
EigResult eig_hermitian(const Matrix& h);

// exp(-i h t) for Hermitian h, via eigendecomposition.
Matrix expm_hermitian_generator(const Matrix& h, double t);

// --------------------------- quantum states ---------------------------------

enum class StateKind { PureVector, DensityMatrix };

// Pure vector or density matrix on a product space. dims lists the subsystem
// dimensions in tensor order (first factor major), e.g. {boson_dim, 2}.
class QuantumState {
public:
    static QuantumState pure(Vector psi, std::vector<Index> dims);
    static QuantumState density(Matrix rho, std::vector<Index> dims);

    StateKind kind() const { return kind_; }
    bool is_pure() const { return kind_ == StateKind::PureVector; }
    const std::vector<Index>& dims() const { return dims_; }
    Index total_dim() const { return total_dim_; }

    const Vector& vector() const;          // pure states only
    const Matrix& density_matrix() const;  // density states only
    Matrix as_density() const;             // rho, or |psi><psi| for pure input

private:
    QuantumState() = default;
    StateKind kind_ = StateKind::PureVector;
    std::vector<Index> dims_;
    Index total_dim_ = 0;
    Vector psi_;
    Matrix rho_;
};

// Trace out the other factor of a two-factor density state; keep is 0 or 1.
QuantumState partial_trace(const QuantumState& state, int keep);

}  // namespace sptsim
