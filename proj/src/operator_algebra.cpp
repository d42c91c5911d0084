// operator_algebra.cpp — kernel implementation

#include "sptsim/operator_algebra.hpp"

#include <cmath>
#include <utility>

namespace sptsim {

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = max_abs(m);
    if (scale == 0.0) return true;
    return max_abs(m - m.adjoint()) <= rel_tol * scale;
}

void require_hermitian(const Matrix& m, const std::string& what) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument(what + ": matrix must be square");
    }
    if (!is_hermitian(m)) {
        throw std::invalid_argument(what + ": matrix is not Hermitian within tolerance");
    }
}

Matrix identity(Index dim) {
    if (dim < 1) throw std::invalid_argument("identity: dim must be >= 1");
    return Matrix::Identity(dim, dim);
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix pauli_plus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1;
    return m;
}

Matrix pauli_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1;
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols()) {
        throw std::invalid_argument("kron: operands must be square");
    }
    if (a.rows() < 1 || b.rows() < 1) {
        throw std::invalid_argument("kron: operands must have dim >= 1");
    }
    if (a.rows() > kMaxDim / b.rows()) {
        throw std::invalid_argument("kron: product dimension exceeds capacity (2^16)");
    }
    const Index da = a.rows(), db = b.rows();
    Matrix out(da * db, da * db);
    for (Index i = 0; i < da; ++i)
        for (Index j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a(i, j) * b;
    return out;
}

EigResult eig_hermitian(const Matrix& h) {
    require_hermitian(h, "eig_hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw numeric_error("eig_hermitian: eigensolver failed to converge (dim " +
                            std::to_string(h.rows()) + ")");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix expm_hermitian_generator(const Matrix& h, double t) {
    EigResult eig = eig_hermitian(h);
    Vector phases(eig.values.size());
    for (Index k = 0; k < eig.values.size(); ++k) {
        phases(k) = std::exp(Complex(0, -eig.values(k) * t));
    }
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

// --------------------------- quantum states ---------------------------------

namespace {

Index product_dim(const std::vector<Index>& dims) {
    if (dims.empty()) throw std::invalid_argument("QuantumState: dims must be nonempty");
    Index total = 1;
    for (Index d : dims) {
        if (d < 1) throw std::invalid_argument("QuantumState: each factor dim must be >= 1");
        if (total > kMaxDim / d) {
            throw std::invalid_argument("QuantumState: total dimension exceeds capacity");
        }
        total *= d;
    }
    return total;
}

}  // namespace

QuantumState QuantumState::pure(Vector psi, std::vector<Index> dims) {
    const Index total = product_dim(dims);
    if (psi.size() != total) {
        throw std::invalid_argument("QuantumState::pure: vector length does not match dims");
    }
    if (std::abs(psi.norm() - 1.0) > tol::pure_norm) {
        throw std::invalid_argument("QuantumState::pure: state is not normalized");
    }
    QuantumState s;
    s.kind_ = StateKind::PureVector;
    s.dims_ = std::move(dims);
    s.total_dim_ = total;
    s.psi_ = std::move(psi);
    return s;
}

QuantumState QuantumState::density(Matrix rho, std::vector<Index> dims) {
    const Index total = product_dim(dims);
    if (rho.rows() != total || rho.cols() != total) {
        throw std::invalid_argument("QuantumState::density: matrix shape does not match dims");
    }
    if (!is_hermitian(rho, 1e-10)) {
        throw std::invalid_argument("QuantumState::density: matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > tol::density_trace ||
        std::abs(rho.trace().imag()) > tol::density_trace) {
        throw std::invalid_argument("QuantumState::density: trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numeric_error("QuantumState::density: eigenvalue check failed");
    }
    if (solver.eigenvalues().minCoeff() < tol::density_min_eig) {
        throw std::invalid_argument("QuantumState::density: matrix is not positive semidefinite");
    }
    QuantumState s;
    s.kind_ = StateKind::DensityMatrix;
    s.dims_ = std::move(dims);
    s.total_dim_ = total;
    s.rho_ = std::move(rho);
    return s;
}

const Vector& QuantumState::vector() const {
    if (!is_pure()) throw std::domain_error("QuantumState::vector: state is not pure");
    return psi_;
}

const Matrix& QuantumState::density_matrix() const {
    if (is_pure()) throw std::domain_error("QuantumState::density_matrix: state is pure");
    return rho_;
}

Matrix QuantumState::as_density() const {
    if (is_pure()) return psi_ * psi_.adjoint();
    return rho_;
}

QuantumState partial_trace(const QuantumState& state, int keep) {
    if (state.dims().size() != 2) {
        throw std::invalid_argument("partial_trace: state must have exactly two factors");
    }
    if (keep != 0 && keep != 1) {
        throw std::invalid_argument("partial_trace: keep must be 0 or 1");
    }
    const Index d0 = state.dims()[0], d1 = state.dims()[1];
    const Matrix rho = state.as_density();
    const Index dk = (keep == 0) ? d0 : d1;
    Matrix out = Matrix::Zero(dk, dk);
    if (keep == 0) {
        for (Index i = 0; i < d0; ++i)
            for (Index j = 0; j < d0; ++j)
                for (Index k = 0; k < d1; ++k) out(i, j) += rho(i * d1 + k, j * d1 + k);
    } else {
        for (Index i = 0; i < d1; ++i)
            for (Index j = 0; j < d1; ++j)
                for (Index k = 0; k < d0; ++k) out(i, j) += rho(k * d1 + i, k * d1 + j);
    }
    // Renormalize the trace exactly; the input guarantees it is 1 within tolerance.
    out = 0.5 * (out + Matrix(out.adjoint()));
    return QuantumState::density(std::move(out), {dk});
}

}  // namespace sptsim
