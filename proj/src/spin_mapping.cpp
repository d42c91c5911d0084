// spin_mapping.cpp — binary spin-to-oscillator mapping

#include "sptsim/spin_mapping.hpp"

#include <cmath>

namespace sptsim::map {

MappingConfig MappingConfig::of(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 11) {
        throw std::invalid_argument("MappingConfig: n_qubits must be in [1, 11]");
    }
    MappingConfig cfg;
    cfg.n_qubits = n_qubits;
    cfg.boson_dim = Index{1} << n_qubits;
    return cfg;
}

Matrix on_qubit(const Matrix& o, int qubit, int n_qubits) {
    if (qubit < 1 || qubit > n_qubits) {
        throw std::invalid_argument("on_qubit: qubit index out of range");
    }
    // qubit i lives on bit i-1; the leftmost tensor factor is the most
    // significant bit, so pad with identities accordingly.
    const Index high = Index{1} << (n_qubits - qubit);
    const Index low = Index{1} << (qubit - 1);
    Matrix m = o;
    if (high > 1) m = kron(identity(high), m);
    if (low > 1) m = kron(m, identity(low));
    return m;
}

Matrix number_operator_spin_sum(const MappingConfig& cfg) {
    const int n = cfg.n_qubits;
    const Index dim = cfg.boson_dim;
    Matrix sum = (static_cast<double>(dim - 1) / 2.0) * identity(dim);
    for (int i = 1; i <= n; ++i) {
        sum -= std::ldexp(1.0, i - 2) * on_qubit(pauli_z(), i, n);
    }
    return sum;
}

Matrix number_operator(const MappingConfig& cfg) {
    const Index dim = cfg.boson_dim;
    Matrix diag = Matrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) diag(k, k) = static_cast<double>(k);

    const Matrix spin_sum = number_operator_spin_sum(cfg);
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
            if (spin_sum(i, j) != diag(i, j)) {
                throw numeric_error("number_operator: spin-sum construction disagrees "
                                    "with diag(0..2^N-1)");
            }
        }
    }
    return diag;
}

LadderWords ladder_words(const MappingConfig& cfg) {
    const int n = cfg.n_qubits;
    const Index dim = cfg.boson_dim;
    // bit-set flips 0 -> 1, bit-clear flips 1 -> 0 on one qubit
    Matrix bit_set = Matrix::Zero(2, 2);
    bit_set(1, 0) = 1;
    Matrix bit_clear = Matrix::Zero(2, 2);
    bit_clear(0, 1) = 1;

    Matrix plus = Matrix::Zero(dim, dim);
    for (int j = 1; j <= n; ++j) {
        // word j = set(j) x clear(j-1) x ... x clear(1)
        Matrix low = identity(1);
        for (int i = 1; i < j; ++i) {
            low = kron(bit_clear, low);
        }
        Matrix word = kron(bit_set, low);
        const Index high = Index{1} << (n - j);
        if (high > 1) word = kron(identity(high), word);
        plus += word;
    }
    return {plus, plus.adjoint()};
}

namespace {

Matrix sqrt_diagonal(const Matrix& d) {
    Matrix out = Matrix::Zero(d.rows(), d.cols());
    for (Index k = 0; k < d.rows(); ++k) out(k, k) = std::sqrt(d(k, k).real());
    return out;
}

Matrix canonical_annihilation(Index dim) {
    Matrix a = Matrix::Zero(dim, dim);
    for (Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

}  // namespace

Matrix annihilation_operator(const MappingConfig& cfg) {
    const Matrix num = number_operator(cfg);
    const LadderWords words = ladder_words(cfg);
    const Matrix a = words.minus * sqrt_diagonal(num);
    const Matrix canonical = canonical_annihilation(cfg.boson_dim);
    if (max_abs(a - canonical) > tol::dual_route) {
        throw numeric_error("annihilation_operator: mapped operator disagrees with the "
                            "canonical truncated matrix");
    }
    return a;
}

Matrix creation_operator(const MappingConfig& cfg) {
    const Matrix num = number_operator(cfg);
    const LadderWords words = ladder_words(cfg);
    const Matrix adag = words.plus * sqrt_diagonal(num + identity(cfg.boson_dim));
    const Matrix from_adjoint = annihilation_operator(cfg).adjoint();
    if (max_abs(adag - from_adjoint) > tol::dual_route) {
        throw numeric_error("creation_operator: direct formula disagrees with the "
                            "adjoint of the annihilation operator");
    }
    return adag;
}

}  // namespace sptsim::map
