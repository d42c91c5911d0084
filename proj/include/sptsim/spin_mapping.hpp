// spin_mapping.hpp — N-qubit binary spin-to-oscillator mapping: the spin-sum
// number operator, the ladder words A+/A-, and the truncated ladder operators
// built from them. Basis convention: qubit i (1-based) carries binary weight
// 2^(i-1); bit value 0 is spin-up (sigma_z = +1), bit value 1 is spin-down.

#pragma once

#include "sptsim/operator_algebra.hpp"

namespace sptsim::map {

struct MappingConfig {
    int n_qubits = 0;
    Index boson_dim = 0;  // always 2^n_qubits

    static MappingConfig of(int n_qubits);
};

// Operator o acting on qubit i (1-based) of an n-qubit register.
Matrix on_qubit(const Matrix& o, int qubit, int n_qubits);

// Number operator as the spin sum  -sum_i 2^(i-2) sigma_z^(i) + (2^N - 1)/2.
Matrix number_operator_spin_sum(const MappingConfig& cfg);

// diag(0, 1, ..., 2^N - 1); construction asserts exact equality with the
// spin-sum form (entries are half-integers, so the comparison is exact).
Matrix number_operator(const MappingConfig& cfg);

struct LadderWords {
    Matrix plus;   // <n+1|A+|n> = 1, annihilates the top state
    Matrix minus;  // adjoint of plus
};

// A+ as the sigma word expansion: term j sets bit j and clears bits 1..j-1,
// which is a binary increment. The convention is fixed operationally by the
// action <n+1|A+|n> = 1.
LadderWords ladder_words(const MappingConfig& cfg);

// a = A- sqrt(Sigma_z); the adjoint route a† = A+ sqrt(Sigma_z + 1) is built
// independently and both must agree entrywise with the canonical truncated
// annihilation matrix.
Matrix annihilation_operator(const MappingConfig& cfg);
Matrix creation_operator(const MappingConfig& cfg);

}  // namespace sptsim::map
