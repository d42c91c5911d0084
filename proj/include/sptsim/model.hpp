// model.hpp — physical parameters and Hamiltonian builders: Rabi model, A^2
// term, antisqueezing term, the squeezed-frame Hamiltonian with its derived
// parameters, truncated squeezing/displacement operators, and the generic
// NMR natural Hamiltonian.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sptsim/operator_algebra.hpp"

namespace sptsim {

struct ModelParams {
    double omega = 1.0;          // boson frequency, sets the energy scale
    double ratio = 1.0;          // Omega/omega
    double lambda_tilde = 0.0;   // 2 lambda / sqrt(Omega omega)
    double alpha = 0.0;          // A^2 strength
    double xi_over_omega = 0.0;  // antisqueezing strength over omega
    Index boson_dim = 2;         // Fock truncation M

    double spin_frequency() const { return ratio * omega; }  // Omega
    double coupling() const;                                 // lambda
    double xi() const { return xi_over_omega * omega; }

    void validate() const;  // throws std::invalid_argument on the first violation
    std::vector<std::string> diagnostics() const;  // all violations at once

    nlohmann::json to_json() const;
    // Exact snake_case field names; unknown keys rejected.
    static ModelParams from_json(const nlohmann::json& j);
};

// Squeezed-frame parameters from S(r) with r = (1/4) ln(1 + alpha lt^2 - 4 xi/omega).
// The frame is unstable (no real r) when the argument of the log is <= 0.
struct SqueezedFrame {
    bool stable = false;
    double r_tilde = 0.0;
    double omega_s = 0.0;
    double lambda_s = 0.0;
    double c_s = 0.0;            // (e^{2r} - 1) omega / 2
    double lambda_tilde_s = 0.0; // lambda_tilde e^{-2r}
};

SqueezedFrame squeezed_frame(const ModelParams& p);

// Truncated single-mode operators on M Fock levels.
Matrix annihilation_matrix(Index m);  // <k|a|n> = sqrt(n) delta_{k,n-1}
Matrix number_matrix(Index m);
Matrix quadrature_matrix(Index m);    // x = (a + a†)/2

// Hamiltonians on the boson (x) spin product space of dimension 2M.
Matrix build_rabi(const ModelParams& p);
Matrix build_a2_term(const ModelParams& p);
Matrix build_antisqueezing_term(const ModelParams& p);
Matrix build_total(const ModelParams& p);

// Squeezed-frame Hamiltonian (Omega/2) sigma_z + omega_s n + lambda_s (a+a†) sigma_x
// + C_s. The constant keeps the spectra of H and S H_s S† aligned; it can be
// dropped with include_constant = false.
Matrix build_hs(const ModelParams& p, bool include_constant = true);

// Parity exp(i pi N), N = a†a x I + I x (sigma_z + 1)/2.
Matrix parity_operator(Index m);

// S(r) = exp[r (a^2 - a†^2)/2] on M levels; |r| <= 3 (truncation fidelity
// collapses beyond that even at M = 1024).
Matrix squeezing_operator(double r, Index m);

// D(beta) = exp(beta a† - beta* a); requires |beta|^2 <= M/4.
Matrix displacement_operator(Complex beta, Index m);

// sum_i pi w_i sigma_z^(i) + sum_{i<j} (pi/2) J_ij sigma_z^(i) sigma_z^(j)
// on 2^n; couplings must be symmetric with zero diagonal.
Matrix build_nmr_hamiltonian(const std::vector<double>& shifts,
                             const std::vector<std::vector<double>>& couplings);

}  // namespace sptsim
