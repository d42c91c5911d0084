// analytic.hpp — closed-form solutions in the classical oscillator limit:
// phase classification, critical coupling, excitation and ground energies,
// order parameter, analytic ground states, squeezed cat states, and the
// zero-point-fluctuation formulas.

#pragma once

#include <optional>

#include "json.hpp"
#include "sptsim/model.hpp"

namespace sptsim::analytic {

enum class Phase { NP, SP, UP };

const char* phase_name(Phase p);

// Closed-form quantities at one parameter point. Fields are absent in UP;
// non-finite values (the secondary squeezing parameter diverges at the exact
// critical point) serialize as the string "divergent".
struct PhaseReport {
    Phase phase = Phase::UP;
    std::optional<double> r_tilde;
    std::optional<double> lambda_tilde_s;
    std::optional<double> omega_e;        // units of omega
    std::optional<double> e_g;            // finite part, units of omega
    std::optional<double> e_g_divergent;  // coefficient of Omega in E_g
    std::optional<double> beta_abs;       // 0 in NP
    std::optional<double> theta;          // 0 in NP
    std::optional<double> phi;
    std::optional<double> l_np;
    std::optional<double> l_sp;

    nlohmann::json to_json() const;
};

PhaseReport classify_phase(const ModelParams& p);

// Positive root of lt^2 = 1 + alpha lt^2 - 4 xi/omega, i.e.
// sqrt((4 xi/omega - 1)/(alpha - 1)); nullopt when no positive root exists.
std::optional<double> critical_coupling(double alpha, double xi_over_omega);

// omega_s sqrt(1 - lts^2) in NP, omega_s sqrt(1 - lts^-4) in SP (absolute
// energy units); exactly 0 on the boundary. Throws std::domain_error in UP.
double excitation_energy(const ModelParams& p);

// 0 in NP; (e^{-4r}/4)(lts^2 - lts^-2) in SP. The frame-consistent
// (supplement) form is the default; main_text_variant drops the e^{-4r}.
double order_parameter_limit(const ModelParams& p, bool main_text_variant = false);

struct Displacement {
    double beta_abs = 0.0;
    double theta = 0.0;  // tan(2 theta) = -4 lambda_s beta / Omega
};

// SP only; |beta| scales as sqrt(Omega/omega).
Displacement displacement_and_angle(const ModelParams& p);

// NP ground state S(r_np)|0> (x) |down> on m Fock levels.
QuantumState ground_state_np(const ModelParams& p, Index m);

enum class SpBranch { Plus, Minus, CatEven, CatOdd };

// SP ground states. Plus/Minus are the degenerate product branches
// S(r) D(+-|beta|) |0> (x) |down>_{+-}; the cat branches are the boson-only
// normalized superpositions S(r)(D(|beta|) +- D(-|beta|))|0>. include_lsp
// adds the secondary squeezing S(l_sp), which matters close to criticality.
QuantumState ground_state_sp(const ModelParams& p, Index m, SpBranch branch,
                             bool include_lsp = false);

enum class ZpfVariant { Rabi, WithA2, WithA2AndAs };

// Ground-state ZPF closed forms; nullopt marks a divergence at the exact
// critical point. Throws std::domain_error in UP.
std::optional<double> zpf_formula(const ModelParams& p, ZpfVariant variant);

// Serialization helper shared by reports and the CLI: non-finite or absent
// values become "divergent" / null.
nlohmann::json divergent_or(std::optional<double> v);

}  // namespace sptsim::analytic
