// tolerances.hpp — the single table of numeric tolerances used across the library

#pragma once

namespace sptsim::tol {

inline constexpr double hermiticity_rel    = 1e-12;  // max |M - M†| relative to max |entry|
inline constexpr double eig_residual_rel   = 1e-9;   // ||Hv - Ev|| relative to ||H||
inline constexpr double unitarity          = 1e-9;   // ||U†U - I||_max
inline constexpr double pure_norm          = 1e-10;  // | ||psi|| - 1 |
inline constexpr double density_trace      = 1e-10;  // | tr(rho) - 1 |
inline constexpr double density_min_eig    = -1e-9;  // PSD slack
inline constexpr double dual_route         = 1e-12;  // two independent constructions of one operator
inline constexpr double moment_dual_route  = 1e-10;  // direct vs decomposition quadrature moments
inline constexpr double frame_identity     = 1e-12;  // closed-form frame identities
inline constexpr double truncation_loss    = 1e-6;   // state weight allowed near the Fock cutoff
inline constexpr double parity_commute     = 1e-10;  // ||[H, Pi]||_max
inline constexpr double trace_preserve     = 1e-10;  // quantum channels
inline constexpr double step_norm_drift    = 1e-10;  // per adiabatic step
inline constexpr double run_norm_drift     = 1e-6;   // whole adiabatic run
inline constexpr double near_degenerate_rel = 1e-8;  // gap relative to ||H||
inline constexpr double variance_clamp     = -1e-10; // negative variance tolerated before error

}  // namespace sptsim::tol
