// groundstate.hpp — exact ground states at finite parameters and the
// adiabatic preparation protocol with per-step fidelity tracking.

#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "sptsim/model.hpp"

namespace sptsim {

struct GroundStateResult {
    double energy = 0.0;
    QuantumState state;
    double gap = 0.0;  // E1 - E0
    bool near_degenerate = false;
    std::optional<QuantumState> partner;  // second eigenvector when near-degenerate

    GroundStateResult() : state(QuantumState::pure(Vector::Ones(1), {1})) {}
};

// Lowest eigenpair of a Hermitian operator; dims describe the factor layout
// of the resulting state. A gap below near_degenerate_rel * ||H|| flags the
// result and returns the second vector too.
GroundStateResult exact_ground_state(const Matrix& h, std::vector<Index> dims);

struct AdiabaticSchedule {
    enum class Ramp { Linear, Smoothstep };
    int steps = 200;   // L
    double dt = 0.5;   // step duration in units of 1/omega
    Ramp ramp = Ramp::Linear;

    double s(int l) const;  // schedule value, s(0) = 0, s(steps) = 1
};

struct PreparationResult {
    QuantumState final_state;
    std::vector<double> s_values;        // s(l), l = 0..L
    std::vector<double> fidelity_trace;  // vs the instantaneous ground state
    std::vector<double> energy_trace;    // <H(l)>
    double final_fidelity = 0.0;         // vs the exact ground state of H_s

    PreparationResult() : final_state(QuantumState::pure(Vector::Ones(1), {1})) {}

    void write_csv(std::ostream& os) const;  // columns l, s, energy, fidelity
};

// Evolve the ground state of H0 = sum_i sigma_y^(i) under
// H(l) = [1 - s(l)] H0 + s(l) H_s, psi(l+1) = exp(-i H(l) dt) psi(l).
// boson_dim must be a power of two so H0 covers every mapping qubit.
PreparationResult adiabatic_prepare(const ModelParams& p, const AdiabaticSchedule& sched);

// Order parameter from squeezed-frame expectations:
// (omega/Omega) [cosh(2r) <a†a> - (1/2) sinh(2r)(<a†2> + <a2>) + sinh^2 r].
double measured_order_parameter(const ModelParams& p, const QuantumState& state_s);

}  // namespace sptsim
