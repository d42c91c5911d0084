// noise.hpp — per-qubit phase-damping and generalized-amplitude-damping
// channels, and the pseudo-pure initial state.

#pragma once

#include <array>
#include <vector>

#include "json.hpp"
#include "sptsim/operator_algebra.hpp"

namespace sptsim::noise {

struct NoiseParams {
    enum class Order { PdThenGad, GadThenPd };

    std::vector<double> t1;  // per-qubit relaxation times
    std::vector<double> t2;  // per-qubit dephasing times
    double dt = 0.0;         // exposure duration
    double p_gad = 0.5;      // excited-population parameter
    int n_qubits = 0;
    Order order = Order::PdThenGad;

    double p_pd(int qubit) const;  // (1 - exp(-dt/t2)) / 2
    double eta(int qubit) const;   // 1 - exp(-dt/t1)

    void validate() const;
    static NoiseParams from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// E(rho) = (1 - p) rho + p Z_i rho Z_i on qubit i (0-based, bit i).
QuantumState phase_damping(const QuantumState& rho, const NoiseParams& np, int qubit);

// Four-operator Kraus set parameterized by (p, eta); completeness is asserted
// at construction.
std::array<Matrix, 4> gad_kraus(double p, double eta);

QuantumState generalized_amplitude_damping(const QuantumState& rho, const NoiseParams& np,
                                           int qubit);

// Sequential per-qubit composition, qubit 0 first; per-qubit order given by
// np.order.
QuantumState apply_all_qubits(const QuantumState& rho, const NoiseParams& np);

// ((1 - eps)/2^n) I + eps |0...0><0...0|.
QuantumState pseudo_pure(double epsilon, int n_qubits);

}  // namespace sptsim::noise
