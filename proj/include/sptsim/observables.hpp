// observables.hpp — expectation values, quadrature statistics, entanglement
// entropy, Wigner functions via displaced parity, and the readout operators.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sptsim/operator_algebra.hpp"

namespace sptsim {

// <psi|O|psi> or tr(rho O).
Complex expectation(const QuantumState& state, const Matrix& op);

struct QuadratureMoments {
    Complex a;        // <a>
    Complex a_sq;     // <a^2>
    double n;         // <a†a>
    double x;         // <x>
    double x_sq;      // <x^2>
};

// All five moments of a boson-only state. The x moments are evaluated both
// directly from the quadrature matrix and through the sub/sub-sub-diagonal
// decomposition; disagreement beyond tolerance raises numeric_error.
QuadratureMoments quadrature_moments(const QuantumState& state);

// Standard deviation of x = (a + a†)/2 on a boson-only state.
double zpf(const QuantumState& state);

// von Neumann entropy (bits) of either reduction of a pure two-factor state.
double entanglement_entropy(const QuantumState& state);

struct GridSpec {
    double x_min = -5, x_max = 5;
    int x_count = 101;
    double p_min = -5, p_max = 5;
    int p_count = 101;

    static GridSpec symmetric(double x_range, double p_range, int count = 101);
    // +-5 max(ZPF, |<x>| + 3 ZPF) on both axes, 101 x 101.
    static GridSpec for_state(const QuantumState& state);
};

struct WignerGrid {
    std::vector<double> x_axis;
    std::vector<double> p_axis;
    Eigen::MatrixXd values;  // values(ix, ip) = W(x_axis[ix], p_axis[ip])
    double cell_area = 0.0;
    std::vector<std::string> warnings;

    double integral() const;  // sum W * cell_area
    double min_value() const;
    // Sign changes of W along the p axis at the x grid point nearest x = 0.
    int midline_sign_alternations() const;

    void write_csv(std::ostream& os) const;  // columns x, p, W
    nlohmann::json to_json() const;
};

// W(alpha) = (2/pi) tr[rho D(alpha) P D†(alpha)], P = diag((-1)^n), evaluated
// in parallel over grid points. Boson-only states.
WignerGrid wigner(const QuantumState& state, const GridSpec& grid);

// Cyclic readout permutations: U1 shifts |n+1> -> |n> with wraparound,
// U2 = U1^2 (also built from its own index formula).
std::pair<Matrix, Matrix> readout_operators(Index m);

namespace detail {

// Closed-form displacement matrix via the diagonal three-term recurrence;
// agrees with displacement_operator but costs O(M^2). Used per Wigner point.
Matrix displacement_matrix(Complex gamma, Index m);

}  // namespace detail

}  // namespace sptsim
