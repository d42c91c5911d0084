// groundstate.cpp — exact diagonalization and adiabatic preparation

#include "sptsim/groundstate.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "sptsim/observables.hpp"

namespace sptsim {

GroundStateResult exact_ground_state(const Matrix& h, std::vector<Index> dims) {
    const EigResult eig = eig_hermitian(h);
    if (eig.values.size() < 2) {
        throw std::invalid_argument("exact_ground_state: need dimension >= 2");
    }
    GroundStateResult out;
    out.energy = eig.values(0);
    out.gap = eig.values(1) - eig.values(0);
    Vector ground = eig.vectors.col(0);
    ground /= ground.norm();
    out.state = QuantumState::pure(std::move(ground), dims);
    const double scale = max_abs(h);
    out.near_degenerate = out.gap < tol::near_degenerate_rel * scale;
    if (out.near_degenerate) {
        Vector partner = eig.vectors.col(1);
        partner /= partner.norm();
        out.partner = QuantumState::pure(std::move(partner), std::move(dims));
    }
    return out;
}

double AdiabaticSchedule::s(int l) const {
    if (steps < 1) throw std::invalid_argument("AdiabaticSchedule: steps must be >= 1");
    const double t = static_cast<double>(l) / steps;
    switch (ramp) {
        case Ramp::Linear: return t;
        case Ramp::Smoothstep: return t * t * (3.0 - 2.0 * t);
    }
    throw std::invalid_argument("AdiabaticSchedule: unknown ramp");
}

void PreparationResult::write_csv(std::ostream& os) const {
    os << "l,s,energy,fidelity\n";
    char buf[96];
    for (size_t l = 0; l < s_values.size(); ++l) {
        std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.12g\n", l, s_values[l],
                      energy_trace[l], fidelity_trace[l]);
        os << buf;
    }
}

namespace {

// Ground state of sum_i sigma_y^(i): every qubit in (|0> - i|1>)/sqrt(2).
Vector sigma_y_product_ground(int n_qubits) {
    const Index dim = Index{1} << n_qubits;
    const double amp = std::pow(2.0, -0.5 * n_qubits);
    const Complex minus_i(0, -1);
    Vector psi(dim);
    for (Index idx = 0; idx < dim; ++idx) {
        int bits = 0;
        for (Index b = idx; b != 0; b >>= 1) bits += static_cast<int>(b & 1);
        Complex phase = 1.0;
        for (int k = 0; k < bits; ++k) phase *= minus_i;
        psi(idx) = amp * phase;
    }
    return psi;
}

Matrix sigma_y_sum(int n_qubits) {
    const Index dim = Index{1} << n_qubits;
    Matrix h = Matrix::Zero(dim, dim);
    const Matrix sy = pauli_y();
    for (int q = 0; q < n_qubits; ++q) {
        const Index low = Index{1} << q;
        Matrix term = sy;
        if (low > 1) term = kron(term, identity(low));
        const Index high = dim / (2 * low);
        if (high > 1) term = kron(identity(high), term);
        h += term;
    }
    return h;
}

// Fidelity to the lowest eigenspace: single vector normally, the two lowest
// vectors when the gap is closing.
double instantaneous_fidelity(const Matrix& h, const Vector& psi, double omega) {
    const EigResult eig = eig_hermitian(h);
    const double f0 = std::norm(eig.vectors.col(0).dot(psi));
    if (eig.values.size() > 1 && eig.values(1) - eig.values(0) < 1e-3 * omega) {
        return f0 + std::norm(eig.vectors.col(1).dot(psi));
    }
    return f0;
}

}  // namespace

PreparationResult adiabatic_prepare(const ModelParams& p, const AdiabaticSchedule& sched) {
    const SqueezedFrame frame = squeezed_frame(p);
    if (!frame.stable) {
        throw std::domain_error("adiabatic_prepare: squeezed frame is unstable (UP)");
    }
    const Index m = p.boson_dim;
    if ((m & (m - 1)) != 0) {
        throw std::invalid_argument(
            "adiabatic_prepare: boson_dim must be a power of two (mapping qubits)");
    }
    int n_map = 0;
    for (Index v = m; v > 1; v >>= 1) ++n_map;
    const int n_total = n_map + 1;

    const Matrix hs = build_hs(p);
    const Matrix h0 = sigma_y_sum(n_total);
    const double dt = sched.dt / p.omega;

    Vector psi = sigma_y_product_ground(n_total);
    PreparationResult out;
    const int L = sched.steps;
    out.s_values.resize(L + 1);
    out.fidelity_trace.resize(L + 1);
    out.energy_trace.resize(L + 1);

    Matrix h_l = h0;
    out.s_values[0] = sched.s(0);
    out.fidelity_trace[0] = instantaneous_fidelity(h0, psi, p.omega);
    out.energy_trace[0] = psi.dot(h0 * psi).real();

    for (int l = 0; l < L; ++l) {
        const double s = sched.s(l);
        h_l = (1.0 - s) * h0 + s * hs;
        psi = expm_hermitian_generator(h_l, dt) * psi;
        const double drift = std::abs(psi.norm() - 1.0);
        if (drift > tol::run_norm_drift) {
            throw numeric_error("adiabatic_prepare: norm drift " + std::to_string(drift));
        }
        const double s_next = sched.s(l + 1);
        const Matrix h_next = (1.0 - s_next) * h0 + s_next * hs;
        out.s_values[l + 1] = s_next;
        out.fidelity_trace[l + 1] = instantaneous_fidelity(h_next, psi, p.omega);
        out.energy_trace[l + 1] = psi.dot(h_next * psi).real();
    }

    psi /= psi.norm();
    out.final_state = QuantumState::pure(psi, {m, 2});
    out.final_fidelity = out.fidelity_trace[L];  // s(L) = 1, H(L) = H_s
    return out;
}

double measured_order_parameter(const ModelParams& p, const QuantumState& state_s) {
    const SqueezedFrame frame = squeezed_frame(p);
    if (!frame.stable) {
        throw std::domain_error("measured_order_parameter: squeezed frame is unstable (UP)");
    }
    if (state_s.dims().size() != 2 || state_s.dims()[1] != 2 ||
        state_s.dims()[0] != p.boson_dim) {
        throw std::invalid_argument(
            "measured_order_parameter: state must live on boson_dim x 2");
    }
    const Index m = p.boson_dim;
    const Matrix a = annihilation_matrix(m);
    const Matrix i2 = identity(2);
    const double n_s = expectation(state_s, kron(Matrix(a.adjoint() * a), i2)).real();
    const Complex a2_s = expectation(state_s, kron(Matrix(a * a), i2));
    const double r = frame.r_tilde;
    const double bracket = std::cosh(2.0 * r) * n_s -
                           0.5 * std::sinh(2.0 * r) * (2.0 * a2_s.real()) +
                           std::sinh(r) * std::sinh(r);
    return bracket * p.omega / p.spin_frequency();
}

}  // namespace sptsim
