// noise.cpp — Kraus channels

#include "sptsim/noise.hpp"

#include <cmath>

namespace sptsim::noise {

using nlohmann::json;

void NoiseParams::validate() const {
    if (n_qubits < 1) throw std::invalid_argument("NoiseParams: n_qubits must be >= 1");
    if (t1.size() != static_cast<size_t>(n_qubits) ||
        t2.size() != static_cast<size_t>(n_qubits)) {
        throw std::invalid_argument("NoiseParams: t1/t2 must list one time per qubit");
    }
    for (double t : t1)
        if (!(t > 0)) throw std::invalid_argument("NoiseParams: t1 entries must be > 0");
    for (double t : t2)
        if (!(t > 0)) throw std::invalid_argument("NoiseParams: t2 entries must be > 0");
    if (!(dt > 0)) throw std::invalid_argument("NoiseParams: dt must be > 0");
    if (!(p_gad >= 0.0 && p_gad <= 1.0)) {
        throw std::invalid_argument("NoiseParams: p_gad must be in [0, 1]");
    }
}

double NoiseParams::p_pd(int qubit) const {
    return 0.5 * (1.0 - std::exp(-dt / t2.at(qubit)));
}

double NoiseParams::eta(int qubit) const {
    return 1.0 - std::exp(-dt / t1.at(qubit));
}

NoiseParams NoiseParams::from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("NoiseParams: expected a JSON object");
    static const char* known[] = {"t1", "t2", "dt", "p_gad", "n_qubits", "order"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::invalid_argument("NoiseParams: unknown key '" + key + "'");
    }
    NoiseParams np;
    np.t1 = j.at("t1").get<std::vector<double>>();
    np.t2 = j.at("t2").get<std::vector<double>>();
    np.dt = j.at("dt").get<double>();
    np.p_gad = j.value("p_gad", 0.5);
    np.n_qubits = j.at("n_qubits").get<int>();
    if (j.contains("order")) {
        const std::string o = j.at("order").get<std::string>();
        if (o == "pd_then_gad") np.order = Order::PdThenGad;
        else if (o == "gad_then_pd") np.order = Order::GadThenPd;
        else throw std::invalid_argument("NoiseParams: order must be pd_then_gad or gad_then_pd");
    }
    np.validate();
    return np;
}

json NoiseParams::to_json() const {
    return json{{"t1", t1},
                {"t2", t2},
                {"dt", dt},
                {"p_gad", p_gad},
                {"n_qubits", n_qubits},
                {"order", order == Order::PdThenGad ? "pd_then_gad" : "gad_then_pd"}};
}

namespace {

void check_register(const QuantumState& rho, const NoiseParams& np, int qubit,
                    const char* what) {
    np.validate();
    if (qubit < 0 || qubit >= np.n_qubits) {
        throw std::invalid_argument(std::string(what) + ": qubit index out of range");
    }
    if (rho.total_dim() != (Index{1} << np.n_qubits)) {
        throw std::invalid_argument(std::string(what) +
                                    ": state dimension does not match n_qubits");
    }
}

// Lift a single-qubit operator to bit q of an n-qubit register.
Matrix lift(const Matrix& op, int qubit, int n_qubits) {
    Matrix m = op;
    const Index low = Index{1} << qubit;
    if (low > 1) m = kron(m, identity(low));
    const Index high = Index{1} << (n_qubits - qubit - 1);
    if (high > 1) m = kron(identity(high), m);
    return m;
}

QuantumState renormalized_density(Matrix rho, std::vector<Index> dims) {
    rho = 0.5 * (rho + Matrix(rho.adjoint()));
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > tol::trace_preserve) {
        throw numeric_error("noise channel: trace drifted to " + std::to_string(tr));
    }
    rho /= tr;
    return QuantumState::density(std::move(rho), std::move(dims));
}

}  // namespace

QuantumState phase_damping(const QuantumState& rho, const NoiseParams& np, int qubit) {
    check_register(rho, np, qubit, "phase_damping");
    const Matrix z = lift(pauli_z(), qubit, np.n_qubits);
    const double p = np.p_pd(qubit);
    const Matrix r = rho.as_density();
    return renormalized_density((1.0 - p) * r + p * z * r * z, rho.dims());
}

std::array<Matrix, 4> gad_kraus(double p, double eta) {
    if (!(p >= 0.0 && p <= 1.0) || !(eta >= 0.0 && eta < 1.0 + 1e-15)) {
        throw std::invalid_argument("gad_kraus: need p in [0,1] and eta in [0,1)");
    }
    const double sp = std::sqrt(p), sq = std::sqrt(1.0 - p);
    const double keep = std::sqrt(1.0 - eta), flip = std::sqrt(eta);
    Matrix e1 = Matrix::Zero(2, 2), e2 = Matrix::Zero(2, 2);
    Matrix e3 = Matrix::Zero(2, 2), e4 = Matrix::Zero(2, 2);
    e1(0, 0) = sp;
    e1(1, 1) = sp * keep;
    e2(1, 0) = sq * flip;
    e3(0, 0) = sq * keep;
    e3(1, 1) = sq;
    e4(0, 1) = sp * flip;
    std::array<Matrix, 4> ops{e1, e2, e3, e4};
    Matrix completeness = Matrix::Zero(2, 2);
    for (const Matrix& e : ops) completeness += e.adjoint() * e;
    if (max_abs(completeness - identity(2)) > 1e-12) {
        throw numeric_error("gad_kraus: Kraus set is not complete");
    }
    return ops;
}

QuantumState generalized_amplitude_damping(const QuantumState& rho, const NoiseParams& np,
                                           int qubit) {
    check_register(rho, np, qubit, "generalized_amplitude_damping");
    const auto ops = gad_kraus(np.p_gad, np.eta(qubit));
    const Matrix r = rho.as_density();
    Matrix out = Matrix::Zero(r.rows(), r.cols());
    for (const Matrix& e : ops) {
        const Matrix lifted = lift(e, qubit, np.n_qubits);
        out += lifted * r * lifted.adjoint();
    }
    return renormalized_density(std::move(out), rho.dims());
}

QuantumState apply_all_qubits(const QuantumState& rho, const NoiseParams& np) {
    check_register(rho, np, 0, "apply_all_qubits");
    QuantumState out = rho.is_pure()
                           ? QuantumState::density(rho.as_density(), rho.dims())
                           : rho;
    for (int q = 0; q < np.n_qubits; ++q) {
        if (np.order == NoiseParams::Order::PdThenGad) {
            out = phase_damping(out, np, q);
            out = generalized_amplitude_damping(out, np, q);
        } else {
            out = generalized_amplitude_damping(out, np, q);
            out = phase_damping(out, np, q);
        }
    }
    return out;
}

QuantumState pseudo_pure(double epsilon, int n_qubits) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("pseudo_pure: epsilon must be in [0, 1]");
    }
    if (n_qubits < 1 || n_qubits > 16) {
        throw std::invalid_argument("pseudo_pure: n_qubits must be in [1, 16]");
    }
    const Index dim = Index{1} << n_qubits;
    Matrix rho = (1.0 - epsilon) / static_cast<double>(dim) * identity(dim);
    rho(0, 0) += epsilon;
    return QuantumState::density(std::move(rho), {dim});
}

}  // namespace sptsim::noise
