// model.cpp — Hamiltonian builders and frame transformations

#include "sptsim/model.hpp"

#include <cmath>

namespace sptsim {

using nlohmann::json;

double ModelParams::coupling() const {
    return 0.5 * lambda_tilde * std::sqrt(spin_frequency() * omega);
}

std::vector<std::string> ModelParams::diagnostics() const {
    std::vector<std::string> out;
    if (!(omega > 0)) out.push_back("omega must be > 0");
    if (!(ratio > 0)) out.push_back("ratio must be > 0");
    if (!(lambda_tilde >= 0)) out.push_back("lambda_tilde must be >= 0");
    if (!(alpha >= 0)) out.push_back("alpha must be >= 0");
    if (!std::isfinite(xi_over_omega)) out.push_back("xi_over_omega must be finite");
    if (boson_dim < 2) out.push_back("boson_dim must be >= 2");
    if (boson_dim > kMaxDim / 2) out.push_back("boson_dim exceeds capacity");
    return out;
}

void ModelParams::validate() const {
    const auto problems = diagnostics();
    if (!problems.empty()) {
        throw std::invalid_argument("ModelParams: " + problems.front());
    }
}

json ModelParams::to_json() const {
    return json{{"omega", omega},
                {"ratio", ratio},
                {"lambda_tilde", lambda_tilde},
                {"alpha", alpha},
                {"xi_over_omega", xi_over_omega},
                {"boson_dim", boson_dim}};
}

ModelParams ModelParams::from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("ModelParams: expected a JSON object");
    static const char* known[] = {"omega", "ratio",         "lambda_tilde",
                                  "alpha", "xi_over_omega", "boson_dim"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::invalid_argument("ModelParams: unknown key '" + key + "'");
    }
    ModelParams p;
    p.omega = j.value("omega", p.omega);
    p.ratio = j.value("ratio", p.ratio);
    p.lambda_tilde = j.value("lambda_tilde", p.lambda_tilde);
    p.alpha = j.value("alpha", p.alpha);
    p.xi_over_omega = j.value("xi_over_omega", p.xi_over_omega);
    p.boson_dim = j.value("boson_dim", p.boson_dim);
    const auto problems = p.diagnostics();
    if (!problems.empty()) throw std::invalid_argument("ModelParams: " + problems.front());
    return p;
}

SqueezedFrame squeezed_frame(const ModelParams& p) {
    p.validate();
    const double arg = 1.0 + p.alpha * p.lambda_tilde * p.lambda_tilde - 4.0 * p.xi_over_omega;
    SqueezedFrame f;
    if (arg <= 0.0) return f;  // unstable, fields left at zero
    f.stable = true;
    f.r_tilde = 0.25 * std::log(arg);
    f.omega_s = p.omega * std::exp(2.0 * f.r_tilde);
    f.lambda_s = p.coupling() * std::exp(-f.r_tilde);
    f.c_s = 0.5 * p.omega * (std::exp(2.0 * f.r_tilde) - 1.0);
    f.lambda_tilde_s = p.lambda_tilde * std::exp(-2.0 * f.r_tilde);
    return f;
}

Matrix annihilation_matrix(Index m) {
    if (m < 1) throw std::invalid_argument("annihilation_matrix: m must be >= 1");
    Matrix a = Matrix::Zero(m, m);
    for (Index n = 1; n < m; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Matrix number_matrix(Index m) {
    Matrix n = Matrix::Zero(m, m);
    for (Index k = 0; k < m; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

Matrix quadrature_matrix(Index m) {
    const Matrix a = annihilation_matrix(m);
    return 0.5 * (a + a.adjoint());
}

Matrix build_rabi(const ModelParams& p) {
    p.validate();
    const Index m = p.boson_dim;
    const Matrix a = annihilation_matrix(m);
    return 0.5 * p.spin_frequency() * kron(identity(m), pauli_z()) +
           p.omega * kron(number_matrix(m), identity(2)) +
           p.coupling() * kron(a + a.adjoint(), pauli_x());
}

namespace {

Matrix field_square(Index m) {
    const Matrix a = annihilation_matrix(m);
    const Matrix x2 = a + a.adjoint();
    return x2 * x2;
}

}  // namespace

Matrix build_a2_term(const ModelParams& p) {
    p.validate();
    const double lam = p.coupling();
    const double coeff = p.alpha * lam * lam / p.spin_frequency();
    return coeff * kron(field_square(p.boson_dim), identity(2));
}

Matrix build_antisqueezing_term(const ModelParams& p) {
    p.validate();
    return -p.xi() * kron(field_square(p.boson_dim), identity(2));
}

Matrix build_total(const ModelParams& p) {
    return build_rabi(p) + build_a2_term(p) + build_antisqueezing_term(p);
}

Matrix build_hs(const ModelParams& p, bool include_constant) {
    const SqueezedFrame f = squeezed_frame(p);
    if (!f.stable) {
        throw std::domain_error("build_hs: squeezed frame is unstable (UP region)");
    }
    const Index m = p.boson_dim;
    const Matrix a = annihilation_matrix(m);
    Matrix h = 0.5 * p.spin_frequency() * kron(identity(m), pauli_z()) +
               f.omega_s * kron(number_matrix(m), identity(2)) +
               f.lambda_s * kron(a + a.adjoint(), pauli_x());
    if (include_constant) h += f.c_s * identity(2 * m);
    return h;
}

Matrix parity_operator(Index m) {
    Matrix boson = Matrix::Zero(m, m);
    for (Index n = 0; n < m; ++n) boson(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
    Matrix spin = Matrix::Zero(2, 2);
    spin(0, 0) = -1.0;  // exp(i pi) on the excited spin level
    spin(1, 1) = 1.0;
    return kron(boson, spin);
}

Matrix squeezing_operator(double r, Index m) {
    if (std::abs(r) > 3.0) {
        throw std::range_error(
            "squeezing_operator: |r| > 3 is outside the trustworthy truncation range; "
            "work in the squeezed frame instead");
    }
    const Matrix a = annihilation_matrix(m);
    const Matrix gen = 0.5 * r * (a * a - Matrix(a.adjoint() * a.adjoint()));
    // gen is skew-Hermitian; exp(gen) = exp(-i (i gen)) with i*gen Hermitian
    return expm_hermitian_generator(Complex(0, 1) * gen, 1.0);
}

Matrix displacement_operator(Complex beta, Index m) {
    if (std::norm(beta) > static_cast<double>(m) / 4.0) {
        throw std::range_error(
            "displacement_operator: |beta|^2 exceeds M/4; increase the truncation");
    }
    const Matrix a = annihilation_matrix(m);
    const Matrix gen = beta * a.adjoint() - std::conj(beta) * a;
    return expm_hermitian_generator(Complex(0, 1) * gen, 1.0);
}

Matrix build_nmr_hamiltonian(const std::vector<double>& shifts,
                             const std::vector<std::vector<double>>& couplings) {
    const int n = static_cast<int>(shifts.size());
    if (n < 1) throw std::invalid_argument("build_nmr_hamiltonian: need at least one spin");
    if (couplings.size() != shifts.size()) {
        throw std::invalid_argument("build_nmr_hamiltonian: couplings shape mismatch");
    }
    for (int i = 0; i < n; ++i) {
        if (couplings[i].size() != shifts.size()) {
            throw std::invalid_argument("build_nmr_hamiltonian: couplings shape mismatch");
        }
        if (couplings[i][i] != 0.0) {
            throw std::invalid_argument("build_nmr_hamiltonian: coupling diagonal must be zero");
        }
        for (int j = 0; j < n; ++j) {
            if (couplings[i][j] != couplings[j][i]) {
                throw std::invalid_argument("build_nmr_hamiltonian: couplings must be symmetric");
            }
        }
    }
    const Index dim = Index{1} << n;
    const double pi = std::acos(-1.0);
    Matrix h = Matrix::Zero(dim, dim);
    // diagonal in the computational basis: sigma_z of qubit i is +1 when bit
    // i-1 is 0, -1 when it is 1
    for (Index state = 0; state < dim; ++state) {
        double e = 0.0;
        for (int i = 0; i < n; ++i) {
            const double zi = ((state >> i) & 1) ? -1.0 : 1.0;
            e += pi * shifts[i] * zi;
            for (int j = i + 1; j < n; ++j) {
                const double zj = ((state >> j) & 1) ? -1.0 : 1.0;
                e += 0.5 * pi * couplings[i][j] * zi * zj;
            }
        }
        h(state, state) = e;
    }
    return h;
}

}  // namespace sptsim
