// observables.cpp — expectation values, Wigner functions, readout operators

#include "sptsim/observables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "sptsim/model.hpp"
#include "sptsim/parallel.hpp"

namespace sptsim {

using nlohmann::json;

Complex expectation(const QuantumState& state, const Matrix& op) {
    if (op.rows() != state.total_dim() || op.cols() != state.total_dim()) {
        throw std::invalid_argument("expectation: operator dimension mismatch");
    }
    if (state.is_pure()) {
        const Vector& psi = state.vector();
        return psi.dot(op * psi);
    }
    return (state.density_matrix() * op).trace();
}

namespace {

void require_boson_only(const QuantumState& state, const char* what) {
    if (state.dims().size() != 1) {
        throw std::invalid_argument(std::string(what) + ": expected a boson-only state");
    }
}

}  // namespace

QuadratureMoments quadrature_moments(const QuantumState& state) {
    require_boson_only(state, "quadrature_moments");
    const Index m = state.total_dim();
    const Matrix a = annihilation_matrix(m);
    const Matrix x = quadrature_matrix(m);

    QuadratureMoments out;
    out.a = expectation(state, a);
    out.a_sq = expectation(state, a * a);
    out.n = expectation(state, Matrix(a.adjoint() * a)).real();
    out.x = expectation(state, x).real();
    out.x_sq = expectation(state, Matrix(x * x)).real();

    // Decomposition route: subdiagonal sums of the density matrix weighted
    // sqrt(n+1) and sqrt((n+1)(n+2)), plus the (truncated) number terms.
    const Matrix rho = state.as_density();
    Complex a_dec = 0, a2_dec = 0;
    double n_dec = 0, n_rev = 0;
    for (Index k = 0; k < m; ++k) {
        n_dec += static_cast<double>(k) * rho(k, k).real();
        if (k + 1 < m) {
            a_dec += std::sqrt(static_cast<double>(k + 1)) * rho(k + 1, k);
            n_rev += static_cast<double>(k + 1) * rho(k, k).real();  // <a a†>, top defect
        }
        if (k + 2 < m) {
            a2_dec += std::sqrt(static_cast<double>((k + 1) * (k + 2))) * rho(k + 2, k);
        }
    }
    const double x_dec = a_dec.real();
    const double x2_dec = 0.25 * (2.0 * a2_dec.real() + n_dec + n_rev);

    if (std::abs(out.x - x_dec) > tol::moment_dual_route ||
        std::abs(out.x_sq - x2_dec) > tol::moment_dual_route) {
        throw numeric_error("quadrature_moments: direct and decomposition routes disagree");
    }
    return out;
}

double zpf(const QuantumState& state) {
    const QuadratureMoments mom = quadrature_moments(state);
    const double var = mom.x_sq - mom.x * mom.x;
    if (var < tol::variance_clamp) {
        throw numeric_error("zpf: negative quadrature variance");
    }
    return std::sqrt(std::max(var, 0.0));
}

double entanglement_entropy(const QuantumState& state) {
    if (!state.is_pure()) {
        throw std::domain_error("entanglement_entropy: state must be pure");
    }
    if (state.dims().size() != 2) {
        throw std::invalid_argument("entanglement_entropy: state must have two factors");
    }
    const Index d0 = state.dims()[0], d1 = state.dims()[1];
    // psi index i*d1 + k maps onto the column-major (d1 x d0) matrix A(k, i);
    // the singular values are those of the Schmidt decomposition.
    Eigen::Map<const Matrix> amp(state.vector().data(), d1, d0);
    Eigen::JacobiSVD<Matrix> svd(amp);
    double entropy = 0.0;
    for (Index k = 0; k < svd.singularValues().size(); ++k) {
        const double p = svd.singularValues()(k) * svd.singularValues()(k);
        if (p > 1e-15) entropy -= p * std::log2(p);
    }
    return entropy;
}

// ------------------------------- Wigner --------------------------------------

GridSpec GridSpec::symmetric(double x_range, double p_range, int count) {
    GridSpec g;
    g.x_min = -x_range;
    g.x_max = x_range;
    g.p_min = -p_range;
    g.p_max = p_range;
    g.x_count = g.p_count = count;
    return g;
}

GridSpec GridSpec::for_state(const QuantumState& state) {
    const QuadratureMoments mom = quadrature_moments(state);
    const double dev = std::sqrt(std::max(mom.x_sq - mom.x * mom.x, 0.0));
    const double range = 5.0 * std::max(dev, std::abs(mom.x) + 3.0 * dev);
    return symmetric(range, range, 101);
}

namespace detail {

Matrix displacement_matrix(Complex gamma, Index m) {
    Matrix d = Matrix::Zero(m, m);
    const double x = std::norm(gamma);
    // first column: <k|D|0> = gamma^k e^{-x/2} / sqrt(k!)
    d(0, 0) = std::exp(-0.5 * x);
    for (Index k = 1; k < m; ++k) {
        d(k, 0) = d(k - 1, 0) * gamma / std::sqrt(static_cast<double>(k));
    }
    // first row: <0|D|k> = (-conj(gamma))^k e^{-x/2} / sqrt(k!)
    for (Index k = 1; k < m; ++k) {
        d(0, k) = d(0, k - 1) * (-std::conj(gamma)) / std::sqrt(static_cast<double>(k));
    }
    // each diagonal by the normalized three-term recurrence; entries stay O(1)
    for (Index diag = -(m - 1); diag < m; ++diag) {
        const Index n0 = diag >= 0 ? diag : 0;
        const Index c0 = diag >= 0 ? 0 : -diag;
        for (Index step = 1; n0 + step < m && c0 + step < m; ++step) {
            const Index n = n0 + step, c = c0 + step;
            if (n == 0 || c == 0) continue;
            const double nn = static_cast<double>(n), cc = static_cast<double>(c);
            Complex val = ((nn + cc - 1.0 - x) / std::sqrt(nn * cc)) * d(n - 1, c - 1);
            if (n >= 2 && c >= 2) {
                val -= std::sqrt((nn - 1.0) * (cc - 1.0) / (nn * cc)) * d(n - 2, c - 2);
            }
            d(n, c) = val;
        }
    }
    return d;
}

}  // namespace detail

double WignerGrid::integral() const {
    return values.sum() * cell_area;
}

double WignerGrid::min_value() const {
    return values.minCoeff();
}

int WignerGrid::midline_sign_alternations() const {
    Index ix = 0;
    for (Index i = 1; i < static_cast<Index>(x_axis.size()); ++i) {
        if (std::abs(x_axis[i]) < std::abs(x_axis[ix])) ix = i;
    }
    int count = 0;
    for (Index j = 1; j < values.cols(); ++j) {
        if (values(ix, j - 1) * values(ix, j) < 0.0) ++count;
    }
    return count;
}

void WignerGrid::write_csv(std::ostream& os) const {
    os << "x,p,W\n";
    char buf[96];
    for (Index i = 0; i < values.rows(); ++i) {
        for (Index j = 0; j < values.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", x_axis[i], p_axis[j],
                          values(i, j));
            os << buf;
        }
    }
}

json WignerGrid::to_json() const {
    json j;
    j["x_axis"] = x_axis;
    j["p_axis"] = p_axis;
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(values.size()));
    for (Index i = 0; i < values.rows(); ++i)
        for (Index jj = 0; jj < values.cols(); ++jj) flat.push_back(values(i, jj));
    j["values"] = flat;
    j["cell_area"] = cell_area;
    j["warnings"] = warnings;
    return j;
}

WignerGrid wigner(const QuantumState& state, const GridSpec& grid) {
    require_boson_only(state, "wigner");
    if (grid.x_count < 2 || grid.p_count < 2) {
        throw std::invalid_argument("wigner: grid needs at least 2 points per axis");
    }
    const Index m = state.total_dim();

    // Spectral form: W = sum_i w_i W_pure(v_i); pure input is the single-term case.
    std::vector<std::pair<double, Vector>> parts;
    if (state.is_pure()) {
        parts.emplace_back(1.0, state.vector());
    } else {
        const EigResult eig = eig_hermitian(state.density_matrix());
        for (Index k = 0; k < eig.values.size(); ++k) {
            if (eig.values(k) > 1e-12) parts.emplace_back(eig.values(k), eig.vectors.col(k));
        }
    }

    WignerGrid out;
    out.x_axis.resize(grid.x_count);
    out.p_axis.resize(grid.p_count);
    const double dx = (grid.x_max - grid.x_min) / (grid.x_count - 1);
    const double dp = (grid.p_max - grid.p_min) / (grid.p_count - 1);
    for (int i = 0; i < grid.x_count; ++i) out.x_axis[i] = grid.x_min + i * dx;
    for (int j = 0; j < grid.p_count; ++j) out.p_axis[j] = grid.p_min + j * dp;
    out.cell_area = dx * dp;
    out.values.resize(grid.x_count, grid.p_count);

    const double norm = 2.0 / std::acos(-1.0);
    const Index guard = std::max<Index>(2, m / 16);
    std::atomic<bool> tail_warning{false};

    parallel_for(static_cast<long>(grid.x_count) * grid.p_count, [&](long idx) {
        const int i = static_cast<int>(idx / grid.p_count);
        const int j = static_cast<int>(idx % grid.p_count);
        const Complex alpha(out.x_axis[i], out.p_axis[j]);
        const Matrix d = detail::displacement_matrix(-alpha, m);
        double w = 0.0;
        const bool corner = (i == 0 || i == grid.x_count - 1) && (j == 0 || j == grid.p_count - 1);
        for (const auto& [weight, vec] : parts) {
            const Vector shifted = d * vec;
            double parity_sum = 0.0;
            for (Index n = 0; n < m; ++n) {
                const double pn = std::norm(shifted(n));
                parity_sum += (n % 2 == 0) ? pn : -pn;
            }
            w += weight * parity_sum;
            if (corner) {
                double tail = 0.0;
                for (Index n = m - guard; n < m; ++n) tail += std::norm(shifted(n));
                if (tail > 0.01) tail_warning = true;
            }
        }
        out.values(i, j) = norm * w;
    });

    if (tail_warning) {
        out.warnings.push_back(
            "displaced state reaches the Fock cutoff at the grid corners; "
            "increase boson_dim or shrink the grid");
    }
    return out;
}

std::pair<Matrix, Matrix> readout_operators(Index m) {
    if (m < 3) throw std::invalid_argument("readout_operators: need m >= 3");
    Matrix u1 = Matrix::Zero(m, m);
    for (Index n = 0; n + 1 < m; ++n) u1(n, n + 1) = 1.0;
    u1(m - 1, 0) = 1.0;

    Matrix u2 = Matrix::Zero(m, m);
    for (Index n = 0; n + 2 < m; ++n) u2(n, n + 2) = 1.0;
    u2(m - 2, 0) = 1.0;
    u2(m - 1, 1) = 1.0;

    if (max_abs(u2 - u1 * u1) > 0.0) {
        throw numeric_error("readout_operators: U2 formula disagrees with U1^2");
    }
    return {u1, u2};
}

}  // namespace sptsim
