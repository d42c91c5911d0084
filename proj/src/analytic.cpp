// analytic.cpp — classical-oscillator-limit solutions

#include "sptsim/analytic.hpp"

#include <cmath>

namespace sptsim::analytic {

using nlohmann::json;

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::NP: return "NP";
        case Phase::SP: return "SP";
        case Phase::UP: return "UP";
    }
    return "?";
}

json divergent_or(std::optional<double> v) {
    if (!v) return nullptr;
    if (!std::isfinite(*v)) return "divergent";
    return *v;
}

json PhaseReport::to_json() const {
    json j;
    j["phase"] = phase_name(phase);
    j["r_tilde"] = divergent_or(r_tilde);
    j["lambda_tilde_s"] = divergent_or(lambda_tilde_s);
    j["omega_e"] = divergent_or(omega_e);
    j["e_g"] = divergent_or(e_g);
    j["e_g_divergent"] = divergent_or(e_g_divergent);
    j["beta_abs"] = divergent_or(beta_abs);
    j["theta"] = divergent_or(theta);
    j["phi"] = divergent_or(phi);
    j["l_np"] = divergent_or(l_np);
    j["l_sp"] = divergent_or(l_sp);
    return j;
}

PhaseReport classify_phase(const ModelParams& p) {
    const SqueezedFrame f = squeezed_frame(p);
    PhaseReport rep;
    if (!f.stable) {
        rep.phase = Phase::UP;
        return rep;
    }
    const double lts = f.lambda_tilde_s;
    rep.phase = (lts > 1.0) ? Phase::SP : Phase::NP;
    rep.r_tilde = f.r_tilde;
    rep.lambda_tilde_s = lts;
    rep.omega_e = excitation_energy(p) / p.omega;
    rep.phi = order_parameter_limit(p);
    const double ws_over_w = f.omega_s / p.omega;
    const double cs_over_w = f.c_s / p.omega;
    if (rep.phase == Phase::NP) {
        rep.e_g = 0.5 * ws_over_w * (std::sqrt(1.0 - lts * lts) - 1.0) + cs_over_w;
        rep.e_g_divergent = -0.5;
        rep.beta_abs = 0.0;
        rep.theta = 0.0;
        rep.l_np = 0.25 * std::log(1.0 - lts * lts);
    } else {
        const double lts2 = lts * lts;
        rep.e_g = 0.5 * ws_over_w * (std::sqrt(1.0 - 1.0 / (lts2 * lts2)) - 1.0) + cs_over_w;
        rep.e_g_divergent = -0.25 * (lts2 + 1.0 / lts2);
        const Displacement d = displacement_and_angle(p);
        rep.beta_abs = d.beta_abs;
        rep.theta = d.theta;
        rep.l_sp = 0.25 * std::log(1.0 - 1.0 / (lts2 * lts2));
    }
    return rep;
}

std::optional<double> critical_coupling(double alpha, double xi_over_omega) {
    if (alpha == 1.0) return std::nullopt;  // lt drops out of the critical condition
    const double radicand = (4.0 * xi_over_omega - 1.0) / (alpha - 1.0);
    if (radicand <= 0.0) return std::nullopt;
    return std::sqrt(radicand);
}

namespace {

SqueezedFrame stable_frame_or_throw(const ModelParams& p, const char* what) {
    const SqueezedFrame f = squeezed_frame(p);
    if (!f.stable) {
        throw std::domain_error(std::string(what) + ": parameter point is unstable (UP)");
    }
    return f;
}

}  // namespace

double excitation_energy(const ModelParams& p) {
    const SqueezedFrame f = stable_frame_or_throw(p, "excitation_energy");
    const double lts = f.lambda_tilde_s;
    if (lts == 1.0) return 0.0;
    if (lts < 1.0) return f.omega_s * std::sqrt(1.0 - lts * lts);
    return f.omega_s * std::sqrt(1.0 - 1.0 / (lts * lts * lts * lts));
}

double order_parameter_limit(const ModelParams& p, bool main_text_variant) {
    const SqueezedFrame f = stable_frame_or_throw(p, "order_parameter_limit");
    const double lts = f.lambda_tilde_s;
    if (lts <= 1.0) return 0.0;
    const double raw = 0.25 * (lts * lts - 1.0 / (lts * lts));
    if (main_text_variant) return raw;
    return std::exp(-4.0 * f.r_tilde) * raw;
}

Displacement displacement_and_angle(const ModelParams& p) {
    const SqueezedFrame f = stable_frame_or_throw(p, "displacement_and_angle");
    const double lts = f.lambda_tilde_s;
    if (lts < 1.0) {
        throw std::domain_error("displacement_and_angle: point is not in the SP phase");
    }
    Displacement d;
    const double lts2 = lts * lts;
    d.beta_abs = std::sqrt(p.spin_frequency() * (lts2 - 1.0 / lts2) / (4.0 * f.omega_s));
    d.theta = 0.5 * std::atan(-4.0 * f.lambda_s * d.beta_abs / p.spin_frequency());
    return d;
}

namespace {

// Weight of the top Fock levels; states leaking past the cutoff are rejected.
void require_tail_clean(const Vector& boson, const char* what) {
    const Index m = boson.size();
    const Index guard = std::max<Index>(2, m / 16);
    double tail = 0.0;
    for (Index n = m - guard; n < m; ++n) tail += std::norm(boson(n));
    if (tail > tol::truncation_loss) {
        throw std::range_error(std::string(what) +
                               ": truncation inadequate (top-level weight " +
                               std::to_string(tail) + "); increase boson_dim");
    }
}

Vector vacuum(Index m) {
    Vector v = Vector::Zero(m);
    v(0) = 1.0;
    return v;
}

// spin basis: index 0 = |up>, 1 = |down>
Vector spin_down_pm(double lts, int sign) {
    Vector s(2);
    const double inv2 = 1.0 / (lts * lts);
    s(0) = sign * std::sqrt(0.5 * (1.0 - inv2));
    s(1) = std::sqrt(0.5 * (1.0 + inv2));
    return s;
}

Vector kron_vec(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i)
        for (Index k = 0; k < b.size(); ++k) out(i * b.size() + k) = a(i) * b(k);
    return out;
}

}  // namespace

QuantumState ground_state_np(const ModelParams& p, Index m) {
    const SqueezedFrame f = stable_frame_or_throw(p, "ground_state_np");
    if (f.lambda_tilde_s > 1.0) {
        throw std::domain_error("ground_state_np: point is not in the NP phase");
    }
    const double l_np = 0.25 * std::log(1.0 - f.lambda_tilde_s * f.lambda_tilde_s);
    const double r_np = f.r_tilde + l_np;
    Vector boson = squeezing_operator(r_np, m) * vacuum(m);
    require_tail_clean(boson, "ground_state_np");
    Vector spin = Vector::Zero(2);
    spin(1) = 1.0;
    return QuantumState::pure(kron_vec(boson, spin), {m, 2});
}

QuantumState ground_state_sp(const ModelParams& p, Index m, SpBranch branch,
                             bool include_lsp) {
    const SqueezedFrame f = stable_frame_or_throw(p, "ground_state_sp");
    const double lts = f.lambda_tilde_s;
    if (lts <= 1.0) {
        throw std::domain_error("ground_state_sp: point is not in the SP phase");
    }
    const Displacement d = displacement_and_angle(p);

    Vector base = vacuum(m);
    if (include_lsp) {
        const double l_sp = 0.25 * std::log(1.0 - 1.0 / (lts * lts * lts * lts));
        base = squeezing_operator(l_sp, m) * base;
    }
    const Matrix S = squeezing_operator(f.r_tilde, m);
    const Matrix Dp = displacement_operator(d.beta_abs, m);
    const Vector plus = S * (Dp * base);
    const Vector minus = S * (Dp.adjoint() * base);  // D(-b) = D(b)† for real b

    switch (branch) {
        case SpBranch::Plus: {
            require_tail_clean(plus, "ground_state_sp");
            return QuantumState::pure(kron_vec(plus, spin_down_pm(lts, +1)), {m, 2});
        }
        case SpBranch::Minus: {
            require_tail_clean(minus, "ground_state_sp");
            return QuantumState::pure(kron_vec(minus, spin_down_pm(lts, -1)), {m, 2});
        }
        case SpBranch::CatEven:
        case SpBranch::CatOdd: {
            const double sign = (branch == SpBranch::CatEven) ? 1.0 : -1.0;
            Vector cat = plus + sign * minus;
            const double norm = cat.norm();
            if (norm < 1e-12) {
                throw numeric_error("ground_state_sp: cat branch has vanishing norm");
            }
            cat /= norm;
            require_tail_clean(cat, "ground_state_sp");
            return QuantumState::pure(std::move(cat), {m});
        }
    }
    throw std::invalid_argument("ground_state_sp: unknown branch");
}

std::optional<double> zpf_formula(const ModelParams& p, ZpfVariant variant) {
    p.validate();
    const double lt = p.lambda_tilde;
    switch (variant) {
        case ZpfVariant::Rabi: {
            if (lt == 1.0) return std::nullopt;
            if (lt < 1.0) return 0.5 * std::pow(1.0 - lt * lt, -0.25);
            return 0.5 * std::pow(1.0 - std::pow(lt, -4.0), -0.25);
        }
        case ZpfVariant::WithA2: {
            const double radicand = 1.0 + (p.alpha - 1.0) * lt * lt;
            if (radicand <= 0.0) return std::nullopt;
            return 0.5 * std::pow(radicand, -0.25);
        }
        case ZpfVariant::WithA2AndAs: {
            const SqueezedFrame f = stable_frame_or_throw(p, "zpf_formula");
            const double lts = f.lambda_tilde_s;
            const double prefactor = std::exp(-f.r_tilde);  // (1+a lt^2-4xi/w)^(-1/4)
            if (lts == 1.0) return std::nullopt;
            if (lts < 1.0) return 0.5 * std::pow(1.0 - lts * lts, -0.25) * prefactor;
            return 0.5 * std::pow(1.0 - std::pow(lts, -4.0), -0.25) * prefactor;
        }
    }
    throw std::invalid_argument("zpf_formula: unknown variant");
}

}  // namespace sptsim::analytic
