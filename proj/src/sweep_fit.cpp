// sweep_fit.cpp — sweeps, scaling fits, critical-point detection

#include "sptsim/sweep_fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "sptsim/groundstate.hpp"
#include "sptsim/observables.hpp"
#include "sptsim/parallel.hpp"
#include "sptsim/version.hpp"

namespace sptsim::sweep {

using nlohmann::json;

AxisSpec AxisSpec::linspace(std::string name, double lo, double hi, int count) {
    if (count < 1) throw std::invalid_argument("AxisSpec: count must be >= 1");
    AxisSpec ax;
    ax.name = std::move(name);
    ax.points.resize(count);
    if (count == 1) {
        ax.points[0] = lo;
    } else {
        for (int i = 0; i < count; ++i) {
            ax.points[i] = lo + (hi - lo) * i / (count - 1);
        }
    }
    return ax;
}

Index MPolicy::m_for(double ratio) const {
    if (kind == Kind::Fixed) return fixed_m;
    const double scaled = scale * std::sqrt(std::max(ratio, 0.0));
    return std::max<Index>(floor_m, static_cast<Index>(std::lround(scaled)));
}

std::string MPolicy::describe() const {
    std::ostringstream os;
    if (kind == Kind::Fixed) {
        os << "fixed(" << fixed_m << ")";
    } else {
        os << "max(" << floor_m << ", round(" << scale << "*sqrt(ratio)))";
    }
    return os.str();
}

namespace {

void apply_axis(ModelParams& p, const std::string& name, double value) {
    if (name == "lambda_tilde") p.lambda_tilde = value;
    else if (name == "ratio") p.ratio = value;
    else if (name == "xi_over_omega") p.xi_over_omega = value;
    else if (name == "alpha") p.alpha = value;
    else throw std::invalid_argument("sweep axis: unknown parameter '" + name + "'");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string opt_fmt(const std::optional<double>& v) {
    if (!v || !std::isfinite(*v)) return "";
    return fmt(*v);
}

SweepRecord evaluate_point(const ModelParams& tmpl, const AxisSpec& a1, const AxisSpec& a2,
                           size_t i1, size_t i2, const MPolicy& policy) {
    SweepRecord rec;
    rec.axis1 = a1.points[i1];
    rec.axis2 = a2.points[i2];
    ModelParams p = tmpl;
    apply_axis(p, a1.name, rec.axis1);
    apply_axis(p, a2.name, rec.axis2);
    rec.m_used = policy.m_for(p.ratio);
    p.boson_dim = rec.m_used;
    try {
        rec.report = analytic::classify_phase(p);
        if (rec.report.phase == analytic::Phase::UP) return rec;  // marker only
        const GroundStateResult gs =
            exact_ground_state(build_hs(p), {p.boson_dim, 2});
        rec.phi_numeric = measured_order_parameter(p, gs.state);
        rec.gap = gs.gap;
        rec.entropy = entanglement_entropy(gs.state);
    } catch (const std::exception& ex) {
        rec.error = ex.what();
        rec.phi_numeric.reset();
        rec.gap.reset();
        rec.entropy.reset();
    }
    return rec;
}

}  // namespace

SweepGrid run_sweep(const ModelParams& tmpl, const AxisSpec& axis1, const AxisSpec& axis2,
                    const MPolicy& policy) {
    if (axis1.points.empty() || axis2.points.empty()) {
        throw std::invalid_argument("run_sweep: axes must be nonempty");
    }
    SweepGrid grid;
    grid.axis1 = axis1;
    grid.axis2 = axis2;
    grid.template_params = tmpl;
    grid.policy = policy;
    const size_t n1 = axis1.points.size(), n2 = axis2.points.size();
    grid.records.resize(n1 * n2);
    parallel_for(static_cast<long>(n1 * n2), [&](long idx) {
        const size_t i1 = static_cast<size_t>(idx) / n2;
        const size_t i2 = static_cast<size_t>(idx) % n2;
        grid.records[idx] = evaluate_point(tmpl, axis1, axis2, i1, i2, policy);
    });
    return grid;
}

void SweepGrid::write_csv(std::ostream& os) const {
    os << "axis1,axis2,phase,phi_analytic,phi_numeric,gap,entropy,r_tilde,"
          "lambda_tilde_s,m_used\n";
    for (const SweepRecord& r : records) {
        os << fmt(r.axis1) << ',' << fmt(r.axis2) << ','
           << analytic::phase_name(r.report.phase) << ',' << opt_fmt(r.report.phi) << ','
           << opt_fmt(r.phi_numeric) << ',' << opt_fmt(r.gap) << ',' << opt_fmt(r.entropy)
           << ',' << opt_fmt(r.report.r_tilde) << ',' << opt_fmt(r.report.lambda_tilde_s)
           << ',' << r.m_used << '\n';
    }
}

json SweepGrid::to_json() const {
    json j;
    j["axis1"] = {{"name", axis1.name}, {"points", axis1.points}};
    j["axis2"] = {{"name", axis2.name}, {"points", axis2.points}};
    json recs = json::array();
    for (const SweepRecord& r : records) {
        json jr;
        jr["axis1"] = r.axis1;
        jr["axis2"] = r.axis2;
        jr["phase"] = analytic::phase_name(r.report.phase);
        jr["phi_analytic"] = analytic::divergent_or(r.report.phi);
        jr["phi_numeric"] = analytic::divergent_or(r.phi_numeric);
        jr["gap"] = analytic::divergent_or(r.gap);
        jr["entropy"] = analytic::divergent_or(r.entropy);
        jr["r_tilde"] = analytic::divergent_or(r.report.r_tilde);
        jr["lambda_tilde_s"] = analytic::divergent_or(r.report.lambda_tilde_s);
        jr["m_used"] = r.m_used;
        if (!r.error.empty()) jr["error"] = r.error;
        recs.push_back(std::move(jr));
    }
    j["records"] = std::move(recs);
    j["metadata"] = {{"template", template_params.to_json()},
                     {"m_policy", policy.describe()},
                     {"version", kVersion}};
    return j;
}

json ScalingFit::to_json() const {
    return json{{"ratios", ratios},
                {"phi_at_critical", phi_at_critical},
                {"gamma", gamma},
                {"stderr", stderr_gamma},
                {"r_squared", r_squared},
                {"warnings", warnings}};
}

ScalingFit fit_scaling_exponent(const ModelParams& tmpl, const std::vector<double>& ratios,
                                const MPolicy& policy) {
    if (ratios.size() < 4) {
        throw std::invalid_argument("fit_scaling_exponent: need at least 4 ratios");
    }
    for (size_t i = 1; i < ratios.size(); ++i) {
        if (!(ratios[i] > ratios[i - 1])) {
            throw std::invalid_argument("fit_scaling_exponent: ratios must increase strictly");
        }
    }
    const auto lc = analytic::critical_coupling(tmpl.alpha, tmpl.xi_over_omega);
    if (!lc) {
        throw std::domain_error(
            "fit_scaling_exponent: no critical coupling exists for these alpha, xi/omega");
    }

    ScalingFit fit;
    std::vector<double> phis(ratios.size());
    parallel_for(static_cast<long>(ratios.size()), [&](long i) {
        ModelParams p = tmpl;
        p.ratio = ratios[i];
        p.lambda_tilde = *lc;
        p.boson_dim = policy.m_for(p.ratio);
        const GroundStateResult gs = exact_ground_state(build_hs(p), {p.boson_dim, 2});
        phis[i] = measured_order_parameter(p, gs.state);
    });
    for (size_t i = 0; i < ratios.size(); ++i) {
        if (phis[i] > 0.0) {
            fit.ratios.push_back(ratios[i]);
            fit.phi_at_critical.push_back(phis[i]);
        } else {
            fit.warnings.push_back("dropped ratio " + fmt(ratios[i]) +
                                   ": nonpositive phi " + fmt(phis[i]));
        }
    }
    const size_t n = fit.ratios.size();
    if (n < 4) {
        throw numeric_error("fit_scaling_exponent: fewer than 4 usable points survive");
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double x = std::log(fit.ratios[i]), y = std::log(fit.phi_at_critical[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    fit.gamma = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.gamma * sx) / n;

    double ss_res = 0, ss_tot = 0, sxx_c = 0;
    const double y_mean = sy / n, x_mean = sx / n;
    for (size_t i = 0; i < n; ++i) {
        const double x = std::log(fit.ratios[i]), y = std::log(fit.phi_at_critical[i]);
        const double resid = y - (fit.gamma * x + intercept);
        ss_res += resid * resid;
        ss_tot += (y - y_mean) * (y - y_mean);
        sxx_c += (x - x_mean) * (x - x_mean);
    }
    fit.r_squared = (ss_tot > 0) ? 1.0 - ss_res / ss_tot : 1.0;
    fit.stderr_gamma = (n > 2) ? std::sqrt(ss_res / (n - 2) / sxx_c) : 0.0;
    return fit;
}

std::optional<CriticalPoint> detect_critical_point(const std::vector<double>& lambdas,
                                                   const std::vector<double>& phis) {
    const size_t n = lambdas.size();
    if (n < 20 || phis.size() != n) {
        throw std::invalid_argument("detect_critical_point: need >= 20 slice points");
    }
    for (size_t i = 1; i < n; ++i) {
        if (!(lambdas[i] > lambdas[i - 1])) {
            throw std::invalid_argument("detect_critical_point: lambdas must increase");
        }
    }
    const auto [lo, hi] = std::minmax_element(phis.begin(), phis.end());
    if (*hi - *lo < 0.05) return std::nullopt;  // flat slice, no transition

    std::vector<double> d1(n);
    for (size_t i = 1; i + 1 < n; ++i) {
        d1[i] = (phis[i + 1] - phis[i - 1]) / (lambdas[i + 1] - lambdas[i - 1]);
    }
    d1[0] = (phis[1] - phis[0]) / (lambdas[1] - lambdas[0]);
    d1[n - 1] = (phis[n - 1] - phis[n - 2]) / (lambdas[n - 1] - lambdas[n - 2]);

    double d1_max = 0.0;
    for (double v : d1) d1_max = std::max(d1_max, std::abs(v));
    const double eps = 1e-3 * d1_max;

    // The transition is the corner where the slope collapses: score the
    // relative jump of the derivative across each interior point.
    size_t best = 1;
    double best_score = -1.0;
    for (size_t i = 1; i + 1 < n; ++i) {
        const double jump = std::abs(d1[i + 1] - d1[i - 1]);
        const double score = jump / (eps + std::abs(d1[i + 1]) + std::abs(d1[i - 1]));
        if (score > best_score) {
            best_score = score;
            best = i;
        }
    }
    CriticalPoint cp;
    cp.lambda_tilde = lambdas[best];
    cp.uncertainty = (lambdas[n - 1] - lambdas[0]) / (n - 1);
    return cp;
}

}  // namespace sptsim::sweep
