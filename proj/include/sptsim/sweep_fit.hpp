// sweep_fit.hpp — phase-diagram sweeps over parameter grids, critical-point
// detection on order-parameter slices, and the finite-frequency scaling fit.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sptsim/analytic.hpp"
#include "sptsim/model.hpp"

namespace sptsim::sweep {

struct AxisSpec {
    std::string name;  // a ModelParams field: lambda_tilde, ratio, xi_over_omega, alpha
    std::vector<double> points;

    static AxisSpec linspace(std::string name, double lo, double hi, int count);
};

// Boson truncation per grid point: fixed, or scale*sqrt(ratio) with a floor.
struct MPolicy {
    enum class Kind { Fixed, RatioScaled };
    Kind kind = Kind::RatioScaled;
    Index fixed_m = 64;
    double scale = 8.0;
    Index floor_m = 32;

    Index m_for(double ratio) const;
    std::string describe() const;
};

struct SweepRecord {
    double axis1 = 0.0;
    double axis2 = 0.0;
    analytic::PhaseReport report;          // analytic classification
    std::optional<double> phi_numeric;     // absent for UP or failed points
    std::optional<double> gap;
    std::optional<double> entropy;
    Index m_used = 0;
    std::string error;  // per-point failure, never aborts the grid
};

struct SweepGrid {
    AxisSpec axis1, axis2;
    std::vector<SweepRecord> records;  // index = i1 * axis2.points.size() + i2
    ModelParams template_params;
    MPolicy policy;

    void write_csv(std::ostream& os) const;
    nlohmann::json to_json() const;
};

// Deterministic grid of analytic + numeric observables. Numeric phi comes
// from measured_order_parameter on the exact H_s ground state.
SweepGrid run_sweep(const ModelParams& tmpl, const AxisSpec& axis1, const AxisSpec& axis2,
                    const MPolicy& policy);

struct ScalingFit {
    std::vector<double> ratios;
    std::vector<double> phi_at_critical;
    double gamma = 0.0;
    double stderr_gamma = 0.0;
    double r_squared = 0.0;
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
};

// Least-squares slope of ln(phi) vs ln(ratio) with the coupling pinned at the
// critical point lambda_c(alpha, xi/omega). Nonpositive phi points are dropped
// with a warning; fewer than 4 surviving points is an error.
ScalingFit fit_scaling_exponent(const ModelParams& tmpl, const std::vector<double>& ratios,
                                const MPolicy& policy);

struct CriticalPoint {
    double lambda_tilde = 0.0;
    double uncertainty = 0.0;  // grid resolution
};

// Kink locator on a 1-D slice of phi(lambda): the point where the derivative
// magnitude collapses (largest relative jump of the central-difference slope).
// Flat slices (phi range < 0.05) return nullopt.
std::optional<CriticalPoint> detect_critical_point(const std::vector<double>& lambdas,
                                                   const std::vector<double>& phis);

}  // namespace sptsim::sweep
