// main.cpp — spt_sim command-line front end: dispatches the simulation and
// analysis commands and writes CSV/JSON artifacts with manifests.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sptsim/analytic.hpp"
#include "sptsim/groundstate.hpp"
#include "sptsim/model.hpp"
#include "sptsim/noise.hpp"
#include "sptsim/observables.hpp"
#include "sptsim/sweep_fit.hpp"
#include "sptsim/version.hpp"

namespace {

using nlohmann::json;
using namespace sptsim;

// ----------------------------- config handling ------------------------------

const std::vector<std::string> kCommands = {"phase",  "ground-state", "adiabatic",
                                            "zpf",    "wigner",       "sweep",
                                            "scaling", "noise-study"};

json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j = json::parse(in);
    // a manifest written by this tool wraps the config it ran with
    if (j.is_object() && j.contains("config") && j.contains("tool")) {
        j = j.at("config");
    }
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    return j;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
}

struct RunConfig {
    std::string command;
    ModelParams params;
    json options;  // command-specific
    std::string output;  // empty = stdout
    std::string format = "json";

    static RunConfig from_json(const json& j);
    json to_json() const;
};

RunConfig RunConfig::from_json(const json& j) {
    reject_unknown_keys(j, {"command", "params", "options", "output", "format"}, "config");
    RunConfig cfg;
    cfg.command = j.value("command", "");
    if (j.contains("params")) cfg.params = ModelParams::from_json(j.at("params"));
    cfg.options = j.value("options", json::object());
    cfg.output = j.value("output", "");
    cfg.format = j.value("format", "json");
    return cfg;
}

json RunConfig::to_json() const {
    return json{{"command", command},
                {"params", params.to_json()},
                {"options", options},
                {"output", output},
                {"format", format}};
}

std::vector<std::string> validate_config(const RunConfig& cfg) {
    std::vector<std::string> diags;
    bool known = false;
    for (const auto& c : kCommands) known = known || c == cfg.command;
    if (!known) diags.push_back("command must be one of phase, ground-state, adiabatic, zpf, "
                                "wigner, sweep, scaling, noise-study");
    for (const std::string& d : cfg.params.diagnostics()) diags.push_back("params: " + d);
    if (cfg.format != "json" && cfg.format != "csv") {
        diags.push_back("format must be json or csv");
    }
    if (cfg.params.diagnostics().empty()) {
        const SqueezedFrame f = squeezed_frame(cfg.params);
        if (!f.stable) {
            diags.push_back("warning: parameter point is UNSTABLE (UP): "
                            "1 + alpha*lt^2 - 4 xi/omega <= 0");
        }
    }
    return diags;
}

// ------------------------------ artifact output ------------------------------

struct Artifact {
    json as_json;
    std::string as_csv;
};

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_single_row(const json& j) {
    std::ostringstream head, row;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        if (!first) {
            head << ',';
            row << ',';
        }
        first = false;
        head << key;
        if (value.is_number()) row << fmt_num(value.get<double>());
        else if (value.is_string()) row << value.get<std::string>();
        else if (value.is_boolean()) row << (value.get<bool>() ? "true" : "false");
        else if (value.is_null()) row << "";
        else row << value.dump();
    }
    return head.str() + "\n" + row.str() + "\n";
}

// ------------------------------- commands -----------------------------------

Artifact run_phase(const RunConfig& cfg) {
    const analytic::PhaseReport rep = analytic::classify_phase(cfg.params);
    Artifact art;
    art.as_json = rep.to_json();
    art.as_csv = csv_single_row(art.as_json);
    return art;
}

Artifact run_ground_state(const RunConfig& cfg) {
    reject_unknown_keys(cfg.options, {}, "ground-state options");
    const ModelParams& p = cfg.params;
    const analytic::PhaseReport rep = analytic::classify_phase(p);
    json j;
    j["phase"] = analytic::phase_name(rep.phase);
    j["phi_analytic"] = analytic::divergent_or(rep.phi);
    if (rep.phase != analytic::Phase::UP) {
        const GroundStateResult gs = exact_ground_state(build_hs(p), {p.boson_dim, 2});
        j["energy"] = gs.energy;
        j["gap"] = gs.gap;
        j["near_degenerate"] = gs.near_degenerate;
        j["phi_numeric"] = measured_order_parameter(p, gs.state);
        j["entropy"] = entanglement_entropy(gs.state);
    }
    Artifact art;
    art.as_json = j;
    art.as_csv = csv_single_row(j);
    return art;
}

Artifact run_adiabatic(const RunConfig& cfg) {
    reject_unknown_keys(cfg.options, {"steps", "dt", "ramp"}, "adiabatic options");
    AdiabaticSchedule sched;
    sched.steps = cfg.options.value("steps", 200);
    sched.dt = cfg.options.value("dt", 0.5);
    const std::string ramp = cfg.options.value("ramp", "linear");
    if (ramp == "linear") sched.ramp = AdiabaticSchedule::Ramp::Linear;
    else if (ramp == "smoothstep") sched.ramp = AdiabaticSchedule::Ramp::Smoothstep;
    else throw std::invalid_argument("adiabatic: ramp must be linear or smoothstep");

    const PreparationResult res = adiabatic_prepare(cfg.params, sched);
    Artifact art;
    json j;
    j["final_fidelity"] = res.final_fidelity;
    j["s"] = res.s_values;
    j["energy"] = res.energy_trace;
    j["fidelity"] = res.fidelity_trace;
    art.as_json = j;
    std::ostringstream csv;
    res.write_csv(csv);
    art.as_csv = csv.str();
    return art;
}

Artifact run_zpf(const RunConfig& cfg) {
    reject_unknown_keys(cfg.options, {"variant"}, "zpf options");
    const std::string variant = cfg.options.value("variant", "numeric");
    const ModelParams& p = cfg.params;
    json j;
    if (variant == "numeric") {
        // ground state of omega a†a - xi (a + a†)^2 on the boson-only space
        const Matrix a = annihilation_matrix(p.boson_dim);
        const Matrix x2 = a + Matrix(a.adjoint());
        const Matrix h = p.omega * Matrix(a.adjoint() * a) - p.xi() * Matrix(x2 * x2);
        const GroundStateResult gs = exact_ground_state(h, {p.boson_dim});
        j["zpf"] = zpf(gs.state);
        const double arg = 1.0 - 4.0 * p.xi_over_omega;
        j["closed_form"] = arg > 0 ? json(0.5 * std::pow(arg, -0.25)) : json("divergent");
    } else {
        analytic::ZpfVariant v;
        if (variant == "rabi") v = analytic::ZpfVariant::Rabi;
        else if (variant == "with-a2") v = analytic::ZpfVariant::WithA2;
        else if (variant == "with-a2-as") v = analytic::ZpfVariant::WithA2AndAs;
        else throw std::invalid_argument("zpf: variant must be numeric, rabi, with-a2 or with-a2-as");
        j["zpf"] = analytic::divergent_or(analytic::zpf_formula(p, v));
    }
    Artifact art;
    art.as_json = j;
    art.as_csv = csv_single_row(j);
    return art;
}

Artifact run_wigner(const RunConfig& cfg) {
    reject_unknown_keys(cfg.options,
                        {"state", "include_lsp", "grid_range", "x_range", "p_range", "points"},
                        "wigner options");
    const ModelParams& p = cfg.params;
    const std::string which = cfg.options.value("state", "cat-odd");
    const bool include_lsp = cfg.options.value("include_lsp", false);

    QuantumState boson = [&]() {
        if (which == "vacuum") {
            Vector v = Vector::Zero(p.boson_dim);
            v(0) = 1.0;
            return QuantumState::pure(std::move(v), {p.boson_dim});
        }
        if (which == "np") {
            const QuantumState full = analytic::ground_state_np(p, p.boson_dim);
            return QuantumState::pure(partial_trace_pure_boson(full), {p.boson_dim});
        }
        analytic::SpBranch branch;
        if (which == "sp-plus") branch = analytic::SpBranch::Plus;
        else if (which == "sp-minus") branch = analytic::SpBranch::Minus;
        else if (which == "cat-even") branch = analytic::SpBranch::CatEven;
        else if (which == "cat-odd") branch = analytic::SpBranch::CatOdd;
        else throw std::invalid_argument("wigner: state must be vacuum, np, sp-plus, sp-minus, "
                                         "cat-even or cat-odd");
        QuantumState st = analytic::ground_state_sp(p, p.boson_dim, branch, include_lsp);
        if (st.dims().size() == 2) {
            return QuantumState::pure(partial_trace_pure_boson(st), {p.boson_dim});
        }
        return st;
    }();

    GridSpec grid = GridSpec::for_state(boson);
    if (cfg.options.contains("grid_range")) {
        const double r = cfg.options.at("grid_range").get<double>();
        grid = GridSpec::symmetric(r, r, cfg.options.value("points", 101));
    }
    auto parse_range = [&](const char* key, double& lo, double& hi) {
        if (!cfg.options.contains(key)) return;
        const auto arr = cfg.options.at(key).get<std::vector<double>>();
        if (arr.size() != 2) throw std::invalid_argument("wigner: ranges need [lo, hi]");
        lo = arr[0];
        hi = arr[1];
    };
    parse_range("x_range", grid.x_min, grid.x_max);
    parse_range("p_range", grid.p_min, grid.p_max);
    if (cfg.options.contains("points")) {
        grid.x_count = grid.p_count = cfg.options.at("points").get<int>();
    }

    const WignerGrid w = wigner(boson, grid);
    Artifact art;
    art.as_json = w.to_json();
    art.as_json["integral"] = w.integral();
    std::ostringstream csv;
    w.write_csv(csv);
    art.as_csv = csv.str();
    return art;
}

Artifact run_sweep_cmd(const RunConfig& cfg) {
    reject_unknown_keys(cfg.options, {"axis1", "axis2", "m_fixed", "m_scale", "m_floor"},
                        "sweep options");
    auto parse_axis = [&](const char* key) {
        if (!cfg.options.contains(key)) {
            throw std::invalid_argument(std::string("sweep: missing ") + key);
        }
        const json& a = cfg.options.at(key);
        return sweep::AxisSpec::linspace(a.at("name").get<std::string>(),
                                         a.at("lo").get<double>(), a.at("hi").get<double>(),
                                         a.at("count").get<int>());
    };
    sweep::MPolicy policy;
    if (cfg.options.contains("m_fixed")) {
        policy.kind = sweep::MPolicy::Kind::Fixed;
        policy.fixed_m = cfg.options.at("m_fixed").get<Index>();
    } else {
        policy.scale = cfg.options.value("m_scale", 8.0);
        policy.floor_m = cfg.options.value("m_floor", Index{32});
    }
    const sweep::SweepGrid grid =
        run_sweep(cfg.params, parse_axis("axis1"), parse_axis("axis2"), policy);
    Artifact art;
    art.as_json = grid.to_json();
    std::ostringstream csv;
    grid.write_csv(csv);
    art.as_csv = csv.str();
    return art;
}

Artifact run_scaling(const RunConfig& cfg) {
    reject_unknown_keys(cfg.options, {"ratios", "m_fixed", "m_scale", "m_floor"},
                        "scaling options");
    if (!cfg.options.contains("ratios")) {
        throw std::invalid_argument("scaling: missing ratios");
    }
    const auto ratios = cfg.options.at("ratios").get<std::vector<double>>();
    sweep::MPolicy policy;
    if (cfg.options.contains("m_fixed")) {
        policy.kind = sweep::MPolicy::Kind::Fixed;
        policy.fixed_m = cfg.options.at("m_fixed").get<Index>();
    } else {
        policy.scale = cfg.options.value("m_scale", 8.0);
        policy.floor_m = cfg.options.value("m_floor", Index{64});
    }
    const sweep::ScalingFit fit = sweep::fit_scaling_exponent(cfg.params, ratios, policy);
    Artifact art;
    art.as_json = fit.to_json();
    std::ostringstream csv;
    csv << "ratio,phi_at_critical,gamma,stderr,r_squared\n";
    for (size_t i = 0; i < fit.ratios.size(); ++i) {
        csv << fmt_num(fit.ratios[i]) << ',' << fmt_num(fit.phi_at_critical[i]) << ','
            << fmt_num(fit.gamma) << ',' << fmt_num(fit.stderr_gamma) << ','
            << fmt_num(fit.r_squared) << '\n';
    }
    art.as_csv = csv.str();
    return art;
}

Artifact run_noise_study(const RunConfig& cfg) {
    reject_unknown_keys(cfg.options, {"noise"}, "noise-study options");
    if (!cfg.options.contains("noise")) {
        throw std::invalid_argument("noise-study: missing noise parameters");
    }
    const noise::NoiseParams np = noise::NoiseParams::from_json(cfg.options.at("noise"));
    const ModelParams& p = cfg.params;
    if (p.boson_dim != (Index{1} << (np.n_qubits - 1))) {
        throw std::invalid_argument(
            "noise-study: boson_dim must equal 2^(n_qubits-1) so the register covers "
            "the mapped boson and the two-level system");
    }
    const GroundStateResult gs = exact_ground_state(build_hs(p), {p.boson_dim, 2});
    const double phi_clean = measured_order_parameter(p, gs.state);

    QuantumState rho = QuantumState::density(gs.state.as_density(), {Index{1} << np.n_qubits});
    rho = noise::apply_all_qubits(rho, np);
    const QuantumState noisy =
        QuantumState::density(rho.density_matrix(), {p.boson_dim, 2});
    const double phi_noisy = measured_order_parameter(p, noisy);
    const double fidelity = expectation(noisy, gs.state.as_density()).real();

    json j;
    j["phi_noiseless"] = phi_clean;
    j["phi_noisy"] = phi_noisy;
    j["fidelity"] = fidelity;
    j["channel_order"] = np.order == noise::NoiseParams::Order::PdThenGad ? "pd_then_gad"
                                                                          : "gad_then_pd";
    j["noise"] = np.to_json();
    Artifact art;
    art.as_json = j;
    json flat = j;
    flat.erase("noise");
    art.as_csv = csv_single_row(flat);
    return art;
}

// boson reduction of a pure product-branch state (used by run_wigner above)
Vector partial_trace_pure_boson(const QuantumState& full);

Artifact dispatch(const RunConfig& cfg) {
    if (cfg.command == "phase") return run_phase(cfg);
    if (cfg.command == "ground-state") return run_ground_state(cfg);
    if (cfg.command == "adiabatic") return run_adiabatic(cfg);
    if (cfg.command == "zpf") return run_zpf(cfg);
    if (cfg.command == "wigner") return run_wigner(cfg);
    if (cfg.command == "sweep") return run_sweep_cmd(cfg);
    if (cfg.command == "scaling") return run_scaling(cfg);
    if (cfg.command == "noise-study") return run_noise_study(cfg);
    throw std::invalid_argument("unknown command: " + cfg.command);
}

// ------------------------------ file writing --------------------------------

void atomic_write(const std::filesystem::path& path, const std::string& data) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << data;
    }
    std::filesystem::rename(tmp, path);
}

int run_and_emit(const RunConfig& cfg) {
    const auto diags = validate_config(cfg);
    for (const std::string& d : diags) {
        if (d.rfind("warning:", 0) == 0) std::cerr << d << "\n";
    }
    for (const std::string& d : diags) {
        if (d.rfind("warning:", 0) != 0) {
            std::cerr << "error: " << d << "\n";
            return 1;
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    const Artifact art = dispatch(cfg);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string payload =
        cfg.format == "csv" ? art.as_csv : art.as_json.dump(2) + "\n";
    if (cfg.output.empty()) {
        std::cout << payload;
        return 0;
    }
    const std::filesystem::path out(cfg.output);
    atomic_write(out, payload);

    json manifest;
    manifest["tool"] = "spt_sim";
    manifest["version"] = kVersion;
    manifest["config"] = cfg.to_json();
    manifest["artifact"] = out.filename().string();
    manifest["wall_time_s"] = wall;
    atomic_write(out.string() + ".manifest.json", manifest.dump(2) + "\n");
    return 0;
}

Vector partial_trace_pure_boson(const QuantumState& full) {
    // product branches factorize exactly; peel the boson factor off the
    // dominant spin component
    const Index m = full.dims()[0];
    const Vector& psi = full.vector();
    Vector b0(m), b1(m);
    for (Index n = 0; n < m; ++n) {
        b0(n) = psi(2 * n);
        b1(n) = psi(2 * n + 1);
    }
    Vector boson = (b0.norm() >= b1.norm()) ? b0 : b1;
    const double norm = boson.norm();
    if (norm < 0.999999) {
        throw std::invalid_argument(
            "wigner: state is boson-spin entangled; use a cat branch instead");
    }
    return boson / norm;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum Rabi model with A^2 and antisqueezing terms: phase diagrams, "
                 "ground states, adiabatic preparation, Wigner functions, noise channels"};
    app.require_subcommand(0, 1);
    app.set_version_flag("--version", sptsim::kVersion);

    std::string config_path, output, format;
    ModelParams flag_params;
    struct Presence {
        bool omega = false, ratio = false, lambda = false, alpha = false, xi = false,
             dim = false;
    };

    auto add_common = [&](CLI::App* cmd, auto& opts) {
        cmd->add_option("--config", config_path, "RunConfig JSON file (flags override it)");
        cmd->add_option("--output", output, "artifact path (default: stdout)");
        cmd->add_option("--format", format, "json or csv");
        opts.omega = cmd->add_option("--omega", flag_params.omega, "boson frequency");
        opts.ratio = cmd->add_option("--ratio", flag_params.ratio, "Omega/omega");
        opts.lambda =
            cmd->add_option("--lambda-tilde", flag_params.lambda_tilde, "scaled coupling");
        opts.alpha = cmd->add_option("--alpha", flag_params.alpha, "A^2 strength");
        opts.xi = cmd->add_option("--xi-over-omega", flag_params.xi_over_omega,
                                  "antisqueezing strength / omega");
        opts.dim = cmd->add_option("--boson-dim", flag_params.boson_dim, "Fock truncation");
    };

    struct CommonOpts {
        CLI::Option *omega = nullptr, *ratio = nullptr, *lambda = nullptr, *alpha = nullptr,
                    *xi = nullptr, *dim = nullptr;
    };
    std::map<std::string, CommonOpts> opts;
    std::map<std::string, json> extra;

    // phase
    CommonOpts o_phase;
    auto* c_phase = app.add_subcommand("phase", "closed-form phase classification");
    add_common(c_phase, o_phase);
    opts["phase"] = o_phase;

    // ground-state
    CommonOpts o_gs;
    auto* c_gs = app.add_subcommand("ground-state", "exact ground state of H_s");
    add_common(c_gs, o_gs);
    opts["ground-state"] = o_gs;

    // adiabatic
    CommonOpts o_ad;
    auto* c_ad = app.add_subcommand("adiabatic", "adiabatic preparation protocol");
    add_common(c_ad, o_ad);
    int ad_steps = 200;
    double ad_dt = 0.5;
    std::string ad_ramp = "linear";
    c_ad->add_option("--steps", ad_steps, "schedule steps L");
    c_ad->add_option("--dt", ad_dt, "step duration (1/omega units)");
    c_ad->add_option("--ramp", ad_ramp, "linear or smoothstep");
    opts["adiabatic"] = o_ad;

    // zpf
    CommonOpts o_zpf;
    auto* c_zpf = app.add_subcommand("zpf", "zero-point fluctuation of the antisqueezed "
                                            "oscillator ground state");
    add_common(c_zpf, o_zpf);
    std::string zpf_variant = "numeric";
    c_zpf->add_option("--variant", zpf_variant, "numeric, rabi, with-a2, with-a2-as");
    opts["zpf"] = o_zpf;

    // wigner
    CommonOpts o_wig;
    auto* c_wig = app.add_subcommand("wigner", "Wigner function of an analytic ground state");
    add_common(c_wig, o_wig);
    std::string wig_state = "cat-odd";
    bool wig_lsp = false;
    double wig_range = 0.0;
    std::vector<double> wig_x, wig_p;
    int wig_points = 0;
    c_wig->add_option("--state", wig_state, "vacuum, np, sp-plus, sp-minus, cat-even, cat-odd");
    c_wig->add_flag("--include-lsp", wig_lsp, "include the secondary squeezing");
    c_wig->add_option("--grid-range", wig_range, "symmetric grid half-width");
    c_wig->add_option("--x-range", wig_x, "x grid: lo hi")->expected(2);
    c_wig->add_option("--p-range", wig_p, "p grid: lo hi")->expected(2);
    c_wig->add_option("--points", wig_points, "grid points per axis");
    opts["wigner"] = o_wig;

    // sweep
    CommonOpts o_sw;
    auto* c_sw = app.add_subcommand("sweep", "2-D parameter sweep");
    add_common(c_sw, o_sw);
    std::vector<std::string> sw_axes(2);
    long sw_m_fixed = 0;
    double sw_m_scale = 8.0;
    long sw_m_floor = 32;
    c_sw->add_option("--axis1", sw_axes[0], "name:lo:hi:count");
    c_sw->add_option("--axis2", sw_axes[1], "name:lo:hi:count");
    c_sw->add_option("--m-fixed", sw_m_fixed, "fixed truncation");
    c_sw->add_option("--m-scale", sw_m_scale, "M = max(floor, scale*sqrt(ratio))");
    c_sw->add_option("--m-floor", sw_m_floor, "truncation floor");
    opts["sweep"] = o_sw;

    // scaling
    CommonOpts o_sc;
    auto* c_sc = app.add_subcommand("scaling", "finite-frequency scaling exponent at the "
                                               "critical coupling");
    add_common(c_sc, o_sc);
    std::vector<double> sc_ratios;
    long sc_m_fixed = 0;
    double sc_m_scale = 8.0;
    long sc_m_floor = 64;
    c_sc->add_option("--ratios", sc_ratios, "Omega/omega values")->delimiter(',');
    c_sc->add_option("--m-fixed", sc_m_fixed, "fixed truncation");
    c_sc->add_option("--m-scale", sc_m_scale, "M = max(floor, scale*sqrt(ratio))");
    c_sc->add_option("--m-floor", sc_m_floor, "truncation floor");
    opts["scaling"] = o_sc;

    // noise-study
    CommonOpts o_ns;
    auto* c_ns = app.add_subcommand("noise-study", "channel-corrupted order parameter");
    add_common(c_ns, o_ns);
    std::string ns_noise_path;
    c_ns->add_option("--noise", ns_noise_path, "NoiseParams JSON file");
    opts["noise-study"] = o_ns;

    // validate
    CommonOpts o_val;
    auto* c_val = app.add_subcommand("validate", "report all config diagnostics");
    add_common(c_val, o_val);
    std::string val_command = "phase";
    c_val->add_option("--command", val_command, "command the config is meant for");
    opts["validate"] = o_val;

    CLI11_PARSE(app, argc, argv);

    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return 0;
    }
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    try {
        json cfg_json = config_path.empty() ? json::object() : load_config_file(config_path);
        if (!cfg_json.contains("command")) cfg_json["command"] = name;
        if (!cfg_json.contains("params")) cfg_json["params"] = json::object();
        if (!cfg_json.contains("options")) cfg_json["options"] = json::object();

        // flags override the config file
        const CommonOpts& co = opts[name];
        auto overlay = [&](CLI::Option* opt, const char* key, const json& v) {
            if (opt && opt->count() > 0) cfg_json["params"][key] = v;
        };
        overlay(co.omega, "omega", flag_params.omega);
        overlay(co.ratio, "ratio", flag_params.ratio);
        overlay(co.lambda, "lambda_tilde", flag_params.lambda_tilde);
        overlay(co.alpha, "alpha", flag_params.alpha);
        overlay(co.xi, "xi_over_omega", flag_params.xi_over_omega);
        overlay(co.dim, "boson_dim", flag_params.boson_dim);
        if (!output.empty()) cfg_json["output"] = output;
        if (!format.empty()) cfg_json["format"] = format;

        json& op = cfg_json["options"];
        if (name == "adiabatic") {
            if (c_ad->count("--steps")) op["steps"] = ad_steps;
            if (c_ad->count("--dt")) op["dt"] = ad_dt;
            if (c_ad->count("--ramp")) op["ramp"] = ad_ramp;
        } else if (name == "zpf") {
            if (c_zpf->count("--variant")) op["variant"] = zpf_variant;
        } else if (name == "wigner") {
            if (c_wig->count("--state")) op["state"] = wig_state;
            if (wig_lsp) op["include_lsp"] = true;
            if (c_wig->count("--grid-range")) op["grid_range"] = wig_range;
            if (c_wig->count("--x-range")) op["x_range"] = wig_x;
            if (c_wig->count("--p-range")) op["p_range"] = wig_p;
            if (c_wig->count("--points")) op["points"] = wig_points;
        } else if (name == "sweep") {
            auto parse_axis_flag = [&](const std::string& s, const char* key) {
                if (s.empty()) return;
                std::istringstream is(s);
                std::string nm, lo, hi, cnt;
                std::getline(is, nm, ':');
                std::getline(is, lo, ':');
                std::getline(is, hi, ':');
                std::getline(is, cnt, ':');
                op[key] = {{"name", nm},
                           {"lo", std::stod(lo)},
                           {"hi", std::stod(hi)},
                           {"count", std::stoi(cnt)}};
            };
            parse_axis_flag(sw_axes[0], "axis1");
            parse_axis_flag(sw_axes[1], "axis2");
            if (c_sw->count("--m-fixed")) op["m_fixed"] = sw_m_fixed;
            if (c_sw->count("--m-scale")) op["m_scale"] = sw_m_scale;
            if (c_sw->count("--m-floor")) op["m_floor"] = sw_m_floor;
        } else if (name == "scaling") {
            if (!sc_ratios.empty()) op["ratios"] = sc_ratios;
            if (c_sc->count("--m-fixed")) op["m_fixed"] = sc_m_fixed;
            if (c_sc->count("--m-scale")) op["m_scale"] = sc_m_scale;
            if (c_sc->count("--m-floor")) op["m_floor"] = sc_m_floor;
        } else if (name == "noise-study") {
            if (!ns_noise_path.empty()) {
                std::ifstream in(ns_noise_path);
                if (!in) throw std::invalid_argument("cannot open noise file: " + ns_noise_path);
                op["noise"] = json::parse(in);
            }
        }

        if (name == "validate") {
            cfg_json["command"] = val_command;
            RunConfig cfg = RunConfig::from_json(cfg_json);
            const auto diags = validate_config(cfg);
            for (const std::string& d : diags) std::cout << d << "\n";
            if (diags.empty()) std::cout << "ok\n";
            for (const std::string& d : diags) {
                if (d.rfind("warning:", 0) != 0) return 1;
            }
            return 0;
        }

        return run_and_emit(RunConfig::from_json(cfg_json));
    } catch (const sptsim::numeric_error& ex) {
        std::cerr << "numeric error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::range_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "numeric error: " << ex.what() << "\n";
        return 2;
    }
}
