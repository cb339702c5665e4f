#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "catgate/circuit.hpp"
#include "catgate/csv.hpp"
#include "catgate/errors.hpp"
#include "catgate/gates.hpp"
#include "catgate/noise.hpp"
#include "catgate/parallel.hpp"
#include "catgate/scenarios.hpp"
#include "catgate/selftest.hpp"
#include "catgate/squeeze.hpp"

#ifndef CATGATE_BUILD_ID
#define CATGATE_BUILD_ID "unknown"
#endif

using namespace catgate;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNumeric = 2, kConfig = 3 };

std::string dashed(std::string key) {
    for (char& ch : key)
        if (ch == '_') ch = '-';
    return key;
}

// A frequency flag pair --<name>-mhz / --<name>-rad; giving both is an error.
struct Freq {
    std::optional<double> mhz;
    std::optional<double> rad;
    double fallback_mhz;

    double value() const { return rad ? *rad : two_pi_mhz(mhz ? *mhz : fallback_mhz); }
};

void add_freq(CLI::App* app, const std::string& name, Freq& f, const std::string& what) {
    auto* a = app->add_option("--" + name + "-mhz", f.mhz, what + " in 2pi x MHz (default " +
                                                              std::to_string(f.fallback_mhz) + ")");
    auto* b = app->add_option("--" + name + "-rad", f.rad, what + " in rad/us");
    a->excludes(b);
}

struct ModelFlags {
    Freq kerr{std::nullopt, std::nullopt, 12.5};
    double alpha = 0.5;
    double xi = 0.0;
    double t_us = 1.0;
    int dim = 30;
    std::size_t steps = 20000;

    GateModel model() const {
        GateModel m;
        m.kerr = kerr.value();
        m.alpha = alpha;
        m.xi = xi;
        m.total_time = t_us;
        m.dim = dim;
        m.steps = steps;
        m.validate();
        return m;
    }
};

void add_model(CLI::App* app, ModelFlags& f) {
    add_freq(app, "k", f.kerr, "Kerr nonlinearity K");
    app->add_option("--alpha", f.alpha, "cat amplitude |alpha|")->capture_default_str();
    app->add_option("--xi", f.xi, "two-photon drive phase xi")->capture_default_str();
    app->add_option("--t-us", f.t_us, "gate time T in us")->capture_default_str();
    app->add_option("--dim", f.dim, "Fock truncation (per mode)")->capture_default_str();
    app->add_option("--steps", f.steps, "propagation grid steps")->capture_default_str();
}

struct PathFlags {
    std::string name = "not";
    std::optional<double> mu0, eta0, theta;

    PathSpec path(double total_time) const {
        const int given = int(mu0.has_value()) + int(eta0.has_value()) + int(theta.has_value());
        if (given == 3) return make_path(*mu0, *eta0, *theta, total_time);
        if (given != 0) throw ConfigError("--mu0, --eta0 and --theta must be given together");
        return gate_path(parse_gate_name(name), total_time);
    }
};

void add_path(CLI::App* app, PathFlags& f, const std::string& default_gate, bool custom) {
    f.name = default_gate;
    auto* n = app->add_option("--name", f.name, "gate: not, hadamard, phase")->capture_default_str();
    if (!custom) return;
    auto* a = app->add_option("--mu0", f.mu0, "custom path mu0 (with --eta0, --theta)");
    auto* b = app->add_option("--eta0", f.eta0, "custom path eta0");
    auto* c = app->add_option("--theta", f.theta, "custom rotation angle");
    for (auto* o : {a, b, c}) o->excludes(n);
}

void print_kv(const std::string& k, double v) { std::printf("%-24s %.10g\n", (k + ":").c_str(), v); }

// ------------------------------------------------------------ subcommands

int cmd_synth(const ModelFlags& mf, const PathFlags& pf, bool two_qubit, const std::string& out) {
    const GateModel m = mf.model();
    const PathSpec spec = pf.path(m.total_time);
    const CatFrame frame = model_frame(m);
    const double gap = kerr_cat_gap(m.kerr, m.eps2(), m.xi, frame.c_plus.space).gap;
    print_kv("lambda", spec.lambda_amp);
    print_kv("geometric_phase_plus", phases(spec).geometric_plus);
    print_kv("gap_rad_per_us", gap);
    if (two_qubit) {
        const TwoQubitPulseSchedule s = two_qubit_controls(spec, frame, m.steps);
        print_kv("gap_margin", gap_margin(s, gap));
        if (!out.empty()) write_schedule_csv(out, s);
    } else {
        const PulseSchedule s = single_qubit_controls(spec, frame, m.steps);
        print_kv("gap_margin", gap_margin(s, gap));
        print_kv("invariant_residual", verify_invariant(spec, s, frame, m.kerr, m.eps2()));
        if (!out.empty()) write_schedule_csv(out, s);
    }
    return kOk;
}

int cmd_gate(const ModelFlags& mf, const PathFlags& pf, const std::string& out) {
    const GateModel m = mf.model();
    const GateRun run = simulate_single_gate(m, pf.path(m.total_time));
    std::printf("F_avg = %.6f\n", run.fidelity);
    print_kv("lambda", run.spec.lambda_amp);
    print_kv("gap_ratio", run.gap_ratio);
    print_kv("superposition_fid_plus", superposition_fidelity(run.block, +1));
    print_kv("superposition_fid_minus", superposition_fidelity(run.block, -1));
    if (!out.empty()) {
        const CatFrame frame = model_frame(m);
        const Matrix basis = frame.basis();
        Table t{{"t", "fidelity", "in_plus_p_plus", "in_plus_p_minus", "in_plus_leakage", "in_minus_p_plus",
                 "in_minus_p_minus", "in_minus_leakage"},
                {}};
        for (std::size_t k = 0; k < run.sim.times.size(); ++k) {
            const Matrix& x = run.sim.states[k];
            const Populations a = populations(Vector(x.col(0)), frame);
            const Populations b = populations(Vector(x.col(1)), frame);
            const Matrix block = basis.adjoint() * x;
            t.rows.push_back({run.sim.times[k], average_gate_fidelity_block(block, run.target), a.p_plus, a.p_minus,
                              a.leakage, b.p_plus, b.p_minus, b.leakage});
        }
        write_csv(out, t);
    }
    return kOk;
}

int cmd_cnot(const ModelFlags& mf, const std::string& out) {
    const GateModel m = mf.model();
    const CnotRun run = simulate_cnot(m, gate_path(GateName::Not, m.total_time));
    std::printf("F_avg = %.6f\n", run.fidelity);
    print_kv("gap_ratio", run.gap_ratio);
    if (!out.empty()) {
        Table t{{"input", "output", "population"}, {}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t.rows.push_back({double(i), double(j), std::norm(run.block(j, i))});
        write_csv(out, t);
    }
    return kOk;
}

struct NoiseFlags {
    std::string kind = "awgn";
    double snr_db = 10.0;
    std::array<double, 3> delta{0.0, 0.0, 0.0};
    std::size_t runs = 50;
    std::uint64_t seed = 1;
};

int cmd_noise(const ModelFlags& mf, const PathFlags& pf, const NoiseFlags& nf, unsigned threads,
              const std::string& out) {
    const GateModel m = mf.model();
    const PathSpec spec = pf.path(m.total_time);
    NoiseConfig cfg;
    cfg.kind = parse_noise_kind(nf.kind);
    cfg.delta = nf.delta;
    cfg.snr_db = nf.snr_db;
    cfg.seed = nf.seed;
    cfg.validate();
    const std::size_t runs = cfg.kind == NoiseKind::Systematic ? 1 : nf.runs;
    const EnsembleStats st = monte_carlo(m, spec, cfg, runs, threads);
    print_kv("mean_infidelity", st.mean);
    print_kv("min_infidelity", st.min);
    print_kv("max_infidelity", st.max);
    print_kv("runs", double(st.count));
    print_kv("failed", double(st.failed));
    if (!out.empty()) {
        Table t{{"run", "seed", "infidelity", "ok"}, {}};
        for (const RunRecord& r : st.runs) t.rows.push_back({double(r.index), double(r.seed), r.infidelity, r.ok ? 1.0 : 0.0});
        write_csv(out, t);
    }
    return kOk;
}

int cmd_decoherence(const ModelFlags& mf, const PathFlags& pf, double kappa, double kappa_phi, int sign,
                    const std::string& out) {
    const GateModel m = mf.model();
    const DecoherenceRun r = simulate_decoherence(m, pf.path(m.total_time), kappa, kappa_phi, sign);
    print_kv("fidelity", r.fidelity);
    print_kv("infidelity", 1.0 - r.fidelity);
    print_kv("subspace_population", r.subspace_population);
    if (!out.empty()) {
        const CatFrame frame = model_frame(m);
        Table t{{"t", "p_plus", "p_minus", "leakage", "photon_number"}, {}};
        for (std::size_t k = 0; k < r.sim.times.size(); ++k) {
            const DensityMatrix rho{frame.c_plus.space, r.sim.states[k]};
            const Populations p = populations(rho, frame);
            t.rows.push_back({r.sim.times[k], p.p_plus, p.p_minus, p.leakage, mean_photon_number(rho)});
        }
        write_csv(out, t);
    }
    return kOk;
}

int cmd_squeeze(const ModelFlags& mf, const PathFlags& pf, double r, const Freq& eps2, double kappa,
                double kappa_phi, int sign, std::size_t steps, const std::string& out) {
    const GateModel m = mf.model();
    SqueezeSpec sq;
    sq.r = r;
    sq.eps2 = eps2.value();
    PipelineOptions po;
    po.input_sign = sign;
    po.squeeze_steps = steps;
    const PipelineResult res = amplified_gate_pipeline(m, pf.path(m.total_time), sq, kappa, kappa_phi, po);
    print_kv("fidelity", res.fidelity);
    print_kv("final_photon_number", res.final_photon_number);
    print_kv("squeeze_time_ns", 1e3 * sq.duration());
    print_kv("max_tail_weight", res.max_tail_weight);
    if (!out.empty()) {
        Table t{{"t", "photon_number"}, {}};
        for (std::size_t k = 0; k < res.times.size(); ++k) t.rows.push_back({res.times[k], res.photon_number[k]});
        write_csv(out, t);
    }
    return kOk;
}

struct CircuitFlags {
    Freq e_c{std::nullopt, std::nullopt, 25.0};
    Freq e_j{std::nullopt, std::nullopt, 180000.0};
    Freq e_j_mod{std::nullopt, std::nullopt, 750.0};
    Freq omega_p{std::nullopt, std::nullopt, 6000.0};
    int n_squids = 1;
    double phi_p = 0.0, c_p = 0.0, v_p = 0.0, charge = 1.0;
    double d_ec = 0.0, d_ej = 0.0, d_vp = 0.0;
    std::string config;
};

// A config file may carry a "circuit" object with the same keys as the flags.
void apply_circuit_config(CircuitFlags& f, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("circuit") || !j["circuit"].is_object())
        throw ConfigError(path + ": expected a \"circuit\" object");
    const std::map<std::string, Freq*> freqs{{"e_c", &f.e_c}, {"e_j", &f.e_j}, {"e_j_mod", &f.e_j_mod},
                                             {"omega_p", &f.omega_p}};
    const std::map<std::string, double*> plain{{"phi_p", &f.phi_p}, {"c_p", &f.c_p}, {"v_p", &f.v_p},
                                               {"charge", &f.charge}, {"d_ec", &f.d_ec}, {"d_ej", &f.d_ej},
                                               {"d_vp", &f.d_vp}};
    for (const auto& [key, value] : j["circuit"].items()) {
        if (key == "n_squids") {
            if (!value.is_number_integer()) throw ConfigError("n_squids must be an integer");
            f.n_squids = value.get<int>();
            continue;
        }
        if (!value.is_number()) throw ConfigError("circuit." + key + " must be a number");
        const double v = value.get<double>();
        if (auto it = plain.find(key); it != plain.end()) {
            *it->second = v;
            continue;
        }
        bool matched = false;
        for (const auto& [base, fr] : freqs) {
            if (key == base + "_mhz" || key == base + "_rad") {
                if ((key.back() == 'z' ? fr->rad : fr->mhz).has_value())
                    throw ConfigError("circuit." + base + " given in both unit forms");
                (key.back() == 'z' ? fr->mhz : fr->rad) = v;
                matched = true;
            }
        }
        if (!matched) throw ConfigError("unknown circuit key '" + key + "'");
    }
}

int cmd_circuit(CircuitFlags f) {
    if (!f.config.empty()) apply_circuit_config(f, f.config);
    CircuitParams cp;
    cp.e_c = f.e_c.value();
    cp.e_j = f.e_j.value();
    cp.e_j_mod = f.e_j_mod.value();
    cp.omega_p = f.omega_p.value();
    cp.n_squids = f.n_squids;
    cp.phi_p = f.phi_p;
    cp.c_p = f.c_p;
    cp.v_p = f.v_p;
    cp.charge = f.charge;
    const EffectiveParams ep = effective_params(cp);
    const ErrorPropagation e = error_propagation(cp, f.d_ec, f.d_ej, f.d_vp);
    const json j = {{"omega_c_rad", ep.omega_c},       {"kerr_rad", ep.kerr},
                    {"kerr_mhz", to_mhz(ep.kerr)},     {"eps2_rad", ep.eps2},
                    {"eps2_mhz", to_mhz(ep.eps2)},     {"chi_rad", ep.chi},
                    {"eps_re_rad", ep.eps.real()},     {"eps_im_rad", ep.eps.imag()},
                    {"alpha", ep.alpha()},             {"d_omega_c", e.d_omega_c},
                    {"d_kerr", e.d_kerr},              {"d_eps2", e.d_eps2},
                    {"d_eps", e.d_eps},                {"d_alpha", e.d_alpha},
                    {"d_alpha_resolved", e.d_alpha_resolved},
                    {"coherent_infidelity", coherent_infidelity(e.d_alpha)}};
    std::cout << j.dump(2) << '\n';
    return kOk;
}

// Parses a scenario flag value against the default's JSON type.
json parse_value(const std::string& key, const json& def, const std::string& text) {
    auto number = [&](const std::string& s, bool integer) -> json {
        std::size_t pos = 0;
        try {
            if (integer) {
                const long long v = std::stoll(s, &pos);
                if (pos == s.size()) return v;
            } else {
                const double v = std::stod(s, &pos);
                if (pos == s.size()) return v;
            }
        } catch (const std::exception&) {
        }
        throw ConfigError("--" + dashed(key) + ": cannot parse '" + s + "'");
    };
    if (def.is_array()) {
        json arr = json::array();
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) arr.push_back(number(item, false));
        return arr;
    }
    if (def.is_number_integer()) return number(text, true);
    if (def.is_number()) return number(text, false);
    return text;
}

int cmd_scenario(const std::string& id, const std::string& config, const std::string& out,
                 const std::map<std::string, std::string>& flags, unsigned threads) {
    ScenarioConfig cfg;
    if (!config.empty()) cfg = load_scenario_config(config);
    if (!id.empty()) {
        if (!config.empty() && id != cfg.id) throw ConfigError("--id disagrees with the config file scenario");
        cfg.id = id;
    }
    if (cfg.id.empty()) throw ConfigError("scenario needs --id or --config");
    if (!out.empty()) cfg.output_dir = out;
    const json keys = all_scenario_keys();
    for (const auto& [key, text] : flags) {
        std::string base = key;
        if (!keys.contains(key)) base = key.substr(0, key.size() - 4) + "_mhz";  // a _rad twin
        cfg.params[key] = parse_value(key, keys.at(base), text);
    }
    RunOptions ro;
    ro.threads = threads;
    const ScenarioResult r = run_scenario(cfg, ro);
    std::printf("%s: %s = %.10g\n", r.id.c_str(), r.summary["headline"]["name"].get<std::string>().c_str(),
                r.summary["headline"]["value"].get<double>());
    for (const ManifestEntry& e : r.files) std::printf("  %s  %s\n", e.sha256.c_str(), e.file.c_str());
    std::printf("manifest: %s\n", (r.output_dir / "manifest.json").string().c_str());
    return kOk;
}

int cmd_selftest() {
    bool ok = true;
    for (const PropertyCheck& c : property_checks()) {
        const CheckResult r = c.run();
        std::printf("%s  %-56s %.3e < %.1e\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.value, r.tolerance);
        std::fflush(stdout);
        ok = ok && r.pass;
    }
    return ok ? kOk : kNumeric;
}

int run(int argc, char** argv) {
    CLI::App app{"Geometric gates on Kerr-cat qubits: synthesis, propagation, scoring and scenarios"};
    app.set_version_flag("--version", std::string("catgate ") + CATGATE_BUILD_ID);
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker cap for ensembles and grids (0: all cores)");
    app.fallthrough();

    ModelFlags mf;
    PathFlags pf;
    std::string out;
    bool two_qubit = false;

    auto* synth = app.add_subcommand("synth", "synthesize control pulses for a gate path");
    add_model(synth, mf);
    add_path(synth, pf, "not", true);
    synth->add_flag("--two-qubit", two_qubit, "controlled-gate controls (chi12, chi1, chi2, lambda, eps~)");
    synth->add_option("--out", out, "schedule CSV");

    auto* gate = app.add_subcommand("gate", "simulate a single-qubit gate and print its average fidelity");
    add_model(gate, mf);
    add_path(gate, pf, "not", true);
    gate->add_option("--out", out, "trajectory CSV (fidelity and populations)");

    ModelFlags cnot_mf;
    cnot_mf.dim = 15;
    auto* cnot = app.add_subcommand("cnot", "simulate the two-mode controlled-NOT gate");
    add_model(cnot, cnot_mf);
    cnot->add_option("--out", out, "population CSV");

    NoiseFlags nf;
    PathFlags noise_pf;
    auto* noise = app.add_subcommand("noise", "systematic errors or AWGN / 1/f noise ensembles");
    add_model(noise, mf);
    add_path(noise, noise_pf, "hadamard", false);
    noise->add_option("--kind", nf.kind, "systematic, awgn or pink")->capture_default_str();
    noise->add_option("--snr-db", nf.snr_db, "signal-to-noise ratio in dB")->capture_default_str();
    noise->add_option("--delta-x", nf.delta[0], "fractional error on Omega_x");
    noise->add_option("--delta-y", nf.delta[1], "fractional error on Omega_y");
    noise->add_option("--delta-z", nf.delta[2], "fractional error on Omega_z");
    noise->add_option("--runs", nf.runs, "ensemble size")->capture_default_str();
    noise->add_option("--seed", nf.seed, "base seed")->capture_default_str();
    noise->add_option("--out", out, "per-run CSV");

    double kappa = 0.05, kappa_phi = 0.05;
    int sign = 1;
    PathFlags dec_pf;
    auto* dec = app.add_subcommand("decoherence", "gate under photon loss and dephasing");
    add_model(dec, mf);
    add_path(dec, dec_pf, "hadamard", false);
    dec->add_option("--kappa-per-us", kappa, "photon-loss rate, 1/us")->capture_default_str();
    dec->add_option("--kappa-phi-per-us", kappa_phi, "dephasing rate, 1/us")->capture_default_str();
    dec->add_option("--input-sign", sign, "input |C+> (1) or |C-> (-1)")->capture_default_str();
    dec->add_option("--out", out, "population trajectory CSV");

    ModelFlags sq_mf;
    sq_mf.dim = 100;
    PathFlags sq_pf;
    double r = 1.2;
    Freq sq_eps2{std::nullopt, std::nullopt, 3.125};
    std::size_t sq_steps = 500;
    auto* sq = app.add_subcommand("squeeze", "anti-squeeze, gate, squeeze under decoherence");
    add_model(sq, sq_mf);
    add_path(sq, sq_pf, "hadamard", false);
    sq->add_option("--squeeze-r", r, "squeezing parameter r")->capture_default_str();
    add_freq(sq, "squeeze-eps2", sq_eps2, "squeezing drive eps2");
    sq->add_option("--kappa-per-us", kappa, "photon-loss rate, 1/us")->capture_default_str();
    sq->add_option("--kappa-phi-per-us", kappa_phi, "dephasing rate, 1/us")->capture_default_str();
    sq->add_option("--input-sign", sign, "input |C~+> (1) or |C~-> (-1)")->capture_default_str();
    sq->add_option("--squeeze-steps", sq_steps, "grid steps per squeezing stage")->capture_default_str();
    sq->add_option("--out", out, "photon-number trace CSV");

    CircuitFlags cf;
    auto* circ = app.add_subcommand("circuit", "map SQUID-array parameters to gate-level parameters");
    add_freq(circ, "e-c", cf.e_c, "charging energy E_C");
    add_freq(circ, "e-j", cf.e_j, "Josephson energy E_J");
    add_freq(circ, "e-j-mod", cf.e_j_mod, "flux-modulation amplitude E~_J");
    add_freq(circ, "omega-p", cf.omega_p, "single-photon drive frequency");
    circ->add_option("--n-squids", cf.n_squids, "SQUIDs in the array")->capture_default_str();
    circ->add_option("--phi-p", cf.phi_p, "drive phase")->capture_default_str();
    circ->add_option("--c-p", cf.c_p, "gate capacitance")->capture_default_str();
    circ->add_option("--v-p", cf.v_p, "gate voltage amplitude")->capture_default_str();
    circ->add_option("--charge", cf.charge, "charge unit e in the caller's units")->capture_default_str();
    circ->add_option("--d-ec", cf.d_ec, "fractional error dE_C/E_C");
    circ->add_option("--d-ej", cf.d_ej, "fractional error dE_J/E_J");
    circ->add_option("--d-vp", cf.d_vp, "fractional error dV_p/V_p");
    circ->add_option("--config", cf.config, "JSON file with a \"circuit\" object");

    std::string sc_id, sc_config, sc_out;
    std::map<std::string, std::string> sc_flags;
    auto* sc = app.add_subcommand("scenario", "run a canned experiment and write CSV/JSON with a manifest");
    sc->add_option("--id", sc_id, "scenario id");
    sc->add_option("--config", sc_config, "JSON config {scenario, output_dir, params}");
    sc->add_option("--out", sc_out, "output directory");
    const json scenario_keys = all_scenario_keys();
    for (const auto& [key, def] : scenario_keys.items()) {
        const std::string k = key;
        auto* o = sc->add_option_function<std::string>(
            "--" + dashed(k), [&sc_flags, k](const std::string& v) { sc_flags[k] = v; }, "default " + def.dump());
        if (k.size() > 4 && k.compare(k.size() - 4, 4, "_mhz") == 0) {
            const std::string twin = k.substr(0, k.size() - 4) + "_rad";
            auto* t = sc->add_option_function<std::string>(
                "--" + dashed(twin), [&sc_flags, twin](const std::string& v) { sc_flags[twin] = v; },
                "same in rad/us");
            o->excludes(t);
        }
    }
    std::string ids;
    for (const std::string& s : scenario_ids()) ids += (ids.empty() ? "" : ", ") + s;
    sc->footer("Scenario ids: " + ids + ". Flags not used by the chosen scenario are rejected.");

    app.add_subcommand("selftest", "run the invariant/property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const unsigned nthreads = threads == 0 ? default_threads() : threads;
    const std::string module = app.get_subcommands().front()->get_name();
    try {
        if (module == "synth") return cmd_synth(mf, pf, two_qubit, out);
        if (module == "gate") return cmd_gate(mf, pf, out);
        if (module == "cnot") return cmd_cnot(cnot_mf, out);
        if (module == "noise") return cmd_noise(mf, noise_pf, nf, nthreads, out);
        if (module == "decoherence") return cmd_decoherence(mf, dec_pf, kappa, kappa_phi, sign, out);
        if (module == "squeeze") return cmd_squeeze(sq_mf, sq_pf, r, sq_eps2, kappa, kappa_phi, sign, sq_steps, out);
        if (module == "circuit") return cmd_circuit(cf);
        if (module == "scenario") return cmd_scenario(sc_id, sc_config, sc_out, sc_flags, nthreads);
        if (module == "selftest") return cmd_selftest();
    } catch (const NumericError& e) {
        std::cerr << "catgate " << module << ": numeric error: " << e.what() << '\n';
        return kNumeric;
    } catch (const Error& e) {
        std::cerr << "catgate " << module << ": configuration error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "catgate " << module << ": error: " << e.what() << '\n';
        return kNumeric;
    }
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
