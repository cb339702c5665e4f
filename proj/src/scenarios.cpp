#include "catgate/scenarios.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "catgate/circuit.hpp"
#include "catgate/csv.hpp"
#include "catgate/errors.hpp"
#include "catgate/gates.hpp"
#include "catgate/noise.hpp"
#include "catgate/parallel.hpp"
#include "catgate/squeeze.hpp"

namespace catgate {

using nlohmann::json;

namespace {

json model_defaults(int dim) {
    return {{"k_mhz", 12.5}, {"alpha", 0.5}, {"xi", 0.0}, {"t_us", 1.0}, {"dim", dim}, {"steps", 20000}};
}

json merged(json base, const json& extra) {
    base.update(extra);
    return base;
}

const std::map<std::string, json>& defaults_table() {
    static const std::map<std::string, json> table = [] {
        std::map<std::string, json> t;
        t["table1"] = json::object();
        t["fig1_bloch"] = {{"t_us", 1.0}, {"samples", 401}};
        t["fig2_sweep"] = {{"gate", "not"},
                           {"alpha_list", {0.3, 0.5, 0.8, 1.1}},
                           {"k_list_mhz", {5.0, 12.5}},
                           {"xi", 0.0},
                           {"t_us", 1.0},
                           {"dim", 30},
                           {"steps", 20000}};
        t["fig2_waveforms"] = merged(model_defaults(30), {{"samples", 1000}});
        t["fig2_waveforms"].erase("steps");
        t["fig3_populations"] = model_defaults(30);
        t["fig4_cnot"] = model_defaults(15);
        t["fig5_noise"] = merged(model_defaults(30), {{"gate", "hadamard"},
                                                      {"delta_range", {-0.1, 0.1}},
                                                      {"delta_points", 21},
                                                      {"runs", 50},
                                                      {"snr_db", 10.0},
                                                      {"seed", 1}});
        t["fig6_decoherence"] = merged(model_defaults(30), {{"gate", "hadamard"},
                                                            {"input_sign", 1},
                                                            {"kappa_range_per_us", {0.0, 0.05}},
                                                            {"kappa_phi_range_per_us", {0.0, 0.05}},
                                                            {"grid_points", 6}});
        t["squeeze_pipeline"] = merged(model_defaults(100), {{"gate", "hadamard"},
                                                             {"input_sign", 1},
                                                             {"squeeze_r", 1.2},
                                                             {"squeeze_eps2_mhz", 3.125},
                                                             {"kappa_per_us", 0.05},
                                                             {"kappa_phi_per_us", 0.05},
                                                             {"squeeze_steps", 500}});
        // a single-SQUID device whose effective K and eps2 are the gate defaults
        t["circuit_map"] = {{"e_c_mhz", 25.0},
                            {"e_j_mhz", 180000.0},
                            {"e_j_mod_mhz", 750.0},
                            {"n_squids", 1},
                            {"omega_p_mhz", 6000.0},
                            {"phi_p", 0.0},
                            {"c_p", 0.0},
                            {"v_p", 0.0},
                            {"charge", 1.0},
                            {"delta_range", {-0.1, 0.1}},
                            {"delta_points", 21}};
        return t;
    }();
    return table;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string stem(const std::string& key, const std::string& suffix) {
    return key.substr(0, key.size() - suffix.size());
}

bool same_kind(const json& def, const json& v) {
    if (def.is_number_integer()) return v.is_number_integer();
    if (def.is_number()) return v.is_number();
    if (def.is_string()) return v.is_string();
    if (def.is_boolean()) return v.is_boolean();
    if (def.is_array()) return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number(); });
    return false;
}

// Frequency value in rad/us from whichever unit form the params carry.
double rad(const json& p, const std::string& base) {
    if (p.contains(base + "_rad")) return p.at(base + "_rad").get<double>();
    return two_pi_mhz(p.at(base + "_mhz").get<double>());
}

std::vector<double> rad_list(const json& p, const std::string& base) {
    if (p.contains(base + "_rad")) return p.at(base + "_rad").get<std::vector<double>>();
    std::vector<double> v = p.at(base + "_mhz").get<std::vector<double>>();
    for (double& x : v) x = two_pi_mhz(x);
    return v;
}

double num(const json& p, const char* key) { return p.at(key).get<double>(); }
long integer(const json& p, const char* key) { return p.at(key).get<long>(); }

std::size_t positive_count(const json& p, const char* key) {
    const long v = integer(p, key);
    if (v < 1) throw ConfigError(std::string(key) + " must be at least 1");
    return static_cast<std::size_t>(v);
}

std::array<double, 2> range(const json& p, const char* key) {
    const auto v = p.at(key).get<std::vector<double>>();
    if (v.size() != 2) throw ConfigError(std::string(key) + " must be [min, max]");
    if (v[0] > v[1]) throw ConfigError(std::string(key) + " has min > max");
    return {v[0], v[1]};
}

std::vector<double> linspace(std::array<double, 2> r, std::size_t n) {
    if (n == 1) return {r[0]};
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = r[0] + (r[1] - r[0]) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

GateModel model_from(const json& p) {
    GateModel m;
    m.kerr = rad(p, "k");
    m.alpha = num(p, "alpha");
    m.xi = num(p, "xi");
    m.total_time = num(p, "t_us");
    m.dim = static_cast<int>(integer(p, "dim"));
    if (p.contains("steps")) m.steps = positive_count(p, "steps");
    m.validate();
    return m;
}

int sign_from(const json& p) {
    const long s = integer(p, "input_sign");
    if (s != 1 && s != -1) throw ConfigError("input_sign must be 1 or -1");
    return static_cast<int>(s);
}

const std::array<GateName, 3> kGates{GateName::Not, GateName::Hadamard, GateName::PiPhase};

// Collects outputs so a failed run can remove them.
class Outputs {
public:
    explicit Outputs(std::filesystem::path dir) : dir_(std::move(dir)) {}

    void csv(const std::string& name, const Table& t) {
        track(name);
        write_csv(dir_ / name, t);
    }

    void json_file(const std::string& name, const json& j) {
        track(name);
        std::ofstream out(dir_ / name, std::ios::binary);
        if (!out) throw ConfigError("cannot write " + (dir_ / name).string());
        out << j.dump(2) << '\n';
        if (!out) throw ConfigError("failed writing " + (dir_ / name).string());
    }

    const std::vector<std::string>& names() const { return names_; }
    const std::filesystem::path& dir() const { return dir_; }

    void remove_all() noexcept {
        std::error_code ec;
        for (const std::string& n : names_) std::filesystem::remove(dir_ / n, ec);
    }

private:
    void track(const std::string& name) {
        const std::filesystem::path p = dir_ / name;
        if (std::filesystem::exists(p) && !std::filesystem::is_regular_file(p))
            throw ConfigError(p.string() + " exists and is not a regular file");
        if (std::find(names_.begin(), names_.end(), name) == names_.end()) names_.push_back(name);
    }

    std::filesystem::path dir_;
    std::vector<std::string> names_;
};

struct Headline {
    std::string name;
    double value;
};

struct Context {
    const json& params;
    Outputs& out;
    unsigned threads;
    json results = json::object();
    Headline headline{};
};

// ---------------------------------------------------------------- scenarios

void run_table1(Context& c) {
    // reference values of the published parameter table
    const std::array<double, 3> reference{0.8089, 0.3859, 1.4669};
    Table t{{"gate_index", "mu0", "eta0", "theta", "lambda", "lambda_reference", "abs_deviation"}, {}};
    json rows = json::array();
    double worst = 0.0;
    for (std::size_t i = 0; i < kGates.size(); ++i) {
        const GateAngles a = gate_angles(kGates[i]);
        const double lam = solve_lambda(a.mu0, a.theta);
        const double dev = std::abs(lam - reference[i]);
        worst = std::max(worst, dev);
        t.rows.push_back({static_cast<double>(i), a.mu0, a.eta0, a.theta, lam, reference[i], dev});
        rows.push_back({{"gate", to_string(kGates[i])},
                        {"mu0", a.mu0},
                        {"eta0", a.eta0},
                        {"theta", a.theta},
                        {"lambda", lam},
                        {"lambda_reference", reference[i]},
                        {"geometric_phase", phases(make_path(a.mu0, a.eta0, a.theta)).geometric_plus}});
    }
    c.out.csv("table1.csv", t);
    c.out.json_file("table1.json", {{"schema_version", kSchemaVersion}, {"rows", rows}});
    c.results["rows"] = rows;
    c.headline = {"max_abs_lambda_deviation", worst};
}

void run_fig1(Context& c) {
    const double total = num(c.params, "t_us");
    const std::size_t samples = positive_count(c.params, "samples");
    if (samples < 3) throw ConfigError("samples must be at least 3");
    double worst = 0.0;
    for (GateName g : kGates) {
        const PathSpec spec = gate_path(g, total);
        Table t{{"t", "plus_x", "plus_y", "plus_z", "minus_x", "minus_y", "minus_z"}, {}};
        std::vector<Vec3> loop;
        for (std::size_t k = 0; k < samples; ++k) {
            const double time = total * static_cast<double>(k) / static_cast<double>(samples - 1);
            const InvariantState s = invariant_state(time, spec);
            const Vec3 p = bloch_vector(s.phi_plus).r;
            const Vec3 m = bloch_vector(s.phi_minus).r;
            t.rows.push_back({time, p.x(), p.y(), p.z(), m.x(), m.y(), m.z()});
            if (k + 1 < samples) loop.push_back(p);
        }
        const double omega = signed_solid_angle(loop);
        const double theta = phases(spec).geometric_plus;
        // a spin-1/2 loop picks up minus half its solid angle, modulo 2 pi
        const double dev = std::abs(std::remainder(theta + 0.5 * omega, kTwoPi));
        worst = std::max(worst, dev);
        c.out.csv("fig1_bloch_" + to_string(g) + ".csv", t);
        c.results[to_string(g)] = {{"solid_angle_plus", omega}, {"geometric_phase_plus", theta}, {"deviation", dev}};
    }
    c.headline = {"max_solid_angle_phase_deviation", worst};
}

void run_fig2_sweep(Context& c) {
    const GateName g = parse_gate_name(c.params.at("gate").get<std::string>());
    const std::vector<double> alphas = c.params.at("alpha_list").get<std::vector<double>>();
    const std::vector<double> kerrs = rad_list(c.params, "k_list");
    if (alphas.empty() || kerrs.empty()) throw ConfigError("alpha_list and k_list must be non-empty");
    GateModel base;
    base.xi = num(c.params, "xi");
    base.total_time = num(c.params, "t_us");
    base.dim = static_cast<int>(integer(c.params, "dim"));
    base.steps = positive_count(c.params, "steps");
    const PathSpec spec = gate_path(g, base.total_time);

    const std::size_t n = alphas.size() * kerrs.size();
    std::vector<double> fid(n);
    IntegratorOptions io;
    io.keep_states = false;
    parallel_for(n, c.threads, [&](std::size_t i) {
        GateModel m = base;
        m.kerr = kerrs[i / alphas.size()];
        m.alpha = alphas[i % alphas.size()];
        fid[i] = simulate_single_gate(m, spec, io).fidelity;
    });

    Table t{{"k_rad", "k_mhz", "alpha", "fidelity", "infidelity"}, {}};
    bool all_monotone = true;
    json per_k = json::array();
    for (std::size_t ik = 0; ik < kerrs.size(); ++ik) {
        bool monotone = true;
        for (std::size_t ia = 0; ia < alphas.size(); ++ia) {
            const double f = fid[ik * alphas.size() + ia];
            t.rows.push_back({kerrs[ik], to_mhz(kerrs[ik]), alphas[ia], f, 1.0 - f});
            if (ia > 0 && !(alphas[ia] > alphas[ia - 1] && 1.0 - f > 1.0 - fid[ik * alphas.size() + ia - 1]))
                monotone = false;
        }
        all_monotone = all_monotone && monotone;
        per_k.push_back({{"k_rad", kerrs[ik]}, {"infidelity_increasing_in_alpha", monotone}});
    }
    c.out.csv("fig2_sweep.csv", t);
    c.results["per_k"] = per_k;
    c.results["infidelity_increasing_in_alpha"] = all_monotone;
    c.headline = {"max_infidelity", 1.0 - *std::min_element(fid.begin(), fid.end())};
}

void run_fig2_waveforms(Context& c) {
    const GateModel m = model_from(c.params);
    const std::size_t samples = positive_count(c.params, "samples");
    const CatFrame frame = model_frame(m);
    const double gap = kerr_cat_gap(m.kerr, m.eps2(), m.xi, frame.c_plus.space).gap;
    double worst = 0.0;
    for (GateName g : kGates) {
        const PathSpec spec = gate_path(g, m.total_time);
        const PulseSchedule s = single_qubit_controls(spec, frame, samples);
        Table t{{"t", "chi", "eps_re", "eps_im", "omega_x", "omega_y", "omega_z"}, {}};
        for (std::size_t k = 0; k < s.t.size(); ++k) {
            const Vec3 w = effective_drive(s.t[k], spec);
            t.rows.push_back({s.t[k], s.chi[k], s.eps[k].real(), s.eps[k].imag(), w.x(), w.y(), w.z()});
        }
        const double margin = gap_margin(s, gap);
        worst = std::max(worst, margin);
        c.out.csv("fig2_waveforms_" + to_string(g) + ".csv", t);
        c.results[to_string(g)] = {{"gap_margin", margin}};
    }
    c.results["gap"] = gap;
    c.headline = {"max_gap_margin", worst};
}

void run_fig3(Context& c) {
    const GateModel m = model_from(c.params);
    const CatFrame frame = model_frame(m);
    double worst = 1.0;
    for (GateName g : kGates) {
        const PathSpec spec = gate_path(g, m.total_time);
        const GateRun run = simulate_single_gate(m, spec);
        Table t{{"t", "fidelity", "in_plus_p_plus", "in_plus_p_minus", "in_plus_leakage", "in_minus_p_plus",
                 "in_minus_p_minus", "in_minus_leakage"},
                {}};
        const Matrix basis = frame.basis();
        for (std::size_t k = 0; k < run.sim.times.size(); ++k) {
            const Matrix& x = run.sim.states[k];
            const Populations a = populations(Vector(x.col(0)), frame);
            const Populations b = populations(Vector(x.col(1)), frame);
            const Matrix block = basis.adjoint() * x;
            const double f = average_gate_fidelity_block(block, run.target);
            t.rows.push_back({run.sim.times[k], f, a.p_plus, a.p_minus, a.leakage, b.p_plus, b.p_minus, b.leakage});
        }
        c.out.csv("fig3_populations_" + to_string(g) + ".csv", t);
        const Populations fin = populations(Vector(run.sim.final_state.col(0)), frame);
        c.results[to_string(g)] = {{"fidelity", run.fidelity},
                                   {"lambda", run.spec.lambda_amp},
                                   {"final_p_plus", fin.p_plus},
                                   {"final_p_minus", fin.p_minus},
                                   {"superposition_fidelity_plus", superposition_fidelity(run.block, +1)},
                                   {"superposition_fidelity_minus", superposition_fidelity(run.block, -1)},
                                   {"gap_ratio", run.gap_ratio}};
        worst = std::min(worst, run.fidelity);
    }
    c.headline = {"min_fidelity", worst};
}

void run_fig4(Context& c) {
    const GateModel m = model_from(c.params);
    const CatFrame frame = model_frame(m);
    const CnotRun run = simulate_cnot(m, gate_path(GateName::Not, m.total_time));
    const Matrix basis = two_mode_cat_basis(frame);

    Table traj{{"t", "fidelity"}, {}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) traj.header.push_back("in" + std::to_string(i) + "_out" + std::to_string(j));
    for (int i = 0; i < 4; ++i) traj.header.push_back("in" + std::to_string(i) + "_leakage");
    for (std::size_t k = 0; k < run.sim.times.size(); ++k) {
        const Matrix block = basis.adjoint() * run.sim.states[k];
        std::vector<double> row{run.sim.times[k], average_gate_fidelity_block(block, run.target)};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) row.push_back(std::norm(block(j, i)));
        for (int i = 0; i < 4; ++i) row.push_back(std::max(0.0, 1.0 - block.col(i).squaredNorm()));
        traj.rows.push_back(std::move(row));
    }
    Table bars{{"input", "output", "population"}, {}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) bars.rows.push_back({double(i), double(j), std::norm(run.block(j, i))});
    c.out.csv("fig4_cnot_trajectory.csv", traj);
    c.out.csv("fig4_cnot_populations.csv", bars);
    c.results = {{"fidelity", run.fidelity},
                 {"gap_ratio", run.gap_ratio},
                 {"basis_order", {"++", "+-", "-+", "--"}}};
    c.headline = {"fidelity", run.fidelity};
}

void run_fig5(Context& c) {
    const GateModel m = model_from(c.params);
    const PathSpec spec = gate_path(parse_gate_name(c.params.at("gate").get<std::string>()), m.total_time);
    const std::vector<double> deltas = linspace(range(c.params, "delta_range"), positive_count(c.params, "delta_points"));
    const std::size_t runs = positive_count(c.params, "runs");
    const long seed = integer(c.params, "seed");
    if (seed < 0) throw ConfigError("seed must be non-negative");

    const std::vector<double> grid = uniform_grid(m.total_time, m.steps);
    const EffectiveDrive drive = midpoint_drive(spec, grid);
    IntegratorOptions io;
    io.keep_states = false;
    std::vector<double> fid(3 * deltas.size());
    parallel_for(fid.size(), c.threads, [&](std::size_t i) {
        std::array<double, 3> d{0.0, 0.0, 0.0};
        d[i / deltas.size()] = deltas[i % deltas.size()];
        const EffectiveDrive noisy = apply_systematic(drive, d);
        fid[i] = simulate_single_gate(m, spec, io, &noisy).fidelity;
    });
    Table sys{{"channel", "delta", "fidelity"}, {}};
    json minima = json::object();
    const std::array<const char*, 3> names{"x", "y", "z"};
    for (std::size_t ch = 0; ch < 3; ++ch) {
        double lo = 1.0;
        for (std::size_t k = 0; k < deltas.size(); ++k) {
            const double f = fid[ch * deltas.size() + k];
            sys.rows.push_back({double(ch), deltas[k], f});
            lo = std::min(lo, f);
        }
        minima[names[ch]] = lo;
    }
    c.out.csv("fig5_systematic.csv", sys);
    c.results["systematic_min_fidelity"] = minima;

    for (NoiseKind kind : {NoiseKind::Awgn, NoiseKind::Pink}) {
        NoiseConfig cfg;
        cfg.kind = kind;
        cfg.snr_db = num(c.params, "snr_db");
        cfg.seed = static_cast<std::uint64_t>(seed);
        const EnsembleStats st = monte_carlo(m, spec, cfg, runs, c.threads);
        Table t{{"run", "seed", "infidelity", "ok"}, {}};
        for (const RunRecord& r : st.runs)
            t.rows.push_back({double(r.index), double(r.seed), r.infidelity, r.ok ? 1.0 : 0.0});
        c.out.csv("fig5_" + to_string(kind) + ".csv", t);
        c.results[to_string(kind)] = {{"mean_infidelity", st.mean},
                                      {"min_infidelity", st.min},
                                      {"max_infidelity", st.max},
                                      {"runs", st.count},
                                      {"failed", st.failed}};
    }
    c.headline = {"min_systematic_fidelity", std::min({minima["x"].get<double>(), minima["y"].get<double>(),
                                                       minima["z"].get<double>()})};
}

void run_fig6(Context& c) {
    const GateModel m = model_from(c.params);
    const PathSpec spec = gate_path(parse_gate_name(c.params.at("gate").get<std::string>()), m.total_time);
    const int sign = sign_from(c.params);
    const std::size_t n = positive_count(c.params, "grid_points");
    const std::vector<double> kap = linspace(range(c.params, "kappa_range_per_us"), n);
    const std::vector<double> kphi = linspace(range(c.params, "kappa_phi_range_per_us"), n);
    if (kap.front() < 0.0 || kphi.front() < 0.0) throw ConfigError("decay rates must be non-negative");

    IntegratorOptions io;
    io.keep_states = false;
    std::vector<DecoherenceRun> runs(n * n);
    parallel_for(runs.size(), c.threads, [&](std::size_t i) {
        runs[i] = simulate_decoherence(m, spec, kap[i / n], kphi[i % n], sign, io);
        runs[i].sim.states.clear();
    });
    Table t{{"kappa", "kappa_phi", "infidelity", "subspace_population"}, {}};
    double worst = 0.0;
    double min_pop = 1.0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        t.rows.push_back({kap[i / n], kphi[i % n], 1.0 - runs[i].fidelity, runs[i].subspace_population});
        worst = std::max(worst, 1.0 - runs[i].fidelity);
        min_pop = std::min(min_pop, runs[i].subspace_population);
    }
    c.out.csv("fig6_decoherence.csv", t);
    c.results = {{"max_infidelity", worst}, {"min_subspace_population", min_pop}};
    c.headline = {"max_infidelity", worst};
}

void run_squeeze(Context& c) {
    const GateModel m = model_from(c.params);
    const PathSpec spec = gate_path(parse_gate_name(c.params.at("gate").get<std::string>()), m.total_time);
    SqueezeSpec sq;
    sq.r = num(c.params, "squeeze_r");
    sq.eps2 = rad(c.params, "squeeze_eps2");
    PipelineOptions po;
    po.input_sign = sign_from(c.params);
    po.squeeze_steps = positive_count(c.params, "squeeze_steps");
    const PipelineResult r =
        amplified_gate_pipeline(m, spec, sq, num(c.params, "kappa_per_us"), num(c.params, "kappa_phi_per_us"), po);
    Table t{{"t", "photon_number"}, {}};
    for (std::size_t k = 0; k < r.times.size(); ++k) t.rows.push_back({r.times[k], r.photon_number[k]});
    c.out.csv("squeeze_photon_number.csv", t);
    c.results = {{"fidelity", r.fidelity},
                 {"final_photon_number", r.final_photon_number},
                 {"squeeze_time_ns", 1e3 * sq.duration()},
                 {"stage_end_times_us", {r.stage_times[0], r.stage_times[1]}},
                 {"max_tail_weight", r.max_tail_weight}};
    c.headline = {"fidelity", r.fidelity};
}

void run_circuit(Context& c) {
    CircuitParams cp;
    cp.e_c = rad(c.params, "e_c");
    cp.e_j = rad(c.params, "e_j");
    cp.e_j_mod = rad(c.params, "e_j_mod");
    cp.n_squids = static_cast<int>(integer(c.params, "n_squids"));
    cp.omega_p = rad(c.params, "omega_p");
    cp.phi_p = num(c.params, "phi_p");
    cp.c_p = num(c.params, "c_p");
    cp.v_p = num(c.params, "v_p");
    cp.charge = num(c.params, "charge");
    const EffectiveParams ep = effective_params(cp);
    const InvertedParams inv = invert_params(ep, cp.n_squids);
    const std::vector<double> deltas = linspace(range(c.params, "delta_range"), positive_count(c.params, "delta_points"));

    Table t{{"delta", "d_alpha_ec", "d_alpha_ej", "d_alpha_resolved_ec", "d_alpha_resolved_ej", "infidelity_ec",
             "infidelity_ej"},
            {}};
    double worst = 0.0;
    for (double d : deltas) {
        const ErrorPropagation ec = error_propagation(cp, d, 0.0, 0.0);
        const ErrorPropagation ej = error_propagation(cp, 0.0, d, 0.0);
        t.rows.push_back({d, ec.d_alpha, ej.d_alpha, ec.d_alpha_resolved, ej.d_alpha_resolved,
                          coherent_infidelity(ec.d_alpha), coherent_infidelity(ej.d_alpha)});
        worst = std::max({worst, std::abs(ec.d_alpha), std::abs(ej.d_alpha)});
    }
    c.out.csv("circuit_error_sweep.csv", t);
    const json effective = {{"omega_c_rad", ep.omega_c},
                            {"kerr_rad", ep.kerr},
                            {"eps2_rad", ep.eps2},
                            {"chi_rad", ep.chi},
                            {"eps_re_rad", ep.eps.real()},
                            {"eps_im_rad", ep.eps.imag()},
                            {"alpha", ep.alpha()},
                            {"n_zero", cp.n_zero()},
                            {"phi_zero", cp.phi_zero()},
                            {"omega_2p_rad", cp.omega_2p()}};
    const json inverted = {{"e_c_rad", inv.e_c}, {"e_j_rad", inv.e_j}, {"ej_mod_ratio", inv.ej_mod_ratio},
                           {"omega_p_rad", inv.omega_p}};
    c.out.json_file("circuit_map.json",
                    {{"schema_version", kSchemaVersion}, {"effective", effective}, {"inverted", inverted}});
    c.results = {{"effective", effective}, {"inverted", inverted}, {"max_abs_d_alpha", worst}};
    c.headline = {"alpha", ep.alpha()};
}

const std::map<std::string, std::function<void(Context&)>>& runners() {
    static const std::map<std::string, std::function<void(Context&)>> r{
        {"table1", run_table1},          {"fig1_bloch", run_fig1},      {"fig2_sweep", run_fig2_sweep},
        {"fig2_waveforms", run_fig2_waveforms}, {"fig3_populations", run_fig3}, {"fig4_cnot", run_fig4},
        {"fig5_noise", run_fig5},        {"fig6_decoherence", run_fig6}, {"squeeze_pipeline", run_squeeze},
        {"circuit_map", run_circuit}};
    return r;
}

[[noreturn]] void rethrow_with(const std::string& ctx) {
    try {
        throw;
    } catch (const NoSolutionError& e) {
        throw NoSolutionError(ctx + e.what());
    } catch (const NumericError& e) {
        throw NumericError(ctx + e.what());
    } catch (const ConfigError& e) {
        throw ConfigError(ctx + e.what());
    } catch (const DomainError& e) {
        throw DomainError(ctx + e.what());
    } catch (const InvalidSpaceError& e) {
        throw InvalidSpaceError(ctx + e.what());
    } catch (const DimensionMismatchError& e) {
        throw DimensionMismatchError(ctx + e.what());
    } catch (const DegenerateFrameError& e) {
        throw DegenerateFrameError(ctx + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(ctx + e.what());
    } catch (const std::exception& e) {
        throw Error(ctx + e.what());
    }
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
    static const std::vector<std::string> ids{"table1",           "fig1_bloch", "fig2_sweep",       "fig2_waveforms",
                                              "fig3_populations", "fig4_cnot",  "fig5_noise",       "fig6_decoherence",
                                              "squeeze_pipeline", "circuit_map"};
    return ids;
}

json scenario_defaults(const std::string& id) {
    const auto it = defaults_table().find(id);
    if (it == defaults_table().end()) throw ConfigError("unknown scenario id '" + id + "'");
    return it->second;
}

json all_scenario_keys() {
    json keys = json::object();
    for (const std::string& id : scenario_ids()) {
        const json defaults = scenario_defaults(id);
        for (const auto& [k, v] : defaults.items())
            if (!keys.contains(k)) keys[k] = v;
    }
    return keys;
}

json resolve_params(const std::string& id, const json& overrides) {
    json p = scenario_defaults(id);
    if (!overrides.is_object()) throw ConfigError("params must be an object");
    for (const auto& [key, value] : overrides.items()) {
        std::string target = key;
        if (!p.contains(key) && ends_with(key, "_rad") && p.contains(stem(key, "_rad") + "_mhz"))
            target = stem(key, "_rad") + "_mhz";
        if (!p.contains(target)) throw ConfigError("unknown parameter '" + key + "' for scenario " + id);
        if (!same_kind(p.at(target), value)) throw ConfigError("parameter '" + key + "' has the wrong type");
        if (target != key) {
            if (overrides.contains(target))
                throw ConfigError("parameter given as both '" + target + "' and '" + key + "'");
            p.erase(target);
        }
        p[key] = value;
    }
    return p;
}

ScenarioConfig parse_scenario_config(const json& j) {
    if (!j.is_object()) throw ConfigError("scenario config must be a JSON object");
    ScenarioConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "scenario") {
            if (!value.is_string()) throw ConfigError("scenario must be a string");
            cfg.id = value.get<std::string>();
        } else if (key == "output_dir") {
            if (!value.is_string()) throw ConfigError("output_dir must be a string");
            cfg.output_dir = value.get<std::string>();
        } else if (key == "params") {
            cfg.params = value;
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    if (cfg.id.empty()) throw ConfigError("config needs a scenario id");
    resolve_params(cfg.id, cfg.params);
    return cfg;
}

ScenarioConfig load_scenario_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    try {
        return parse_scenario_config(json::parse(in));
    } catch (const json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path.string());
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("OpenSSL SHA-256 init failed");
    }
    std::array<char, 1 << 16> buf{};
    while (in) {
        in.read(buf.data(), buf.size());
        EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx, md.data(), &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return hex.str();
}

ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& opts) {
    const std::string ctx = "scenario " + config.id + ": ";
    Outputs out(config.output_dir);
    bool created_dir = false;
    try {
        const json params = resolve_params(config.id, config.params);
        created_dir = std::filesystem::create_directories(config.output_dir);
        Context c{params, out, opts.threads == 0 ? default_threads() : opts.threads};
        runners().at(config.id)(c);

        json summary = {{"schema_version", kSchemaVersion},
                        {"scenario", config.id},
                        {"parameters", params},
                        {"headline", {{"name", c.headline.name}, {"value", c.headline.value}}},
                        {"results", c.results}};
        out.json_file("summary.json", summary);

        ScenarioResult res{config.id, config.output_dir, {}, summary};
        json files = json::array();
        for (const std::string& name : out.names()) {
            const std::filesystem::path p = config.output_dir / name;
            ManifestEntry e{name, sha256_file(p), std::filesystem::file_size(p)};
            files.push_back({{"file", e.file}, {"sha256", e.sha256}, {"bytes", e.bytes}});
            res.files.push_back(std::move(e));
        }
        out.json_file("manifest.json", {{"schema_version", kSchemaVersion}, {"scenario", config.id}, {"files", files}});
        return res;
    } catch (...) {
        out.remove_all();
        std::error_code ec;
        if (created_dir && std::filesystem::is_empty(config.output_dir, ec)) std::filesystem::remove(config.output_dir, ec);
        rethrow_with(ctx);
    }
}

}  // namespace catgate
