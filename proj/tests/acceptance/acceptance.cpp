// Acceptance checks against reference values and internal properties.
// Usage: catgate_acceptance <criterion>|all ; one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "catgate/errors.hpp"
#include "catgate/gates.hpp"
#include "catgate/noise.hpp"
#include "catgate/selftest.hpp"
#include "catgate/squeeze.hpp"

using namespace catgate;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

bool report(const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    return pass;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

bool table1() {
    const auto t0 = Clock::now();
    const GateName gates[3] = {GateName::Not, GateName::Hadamard, GateName::PiPhase};
    const double reference[3] = {0.8089, 0.3859, 1.4669};
    double lam[3];
    for (int i = 0; i < 3; ++i) {
        const GateAngles a = gate_angles(gates[i]);
        lam[i] = solve_lambda(a.mu0, a.theta);
    }
    const double dt = seconds_since(t0);
    bool ok = dt < 1.0;
    std::string d;
    for (int i = 0; i < 3; ++i) {
        ok = ok && within(lam[i], reference[i], 5e-4);
        d += fmt("%s %.6f (ref %.4f, dev %.2e); ", to_string(gates[i]).c_str(), lam[i], reference[i],
                 std::abs(lam[i] - reference[i]));
    }
    return report("table1", ok, d + fmt("tol 5e-4, %.3f s < 1 s", dt));
}

bool gate_fidelities() {
    const GateName gates[3] = {GateName::Not, GateName::Hadamard, GateName::PiPhase};
    const double reference[3] = {0.9997, 0.9999, 0.9998};
    bool ok = true;
    std::string d;
    for (int i = 0; i < 3; ++i) {
        const auto t0 = Clock::now();
        const GateRun r = simulate_single_gate(GateModel{}, gate_path(gates[i]));
        const double dt = seconds_since(t0);
        ok = ok && within(r.fidelity, reference[i], 3e-4) && dt < 30.0;
        d += fmt("%s %.6f (ref %.4f, %.1f s); ", to_string(gates[i]).c_str(), r.fidelity, reference[i], dt);
    }
    return report("gate_fidelities", ok, d + "tol 3e-4, < 30 s each");
}

bool hadamard_elements() {
    const GateModel m;
    const GateRun r = simulate_single_gate(m, gate_path(GateName::Hadamard));
    const Populations p = populations(Vector(r.sim.final_state.col(0)), model_frame(m));
    const double fp = superposition_fidelity(r.block, +1);
    const double fm = superposition_fidelity(r.block, -1);
    const bool ok = within(p.p_plus, 0.5039, 2e-3) && within(fp, 1.0 - 4.448e-5, 2e-5) &&
                    within(fm, 1.0 - 4.475e-5, 2e-5);
    return report("hadamard_elements", ok,
                  fmt("P+ %.5f (ref 0.5039 +- 2e-3); 1-F+ %.3e (ref 4.448e-5); 1-F- %.3e (ref 4.475e-5); tol 2e-5",
                      p.p_plus, 1.0 - fp, 1.0 - fm));
}

bool cnot() {
    GateModel m;
    m.dim = 15;
    const auto t0 = Clock::now();
    const CnotRun r = simulate_cnot(m, gate_path(GateName::Not));
    const double dt = seconds_since(t0);
    return report("cnot", within(r.fidelity, 0.9997, 3e-4) && dt < 600.0,
                  fmt("F %.6f (ref 0.9997 +- 3e-4), %.1f s < 600 s", r.fidelity, dt));
}

bool gap() {
    const GateModel m;
    const double g = kerr_cat_gap(m.kerr, m.eps2(), m.xi, FockSpace(m.dim)).gap;
    return report("gap", std::abs(g / 161.0 - 1.0) <= 0.02,
                  fmt("%.3f rad/us = %.3e rad/s (ref 161e6 rad/s +- 2%%)", g, g * 1e6));
}

bool systematic() {
    const GateModel m;
    const PathSpec spec = gate_path(GateName::Hadamard);
    const std::vector<double> grid = uniform_grid(spec.total_time, m.steps);
    const EffectiveDrive base = midpoint_drive(spec, grid);
    IntegratorOptions io;
    io.keep_states = false;
    const double floor[3] = {0.9969, 0.9973, 0.9768};
    const char* names[3] = {"x", "y", "z"};
    bool ok = true;
    std::string d;
    for (int k = 0; k < 3; ++k) {
        double worst = 1.0;
        for (int i = 0; i <= 20; ++i) {
            std::array<double, 3> delta{0.0, 0.0, 0.0};
            delta[k] = -0.1 + 0.01 * i;
            const EffectiveDrive drv = apply_systematic(base, delta);
            worst = std::min(worst, simulate_single_gate(m, spec, io, &drv).fidelity);
        }
        ok = ok && worst >= floor[k] - 2e-3;
        d += fmt("min F (d%s) %.5f >= %.4f - 2e-3; ", names[k], worst, floor[k]);
    }
    return report("systematic", ok, d);
}

bool decoherence() {
    const DecoherenceRun r = simulate_decoherence(GateModel{}, gate_path(GateName::Hadamard), 0.05, 0.05, +1);
    const double inf = 1.0 - r.fidelity;
    return report("decoherence", inf <= 0.0201 + 0.005 && r.subspace_population > 0.995,
                  fmt("1-F %.5f <= 0.0251; subspace population %.5f > 0.995 (kappa = kappa_phi = 0.05 /us)", inf,
                      r.subspace_population));
}

bool noise() {
    const GateModel m;
    const PathSpec spec = gate_path(GateName::Hadamard);
    bool ok = true;
    std::string d;
    const char* bands[2] = {"[3e-5, 8e-5]", "[4.884e-5, 5.004e-5]"};
    int i = 0;
    for (NoiseKind k : {NoiseKind::Awgn, NoiseKind::Pink}) {
        NoiseConfig c;
        c.kind = k;
        c.snr_db = 10.0;
        c.seed = 1;
        const EnsembleStats s = monte_carlo(m, spec, c, 50);
        ok = ok && s.failed == 0 && s.mean < 1e-3;
        d += fmt("%s mean 1-F %.3e, range [%.3e, %.3e] (reference band %s); ", to_string(k).c_str(), s.mean, s.min,
                 s.max, bands[i++]);
    }
    return report("noise", ok, d + "50 runs, SNR 10 dB, gate: mean < 1e-3");
}

bool squeeze() {
    GateModel m;
    m.dim = 100;
    const SqueezeSpec sq;
    const double ts_ns = sq.duration() * 1e3;
    const PipelineResult r = amplified_gate_pipeline(m, gate_path(GateName::Hadamard), sq, 0.05, 0.05);
    const bool ok = within(ts_ns, 30.56, 5e-3) && within(r.final_photon_number, 6.732, 0.05) &&
                    within(r.fidelity, 0.9513, 0.01);
    return report("squeeze", ok,
                  fmt("t_s %.4f ns (ref 30.56); n_p %.4f (ref 6.732 +- 0.05); F %.5f (ref 0.9513 +- 0.01)", ts_ns,
                      r.final_photon_number, r.fidelity));
}

bool properties() {
    bool ok = true;
    std::string d;
    for (const CheckResult& c : run_property_suite()) {
        ok = ok && c.pass;
        d += fmt("%s %.2e<%.0e%s; ", c.name.c_str(), c.value, c.tolerance, c.pass ? "" : " FAILED");
    }
    return report("properties", ok, d);
}

const std::map<std::string, std::function<bool()>> kCriteria{
    {"table1", table1},         {"gate_fidelities", gate_fidelities}, {"hadamard_elements", hadamard_elements},
    {"cnot", cnot},             {"gap", gap},                         {"systematic", systematic},
    {"decoherence", decoherence}, {"noise", noise},                   {"squeeze", squeeze},
    {"properties", properties}};

}  // namespace

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    if (which != "all" && !kCriteria.count(which)) {
        std::fprintf(stderr, "unknown criterion '%s'\n", which.c_str());
        return 2;
    }
    int failed = 0;
    for (const auto& [name, run] : kCriteria) {
        if (which != "all" && which != name) continue;
        try {
            if (!run()) ++failed;
        } catch (const std::exception& e) {
            report(name, false, std::string("error: ") + e.what());
            ++failed;
        }
    }
    return failed == 0 ? 0 : 1;
}
