#include "catgate/selftest.hpp"

#include <cmath>

#include "catgate/circuit.hpp"
#include "catgate/gates.hpp"

namespace catgate {

namespace {

Matrix2 sigma_dot(const Vec3& v) {
    Matrix2 m;
    m << v.z(), Complex(v.x(), -v.y()), Complex(v.x(), v.y()), -v.z();
    return m;
}

CheckResult check(std::string name, double value, double tol) {
    return {std::move(name), value, tol, value < tol};
}

std::vector<double> sample_times(double total, int n) {
    std::vector<double> t;
    for (int k = 0; k <= n; ++k) t.push_back(total * k / n);
    return t;
}

const GateName kAll[] = {GateName::Not, GateName::Hadamard, GateName::PiPhase};

CheckResult invariant_residual() {
    const GateModel m;
    const CatFrame frame = model_frame(m);
    double worst = 0.0;
    for (GateName g : kAll) {
        const PathSpec spec = gate_path(g);
        const PulseSchedule s = single_qubit_controls(spec, frame, 20000);
        worst = std::max(worst, verify_invariant(spec, s, frame, m.kerr, m.eps2()));
    }
    return check("invariant residual (Lewis-Riesenfeld equation)", worst, 1e-5);
}

CheckResult zeta_unit() {
    double worst = 0.0;
    for (GateName g : kAll) {
        const PathSpec spec = gate_path(g);
        for (double t : sample_times(spec.total_time, 1000)) {
            const PathPoint p = path_eval(t, spec);
            worst = std::max(worst, std::abs(zeta_of(p.mu, p.eta).norm() - 1.0));
        }
    }
    return check("|zeta| = 1", worst, 1e-10);
}

CheckResult dynamical_phase() {
    double worst = 0.0;
    for (GateName g : kAll) {
        const PathSpec spec = gate_path(g);
        for (double t : sample_times(spec.total_time, 1000)) {
            const InvariantState st = invariant_state(t, spec);
            const Matrix2 h = sigma_dot(effective_drive(t, spec));
            worst = std::max({worst, std::abs(st.phi_plus.dot(h * st.phi_plus)),
                              std::abs(st.phi_minus.dot(h * st.phi_minus))});
        }
    }
    return check("pointwise dynamical phase rate", worst, 1e-12);
}

Matrix traceless(const Matrix& m) {
    return m - (m.trace() / static_cast<double>(m.rows())) * Matrix::Identity(m.rows(), m.cols());
}

CheckResult single_projection() {
    const GateModel m;
    const CatFrame frame = model_frame(m);
    const Matrix b = frame.basis();
    double worst = 0.0;
    for (GateName g : kAll) {
        const PathSpec spec = gate_path(g);
        for (double t : sample_times(spec.total_time, 50)) {
            const Vec3 w = effective_drive(t, spec);
            const Matrix h = control_hamiltonian(controls_from_drive(w, frame), frame.c_plus.space).entries;
            const Matrix block = traceless(b.adjoint() * h * b);
            worst = std::max(worst, (block - Matrix(sigma_dot(w))).cwiseAbs().maxCoeff());
        }
    }
    return check("single-qubit projection P H_c P = Omega.sigma", worst, 1e-7);
}

CheckResult two_qubit_projection() {
    GateModel m;
    m.dim = 15;
    const CatFrame frame = model_frame(m);
    const Matrix b = two_mode_cat_basis(frame);
    const FockSpace space(m.dim, 2);
    const PathSpec spec = gate_path(GateName::Not);
    double worst = 0.0;
    for (double t : sample_times(spec.total_time, 20)) {
        const Vec3 w = effective_drive(t, spec);
        const Matrix h = two_qubit_control_hamiltonian(two_qubit_controls_from_drive(w, frame), space).entries;
        const Matrix block = b.adjoint() * h * b;
        // control on mode 1: Omega.sigma acts on mode 2 when mode 1 is |C->
        Matrix expected = Matrix::Zero(4, 4);
        expected.block(2, 2, 2, 2) = sigma_dot(w);
        const Matrix shift = (block - expected).diagonal().mean() * Matrix::Identity(4, 4);
        worst = std::max(worst, (block - expected - shift).cwiseAbs().maxCoeff());
    }
    return check("two-qubit projection P H_c P = |C-><C-| x Omega.sigma", worst, 1e-7);
}

CheckResult lindblad_trace() {
    GateModel m;
    m.steps = 4000;
    IntegratorOptions io;
    io.keep_states = false;
    const DecoherenceRun r = simulate_decoherence(m, gate_path(GateName::Hadamard), 0.05, 0.05, +1, io);
    return check("Lindblad trace drift", r.sim.diagnostics.norm_drift, 1e-7);
}

CheckResult grid_halving() {
    GateModel coarse;
    GateModel fine;
    fine.steps = 2 * coarse.steps;
    IntegratorOptions io;
    io.keep_states = false;
    const PathSpec spec = gate_path(GateName::Hadamard);
    const double d = std::abs(simulate_single_gate(coarse, spec, io).fidelity -
                              simulate_single_gate(fine, spec, io).fidelity);
    return check("grid-halving fidelity change", d, 1e-7);
}

CheckResult solid_angle() {
    double worst = 0.0;
    for (GateName g : kAll) {
        const PathSpec spec = gate_path(g);
        std::vector<Vec3> loop;
        const std::vector<double> ts = sample_times(spec.total_time, 4000);
        for (std::size_t k = 0; k + 1 < ts.size(); ++k) loop.push_back(invariant_state(ts[k], spec).zeta);
        const double omega = signed_solid_angle(loop);
        worst = std::max(worst, std::abs(std::remainder(phases(spec).geometric_plus + 0.5 * omega, kTwoPi)));
    }
    return check("solid angle vs geometric phase", worst, 1e-3);
}

CheckResult circuit_first_order() {
    CircuitParams cp;
    cp.e_c = two_pi_mhz(25.0);
    cp.e_j = two_pi_mhz(180000.0);
    cp.e_j_mod = two_pi_mhz(750.0);
    cp.omega_p = two_pi_mhz(6000.0);
    cp.c_p = 1.0;
    cp.v_p = 0.01;
    const double d = 1e-4;
    const EffectiveParams p0 = effective_params(cp);
    double worst = 0.0;
    const double shifts[3][3] = {{d, 0, 0}, {0, d, 0}, {0, 0, d}};
    for (const auto& s : shifts) {
        CircuitParams q = cp;
        q.e_c *= 1.0 + s[0];
        q.e_j *= 1.0 + s[1];
        q.v_p *= 1.0 + s[2];
        const EffectiveParams p1 = effective_params(q);
        const ErrorPropagation e = error_propagation(cp, s[0], s[1], s[2]);
        const double fd[] = {p1.omega_c / p0.omega_c - 1.0, p1.kerr / p0.kerr - 1.0, p1.eps2 / p0.eps2 - 1.0,
                             std::abs(p1.eps) / std::abs(p0.eps) - 1.0};
        const double fo[] = {e.d_omega_c, e.d_kerr, e.d_eps2, e.d_eps};
        for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(fd[k] - fo[k]));
    }
    return check("circuit error propagation, first order at delta=1e-4", worst, 1e-7);
}

}  // namespace

std::vector<PropertyCheck> property_checks() {
    return {{"invariant", invariant_residual},         {"zeta", zeta_unit},
            {"dynamical", dynamical_phase},            {"projection1", single_projection},
            {"projection2", two_qubit_projection},     {"trace", lindblad_trace},
            {"halving", grid_halving},                 {"solid_angle", solid_angle},
            {"circuit", circuit_first_order}};
}

std::vector<CheckResult> run_property_suite() {
    std::vector<CheckResult> out;
    for (const PropertyCheck& c : property_checks()) out.push_back(c.run());
    return out;
}

}  // namespace catgate
