#include "catgate/gates.hpp"

#include <algorithm>
#include <cmath>

#include "catgate/errors.hpp"

namespace catgate {

namespace {

std::size_t step_index(const std::vector<double>& grid, double t) {
    const auto it = std::upper_bound(grid.begin(), grid.end(), t);
    const std::ptrdiff_t k = std::distance(grid.begin(), it) - 1;
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(grid.size()) - 2));
}

void check_drive(const EffectiveDrive& drive, const std::vector<double>& grid) {
    if (drive.omega.size() + 1 != grid.size())
        throw DimensionMismatchError("drive needs one sample per grid step");
}

}  // namespace

void GateModel::validate() const {
    if (!(kerr > 0.0)) throw DomainError("Kerr nonlinearity must be positive");
    if (!(alpha > 0.0)) throw DegenerateFrameError("cat amplitude must be positive");
    if (!(total_time > 0.0)) throw DomainError("gate time must be positive");
    if (dim < 2) throw InvalidSpaceError("Fock truncation must be at least 2");
    if (steps < 2) throw DomainError("need at least two time steps");
}

GateName parse_gate_name(const std::string& name) {
    if (name == "not" || name == "x") return GateName::Not;
    if (name == "hadamard" || name == "h") return GateName::Hadamard;
    if (name == "phase" || name == "pi-phase" || name == "pi_phase" || name == "z") return GateName::PiPhase;
    throw ConfigError("unknown gate '" + name + "' (expected not, hadamard, phase)");
}

std::string to_string(GateName g) {
    switch (g) {
        case GateName::Not: return "not";
        case GateName::Hadamard: return "hadamard";
        case GateName::PiPhase: return "phase";
    }
    return "?";
}

GateAngles gate_angles(GateName g) {
    switch (g) {
        case GateName::Not: return {kPi / 2, kPi / 2, kPi / 2};
        case GateName::Hadamard: return {kPi / 4, kPi / 2, kPi / 2};
        case GateName::PiPhase: return {0.0, 0.0, kPi / 2};
    }
    throw ConfigError("unknown gate");
}

Matrix2 textbook_matrix(GateName g) {
    Matrix2 m;
    const double r = 1.0 / std::sqrt(2.0);
    switch (g) {
        case GateName::Not: m << 0, 1, 1, 0; break;
        case GateName::Hadamard: m << r, r, r, -r; break;
        case GateName::PiPhase: m << 1, 0, 0, -1; break;
    }
    return m;
}

PathSpec gate_path(GateName g, double total_time) {
    const GateAngles a = gate_angles(g);
    return make_path(a.mu0, a.eta0, a.theta, total_time);
}

CatFrame model_frame(const GateModel& m) {
    m.validate();
    return cat_frame(m.alpha, m.xi, FockSpace(m.dim, 1));
}

EffectiveDrive midpoint_drive(const PathSpec& spec, const std::vector<double>& grid) {
    std::vector<double> mids(grid.size() - 1);
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) mids[k] = 0.5 * (grid[k] + grid[k + 1]);
    return sample_drive(spec, mids);
}

Schedule single_gate_schedule(const GateModel& m, const CatFrame& frame, const EffectiveDrive& drive,
                              const std::vector<double>& grid) {
    check_drive(drive, grid);
    const FockSpace space = frame.c_plus.space;
    const Matrix h0 = kerr_cat_hamiltonian(m.kerr, m.eps2(), m.xi, space).entries;
    const Matrix a = ladder(space).entries;
    const Matrix ad = a.adjoint();
    Eigen::VectorXd n(space.dim());
    for (int k = 0; k < space.dim(); ++k) n(k) = k;

    Schedule s{space, grid, {}, false};
    s.hamiltonian_at = [=, omega = drive.omega](double t) {
        const SingleControls c = controls_from_drive(omega[step_index(grid, t)], frame);
        Matrix h = h0 + c.eps * ad + std::conj(c.eps) * a;
        h.diagonal() += c.chi * n;
        return OperatorMatrix{space, h};
    };
    return s;
}

Schedule two_qubit_gate_schedule(const GateModel& m, const CatFrame& frame, const EffectiveDrive& drive,
                                 const std::vector<double>& grid) {
    check_drive(drive, grid);
    const FockSpace single = frame.c_plus.space;
    const FockSpace space(single.dim(), 2);
    const OperatorMatrix a = ladder(single);
    const OperatorMatrix ad = a.adjoint();
    const OperatorMatrix n = number_operator(single);
    const OperatorMatrix one = identity(single);
    const Matrix h0 = two_mode_kerr_cat_hamiltonian(m.kerr, m.eps2(), m.xi, space).entries;
    const Matrix n1 = tensor(n, one).entries, n2 = tensor(one, n).entries;
    const Matrix n12 = n1 * n2;
    const Matrix n1a2 = tensor(n, a).entries, n1ad2 = tensor(n, ad).entries;
    const Matrix a2 = tensor(one, a).entries, ad2 = tensor(one, ad).entries;

    Schedule s{space, grid, {}, false};
    s.hamiltonian_at = [=, omega = drive.omega](double t) {
        const TwoQubitControls c = two_qubit_controls_from_drive(omega[step_index(grid, t)], frame);
        Matrix h = h0 + c.chi12 * n12 + std::conj(c.lam) * n1a2 + c.lam * n1ad2 + std::conj(c.eps_t) * a2 +
                   c.eps_t * ad2 + c.chi1 * n1 + c.chi2 * n2;
        return OperatorMatrix{space, h};
    };
    return s;
}

GateRun simulate_single_gate(const GateModel& m, const PathSpec& spec, const IntegratorOptions& opts,
                             const EffectiveDrive* drive) {
    m.validate();
    validate(spec);
    const CatFrame frame = model_frame(m);
    const std::vector<double> grid = uniform_grid(spec.total_time, m.steps);
    const EffectiveDrive own = drive ? EffectiveDrive{} : midpoint_drive(spec, grid);
    const EffectiveDrive& dr = drive ? *drive : own;
    const Schedule sched = single_gate_schedule(m, frame, dr, grid);

    const GapInfo gap = kerr_cat_gap(m.kerr, m.eps2(), m.xi, frame.c_plus.space);
    const double ratio = gap_margin(single_qubit_controls(spec, frame, std::min<std::size_t>(m.steps, 2000)), gap.gap);

    GateRun run{spec, Matrix2::Zero(), ideal_unitary(spec), 0.0, ratio, {}};
    run.sim = evolve_columns(sched, frame.basis(), opts);
    run.block = frame.basis().adjoint() * run.sim.final_state;
    run.fidelity = average_gate_fidelity_block(run.block, run.target);
    return run;
}

CnotRun simulate_cnot(const GateModel& m, const PathSpec& spec, const IntegratorOptions& opts) {
    m.validate();
    validate(spec);
    const CatFrame frame = model_frame(m);
    const std::vector<double> grid = uniform_grid(spec.total_time, m.steps);
    const EffectiveDrive dr = midpoint_drive(spec, grid);
    const Schedule sched = two_qubit_gate_schedule(m, frame, dr, grid);

    const GapInfo gap = kerr_cat_gap(m.kerr, m.eps2(), m.xi, frame.c_plus.space);
    const double ratio = gap_margin(two_qubit_controls(spec, frame, std::min<std::size_t>(m.steps, 2000)), gap.gap);

    const GateTarget target = controlled_target("controlled", ideal_unitary(spec), frame);
    CnotRun run{spec, Matrix(), target.matrix, 0.0, ratio, {}};
    run.sim = evolve_columns(sched, target.basis, opts);
    run.block = target.basis.adjoint() * run.sim.final_state;
    run.fidelity = average_gate_fidelity_block(run.block, run.target);
    return run;
}

DecoherenceRun simulate_decoherence(const GateModel& m, const PathSpec& spec, double kappa, double kappa_phi,
                                    int input_sign, const IntegratorOptions& opts) {
    m.validate();
    validate(spec);
    if (input_sign != 1 && input_sign != -1) throw DomainError("input sign must be +1 or -1");
    const CatFrame frame = model_frame(m);
    const std::vector<double> grid = uniform_grid(spec.total_time, m.steps);
    const EffectiveDrive dr = midpoint_drive(spec, grid);
    const Schedule sched = single_gate_schedule(m, frame, dr, grid);

    const Ket& input = input_sign > 0 ? frame.c_plus : frame.c_minus;
    const Eigen::Vector2cd ideal = ideal_unitary(spec).col(input_sign > 0 ? 0 : 1);
    const Ket target{frame.c_plus.space, frame.basis() * ideal};

    DecoherenceRun run{};
    run.sim = lindblad_evolve(sched, DensityMatrix::pure(input), kappa, kappa_phi, opts);
    const DensityMatrix rho{frame.c_plus.space, run.sim.final_state};
    run.fidelity = state_fidelity(rho, target);
    run.final_populations = populations(rho, frame);
    run.subspace_population = run.final_populations.p_plus + run.final_populations.p_minus;
    return run;
}

}  // namespace catgate
