#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "catgate/fock.hpp"

namespace catgate {

/// Piecewise-constant propagation grid: on [t_k, t_k+1] the Hamiltonian is
/// hamiltonian_at((t_k + t_k+1) / 2).
struct Schedule {
    FockSpace space;
    std::vector<double> grid;
    std::function<OperatorMatrix(double)> hamiltonian_at;
    bool time_independent = false;  // lets the step propagator be reused
};

struct DensityMatrix {
    FockSpace space;
    Matrix entries;

    static DensityMatrix pure(const Ket& psi);
    double trace_defect() const;
    double hermiticity_defect() const;
    double min_eigenvalue() const;
    void validate() const;
};

struct Diagnostics {
    std::size_t steps = 0;
    double max_tail_weight = 0.0;  // population in the top Fock level(s)
    double norm_drift = 0.0;       // kets: max | |x| - |x0| |; density: |tr - 1|
    double min_eigenvalue = 0.0;   // density runs, over snapshots
};

struct SimResult {
    std::vector<double> times;   // snapshot times, endpoints included
    std::vector<Matrix> states;  // kets as columns, or density matrices
    Matrix final_state;
    std::optional<Matrix> final_unitary;
    bool density = false;
    Diagnostics diagnostics;
};

enum class StepMethod { Auto, Expm, Taylor };

struct IntegratorOptions {
    double tol = 1e-8;
    std::size_t max_snapshots = 501;
    bool keep_states = true;
    StepMethod method = StepMethod::Auto;
    /// Called at every snapshot with (t, state).
    std::function<void(double, const Matrix&)> observer;
};

void validate(const Schedule& schedule);

/// Snapshot step indices: at most `max_snapshots`, always including 0 and n.
std::vector<std::size_t> snapshot_steps(std::size_t n_steps, std::size_t max_snapshots);

/// Population of basis states with any mode in its top Fock level.
double tail_weight(const Matrix& state, const FockSpace& space, bool density);

SimResult evolve_columns(const Schedule& schedule, const Matrix& x0, const IntegratorOptions& opts = {});
SimResult evolve_state(const Schedule& schedule, const Ket& psi0, const IntegratorOptions& opts = {});
OperatorMatrix evolution_operator(const Schedule& schedule, const IntegratorOptions& opts = {});

/// d rho/dt = -i[H, rho] + kappa D[a] rho + kappa_phi D[n] rho with
/// D[o] rho = o rho o^+ - {o^+ o, rho}/2. Single-mode spaces only.
SimResult lindblad_evolve(const Schedule& schedule, const DensityMatrix& rho0, double kappa, double kappa_phi,
                          const IntegratorOptions& opts = {});

}  // namespace catgate
