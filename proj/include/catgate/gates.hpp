#pragma once

#include <string>
#include <vector>

#include "catgate/metrics.hpp"
#include "catgate/propagate.hpp"
#include "catgate/synth.hpp"

namespace catgate {

/// Device and numerics for one gate run. Rates in rad/us, times in us.
struct GateModel {
    double kerr = two_pi_mhz(12.5);
    double alpha = 0.5;
    double xi = 0.0;
    double total_time = 1.0;
    int dim = 30;
    std::size_t steps = 20000;

    double eps2() const { return kerr * alpha * alpha; }
    void validate() const;
};

enum class GateName { Not, Hadamard, PiPhase };

GateName parse_gate_name(const std::string& name);
std::string to_string(GateName g);

struct GateAngles {
    double mu0;
    double eta0;
    double theta;
};

GateAngles gate_angles(GateName g);
Matrix2 textbook_matrix(GateName g);
PathSpec gate_path(GateName g, double total_time = 1.0);

CatFrame model_frame(const GateModel& m);

/// Omega at the midpoint of every grid step.
EffectiveDrive midpoint_drive(const PathSpec& spec, const std::vector<double>& grid);

/// H_cat + H_c(Omega_k) on step k of `grid`.
Schedule single_gate_schedule(const GateModel& m, const CatFrame& frame, const EffectiveDrive& drive,
                              const std::vector<double>& grid);
Schedule two_qubit_gate_schedule(const GateModel& m, const CatFrame& frame, const EffectiveDrive& drive,
                                 const std::vector<double>& grid);

struct GateRun {
    PathSpec spec;
    Matrix2 block;   // <C_i|U|C_j>
    Matrix2 target;  // ideal unitary with the realized geometric phase
    double fidelity;
    double gap_ratio;
    SimResult sim;   // snapshots of U(t) B
};

/// Closed-system gate. `drive` overrides the synthesized midpoint drive
/// (used for noisy runs); it must have one entry per grid step.
GateRun simulate_single_gate(const GateModel& m, const PathSpec& spec, const IntegratorOptions& opts = {},
                             const EffectiveDrive* drive = nullptr);

struct CnotRun {
    PathSpec spec;
    Matrix block;   // 4x4 in (++, +-, -+, --)
    Matrix target;
    double fidelity;
    double gap_ratio;
    SimResult sim;
};

/// Controlled rotation with control = mode 1; `m.dim` is per mode.
CnotRun simulate_cnot(const GateModel& m, const PathSpec& spec, const IntegratorOptions& opts = {});

struct DecoherenceRun {
    double fidelity;       // <psi_ideal| rho(T) |psi_ideal>
    double subspace_population;
    Populations final_populations;
    SimResult sim;
};

DecoherenceRun simulate_decoherence(const GateModel& m, const PathSpec& spec, double kappa, double kappa_phi,
                                    int input_sign = +1, const IntegratorOptions& opts = {});

}  // namespace catgate
