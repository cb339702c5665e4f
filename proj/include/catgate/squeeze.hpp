#pragma once

#include "catgate/gates.hpp"

namespace catgate {

struct SqueezeSpec {
    double r = 1.2;
    double eps2 = two_pi_mhz(3.125);  // rad/us

    /// t_s = r / (2 eps2), us
    double duration() const { return r / (2.0 * eps2); }
    void validate() const;
};

/// sign=+1: H_s = -i eps2 (a^2 - a^+2); sign=-1: the anti-squeezing -H_s.
OperatorMatrix squeeze_generator(double eps2, int sign, const FockSpace& space);

/// S = exp(-i H_s t_s) = exp[r (a^+2 - a^2) / 2].
OperatorMatrix squeeze_operator(const SqueezeSpec& spec, const FockSpace& space);

struct PipelineOptions {
    std::size_t squeeze_steps = 500;  // per squeezing stage
    int input_sign = +1;              // |C~+> or |C~->
};

struct PipelineResult {
    double fidelity;              // against S U_ideal |C_input>
    double final_photon_number;
    double max_tail_weight;
    double stage_times[2];        // end of stage 1 and stage 2, us
    std::vector<double> times;    // n_p(t) trace over the whole pipeline
    std::vector<double> photon_number;
};

/// Anti-squeeze for t_s, geometric gate, squeeze for t_s, all under the
/// same dissipators; the Kerr term and gate controls are off while squeezing.
/// `model.dim` sets the truncation.
PipelineResult amplified_gate_pipeline(const GateModel& model, const PathSpec& gate, const SqueezeSpec& squeeze,
                                       double kappa, double kappa_phi, const PipelineOptions& opts = {});

/// Closed-system pipeline operator S U S^+ (each stage propagated numerically).
OperatorMatrix pipeline_unitary(const GateModel& model, const PathSpec& gate, const SqueezeSpec& squeeze,
                                std::size_t squeeze_steps = 500);

}  // namespace catgate
