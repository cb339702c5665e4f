#pragma once

#include <filesystem>
#include <vector>

#include "catgate/fock.hpp"

namespace catgate {

/// Trigonometric invariant path plus the requested rotation angle.
struct PathSpec {
    double mu0 = 0.0;
    double eta0 = 0.0;
    double lambda_amp = 0.0;
    double total_time = 1.0;  // us
    double theta_target = 0.0;
};

struct PathPoint {
    double mu;
    double eta;
    double mu_dot;
    double eta_dot;
};

struct InvariantState {
    Vec3 zeta;
    Eigen::Vector2cd phi_plus;   // components on (|C+>, |C->)
    Eigen::Vector2cd phi_minus;
};

/// Omega(t) sampled on a time grid, rad/us.
struct EffectiveDrive {
    std::vector<double> times;
    std::vector<Vec3> omega;
};

struct PhaseResult {
    double geometric_plus;
    double geometric_minus;
    double dynamical_plus;   // integrated residual, zero by construction
    double dynamical_minus;
};

void validate(const PathSpec& spec);

/// mu = mu0 + L sin^2(pi t/T), eta = eta0 + pi (1 - cos(pi t/T)).
PathPoint path_eval(double t, const PathSpec& spec);

Vec3 zeta_of(double mu, double eta);
Vec3 effective_drive(double t, const PathSpec& spec);
EffectiveDrive sample_drive(const PathSpec& spec, const std::vector<double>& times);
InvariantState invariant_state(double t, const PathSpec& spec);

PhaseResult phases(const PathSpec& spec);

/// Smallest Lambda in [1e-6, pi - mu0 - 1e-6] with Theta+ = theta (mod pi).
double solve_lambda(double mu0, double theta_target);

/// Path with Lambda solved for (mu0, theta).
PathSpec make_path(double mu0, double eta0, double theta, double total_time = 1.0);

/// cos(theta) + i sin(theta) zeta(0).sigma in the (|C+>, |C->) basis.
Matrix2 ideal_unitary(double mu0, double eta0, double theta);
/// Same, with theta the geometric phase the path actually accumulates.
Matrix2 ideal_unitary(const PathSpec& spec);

struct SingleControls {
    double chi;
    Complex eps;
};

struct TwoQubitControls {
    double chi12;
    double chi1;  // mode 1 (control)
    double chi2;  // mode 2 (target)
    Complex lam;
    Complex eps_t;
};

/// Cat-frame photon-number constants used by the control maps.
struct FrameConstants {
    double n_plus;   // <C+|n|C+>
    double n_minus;  // <C-|n|C->
    double half_diff;
    double mean;
    static FrameConstants from(const CatFrame& frame);
};

SingleControls controls_from_drive(const Vec3& omega, const CatFrame& frame);
TwoQubitControls two_qubit_controls_from_drive(const Vec3& omega, const CatFrame& frame);

/// H_c = chi n + eps a^+ + eps* a on the frame's space.
OperatorMatrix control_hamiltonian(const SingleControls& c, const FockSpace& space);
/// chi12 n1 n2 + n1 (lam* a2 + lam a2^+) + eps_t* a2 + eps_t a2^+ + chi1 n1 + chi2 n2.
OperatorMatrix two_qubit_control_hamiltonian(const TwoQubitControls& c, const FockSpace& space);

struct PulseSchedule {
    std::vector<double> t;
    std::vector<double> chi;
    std::vector<Complex> eps;
};

struct TwoQubitPulseSchedule {
    std::vector<double> t;
    std::vector<double> chi12;
    std::vector<double> chi1;
    std::vector<double> chi2;
    std::vector<Complex> lam;
    std::vector<Complex> eps_t;
};

std::vector<double> uniform_grid(double total_time, std::size_t steps);

PulseSchedule single_qubit_controls(const PathSpec& spec, const CatFrame& frame, std::size_t steps = 20000);
TwoQubitPulseSchedule two_qubit_controls(const PathSpec& spec, const CatFrame& frame,
                                         std::size_t steps = 20000);

/// Max over interior grid points of ||dI/dt - i[I, h]|| with I = zeta.sigma,
/// h the cat-subspace block of H_cat + H_c and dI/dt by centered differences.
double verify_invariant(const PathSpec& spec, const PulseSchedule& schedule, const CatFrame& frame,
                        double kerr = 0.0, double eps2 = 0.0);

/// Largest control magnitude over the gap; warns above 0.2.
double gap_margin(const PulseSchedule& schedule, double gap);
double gap_margin(const TwoQubitPulseSchedule& schedule, double gap);

void write_schedule_csv(const std::filesystem::path& path, const PulseSchedule& s);
void write_schedule_csv(const std::filesystem::path& path, const TwoQubitPulseSchedule& s);
PulseSchedule read_schedule_csv(const std::filesystem::path& path);
TwoQubitPulseSchedule read_two_qubit_schedule_csv(const std::filesystem::path& path);

}  // namespace catgate
