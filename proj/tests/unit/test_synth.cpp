#include <gtest/gtest.h>

#include <cmath>

#include "catgate/errors.hpp"
#include "catgate/gates.hpp"
#include "catgate/synth.hpp"

using namespace catgate;

namespace {

// Lambda roots from mpmath (30-digit quad + findroot), an independent route
// to the same defining integral.
constexpr double kLambdaNot = 0.808914186114791177;    // Theta+ = 3 pi / 2
constexpr double kLambdaHad = 0.386667653187480145;    // Theta+ = pi / 2
constexpr double kLambdaPhase = 1.466934809189285727;  // Theta+ = pi / 2

Matrix2 sigma_dot(const Vec3& v) {
    Matrix2 m;
    m << v.z(), Complex(v.x(), -v.y()), Complex(v.x(), v.y()), -v.z();
    return m;
}

Vec3 zeta_at(double t, const PathSpec& s) {
    const PathPoint p = path_eval(t, s);
    return zeta_of(p.mu, p.eta);
}

double simpson_theta_plus(double mu0, double lam) {
    const int n = 20000;
    const double h = kPi / n;
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double u = k * h;
        const double s = std::sin(u);
        const double f = s * std::pow(std::sin(0.5 * (mu0 + lam * s * s)), 2);
        acc += f * (k == 0 || k == n ? 1.0 : (k % 2 ? 4.0 : 2.0));
    }
    return kPi * acc * h / 3.0;
}

}  // namespace

TEST(Path, EndpointsAreCyclic) {
    const PathSpec s = gate_path(GateName::Hadamard, 2.0);
    const PathPoint a = path_eval(0.0, s), b = path_eval(2.0, s);
    EXPECT_DOUBLE_EQ(a.mu, s.mu0);
    EXPECT_NEAR(b.mu, s.mu0, 1e-15);
    EXPECT_NEAR(b.eta - a.eta, 2.0 * kPi, 1e-14);
    EXPECT_LT((zeta_at(0.0, s) - zeta_at(2.0, s)).norm(), 1e-14);
    EXPECT_THROW(path_eval(2.1, s), DomainError);
}

TEST(Path, ValidationRejectsBadSpecs) {
    EXPECT_THROW(validate(PathSpec{0.5, 0.0, 0.1, 0.0, 1.0}), DomainError);
    EXPECT_THROW(validate(PathSpec{-0.1, 0.0, 0.1, 1.0, 1.0}), DomainError);
    EXPECT_THROW(validate(PathSpec{3.0, 0.0, 0.5, 1.0, 1.0}), DomainError);
}

TEST(Drive, EqualsHalfZetaCrossZetaDot) {
    for (GateName g : {GateName::Not, GateName::Hadamard, GateName::PiPhase}) {
        const PathSpec s = gate_path(g);
        for (double t : {0.1, 0.33, 0.5, 0.77, 0.9}) {
            const double h = 1e-6;
            const Vec3 zdot = (zeta_at(t + h, s) - zeta_at(t - h, s)) / (2.0 * h);
            const Vec3 oracle = 0.5 * zeta_at(t, s).cross(zdot);
            EXPECT_LT((effective_drive(t, s) - oracle).norm(), 1e-6 * std::max(1.0, oracle.norm()));
        }
    }
}

TEST(Drive, VanishesAtEndpoints) {
    const PathSpec s = gate_path(GateName::Not);
    EXPECT_LT(effective_drive(0.0, s).norm(), 1e-12);
    EXPECT_LT(effective_drive(1.0, s).norm(), 1e-12);
}

TEST(Drive, Rk4PrecessionReproducesZeta) {
    // zeta' = 2 Omega x zeta integrated from zeta(0)
    const PathSpec s = gate_path(GateName::Hadamard);
    const int n = 4000;
    const double dt = s.total_time / n;
    Vec3 z = zeta_at(0.0, s);
    auto f = [&](double t, const Vec3& v) { return Vec3(2.0 * effective_drive(t, s).cross(v)); };
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        const double t = k * dt;
        const Vec3 k1 = f(t, z), k2 = f(t + dt / 2, z + dt / 2 * k1), k3 = f(t + dt / 2, z + dt / 2 * k2),
                   k4 = f(t + dt, z + dt * k3);
        z += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
        worst = std::max(worst, (z - zeta_at(t + dt, s)).norm());
    }
    EXPECT_LT(worst, 1e-8);
}

TEST(Invariant, EigenvectorsHaveNoDynamicalPhase) {
    const PathSpec s = gate_path(GateName::PiPhase);
    for (double t = 0.0; t <= 1.0; t += 0.01) {
        const InvariantState st = invariant_state(t, s);
        EXPECT_NEAR(st.zeta.norm(), 1.0, 1e-14);
        // phi+ is the +1 eigenvector of zeta.sigma
        EXPECT_LT((sigma_dot(st.zeta) * st.phi_plus - st.phi_plus).norm(), 1e-14);
        EXPECT_LT((sigma_dot(st.zeta) * st.phi_minus + st.phi_minus).norm(), 1e-14);
        const Matrix2 h = sigma_dot(effective_drive(t, s));
        EXPECT_LT(std::abs(st.phi_plus.dot(h * st.phi_plus)), 1e-12);
    }
    const PhaseResult ph = phases(s);
    EXPECT_LT(std::abs(ph.dynamical_plus), 1e-10);
    EXPECT_LT(std::abs(ph.dynamical_minus), 1e-10);
    EXPECT_DOUBLE_EQ(ph.geometric_minus, -ph.geometric_plus);
}

TEST(Phases, GeometricPhaseMatchesSimpson) {
    for (double mu0 : {0.0, 0.5, kPi / 4, kPi / 2}) {
        for (double lam : {0.2, 0.6, 1.0}) {
            if (mu0 + lam > kPi) continue;
            const PathSpec s{mu0, 0.3, lam, 1.0, 0.0};
            EXPECT_NEAR(phases(s).geometric_plus, simpson_theta_plus(mu0, lam), 1e-10);
        }
    }
}

TEST(Phases, IndependentOfGateTime) {
    const PathSpec a{0.4, 0.0, 0.7, 1.0, 0.0};
    PathSpec b = a;
    b.total_time = 3.5;
    EXPECT_NEAR(phases(a).geometric_plus, phases(b).geometric_plus, 1e-13);
}

TEST(SolveLambda, MatchesIndependentRoots) {
    EXPECT_NEAR(solve_lambda(kPi / 2, kPi / 2), kLambdaNot, 1e-10);
    EXPECT_NEAR(solve_lambda(kPi / 4, kPi / 2), kLambdaHad, 1e-10);
    EXPECT_NEAR(solve_lambda(0.0, kPi / 2), kLambdaPhase, 1e-10);
}

TEST(SolveLambda, RealizesThetaModuloPi) {
    for (double mu0 : {0.0, 0.3, kPi / 4, 1.2, kPi / 2}) {
        for (double th : {0.3, kPi / 2, 2.0, 4.0}) {
            double lam = 0.0;
            try {
                lam = solve_lambda(mu0, th);
            } catch (const NoSolutionError&) {
                continue;
            }
            const double g = phases(PathSpec{mu0, 0.0, lam, 1.0, th}).geometric_plus;
            EXPECT_NEAR(std::remainder(g - th, kPi), 0.0, 1e-8) << mu0 << " " << th;
        }
    }
}

TEST(SolveLambda, DomainAndNoSolution) {
    EXPECT_THROW(solve_lambda(-0.1, 1.0), DomainError);
    EXPECT_THROW(solve_lambda(0.5, 0.0), DomainError);
    EXPECT_THROW(solve_lambda(0.5, 7.0), DomainError);
    EXPECT_THROW(solve_lambda(kPi, 1.0), NoSolutionError);
}

TEST(IdealUnitary, IsUnitaryWithRealizedPhase) {
    for (GateName g : {GateName::Not, GateName::Hadamard, GateName::PiPhase}) {
        const PathSpec s = gate_path(g);
        const Matrix2 u = ideal_unitary(s);
        EXPECT_LT((u.adjoint() * u - Matrix2::Identity()).norm(), 1e-14);
        const Matrix2 explicit_u = ideal_unitary(s.mu0, s.eta0, phases(s).geometric_plus);
        EXPECT_LT((u - explicit_u).norm(), 1e-15);
    }
}

TEST(Controls, ProjectOntoOmegaDotSigma) {
    const CatFrame f = cat_frame(0.5, 0.3, FockSpace(30));
    const Matrix b = f.basis();
    const Vec3 w(1.3, -0.7, 2.1);
    const Matrix h = control_hamiltonian(controls_from_drive(w, f), f.c_plus.space).entries;
    Matrix block = b.adjoint() * h * b;
    block -= (block.trace() / 2.0) * Matrix::Identity(2, 2);
    EXPECT_LT((block - Matrix(sigma_dot(w))).norm(), 1e-9);
}

TEST(Controls, TwoQubitProjectionIsControlledOnMinus) {
    const CatFrame f = cat_frame(0.5, 0.0, FockSpace(12));
    const Matrix b = two_mode_cat_basis(f);
    const Vec3 w(0.4, 1.1, -0.8);
    const Matrix h = two_qubit_control_hamiltonian(two_qubit_controls_from_drive(w, f), FockSpace(12, 2)).entries;
    Matrix block = b.adjoint() * h * b;
    Matrix expect = Matrix::Zero(4, 4);
    expect.block(2, 2, 2, 2) = sigma_dot(w);
    const Complex shift = (block - expect).trace() / 4.0;
    EXPECT_LT((block - expect - shift * Matrix::Identity(4, 4)).norm(), 1e-9);
}

TEST(Controls, ScheduleSatisfiesInvariantEquation) {
    const GateModel m;
    const CatFrame f = model_frame(m);
    const PathSpec s = gate_path(GateName::Hadamard);
    PulseSchedule sched = single_qubit_controls(s, f, 20000);
    EXPECT_LT(verify_invariant(s, sched, f, m.kerr, m.eps2()), 1e-5);
    for (double& c : sched.chi) c *= 1.05;
    EXPECT_GT(verify_invariant(s, sched, f, m.kerr, m.eps2()), 1e-3);
}

TEST(Controls, GapMarginWarnsWhenControlsAreLarge) {
    PulseSchedule s{{0.0, 1.0}, {0.0, 50.0}, {0.0, 0.0}};
    std::vector<std::string> seen;
    auto prev = set_warning_handler([&](const std::string& m) { seen.push_back(m); });
    EXPECT_NEAR(gap_margin(s, 100.0), 0.5, 1e-15);
    EXPECT_NEAR(gap_margin(PulseSchedule{{0.0}, {1.0}, {0.0}}, 100.0), 0.01, 1e-15);
    set_warning_handler(prev);
    EXPECT_EQ(seen.size(), 1u);
}

TEST(Schedule, CsvRoundTripIsBitExact) {
    const CatFrame f = cat_frame(0.5, 0.0, FockSpace(20));
    const PulseSchedule s = single_qubit_controls(gate_path(GateName::Hadamard), f, 500);
    const auto p = std::filesystem::temp_directory_path() / "catgate_test_sched.csv";
    write_schedule_csv(p, s);
    const PulseSchedule r = read_schedule_csv(p);
    ASSERT_EQ(r.t.size(), s.t.size());
    for (std::size_t k = 0; k < s.t.size(); ++k) {
        EXPECT_EQ(r.t[k], s.t[k]);
        EXPECT_EQ(r.chi[k], s.chi[k]);
        EXPECT_EQ(r.eps[k], s.eps[k]);
    }
    const TwoQubitPulseSchedule s2 = two_qubit_controls(gate_path(GateName::Not), f, 200);
    write_schedule_csv(p, s2);
    const TwoQubitPulseSchedule r2 = read_two_qubit_schedule_csv(p);
    for (std::size_t k = 0; k < s2.t.size(); ++k) {
        EXPECT_EQ(r2.chi12[k], s2.chi12[k]);
        EXPECT_EQ(r2.lam[k], s2.lam[k]);
        EXPECT_EQ(r2.eps_t[k], s2.eps_t[k]);
    }
}
