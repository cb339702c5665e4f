#include <gtest/gtest.h>

#include <cmath>

#include "catgate/circuit.hpp"
#include "catgate/errors.hpp"
#include "catgate/fock.hpp"

using namespace catgate;

namespace {

CircuitParams device() {
    CircuitParams c;
    c.e_c = two_pi_mhz(25.0);
    c.e_j = two_pi_mhz(180000.0);
    c.e_j_mod = two_pi_mhz(750.0);
    c.n_squids = 1;
    c.omega_p = two_pi_mhz(6000.0);
    c.c_p = 0.2;
    c.v_p = 0.3;
    c.phi_p = 0.4;
    return c;
}

CircuitParams perturbed(CircuitParams c, double d_ec, double d_ej, double d_vp) {
    c.e_c *= 1.0 + d_ec;
    c.e_j *= 1.0 + d_ej;
    c.v_p *= 1.0 + d_vp;
    return c;
}

}  // namespace

TEST(Circuit, DefaultDeviceGivesTargetModel) {
    const EffectiveParams p = effective_params(device());
    EXPECT_NEAR(p.kerr, two_pi_mhz(12.5), 1e-9);
    EXPECT_NEAR(p.alpha(), 0.5, 1e-12);
    EXPECT_NEAR(p.omega_c, std::sqrt(8.0 * device().e_c * device().e_j), 1e-6);
    EXPECT_NEAR(device().phi_zero(), 0.5 / std::pow(180000.0 / (32.0 * 25.0), 0.25), 1e-14);
}

TEST(Circuit, InversionRoundTrip) {
    for (int n : {1, 3, 10}) {
        CircuitParams c = device();
        c.n_squids = n;
        const EffectiveParams p = effective_params(c);
        const InvertedParams r = invert_params(p, n);
        EXPECT_NEAR(r.e_c / c.e_c, 1.0, 1e-12);
        EXPECT_NEAR(r.e_j / c.e_j, 1.0, 1e-12);
        EXPECT_NEAR(r.ej_mod_ratio / (c.e_j_mod / c.e_j), 1.0, 1e-12);
        EXPECT_NEAR(r.omega_p / c.omega_p, 1.0, 1e-12);
    }
    EXPECT_THROW(invert_params(EffectiveParams{}, 1), DomainError);
}

TEST(Circuit, DriveAmplitudeAndPhase) {
    const Complex e = single_photon_drive(2.0, 0.5, 3.0, 0.0, 1.0);
    EXPECT_NEAR(e.real(), 0.0, 1e-15);
    EXPECT_NEAR(e.imag(), -1.5, 1e-15);
    EXPECT_NEAR(std::arg(single_photon_drive(2.0, 0.5, 3.0, 0.7)), -kPi / 2 - 0.7, 1e-14);
}

TEST(Circuit, ShiftsAreFirstOrderInErrors) {
    const CircuitParams c = device();
    const EffectiveParams p0 = effective_params(c);
    for (auto [dc, dj, dv] : {std::tuple{1e-3, 0.0, 0.0}, {0.0, 1e-3, 0.0}, {0.0, 0.0, 1e-3}, {1e-3, -2e-3, 5e-4}}) {
        const EffectiveParams p = effective_params(perturbed(c, dc, dj, dv));
        const ErrorPropagation e = error_propagation(c, dc, dj, dv);
        const double h2 = 1e-5;  // bound on second-order terms at these sizes
        EXPECT_NEAR(p.omega_c / p0.omega_c - 1.0, e.d_omega_c, h2);
        EXPECT_NEAR(p.kerr / p0.kerr - 1.0, e.d_kerr, h2);
        EXPECT_NEAR(p.eps2 / p0.eps2 - 1.0, e.d_eps2, h2);
        EXPECT_NEAR(std::abs(p.eps) / std::abs(p0.eps) - 1.0, e.d_eps, h2);
        EXPECT_NEAR(p.alpha() - p0.alpha(), e.d_alpha_resolved, h2);
    }
    EXPECT_THROW(error_propagation(c, 0.6, 0.0, 0.0), DomainError);
}

TEST(Circuit, QuotedAmplitudeShiftBound) {
    double worst = 0.0;
    for (double dc : {-0.1, 0.1})
        for (double dj : {-0.1, 0.1}) worst = std::max(worst, std::abs(error_propagation(device(), dc, dj, 0.0).d_alpha));
    EXPECT_NEAR(worst, 0.0375, 1e-12);
}

// The closed-form amplitude shift should agree with re-solving
// alpha = sqrt(eps2 / K) at the perturbed parameters.
TEST(Circuit, AmplitudeShiftMatchesResolvedAmplitude) {
    const CircuitParams c = device();
    const EffectiveParams p0 = effective_params(c);
    for (auto [dc, dj] : {std::pair{1e-3, 0.0}, {0.0, 1e-3}, {1e-3, -1e-3}}) {
        const double exact = effective_params(perturbed(c, dc, dj, 0.0)).alpha() - p0.alpha();
        EXPECT_NEAR(error_propagation(c, dc, dj, 0.0).d_alpha, exact, 1e-5) << dc << " " << dj;
    }
}

TEST(Circuit, CoherentInfidelityMatchesOverlap) {
    const FockSpace s(40);
    for (double d : {1e-4, 0.01, 0.0375, 0.2}) {
        const double overlap = std::norm(coherent_state(0.5 + d, s).inner(coherent_state(0.5, s)));
        EXPECT_NEAR(coherent_infidelity(d), 1.0 - overlap, 1e-13);
    }
    EXPECT_NEAR(coherent_infidelity(1e-8), 1e-16, 1e-24);
}

TEST(Circuit, Validation) {
    CircuitParams c = device();
    c.n_squids = 0;
    EXPECT_THROW(effective_params(c), DomainError);
    c = device();
    c.e_c = 0.0;
    EXPECT_THROW(c.n_zero(), DomainError);
}
