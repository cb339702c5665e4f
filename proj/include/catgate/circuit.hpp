#pragma once

#include "catgate/types.hpp"

namespace catgate {

/// SQUID-array resonator parameters. Energies and frequencies share one
/// angular unit (rad/us unless stated otherwise by the caller).
struct CircuitParams {
    double e_c = 0.0;
    double e_j = 0.0;
    double e_j_mod = 0.0;  // flux-modulation amplitude E~_J
    int n_squids = 1;
    double v_p = 0.0;      // gate-voltage amplitude
    double c_p = 0.0;      // gate capacitance
    double omega_p = 0.0;  // single-photon drive frequency
    double phi_p = 0.0;    // single-photon drive phase
    double charge = 1.0;   // Cooper-pair charge unit e, in the caller's units

    void validate() const;
    /// [E_J / (32 N E_C)]^{1/4}
    double n_zero() const;
    /// 1 / (2 n0)
    double phi_zero() const;
    /// 2 omega_p, the flux-modulation frequency
    double omega_2p() const { return 2.0 * omega_p; }
    /// -2 xi for a pump phase xi
    static double phi_2p(double xi) { return -2.0 * xi; }
};

struct EffectiveParams {
    double omega_c;  // sqrt(8 E_C E_J / N)
    double kerr;     // E_C / (2 N^2)
    double eps2;     // omega_c E~_J / (8 E_J)
    double chi;      // omega_c - omega_p
    Complex eps;     // -i E_C C_p V_p / (2e) exp(-i phi_p)

    double alpha() const;  // sqrt(eps2 / K)
};

EffectiveParams effective_params(const CircuitParams& cp);

/// Recovers (E_C, E~_J/E_J, omega_p) from (K, eps2, omega_c, chi) at fixed N.
struct InvertedParams {
    double e_c;
    double e_j;
    double ej_mod_ratio;
    double omega_p;
};

InvertedParams invert_params(const EffectiveParams& ep, int n_squids);

/// E_C C_p V_p / (2e) with the -i exp(-i phi_p) phase applied.
Complex single_photon_drive(double e_c, double c_p, double v_p, double phi_p, double charge = 1.0);

/// First-order shifts from fractional errors dE_C/E_C, dE_J/E_J, dV_p/V_p.
struct ErrorPropagation {
    double d_omega_c;  // fractional
    double d_kerr;     // fractional
    double d_eps2;     // fractional
    double d_eps;      // fractional
    double d_alpha;    // absolute, -(alpha/4)(2 dE_C/E_C - dE_J/E_J)
    double d_alpha_resolved;  // absolute, first order of sqrt(eps2'/K') - alpha
};

ErrorPropagation error_propagation(const CircuitParams& cp, double d_ec, double d_ej, double d_vp);

/// 1 - |<alpha + d|alpha>|^2 for real amplitudes, closed form exp(-d^2).
double coherent_infidelity(double d_alpha);

}  // namespace catgate
