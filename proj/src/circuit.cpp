#include "catgate/circuit.hpp"

#include <cmath>

#include "catgate/errors.hpp"

namespace catgate {

void CircuitParams::validate() const {
    if (!(e_c > 0.0)) throw DomainError("E_C must be positive");
    if (!(e_j > 0.0)) throw DomainError("E_J must be positive");
    if (e_j_mod < 0.0) throw DomainError("E~_J must be non-negative");
    if (n_squids < 1) throw DomainError("SQUID count must be at least 1");
    if (c_p < 0.0 || v_p < 0.0) throw DomainError("gate capacitance and voltage must be non-negative");
    if (!(charge > 0.0)) throw DomainError("charge unit must be positive");
}

double CircuitParams::n_zero() const {
    validate();
    return std::pow(e_j / (32.0 * n_squids * e_c), 0.25);
}

double CircuitParams::phi_zero() const { return 1.0 / (2.0 * n_zero()); }

double EffectiveParams::alpha() const { return std::sqrt(eps2 / kerr); }

Complex single_photon_drive(double e_c, double c_p, double v_p, double phi_p, double charge) {
    if (!(charge > 0.0)) throw DomainError("charge unit must be positive");
    return Complex(0.0, -1.0) * (e_c * c_p * v_p / (2.0 * charge)) * std::polar(1.0, -phi_p);
}

EffectiveParams effective_params(const CircuitParams& cp) {
    cp.validate();
    const double n = cp.n_squids;
    EffectiveParams p{};
    p.omega_c = std::sqrt(8.0 * cp.e_c * cp.e_j / n);
    p.kerr = cp.e_c / (2.0 * n * n);
    p.eps2 = p.omega_c * cp.e_j_mod / (8.0 * cp.e_j);
    p.chi = p.omega_c - cp.omega_p;
    p.eps = single_photon_drive(cp.e_c, cp.c_p, cp.v_p, cp.phi_p, cp.charge);
    return p;
}

InvertedParams invert_params(const EffectiveParams& ep, int n_squids) {
    if (n_squids < 1) throw DomainError("SQUID count must be at least 1");
    if (!(ep.kerr > 0.0) || !(ep.omega_c > 0.0)) throw DomainError("K and omega_c must be positive");
    const double n = n_squids;
    InvertedParams r{};
    r.e_c = 2.0 * n * n * ep.kerr;
    r.e_j = n * ep.omega_c * ep.omega_c / (8.0 * r.e_c);
    r.ej_mod_ratio = 8.0 * ep.eps2 / ep.omega_c;
    r.omega_p = ep.omega_c - ep.chi;
    return r;
}

ErrorPropagation error_propagation(const CircuitParams& cp, double d_ec, double d_ej, double d_vp) {
    if (std::abs(d_ec) >= 0.5 || std::abs(d_ej) >= 0.5 || std::abs(d_vp) >= 0.5)
        throw DomainError("first-order error propagation needs fractional errors below 0.5");
    const EffectiveParams p = effective_params(cp);
    ErrorPropagation e{};
    e.d_omega_c = 0.5 * (d_ec + d_ej);
    e.d_kerr = d_ec;
    e.d_eps2 = 0.5 * (d_ec - d_ej);  // E~_J held fixed
    e.d_eps = d_ec + d_vp;
    e.d_alpha = -(p.alpha() / 4.0) * (2.0 * d_ec - d_ej);
    e.d_alpha_resolved = 0.5 * p.alpha() * (e.d_eps2 - e.d_kerr);
    return e;
}

double coherent_infidelity(double d_alpha) { return -std::expm1(-d_alpha * d_alpha); }

}  // namespace catgate
