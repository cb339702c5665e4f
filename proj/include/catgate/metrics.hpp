#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catgate/fock.hpp"
#include "catgate/propagate.hpp"

namespace catgate {

/// Target gate on the computational subspace spanned by the columns of `basis`.
struct GateTarget {
    std::string name;
    Matrix matrix;  // D x D, in the order of the basis columns
    Matrix basis;   // full-space columns

    int dimension() const { return static_cast<int>(matrix.rows()); }
    void validate() const;
};

GateTarget single_qubit_target(const std::string& name, const Matrix2& u, const CatFrame& frame);
/// |C+><C+| x 1 + |C-><C-| x u_target, control = mode 1.
GateTarget controlled_target(const std::string& name, const Matrix2& u_target, const CatFrame& frame);

/// Phase of the largest-magnitude entry, for comparisons up to a global phase.
Complex global_phase(const Matrix& m);

/// [Tr(M M^+) + |Tr M|^2] / [D(D+1)] with M = G^+ B^+ U B.
double average_gate_fidelity(const OperatorMatrix& u, const GateTarget& target);
/// Same, from the evolved basis columns U B.
double average_gate_fidelity_columns(const Matrix& evolved_basis, const GateTarget& target);
/// Same, from the D x D block B^+ U B directly.
double average_gate_fidelity_block(const Matrix& block, const Matrix& target);

double state_fidelity(const DensityMatrix& rho, const Ket& psi);
double state_fidelity(const Ket& phi, const Ket& psi);

struct Populations {
    double p_plus;
    double p_minus;
    double leakage;
};

Populations populations(const Ket& psi, const CatFrame& frame);
Populations populations(const DensityMatrix& rho, const CatFrame& frame);
Populations populations(const Vector& psi, const CatFrame& frame);

/// F^+ = |<C+|U|C+> + <C-|U|C+>|^2 / 2 and F^- = |<C+|U|C-> - <C-|U|C->|^2 / 2.
double superposition_fidelity(const Matrix2& block, int input_sign);
double superposition_fidelity(const OperatorMatrix& u, const CatFrame& frame, int input_sign);

struct BlochSample {
    Vec3 r;
    bool valid;  // false when leakage exceeds 0.05
};

BlochSample bloch_vector(const Eigen::Vector2cd& c);
BlochSample bloch_vector(const Vector& psi, const CatFrame& frame);
std::vector<BlochSample> bloch_trajectory(const std::vector<Eigen::Vector2cd>& states);
std::vector<BlochSample> bloch_trajectory(const std::vector<Vector>& states, const CatFrame& frame);

/// Signed solid angle enclosed by a closed loop of unit vectors
/// (right-handed, polygon closed implicitly).
double signed_solid_angle(const std::vector<Vec3>& loop);

double mean_photon_number(const Ket& psi);
double mean_photon_number(const DensityMatrix& rho);
/// Works for single- or two-mode spaces (total photon number).
double mean_photon_number(const Vector& psi, const FockSpace& space);

}  // namespace catgate
