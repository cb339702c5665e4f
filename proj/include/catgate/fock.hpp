#pragma once

#include <array>

#include "catgate/types.hpp"

namespace catgate {

/// Truncated Fock space of one or two bosonic modes. Each mode keeps the
/// number states |0> .. |dim-1>; a two-mode space has dim^2 basis states with
/// mode 1 as the outer (slow) Kronecker index.
class FockSpace {
public:
    explicit FockSpace(int dim, int modes = 1);

    int dim() const { return dim_; }
    int modes() const { return modes_; }
    /// Dimension of the full Hilbert space, dim^modes.
    int size() const { return modes_ == 1 ? dim_ : dim_ * dim_; }

    FockSpace single_mode() const { return FockSpace(dim_, 1); }

    friend bool operator==(const FockSpace&, const FockSpace&) = default;

private:
    int dim_;
    int modes_;
};

struct OperatorMatrix {
    FockSpace space;
    Matrix entries;

    OperatorMatrix adjoint() const { return {space, entries.adjoint()}; }
    /// max-abs entry of H - H^dagger
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }
};

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(Complex s, const OperatorMatrix& a);

struct Ket {
    FockSpace space;
    Vector amplitudes;

    double norm() const { return amplitudes.norm(); }
    Complex inner(const Ket& other) const;  // <this|other>
};

/// Even/odd cat-state frame of amplitude alpha = |alpha| e^{i xi}.
struct CatFrame {
    Complex alpha;
    double xi;
    double n_plus;   // N+ = 2[1 + exp(-2|alpha|^2)]
    double n_minus;  // N- = 2[1 - exp(-2|alpha|^2)]
    Ket c_plus;
    Ket c_minus;
    OperatorMatrix projector;

    double amplitude() const { return std::abs(alpha); }
    /// Columns |C+>, |C->.
    Matrix basis() const;
};

struct CatPaulis {
    OperatorMatrix x;
    OperatorMatrix y;
    OperatorMatrix z;
};

/// Annihilation operator of a single-mode space: <n-1|a|n> = sqrt(n).
OperatorMatrix ladder(const FockSpace& space);
/// Annihilation operator of `mode` (1 or 2) on a two-mode space.
OperatorMatrix mode_ladder(const FockSpace& space, int mode);
OperatorMatrix number_operator(const FockSpace& space);
OperatorMatrix identity(const FockSpace& space);

Ket fock_state(const FockSpace& space, int n);

/// Norm-squared weight of the untruncated coherent state beyond |dim-1>.
double coherent_tail_weight(Complex alpha, int dim);

/// Truncated coherent state, renormalized. Warns when the discarded tail
/// exceeds 1e-10.
Ket coherent_state(Complex alpha, const FockSpace& space);

CatFrame cat_frame(double amplitude, double xi, const FockSpace& space);
CatFrame cat_frame(Complex alpha, const FockSpace& space);

/// H = -K a^2+ a^2 + eps2 (e^{2i xi} a^2+ + e^{-2i xi} a^2)
OperatorMatrix kerr_cat_hamiltonian(double kerr, double eps2, double xi, const FockSpace& space);
/// Sum of one Kerr-cat Hamiltonian per mode on a two-mode space.
OperatorMatrix two_mode_kerr_cat_hamiltonian(double kerr, double eps2, double xi,
                                             const FockSpace& space);

CatPaulis cat_qubit_paulis(const CatFrame& frame);

/// Kronecker product A (mode 1) x B (mode 2) of two single-mode operators.
OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b);
Ket tensor(const Ket& a, const Ket& b);

/// Columns |C_i>_1 |C_j>_2 in the order (++, +-, -+, --).
Matrix two_mode_cat_basis(const CatFrame& frame);

struct GapInfo {
    double cat_energy;  // mean energy of the degenerate cat pair
    double gap;         // distance to the nearest other eigenvalue
};

/// Dense diagonalization of the Kerr-cat Hamiltonian.
GapInfo kerr_cat_gap(double kerr, double eps2, double xi, const FockSpace& space);

}  // namespace catgate
