#include "catgate/fock.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "catgate/errors.hpp"

namespace catgate {

namespace {

void require_same_space(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (!(a.space == b.space)) throw DimensionMismatchError("operators act on different Fock spaces");
}

}  // namespace

FockSpace::FockSpace(int dim, int modes) : dim_(dim), modes_(modes) {
    if (dim < 2) throw InvalidSpaceError("Fock truncation must be at least 2, got " + std::to_string(dim));
    if (modes != 1 && modes != 2) throw InvalidSpaceError("only one- and two-mode spaces are supported");
}

double OperatorMatrix::hermiticity_defect() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a, b);
    return {a.space, a.entries + b.entries};
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a, b);
    return {a.space, a.entries - b.entries};
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a, b);
    return {a.space, a.entries * b.entries};
}

OperatorMatrix operator*(Complex s, const OperatorMatrix& a) { return {a.space, s * a.entries}; }

Complex Ket::inner(const Ket& other) const {
    if (!(space == other.space)) throw DimensionMismatchError("kets live in different Fock spaces");
    return amplitudes.dot(other.amplitudes);
}

Matrix CatFrame::basis() const {
    Matrix b(c_plus.amplitudes.size(), 2);
    b.col(0) = c_plus.amplitudes;
    b.col(1) = c_minus.amplitudes;
    return b;
}

OperatorMatrix ladder(const FockSpace& space) {
    if (space.modes() != 1) throw InvalidSpaceError("ladder() needs a single-mode space; use mode_ladder()");
    const int d = space.dim();
    Matrix a = Matrix::Zero(d, d);
    for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {space, a};
}

OperatorMatrix mode_ladder(const FockSpace& space, int mode) {
    if (space.modes() != 2) throw InvalidSpaceError("mode_ladder() needs a two-mode space");
    const FockSpace single = space.single_mode();
    const OperatorMatrix a = ladder(single);
    const OperatorMatrix one = identity(single);
    if (mode == 1) return tensor(a, one);
    if (mode == 2) return tensor(one, a);
    throw InvalidSpaceError("mode index must be 1 or 2");
}

OperatorMatrix number_operator(const FockSpace& space) {
    if (space.modes() == 1) {
        Matrix n = Matrix::Zero(space.dim(), space.dim());
        for (int k = 0; k < space.dim(); ++k) n(k, k) = static_cast<double>(k);
        return {space, n};
    }
    const OperatorMatrix a1 = mode_ladder(space, 1);
    const OperatorMatrix a2 = mode_ladder(space, 2);
    return a1.adjoint() * a1 + a2.adjoint() * a2;
}

OperatorMatrix identity(const FockSpace& space) {
    return {space, Matrix::Identity(space.size(), space.size())};
}

Ket fock_state(const FockSpace& space, int n) {
    if (n < 0 || n >= space.size()) throw DomainError("Fock index out of range");
    Vector v = Vector::Zero(space.size());
    v(n) = 1.0;
    return {space, v};
}

double coherent_tail_weight(Complex alpha, int dim) {
    // 1 - exp(-|a|^2) sum_{n<dim} |a|^{2n}/n!, summed in a form that keeps
    // precision for tiny tails.
    const double x = std::norm(alpha);
    if (x == 0.0) return 0.0;
    double term = std::exp(-x);
    for (int n = 1; n <= dim; ++n) term *= x / n;  // Poisson weight at n = dim
    double tail = 0.0;
    for (int n = dim; n < dim + 400; ++n) {
        tail += term;
        term *= x / (n + 1);
        if (term < 1e-300 || term < tail * 1e-18) break;
    }
    return tail;
}

Ket coherent_state(Complex alpha, const FockSpace& space) {
    if (space.modes() != 1) throw InvalidSpaceError("coherent_state() needs a single-mode space");
    const int d = space.dim();
    const double tail = coherent_tail_weight(alpha, d);
    if (tail > 1e-10) {
        std::ostringstream msg;
        msg << "coherent state |alpha|=" << std::abs(alpha) << " loses weight " << tail
            << " beyond Fock dim " << d;
        warn(msg.str());
    }
    Vector c(d);
    c(0) = 1.0;
    for (int n = 1; n < d; ++n) c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    c.normalize();
    return {space, c};
}

CatFrame cat_frame(double amplitude, double xi, const FockSpace& space) {
    if (!(amplitude > 0.0)) throw DegenerateFrameError("cat frame needs alpha != 0 (|C-> is undefined at alpha = 0)");
    const Complex alpha = std::polar(amplitude, xi);
    const Ket plus = coherent_state(alpha, space);
    const Ket minus = coherent_state(-alpha, space);

    const double x = 2.0 * amplitude * amplitude;
    CatFrame f{alpha, xi, 2.0 * (1.0 + std::exp(-x)), -2.0 * std::expm1(-x),
               {space, (plus.amplitudes + minus.amplitudes).normalized()},
               {space, (plus.amplitudes - minus.amplitudes).normalized()},
               {space, Matrix()}};
    f.projector.entries = f.c_plus.amplitudes * f.c_plus.amplitudes.adjoint() +
                          f.c_minus.amplitudes * f.c_minus.amplitudes.adjoint();
    return f;
}

CatFrame cat_frame(Complex alpha, const FockSpace& space) {
    return cat_frame(std::abs(alpha), std::arg(alpha), space);
}

OperatorMatrix kerr_cat_hamiltonian(double kerr, double eps2, double xi, const FockSpace& space) {
    if (!(kerr > 0.0)) throw DomainError("Kerr nonlinearity must be positive");
    if (eps2 < 0.0) throw DomainError("two-photon drive must be non-negative");
    const OperatorMatrix a = ladder(space);
    const Matrix a2 = a.entries * a.entries;
    const Matrix ad2 = a2.adjoint();
    const Complex phase = std::polar(1.0, 2.0 * xi);
    Matrix h = -kerr * ad2 * a2 + eps2 * (phase * ad2 + std::conj(phase) * a2);
    // exact Hermitian symmetrization removes rounding asymmetry
    h = 0.5 * (h + h.adjoint()).eval();
    return {space, h};
}

OperatorMatrix two_mode_kerr_cat_hamiltonian(double kerr, double eps2, double xi,
                                             const FockSpace& space) {
    if (space.modes() != 2) throw InvalidSpaceError("two-mode Hamiltonian needs a two-mode space");
    const FockSpace single = space.single_mode();
    const OperatorMatrix h = kerr_cat_hamiltonian(kerr, eps2, xi, single);
    const OperatorMatrix one = identity(single);
    return tensor(h, one) + tensor(one, h);
}

CatPaulis cat_qubit_paulis(const CatFrame& frame) {
    const Vector& p = frame.c_plus.amplitudes;
    const Vector& m = frame.c_minus.amplitudes;
    const Matrix raise = p * m.adjoint();  // |C+><C-|
    const Matrix lower = m * p.adjoint();  // |C-><C+|
    const FockSpace& s = frame.c_plus.space;
    return {{s, raise + lower},
            {s, kI * (lower - raise)},
            {s, raise * lower - lower * raise}};
}

OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.space.modes() != 1 || b.space.modes() != 1 || !(a.space == b.space))
        throw DimensionMismatchError("tensor() needs two single-mode operators on the same truncation");
    const int d = a.space.dim();
    Matrix k(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) k.block(i * d, j * d, d, d) = a.entries(i, j) * b.entries;
    return {FockSpace(d, 2), k};
}

Ket tensor(const Ket& a, const Ket& b) {
    if (a.space.modes() != 1 || b.space.modes() != 1 || !(a.space == b.space))
        throw DimensionMismatchError("tensor() needs two single-mode kets on the same truncation");
    const int d = a.space.dim();
    Vector v(d * d);
    for (int i = 0; i < d; ++i) v.segment(i * d, d) = a.amplitudes(i) * b.amplitudes;
    return {FockSpace(d, 2), v};
}

Matrix two_mode_cat_basis(const CatFrame& frame) {
    const std::array<const Ket*, 2> cats{&frame.c_plus, &frame.c_minus};
    const int d = frame.c_plus.space.dim();
    Matrix b(d * d, 4);
    int col = 0;
    for (const Ket* c1 : cats)
        for (const Ket* c2 : cats) b.col(col++) = tensor(*c1, *c2).amplitudes;
    return b;
}

GapInfo kerr_cat_gap(double kerr, double eps2, double xi, const FockSpace& space) {
    const OperatorMatrix h = kerr_cat_hamiltonian(kerr, eps2, xi, space);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& e = es.eigenvalues();
    // |+-alpha> have energy K|alpha|^4 = eps2^2/K; the cat pair is the two
    // eigenvalues closest to it.
    const double target = eps2 * eps2 / kerr;
    std::vector<double> v(e.data(), e.data() + e.size());
    std::sort(v.begin(), v.end(), [&](double a, double b) { return std::abs(a - target) < std::abs(b - target); });
    const double cat = 0.5 * (v[0] + v[1]);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t k = 2; k < v.size(); ++k) gap = std::min(gap, std::abs(v[k] - cat));
    return {cat, gap};
}

}  // namespace catgate
