#include "catgate/metrics.hpp"

#include <cmath>

#include "catgate/errors.hpp"

namespace catgate {

namespace {

Matrix2 pauli(int k) {
    Matrix2 m;
    if (k == 0) m << 0, 1, 1, 0;
    if (k == 1) m << 0, -kI, kI, 0;
    if (k == 2) m << 1, 0, 0, -1;
    return m;
}

}  // namespace

void GateTarget::validate() const {
    if (matrix.rows() != matrix.cols() || basis.cols() != matrix.rows())
        throw DimensionMismatchError("gate target matrix and basis disagree");
    const double defect = (matrix.adjoint() * matrix - Matrix::Identity(matrix.rows(), matrix.rows())).cwiseAbs().maxCoeff();
    if (defect > 1e-12) throw DomainError("gate target '" + name + "' is not unitary");
}

GateTarget single_qubit_target(const std::string& name, const Matrix2& u, const CatFrame& frame) {
    GateTarget t{name, u, frame.basis()};
    t.validate();
    return t;
}

GateTarget controlled_target(const std::string& name, const Matrix2& u, const CatFrame& frame) {
    Matrix g = Matrix::Zero(4, 4);
    g.topLeftCorner(2, 2) = Matrix2::Identity();
    g.bottomRightCorner(2, 2) = u;
    GateTarget t{name, g, two_mode_cat_basis(frame)};
    t.validate();
    return t;
}

Complex global_phase(const Matrix& m) {
    Eigen::Index r = 0, c = 0;
    m.cwiseAbs().maxCoeff(&r, &c);
    const double a = std::abs(m(r, c));
    return a > 0.0 ? m(r, c) / a : Complex(1.0);
}

double average_gate_fidelity_block(const Matrix& block, const Matrix& target) {
    if (block.rows() != target.rows() || block.cols() != target.cols())
        throw DimensionMismatchError("gate block and target differ in size");
    const double d = static_cast<double>(target.rows());
    const Matrix m = target.adjoint() * block;
    const double f = ((m * m.adjoint()).trace().real() + std::norm(m.trace())) / (d * (d + 1.0));
    return f;
}

double average_gate_fidelity_columns(const Matrix& ub, const GateTarget& t) {
    if (ub.rows() != t.basis.rows() || ub.cols() != t.basis.cols())
        throw DimensionMismatchError("evolved basis does not match the gate target");
    return average_gate_fidelity_block(t.basis.adjoint() * ub, t.matrix);
}

double average_gate_fidelity(const OperatorMatrix& u, const GateTarget& t) {
    if (u.entries.rows() != t.basis.rows()) throw DimensionMismatchError("operator and gate target live on different spaces");
    return average_gate_fidelity_columns(u.entries * t.basis, t);
}

double state_fidelity(const DensityMatrix& rho, const Ket& psi) {
    if (!(rho.space == psi.space)) throw DimensionMismatchError("state and ket live on different spaces");
    return psi.amplitudes.dot(rho.entries * psi.amplitudes).real();
}

double state_fidelity(const Ket& phi, const Ket& psi) { return std::norm(psi.inner(phi)); }

Populations populations(const Vector& psi, const CatFrame& f) {
    if (psi.size() != f.c_plus.amplitudes.size()) throw DimensionMismatchError("state does not match the cat frame");
    const double pp = std::norm(f.c_plus.amplitudes.dot(psi));
    const double pm = std::norm(f.c_minus.amplitudes.dot(psi));
    return {pp, pm, psi.squaredNorm() - pp - pm};
}

Populations populations(const Ket& psi, const CatFrame& f) { return populations(psi.amplitudes, f); }

Populations populations(const DensityMatrix& rho, const CatFrame& f) {
    if (!(rho.space == f.c_plus.space)) throw DimensionMismatchError("state does not match the cat frame");
    const double pp = f.c_plus.amplitudes.dot(rho.entries * f.c_plus.amplitudes).real();
    const double pm = f.c_minus.amplitudes.dot(rho.entries * f.c_minus.amplitudes).real();
    return {pp, pm, rho.entries.trace().real() - pp - pm};
}

double superposition_fidelity(const Matrix2& u, int sign) {
    if (sign > 0) return 0.5 * std::norm(u(0, 0) + u(1, 0));
    if (sign < 0) return 0.5 * std::norm(u(0, 1) - u(1, 1));
    throw DomainError("input sign must be +1 or -1");
}

double superposition_fidelity(const OperatorMatrix& u, const CatFrame& f, int sign) {
    const Matrix b = f.basis();
    const Matrix2 block = b.adjoint() * u.entries * b;
    return superposition_fidelity(block, sign);
}

BlochSample bloch_vector(const Eigen::Vector2cd& c) {
    const double n2 = c.squaredNorm();
    const double leak = 1.0 - n2;
    if (leak > 0.05 || n2 <= 0.0) return {Vec3::Zero(), false};
    const Eigen::Vector2cd v = c / std::sqrt(n2);
    Vec3 r;
    for (int k = 0; k < 3; ++k) r(k) = v.dot(pauli(k) * v).real();
    return {r, true};
}

BlochSample bloch_vector(const Vector& psi, const CatFrame& f) {
    const Eigen::Vector2cd c(f.c_plus.amplitudes.dot(psi), f.c_minus.amplitudes.dot(psi));
    return bloch_vector(c);
}

std::vector<BlochSample> bloch_trajectory(const std::vector<Eigen::Vector2cd>& states) {
    std::vector<BlochSample> out;
    out.reserve(states.size());
    for (const auto& s : states) out.push_back(bloch_vector(s));
    return out;
}

std::vector<BlochSample> bloch_trajectory(const std::vector<Vector>& states, const CatFrame& f) {
    std::vector<BlochSample> out;
    out.reserve(states.size());
    for (const auto& s : states) out.push_back(bloch_vector(s, f));
    return out;
}

double signed_solid_angle(const std::vector<Vec3>& loop) {
    if (loop.size() < 3) return 0.0;
    Vec3 ref = Vec3::Zero();
    for (const auto& p : loop) ref += p;
    if (ref.norm() < 1e-9) throw NumericError("solid angle: loop has no well-defined interior reference point");
    ref.normalize();
    // sum of signed triangles (ref, p_k, p_k+1)
    double total = 0.0;
    for (std::size_t k = 0; k < loop.size(); ++k) {
        const Vec3& a = loop[k];
        const Vec3& b = loop[(k + 1) % loop.size()];
        const double num = ref.dot(a.cross(b));
        const double den = 1.0 + ref.dot(a) + ref.dot(b) + a.dot(b);
        total += 2.0 * std::atan2(num, den);
    }
    return total;
}

double mean_photon_number(const Vector& psi, const FockSpace& space) {
    const int d = space.dim();
    double n = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        const double count = space.modes() == 1 ? static_cast<double>(i) : static_cast<double>(i / d + i % d);
        n += count * std::norm(psi(i));
    }
    return n;
}

double mean_photon_number(const Ket& psi) { return mean_photon_number(psi.amplitudes, psi.space); }

double mean_photon_number(const DensityMatrix& rho) {
    const int d = rho.space.dim();
    double n = 0.0;
    for (Eigen::Index i = 0; i < rho.entries.rows(); ++i) {
        const double count = rho.space.modes() == 1 ? static_cast<double>(i) : static_cast<double>(i / d + i % d);
        n += count * rho.entries(i, i).real();
    }
    return n;
}

}  // namespace catgate
