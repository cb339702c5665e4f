#include "catgate/propagate.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

#include "catgate/errors.hpp"

namespace catgate {

namespace {

Matrix expm_step(const Matrix& h, double dt) { return (Complex(0.0, -dt) * h).exp(); }

/// exp(-i h dt) x by a truncated Taylor series with substeps of norm <= 1.
Matrix taylor_step(const Matrix& h, double dt, const Matrix& x) {
    const double hn = h.cwiseAbs().rowwise().sum().maxCoeff() * dt;
    const int sub = std::max(1, static_cast<int>(std::ceil(hn)));
    const Complex f(0.0, -dt / sub);
    Matrix acc = x;
    Matrix term(x.rows(), x.cols());
    for (int s = 0; s < sub; ++s) {
        term = acc;
        for (int k = 1; k < 60; ++k) {
            term = (f / static_cast<double>(k)) * (h * term);
            acc += term;
            if (term.norm() <= 1e-17 * acc.norm()) break;
        }
    }
    return acc;
}

OperatorMatrix midpoint_hamiltonian(const Schedule& s, std::size_t k) {
    OperatorMatrix h = s.hamiltonian_at(0.5 * (s.grid[k] + s.grid[k + 1]));
    if (!(h.space == s.space)) throw DimensionMismatchError("Hamiltonian callback returned an operator on another space");
    const double scale = std::max(1.0, h.entries.cwiseAbs().maxCoeff());
    if (h.hermiticity_defect() > 1e-12 * scale) throw NumericError("Hamiltonian is not Hermitian");
    return h;
}

class StepCache {
public:
    explicit StepCache(const Schedule& s) : s_(s) {}

    const Matrix& propagator(std::size_t k) {
        const double dt = s_.grid[k + 1] - s_.grid[k];
        if (!(s_.time_independent && valid_ && dt == dt_)) {
            u_ = expm_step(midpoint_hamiltonian(s_, k).entries, dt);
            dt_ = dt;
            valid_ = true;
        }
        return u_;
    }

    const Matrix& hamiltonian(std::size_t k) {
        if (!(s_.time_independent && h_valid_)) {
            h_ = midpoint_hamiltonian(s_, k).entries;
            h_valid_ = true;
        }
        return h_;
    }

private:
    const Schedule& s_;
    Matrix u_, h_;
    double dt_ = 0.0;
    bool valid_ = false;
    bool h_valid_ = false;
};

bool use_expm(StepMethod m, const FockSpace& space, Eigen::Index cols) {
    if (m == StepMethod::Expm) return true;
    if (m == StepMethod::Taylor) return false;
    return space.size() <= 100 || cols * 4 >= space.size();
}

struct Recorder {
    SimResult& out;
    const IntegratorOptions& opts;
    const FockSpace& space;
    std::vector<std::size_t> marks;
    std::size_t next = 0;

    void maybe(std::size_t step, double t, const Matrix& x) {
        if (next >= marks.size() || marks[next] != step) return;
        ++next;
        out.times.push_back(t);
        if (opts.keep_states) out.states.push_back(x);
        if (opts.observer) opts.observer(t, x);
        out.diagnostics.max_tail_weight = std::max(out.diagnostics.max_tail_weight, tail_weight(x, space, out.density));
    }
};

}  // namespace

DensityMatrix DensityMatrix::pure(const Ket& psi) {
    return {psi.space, psi.amplitudes * psi.amplitudes.adjoint()};
}

double DensityMatrix::trace_defect() const { return std::abs(entries.trace() - 1.0); }

double DensityMatrix::hermiticity_defect() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
    const Matrix herm = 0.5 * (entries + entries.adjoint());
    return Eigen::SelfAdjointEigenSolver<Matrix>(herm, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

void DensityMatrix::validate() const {
    if (entries.rows() != space.size() || entries.cols() != space.size())
        throw DimensionMismatchError("density matrix size does not match its space");
    if (hermiticity_defect() > 1e-10) throw DomainError("density matrix is not Hermitian");
    if (trace_defect() > 1e-8) throw DomainError("density matrix trace differs from 1");
    if (min_eigenvalue() < -1e-8) throw DomainError("density matrix has a negative eigenvalue");
}

void validate(const Schedule& s) {
    if (s.grid.size() < 2) throw DomainError("propagation grid needs at least two points");
    for (std::size_t k = 0; k + 1 < s.grid.size(); ++k)
        if (!(s.grid[k + 1] > s.grid[k])) throw DomainError("propagation grid must be strictly increasing");
    if (!s.hamiltonian_at) throw DomainError("schedule has no Hamiltonian callback");
}

std::vector<std::size_t> snapshot_steps(std::size_t n, std::size_t max_snapshots) {
    const std::size_t m = std::min(n + 1, std::max<std::size_t>(max_snapshots, 2));
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t s = static_cast<std::size_t>(std::llround(static_cast<double>(k) * n / (m - 1)));
        if (out.empty() || s != out.back()) out.push_back(s);
    }
    return out;
}

double tail_weight(const Matrix& x, const FockSpace& space, bool density) {
    const int d = space.dim();
    auto top = [&](Eigen::Index i) {
        if (space.modes() == 1) return i == d - 1;
        return i / d == d - 1 || i % d == d - 1;
    };
    double w = 0.0;
    if (density) {
        for (Eigen::Index i = 0; i < x.rows(); ++i)
            if (top(i)) w += x(i, i).real();
        return w;
    }
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        double wc = 0.0;
        for (Eigen::Index i = 0; i < x.rows(); ++i)
            if (top(i)) wc += std::norm(x(i, c));
        w = std::max(w, wc / std::max(1e-300, x.col(c).squaredNorm()));
    }
    return w;
}

SimResult evolve_columns(const Schedule& s, const Matrix& x0, const IntegratorOptions& opts) {
    validate(s);
    if (!(opts.tol > 0.0)) throw DomainError("tolerance must be positive");
    if (x0.rows() != s.space.size()) throw DimensionMismatchError("initial state size does not match the schedule space");
    const std::size_t n = s.grid.size() - 1;
    SimResult out;
    out.diagnostics.steps = n;
    Recorder rec{out, opts, s.space, snapshot_steps(n, opts.max_snapshots)};
    const bool expm = use_expm(opts.method, s.space, x0.cols());
    StepCache cache(s);

    Matrix x = x0;
    rec.maybe(0, s.grid[0], x);
    for (std::size_t k = 0; k < n; ++k) {
        if (expm)
            x = cache.propagator(k) * x;
        else
            x = taylor_step(cache.hamiltonian(k), s.grid[k + 1] - s.grid[k], x);
        rec.maybe(k + 1, s.grid[k + 1], x);
    }
    double drift = 0.0;
    for (Eigen::Index c = 0; c < x.cols(); ++c) drift = std::max(drift, std::abs(x.col(c).norm() - x0.col(c).norm()));
    out.diagnostics.norm_drift = drift;
    if (!(drift <= 100.0 * opts.tol)) {
        std::ostringstream msg;
        msg << "integration failure: norm drift " << drift;
        throw NumericError(msg.str());
    }
    out.final_state = std::move(x);
    return out;
}

SimResult evolve_state(const Schedule& s, const Ket& psi0, const IntegratorOptions& opts) {
    if (!(psi0.space == s.space)) throw DimensionMismatchError("initial ket lives on another space");
    if (std::abs(psi0.norm() - 1.0) > 1e-10) throw DomainError("initial ket must be normalized");
    return evolve_columns(s, psi0.amplitudes, opts);
}

OperatorMatrix evolution_operator(const Schedule& s, const IntegratorOptions& opts) {
    validate(s);
    const Eigen::Index d = s.space.size();
    Matrix u;
    if (use_expm(opts.method, s.space, d)) {
        StepCache cache(s);
        u = Matrix::Identity(d, d);
        for (std::size_t k = 0; k + 1 < s.grid.size(); ++k) u = cache.propagator(k) * u;
    } else {
        IntegratorOptions o = opts;
        o.keep_states = false;
        o.observer = nullptr;
        u = evolve_columns(s, Matrix::Identity(d, d), o).final_state;
    }
    const double defect = (u.adjoint() * u - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > 10.0 * opts.tol) throw NumericError("evolution operator lost unitarity: " + std::to_string(defect));
    return {s.space, u};
}

SimResult lindblad_evolve(const Schedule& s, const DensityMatrix& rho0, double kappa, double kappa_phi,
                          const IntegratorOptions& opts) {
    validate(s);
    if (s.space.modes() != 1) throw InvalidSpaceError("lindblad_evolve supports single-mode spaces");
    if (kappa < 0.0 || kappa_phi < 0.0) throw DomainError("decay rates must be non-negative");
    if (!(rho0.space == s.space)) throw DimensionMismatchError("initial density matrix lives on another space");
    rho0.validate();

    const int d = s.space.dim();
    // D rho = A o rho + B o shift(rho), shift(rho)_mn = rho_{m+1,n+1}
    Eigen::MatrixXd A(d, d), B = Eigen::MatrixXd::Zero(d, d);
    for (int m = 0; m < d; ++m)
        for (int k = 0; k < d; ++k) {
            A(m, k) = -0.5 * kappa * (m + k) - 0.5 * kappa_phi * (m - k) * (m - k);
            if (m + 1 < d && k + 1 < d) B(m, k) = kappa * std::sqrt(static_cast<double>((m + 1) * (k + 1)));
        }
    const bool dissipative = kappa > 0.0 || kappa_phi > 0.0;
    auto apply_d = [&](const Matrix& r) {
        Matrix out = A.cast<Complex>().cwiseProduct(r);
        out.topLeftCorner(d - 1, d - 1) += B.topLeftCorner(d - 1, d - 1).cast<Complex>().cwiseProduct(r.bottomRightCorner(d - 1, d - 1));
        return out;
    };
    // fourth-order Taylor of exp(h D), identical to RK4 for this linear generator
    auto dissipate = [&](Matrix& r, double h) {
        Matrix term = r, acc = r;
        for (int k = 1; k <= 4; ++k) {
            term = (h / k) * apply_d(term);
            acc += term;
        }
        r = std::move(acc);
    };

    const std::size_t n = s.grid.size() - 1;
    SimResult out;
    out.density = true;
    out.diagnostics.steps = n;
    out.diagnostics.min_eigenvalue = rho0.min_eigenvalue();
    Recorder rec{out, opts, s.space, snapshot_steps(n, opts.max_snapshots)};
    StepCache cache(s);

    Matrix rho = rho0.entries;
    std::size_t checks = 0;
    auto check = [&](bool force) {
        if (!force && (checks++ % 10) != 0) return;
        const double ev = DensityMatrix{s.space, rho}.min_eigenvalue();
        out.diagnostics.min_eigenvalue = std::min(out.diagnostics.min_eigenvalue, ev);
        if (ev < -1e-6) throw NumericError("integration failure: density matrix eigenvalue " + std::to_string(ev));
    };
    rec.maybe(0, s.grid[0], rho);
    for (std::size_t k = 0; k < n; ++k) {
        const double dt = s.grid[k + 1] - s.grid[k];
        if (dissipative) dissipate(rho, 0.5 * dt);
        const Matrix& u = cache.propagator(k);
        rho = u * rho * u.adjoint();
        if (dissipative) dissipate(rho, 0.5 * dt);
        rho = 0.5 * (rho + rho.adjoint()).eval();
        const std::size_t before = rec.next;
        rec.maybe(k + 1, s.grid[k + 1], rho);
        if (rec.next != before) check(k + 1 == n);
    }
    const double drift = std::abs(rho.trace() - 1.0);
    out.diagnostics.norm_drift = drift;
    if (drift > 1e-7) throw NumericError("integration failure: trace drift " + std::to_string(drift));
    out.final_state = std::move(rho);
    return out;
}

}  // namespace catgate
