#include "catgate/synth.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <sstream>

#include "catgate/csv.hpp"
#include "catgate/errors.hpp"

namespace catgate {

namespace {

constexpr double kQuadTol = 1e-10;

// Adaptive Gauss-Kronrod; Boost's tolerance is relative, so integrands that
// vanish identically get a shallow depth and are judged on absolute error.
template <class F>
double integrate(F f, double a, double b, unsigned max_depth = 15) {
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, max_depth, 1e-14, &err);
    if (!std::isfinite(v) || err > kQuadTol)
        throw NumericError("phase quadrature did not converge (error estimate " + std::to_string(err) + ")");
    return v;
}

double theta_plus(double mu0, double lambda) {
    // Theta+ in u = pi t / T; independent of T.
    return integrate(
        [=](double u) {
            const double s = std::sin(u);
            const double h = std::sin(0.5 * (mu0 + lambda * s * s));
            return kPi * s * h * h;
        },
        0.0, kPi);
}

Matrix2 pauli_dot(const Vec3& v) {
    Matrix2 m;
    m << v.z(), Complex(v.x(), -v.y()), Complex(v.x(), v.y()), -v.z();
    return m;
}

}  // namespace

void validate(const PathSpec& spec) {
    if (!(spec.total_time > 0.0)) throw DomainError("gate time T must be positive");
    if (spec.mu0 < 0.0 || spec.mu0 > kPi) throw DomainError("mu0 must lie in [0, pi]");
    if (spec.mu0 + spec.lambda_amp > kPi + 1e-12 || spec.mu0 + spec.lambda_amp < -1e-12)
        throw DomainError("Lambda takes mu(t) outside [0, pi]");
}

PathPoint path_eval(double t, const PathSpec& spec) {
    const double T = spec.total_time;
    if (t < 0.0 || t > T) throw DomainError("path_eval: t outside [0, T]");
    const double w = kPi / T;
    const double s = std::sin(w * t);
    return {spec.mu0 + spec.lambda_amp * s * s, spec.eta0 + kPi * (1.0 - std::cos(w * t)),
            spec.lambda_amp * w * std::sin(2.0 * w * t), kPi * w * s};
}

Vec3 zeta_of(double mu, double eta) {
    return {std::sin(eta) * std::sin(mu), std::cos(eta) * std::sin(mu), std::cos(mu)};
}

Vec3 effective_drive(double t, const PathSpec& spec) {
    const PathPoint p = path_eval(t, spec);
    const double se = std::sin(p.eta), ce = std::cos(p.eta);
    const double s2m = std::sin(2.0 * p.mu), sm = std::sin(p.mu);
    return {0.5 * (0.5 * p.eta_dot * se * s2m - p.mu_dot * ce),
            0.5 * (0.5 * p.eta_dot * ce * s2m + p.mu_dot * se),
            -0.5 * p.eta_dot * sm * sm};
}

EffectiveDrive sample_drive(const PathSpec& spec, const std::vector<double>& times) {
    EffectiveDrive d{times, {}};
    d.omega.reserve(times.size());
    for (double t : times) d.omega.push_back(effective_drive(t, spec));
    return d;
}

InvariantState invariant_state(double t, const PathSpec& spec) {
    const PathPoint p = path_eval(t, spec);
    const double c = std::cos(0.5 * p.mu), s = std::sin(0.5 * p.mu);
    InvariantState st;
    st.zeta = zeta_of(p.mu, p.eta);
    st.phi_plus << c, kI * std::polar(1.0, -p.eta) * s;
    st.phi_minus << kI * std::polar(1.0, p.eta) * s, c;
    return st;
}

PhaseResult phases(const PathSpec& spec) {
    validate(spec);
    const double g = theta_plus(spec.mu0, spec.lambda_amp);
    auto dyn = [&](bool plus) {
        return integrate(
            [&](double t) {
                const InvariantState st = invariant_state(t, spec);
                const Eigen::Vector2cd& phi = plus ? st.phi_plus : st.phi_minus;
                return phi.dot(pauli_dot(effective_drive(t, spec)) * phi).real();
            },
            0.0, spec.total_time, 4);
    };
    return {g, -g, dyn(true), dyn(false)};
}

double solve_lambda(double mu0, double theta_target) {
    if (mu0 < 0.0 || mu0 > kPi) throw DomainError("mu0 must lie in [0, pi]");
    if (!(theta_target > 0.0 && theta_target < kTwoPi)) throw DomainError("theta must lie in (0, 2 pi)");
    const double lo = 1e-6;
    const double hi = std::min(kPi - mu0, kPi) - 1e-6;
    if (!(hi > lo)) throw NoSolutionError("no room for Lambda when mu0 = pi");
    const double f_lo = theta_plus(mu0, lo);
    const double f_hi = theta_plus(mu0, hi);
    // The gate only fixes theta modulo pi (U -> -U); take the first branch
    // the monotone Theta+(Lambda) reaches.
    const double k = std::ceil((f_lo - theta_target) / kPi);
    const double target = theta_target + k * kPi;
    if (target > f_hi) {
        std::ostringstream msg;
        msg << "Theta+ spans [" << f_lo << ", " << f_hi << "] for mu0=" << mu0 << "; no branch of theta="
            << theta_target;
        throw NoSolutionError(msg.str());
    }
    if (target == f_lo) return lo;
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve([&](double L) { return theta_plus(mu0, L) - target; }, lo,
                                                     hi, f_lo - target, f_hi - target,
                                                     boost::math::tools::eps_tolerance<double>(46), iters);
    const double root = 0.5 * (r.first + r.second);
    if (std::abs(theta_plus(mu0, root) - target) > 1e-8) throw NoSolutionError("Lambda root did not converge");
    return root;
}

PathSpec make_path(double mu0, double eta0, double theta, double total_time) {
    PathSpec s{mu0, eta0, solve_lambda(mu0, theta), total_time, theta};
    validate(s);
    return s;
}

Matrix2 ideal_unitary(double mu0, double eta0, double theta) {
    return std::cos(theta) * Matrix2::Identity() + kI * std::sin(theta) * pauli_dot(zeta_of(mu0, eta0));
}

Matrix2 ideal_unitary(const PathSpec& spec) {
    return ideal_unitary(spec.mu0, spec.eta0, phases(spec).geometric_plus);
}

FrameConstants FrameConstants::from(const CatFrame& f) {
    const double a2 = std::norm(f.alpha);
    FrameConstants c{};
    c.n_plus = a2 * f.n_minus / f.n_plus;
    c.n_minus = a2 * f.n_plus / f.n_minus;
    c.half_diff = 0.5 * (c.n_plus - c.n_minus);
    c.mean = 0.5 * (c.n_plus + c.n_minus);
    return c;
}

SingleControls controls_from_drive(const Vec3& omega, const CatFrame& f) {
    const double a = f.amplitude();
    const FrameConstants fc = FrameConstants::from(f);
    // P_c n P_c = mean + half_diff sigma_z; a^+ maps |C+> -> sqrt(n-)|C->.
    const double chi = omega.z() / fc.half_diff;
    const Complex eps = std::sqrt(f.n_plus * f.n_minus) / (4.0 * a) *
                        Complex(omega.x(), std::exp(2.0 * a * a) * omega.y()) * std::polar(1.0, f.xi);
    return {chi, eps};
}

TwoQubitControls two_qubit_controls_from_drive(const Vec3& omega, const CatFrame& f) {
    const FrameConstants fc = FrameConstants::from(f);
    const SingleControls single = controls_from_drive(omega, f);
    TwoQubitControls c{};
    c.chi12 = -omega.z() / (2.0 * fc.half_diff * fc.half_diff);
    c.chi1 = -c.chi12 * fc.mean;
    c.chi2 = -c.chi12 * fc.n_plus;
    c.lam = single.eps / (fc.n_minus - fc.n_plus);
    // eps_t = lam chi2 / chi12 with the t-independent ratio taken in closed form
    c.eps_t = -fc.n_plus * c.lam;
    return c;
}

OperatorMatrix control_hamiltonian(const SingleControls& c, const FockSpace& space) {
    const OperatorMatrix a = ladder(space);
    Matrix h = c.eps * a.entries.adjoint() + std::conj(c.eps) * a.entries;
    h.diagonal() += c.chi * number_operator(space).entries.diagonal();
    return {space, h};
}

OperatorMatrix two_qubit_control_hamiltonian(const TwoQubitControls& c, const FockSpace& space) {
    if (space.modes() != 2) throw InvalidSpaceError("two-qubit controls need a two-mode space");
    const FockSpace single = space.single_mode();
    const OperatorMatrix a = ladder(single);
    const OperatorMatrix n = number_operator(single);
    const OperatorMatrix one = identity(single);
    // mode-2 drive  lam* a + lam a^+  conditioned on n1, plus unconditional eps_t
    const OperatorMatrix drive_l{single, std::conj(c.lam) * a.entries + c.lam * a.entries.adjoint()};
    const OperatorMatrix drive_e{single, std::conj(c.eps_t) * a.entries + c.eps_t * a.entries.adjoint()};
    const OperatorMatrix n1 = tensor(n, one), n2 = tensor(one, n);
    Matrix h = c.chi12 * (n1 * n2).entries + tensor(n, drive_l).entries + tensor(one, drive_e).entries +
               c.chi1 * n1.entries + c.chi2 * n2.entries;
    return {space, h};
}

std::vector<double> uniform_grid(double total_time, std::size_t steps) {
    if (steps < 1) throw DomainError("grid needs at least one step");
    std::vector<double> g(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) g[k] = total_time * static_cast<double>(k) / static_cast<double>(steps);
    return g;
}

PulseSchedule single_qubit_controls(const PathSpec& spec, const CatFrame& frame, std::size_t steps) {
    validate(spec);
    PulseSchedule s;
    s.t = uniform_grid(spec.total_time, steps);
    for (double t : s.t) {
        const SingleControls c = controls_from_drive(effective_drive(t, spec), frame);
        s.chi.push_back(c.chi);
        s.eps.push_back(c.eps);
    }
    return s;
}

TwoQubitPulseSchedule two_qubit_controls(const PathSpec& spec, const CatFrame& frame, std::size_t steps) {
    validate(spec);
    TwoQubitPulseSchedule s;
    s.t = uniform_grid(spec.total_time, steps);
    for (double t : s.t) {
        const TwoQubitControls c = two_qubit_controls_from_drive(effective_drive(t, spec), frame);
        s.chi12.push_back(c.chi12);
        s.chi1.push_back(c.chi1);
        s.chi2.push_back(c.chi2);
        s.lam.push_back(c.lam);
        s.eps_t.push_back(c.eps_t);
    }
    return s;
}

double verify_invariant(const PathSpec& spec, const PulseSchedule& schedule, const CatFrame& frame, double kerr,
                        double eps2) {
    const std::size_t n = schedule.t.size();
    if (n < 3 || schedule.chi.size() != n || schedule.eps.size() != n)
        throw DimensionMismatchError("schedule channels must share a grid of at least 3 points");
    const FockSpace& space = frame.c_plus.space;
    const Matrix basis = frame.basis();
    Matrix2 h_cat = Matrix2::Zero();
    if (kerr > 0.0) h_cat = basis.adjoint() * kerr_cat_hamiltonian(kerr, eps2, frame.xi, space).entries * basis;
    const OperatorMatrix a = ladder(space);
    const Matrix2 a_sub = basis.adjoint() * a.entries * basis;
    const Matrix2 n_sub = basis.adjoint() * number_operator(space).entries * basis;

    auto inv = [&](double t) {
        const PathPoint p = path_eval(t, spec);
        return pauli_dot(zeta_of(p.mu, p.eta));
    };
    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double dt = schedule.t[k + 1] - schedule.t[k - 1];
        const Matrix2 d_inv = (inv(schedule.t[k + 1]) - inv(schedule.t[k - 1])) / dt;
        const Matrix2 h = h_cat + schedule.chi[k] * n_sub + schedule.eps[k] * a_sub.adjoint() +
                          std::conj(schedule.eps[k]) * a_sub;
        const Matrix2 i_now = inv(schedule.t[k]);
        const Matrix2 r = d_inv - kI * (i_now * h - h * i_now);
        worst = std::max(worst, r.norm());
    }
    return worst;
}

double gap_margin(const PulseSchedule& s, double gap) {
    double m = 0.0;
    for (std::size_t k = 0; k < s.t.size(); ++k) m = std::max({m, std::abs(s.chi[k]), std::abs(s.eps[k])});
    const double ratio = m / gap;
    if (ratio >= 0.2) warn("control amplitude reaches " + std::to_string(ratio) + " of the cat energy gap");
    return ratio;
}

double gap_margin(const TwoQubitPulseSchedule& s, double gap) {
    double m = 0.0;
    for (std::size_t k = 0; k < s.t.size(); ++k)
        m = std::max({m, std::abs(s.chi12[k]), std::abs(s.chi1[k]), std::abs(s.chi2[k]), std::abs(s.lam[k]),
                      std::abs(s.eps_t[k])});
    const double ratio = m / gap;
    if (ratio >= 0.2) warn("two-qubit control amplitude reaches " + std::to_string(ratio) + " of the cat energy gap");
    return ratio;
}

void write_schedule_csv(const std::filesystem::path& path, const PulseSchedule& s) {
    Table t{{"t", "chi", "eps_re", "eps_im"}, {}};
    for (std::size_t k = 0; k < s.t.size(); ++k) t.rows.push_back({s.t[k], s.chi[k], s.eps[k].real(), s.eps[k].imag()});
    write_csv(path, t);
}

void write_schedule_csv(const std::filesystem::path& path, const TwoQubitPulseSchedule& s) {
    Table t{{"t", "chi12", "chi1", "chi2", "lam_re", "lam_im", "epst_re", "epst_im"}, {}};
    for (std::size_t k = 0; k < s.t.size(); ++k)
        t.rows.push_back({s.t[k], s.chi12[k], s.chi1[k], s.chi2[k], s.lam[k].real(), s.lam[k].imag(),
                          s.eps_t[k].real(), s.eps_t[k].imag()});
    write_csv(path, t);
}

PulseSchedule read_schedule_csv(const std::filesystem::path& path) {
    const Table t = read_csv(path);
    const std::size_t ct = t.column("t"), cc = t.column("chi"), cr = t.column("eps_re"), ci = t.column("eps_im");
    PulseSchedule s;
    for (const auto& r : t.rows) {
        s.t.push_back(r[ct]);
        s.chi.push_back(r[cc]);
        s.eps.emplace_back(r[cr], r[ci]);
    }
    return s;
}

TwoQubitPulseSchedule read_two_qubit_schedule_csv(const std::filesystem::path& path) {
    const Table t = read_csv(path);
    const std::size_t ct = t.column("t"), c12 = t.column("chi12"), c1 = t.column("chi1"), c2 = t.column("chi2"),
                      lr = t.column("lam_re"), li = t.column("lam_im"), er = t.column("epst_re"),
                      ei = t.column("epst_im");
    TwoQubitPulseSchedule s;
    for (const auto& r : t.rows) {
        s.t.push_back(r[ct]);
        s.chi12.push_back(r[c12]);
        s.chi1.push_back(r[c1]);
        s.chi2.push_back(r[c2]);
        s.lam.emplace_back(r[lr], r[li]);
        s.eps_t.emplace_back(r[er], r[ei]);
    }
    return s;
}

}  // namespace catgate
