#include <gtest/gtest.h>

#include <cmath>

#include "catgate/errors.hpp"
#include "catgate/squeeze.hpp"

using namespace catgate;

TEST(Squeeze, DurationForDefaultDrive) {
    EXPECT_NEAR(SqueezeSpec{}.duration() * 1e3, 30.5577, 1e-3);  // ns
}

TEST(Squeeze, VacuumAmplitudesMatchClosedForm) {
    // S|0> = cosh(r)^{-1/2} sum_n tanh(r)^n sqrt((2n)!) / (2^n n!) |2n>
    const FockSpace s(80);
    const SqueezeSpec sp{0.6, 3.0};
    const Vector v = squeeze_operator(sp, s).entries.col(0);
    const double t = std::tanh(sp.r);
    for (int n = 0; n < 15; ++n) {
        const double c = std::pow(t, n) * std::exp(0.5 * std::lgamma(2.0 * n + 1) - n * std::log(2.0) -
                                                    std::lgamma(n + 1.0)) / std::sqrt(std::cosh(sp.r));
        EXPECT_NEAR(v(2 * n).real(), c, 1e-12) << n;
        EXPECT_NEAR(v(2 * n).imag(), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(v(2 * n + 1)), 0.0, 1e-14);
    }
}

TEST(Squeeze, PhotonNumberAndQuadrature) {
    const FockSpace s(80);
    const SqueezeSpec sp{0.5, 2.0};
    const Ket v{s, squeeze_operator(sp, s).entries.col(0)};
    EXPECT_NEAR(mean_photon_number(v), std::pow(std::sinh(sp.r), 2), 1e-10);
    // exp[r(a^+2 - a^2)/2] stretches x = (a + a^+)/sqrt2
    const Matrix a = ladder(s).entries;
    const Matrix x = (a + a.adjoint()) / std::sqrt(2.0);
    EXPECT_NEAR(v.amplitudes.dot(x * x * v.amplitudes).real(), 0.5 * std::exp(2.0 * sp.r), 1e-9);
}

TEST(Squeeze, GeneratorSignsAreOpposite) {
    const FockSpace s(10);
    const Matrix p = squeeze_generator(1.5, +1, s).entries;
    const Matrix m = squeeze_generator(1.5, -1, s).entries;
    EXPECT_LT((p + m).norm(), 1e-15);
    EXPECT_LT((p - p.adjoint()).norm(), 1e-15);
    EXPECT_THROW(squeeze_generator(1.0, 0, s), DomainError);
    EXPECT_THROW(squeeze_generator(-1.0, 1, s), DomainError);
    EXPECT_THROW(squeeze_operator(SqueezeSpec{0.0, 1.0}, s), DomainError);
}

TEST(Squeeze, PipelineUnitaryIsConjugatedGate) {
    // S^+ (S U S^+) S restricted to the cat pair is the plain gate
    GateModel m;
    m.dim = 40;
    m.steps = 4000;
    const SqueezeSpec sq{0.3, two_pi_mhz(3.125)};
    const PathSpec g = gate_path(GateName::Not);
    const FockSpace s(m.dim);
    const Matrix full = pipeline_unitary(m, g, sq, 400).entries;
    const Matrix sop = squeeze_operator(sq, s).entries;
    const Matrix b = model_frame(m).basis();
    const Matrix block = b.adjoint() * sop.adjoint() * full * sop * b;
    const GateRun plain = simulate_single_gate(m, g);
    EXPECT_GT(average_gate_fidelity_block(block, plain.target), 0.999);
    EXPECT_NEAR(average_gate_fidelity_block(block, plain.target), plain.fidelity, 1e-4);
}
