#include <gtest/gtest.h>

#include <boost/math/distributions/poisson.hpp>

#include "catgate/errors.hpp"
#include "catgate/fock.hpp"

using namespace catgate;

TEST(FockSpace, RejectsBadTruncation) {
    EXPECT_THROW(FockSpace(1), InvalidSpaceError);
    EXPECT_THROW(FockSpace(10, 3), InvalidSpaceError);
    EXPECT_EQ(FockSpace(7, 2).size(), 49);
}

TEST(Fock, CommutatorIsIdentityBelowTruncation) {
    const FockSpace s(12);
    const Matrix a = ladder(s).entries;
    const Matrix c = a * a.adjoint() - a.adjoint() * a;
    for (int n = 0; n < 11; ++n) EXPECT_NEAR(std::abs(c(n, n) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(c(11, 11).real(), -11.0, 1e-12);  // truncation artefact
    EXPECT_NEAR((a.adjoint() * a - number_operator(s).entries).norm(), 0.0, 1e-13);
}

TEST(Fock, MismatchedSpacesThrow) {
    EXPECT_THROW(identity(FockSpace(4)) + identity(FockSpace(5)), DimensionMismatchError);
    EXPECT_THROW(fock_state(FockSpace(4), 0).inner(fock_state(FockSpace(5), 0)), DimensionMismatchError);
    EXPECT_THROW(ladder(FockSpace(4, 2)), InvalidSpaceError);
}

TEST(Fock, CoherentTailMatchesPoissonSurvival) {
    for (double amp : {0.5, 1.3, 2.5}) {
        for (int dim : {5, 10, 20}) {
            boost::math::poisson_distribution<> p(amp * amp);
            const double expect = boost::math::cdf(boost::math::complement(p, dim - 1));
            EXPECT_NEAR(coherent_tail_weight(amp, dim), expect, 1e-12 * std::max(1.0, expect) + 1e-300)
                << amp << " " << dim;
        }
    }
}

TEST(Fock, CoherentStateIsEigenvectorOfA) {
    const FockSpace s(40);
    const Complex alpha = std::polar(1.2, 0.3);
    const Ket c = coherent_state(alpha, s);
    EXPECT_NEAR(c.norm(), 1.0, 1e-14);
    const Vector r = ladder(s).entries * c.amplitudes - alpha * c.amplitudes;
    EXPECT_LT(r.norm(), 1e-8);
}

TEST(Fock, TruncationWarningIsEmitted) {
    std::vector<std::string> seen;
    auto prev = set_warning_handler([&](const std::string& m) { seen.push_back(m); });
    coherent_state(3.0, FockSpace(6));
    set_warning_handler(prev);
    ASSERT_EQ(seen.size(), 1u);
    EXPECT_NE(seen[0].find("Fock dim 6"), std::string::npos);
}

TEST(CatFrame, NormalizationAndPhotonNumbers) {
    const FockSpace s(30);
    for (double amp : {0.3, 0.5, 1.0}) {
        const CatFrame f = cat_frame(amp, 0.0, s);
        const double x = amp * amp;
        EXPECT_NEAR(f.n_plus, 2.0 * (1.0 + std::exp(-2.0 * x)), 1e-15);
        EXPECT_NEAR(f.n_minus, 2.0 * (1.0 - std::exp(-2.0 * x)), 1e-15);
        EXPECT_NEAR(std::abs(f.c_plus.inner(f.c_minus)), 0.0, 1e-14);
        const Matrix n = number_operator(s).entries;
        // textbook even/odd cat photon numbers
        EXPECT_NEAR(f.c_plus.amplitudes.dot(n * f.c_plus.amplitudes).real(), x * std::tanh(x), 1e-12);
        EXPECT_NEAR(f.c_minus.amplitudes.dot(n * f.c_minus.amplitudes).real(), x / std::tanh(x), 1e-12);
    }
}

TEST(CatFrame, ZeroAmplitudeIsDegenerate) {
    EXPECT_THROW(cat_frame(0.0, 0.0, FockSpace(10)), DegenerateFrameError);
}

TEST(CatFrame, ProjectorIsIdempotent) {
    const CatFrame f = cat_frame(0.5, 0.4, FockSpace(20));
    const Matrix& p = f.projector.entries;
    EXPECT_LT((p * p - p).norm(), 1e-13);
    EXPECT_NEAR(p.trace().real(), 2.0, 1e-13);
}

TEST(KerrCat, CatStatesAreDegenerateEigenstates) {
    // H = -K (a^+2 - a*^2)(a^2 - a^2) + eps2^2/K with alpha^2 = eps2/K
    const FockSpace s(30);
    const double kerr = 2.0 * kPi * 12.5, amp = 0.5, xi = 0.7;
    const double eps2 = kerr * amp * amp;
    const OperatorMatrix h = kerr_cat_hamiltonian(kerr, eps2, xi, s);
    EXPECT_TRUE(h.is_hermitian());
    const CatFrame f = cat_frame(amp, xi, s);
    for (const Ket* c : {&f.c_plus, &f.c_minus}) {
        const Vector r = h.entries * c->amplitudes - (eps2 * eps2 / kerr) * c->amplitudes;
        EXPECT_LT(r.norm(), 1e-9);
    }
}

TEST(KerrCat, GapWithoutSqueezingIsTwoK) {
    // eps2 = 0: spectrum -K n(n-1) = {0, 0, -2K, -6K, ...}
    const double kerr = 3.0;
    const GapInfo g = kerr_cat_gap(kerr, 0.0, 0.0, FockSpace(10));
    EXPECT_NEAR(g.cat_energy, 0.0, 1e-12);
    EXPECT_NEAR(g.gap, 2.0 * kerr, 1e-12);
}

TEST(KerrCat, RejectsBadParameters) {
    EXPECT_THROW(kerr_cat_hamiltonian(0.0, 1.0, 0.0, FockSpace(5)), DomainError);
    EXPECT_THROW(kerr_cat_hamiltonian(1.0, -1.0, 0.0, FockSpace(5)), DomainError);
}

TEST(Tensor, ActsFactorwise) {
    const FockSpace s(5);
    const OperatorMatrix a = ladder(s);
    const OperatorMatrix n = number_operator(s);
    const Ket x = coherent_state(0.4, s);
    const Ket y = fock_state(s, 2);
    const Vector lhs = tensor(a, n).entries * tensor(x, y).amplitudes;
    const Vector rhs = tensor(Ket{s, a.entries * x.amplitudes}, Ket{s, n.entries * y.amplitudes}).amplitudes;
    EXPECT_LT((lhs - rhs).norm(), 1e-14);
    EXPECT_LT((mode_ladder(FockSpace(5, 2), 2).entries - tensor(identity(s), a).entries).norm(), 1e-15);
}

TEST(Tensor, TwoModeCatBasisIsOrthonormal) {
    const Matrix b = two_mode_cat_basis(cat_frame(0.5, 0.0, FockSpace(12)));
    EXPECT_LT((b.adjoint() * b - Matrix::Identity(4, 4)).norm(), 1e-13);
}
