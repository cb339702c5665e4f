#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "catgate/errors.hpp"
#include "catgate/noise.hpp"

using namespace catgate;

namespace {

std::vector<double> sine(std::size_t n) {
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = 3.0 * std::sin(0.01 * static_cast<double>(i));
    return s;
}

double mean_square(const std::vector<double>& v) {
    return std::inner_product(v.begin(), v.end(), v.begin(), 0.0) / static_cast<double>(v.size());
}

std::vector<double> residual(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// |DFT|^2 at bin k by direct summation
double periodogram(const std::vector<double>& x, std::size_t k) {
    Complex acc = 0.0;
    const double w = -2.0 * kPi * static_cast<double>(k) / static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::polar(1.0, w * static_cast<double>(i));
    return std::norm(acc);
}

}  // namespace

TEST(Noise, AwgnPowerRatio) {
    const std::vector<double> s = sine(200000);
    for (double snr : {0.0, 10.0, 20.0}) {
        const std::vector<double> n = residual(add_awgn(s, snr, 11), s);
        const double ratio = mean_square(n) / mean_square(s);
        EXPECT_NEAR(ratio / std::pow(10.0, -snr / 10.0), 1.0, 0.02) << snr;
        EXPECT_NEAR(std::accumulate(n.begin(), n.end(), 0.0) / n.size(), 0.0, 0.01 * std::sqrt(mean_square(n)));
    }
}

TEST(Noise, PinkPowerRatioAndSpectrum) {
    const std::size_t n = 4096;
    const std::vector<double> s(n, 1.0);
    const std::vector<std::size_t> bins{4, 8, 16, 32, 64, 128, 256, 512};
    std::vector<double> power(bins.size(), 0.0);
    double ratio = 0.0;
    const int seeds = 40;
    for (int seed = 0; seed < seeds; ++seed) {
        const std::vector<double> r = residual(add_pink(s, 10.0, 100 + seed), s);
        ratio += mean_square(r) / seeds;
        for (std::size_t b = 0; b < bins.size(); ++b)
            for (std::size_t d = 0; d < 3; ++d) power[b] += periodogram(r, bins[b] + d);
    }
    EXPECT_NEAR(ratio, 0.1, 0.01);
    // least-squares slope of log P against log f
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t b = 0; b < bins.size(); ++b) {
        const double x = std::log(bins[b] + 1.0), y = std::log(power[b]);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double m = static_cast<double>(bins.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    EXPECT_NEAR(slope, -1.0, 0.15);
}

TEST(Noise, SeedDeterminism) {
    const std::vector<double> s = sine(1000);
    EXPECT_EQ(add_awgn(s, 10.0, 5), add_awgn(s, 10.0, 5));
    EXPECT_NE(add_awgn(s, 10.0, 5), add_awgn(s, 10.0, 6));
    EXPECT_EQ(add_pink(s, 10.0, 5), add_pink(s, 10.0, 5));
    EXPECT_NE(add_pink(s, 10.0, 5), add_pink(s, 10.0, 6));
}

TEST(Noise, HighSnrIsNoiseless) {
    const std::vector<double> s = sine(500);
    EXPECT_EQ(add_awgn(s, kNoiselessSnrDb, 1), s);
    EXPECT_EQ(add_pink(s, 400.0, 1), s);
}

TEST(Noise, SystematicScalesChannels) {
    const EffectiveDrive d{{0.0, 0.5}, {Vec3(1.0, 2.0, 3.0), Vec3(-1.0, 0.5, 0.0)}};
    const EffectiveDrive o = apply_systematic(d, {0.1, -0.05, 0.0});
    EXPECT_DOUBLE_EQ(o.omega[0].x(), 1.1);
    EXPECT_DOUBLE_EQ(o.omega[0].y(), 1.9);
    EXPECT_DOUBLE_EQ(o.omega[0].z(), 3.0);
    EXPECT_DOUBLE_EQ(o.omega[1].x(), -1.1);
    NoiseConfig c;
    c.kind = NoiseKind::Awgn;
    c.channels = {false, true, false};
    const EffectiveDrive w = apply_noise(d, c, 3);
    EXPECT_EQ(w.omega[0].x(), 1.0);
    EXPECT_NE(w.omega[0].y(), 2.0);
}

TEST(Noise, KindParsing) {
    EXPECT_EQ(parse_noise_kind("1/f"), NoiseKind::Pink);
    EXPECT_EQ(parse_noise_kind(to_string(NoiseKind::Systematic)), NoiseKind::Systematic);
    EXPECT_THROW(parse_noise_kind("brown"), ConfigError);
}

TEST(Noise, MonteCarloIndependentOfThreads) {
    GateModel m;
    m.dim = 12;
    m.steps = 400;
    NoiseConfig c;
    c.kind = NoiseKind::Awgn;
    c.seed = 9;
    const PathSpec p = gate_path(GateName::Hadamard);
    const EnsembleStats a = monte_carlo(m, p, c, 6, 1);
    const EnsembleStats b = monte_carlo(m, p, c, 6, 3);
    ASSERT_EQ(a.runs.size(), 6u);
    EXPECT_EQ(a.count, 6u);
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(a.runs[i].seed, 9u + i);
        EXPECT_EQ(a.runs[i].infidelity, b.runs[i].infidelity);
    }
    EXPECT_EQ(a.mean, b.mean);
}
