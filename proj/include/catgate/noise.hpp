#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "catgate/gates.hpp"

namespace catgate {

enum class NoiseKind { Systematic, Awgn, Pink };

NoiseKind parse_noise_kind(const std::string& s);
std::string to_string(NoiseKind k);

struct NoiseConfig {
    NoiseKind kind = NoiseKind::Awgn;
    std::array<double, 3> delta{0.0, 0.0, 0.0};  // fractional error on Omega_x,y,z
    double snr_db = 10.0;
    std::array<bool, 3> channels{true, true, true};
    std::uint64_t seed = 1;

    void validate() const;
};

struct RunRecord {
    std::size_t index;
    std::uint64_t seed;
    double infidelity;  // 1 - average gate fidelity; NaN for failed runs
    bool ok;
    std::string error;
};

struct EnsembleStats {
    std::vector<RunRecord> runs;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;   // successful runs
    std::size_t failed = 0;
};

/// SNRs at or above this are treated as noiseless.
inline constexpr double kNoiselessSnrDb = 300.0;

EffectiveDrive apply_systematic(const EffectiveDrive& drive, const std::array<double, 3>& delta);

/// signal + N(0, P_signal 10^{-snr/10}) per sample; P_signal is the mean square.
std::vector<double> add_awgn(const std::vector<double>& signal, double snr_db, std::uint64_t seed);

/// signal + Gaussian noise with power spectrum ~ 1/f over [1/T, Nyquist],
/// scaled to the same power ratio as add_awgn.
std::vector<double> add_pink(const std::vector<double>& signal, double snr_db, std::uint64_t seed);

/// Noise on the selected Omega channels; channel k uses stream run_seed*3 + k.
EffectiveDrive apply_noise(const EffectiveDrive& drive, const NoiseConfig& cfg, std::uint64_t run_seed);

/// Runs seeded cfg.seed + i, i < n_runs; results do not depend on `threads`.
EnsembleStats monte_carlo(const GateModel& model, const PathSpec& spec, const NoiseConfig& cfg, std::size_t n_runs,
                          unsigned threads = 1);

}  // namespace catgate
