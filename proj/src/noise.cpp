#include "catgate/noise.hpp"

#include <fftw3.h>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <cmath>
#include <limits>
#include <mutex>

#include "catgate/errors.hpp"
#include "catgate/parallel.hpp"

namespace catgate {

namespace {

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

double mean_square(const std::vector<double>& x) {
    double p = 0.0;
    for (double v : x) p += v * v;
    return x.empty() ? 0.0 : p / static_cast<double>(x.size());
}

double noise_power(const std::vector<double>& signal, double snr_db) {
    if (!std::isfinite(snr_db)) throw DomainError("SNR must be finite (use >= 300 dB for noiseless)");
    const double ps = mean_square(signal);
    if (!(ps > 0.0)) throw DomainError("SNR is undefined for a zero-power signal");
    return ps * std::pow(10.0, -snr_db / 10.0);
}

std::vector<double> white(std::size_t n, std::uint64_t seed) {
    boost::random::mt19937_64 gen(seed);
    boost::random::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> w(n);
    for (auto& v : w) v = g(gen);
    return w;
}

/// Shape white noise to amplitude ~ k^{-1/2} per frequency bin, DC removed.
std::vector<double> pink(std::size_t n, std::uint64_t seed) {
    std::vector<double> x = white(n, seed);
    if (n < 2) return std::vector<double>(n, 0.0);
    const std::size_t bins = n / 2 + 1;
    fftw_complex* spec = fftw_alloc_complex(bins);
    fftw_plan fwd, inv;
    {
        std::lock_guard lock(fftw_planner_mutex());
        fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), x.data(), spec, FFTW_ESTIMATE);
        inv = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, x.data(), FFTW_ESTIMATE);
    }
    fftw_execute(fwd);
    spec[0][0] = spec[0][1] = 0.0;
    for (std::size_t k = 1; k < bins; ++k) {
        const double s = 1.0 / std::sqrt(static_cast<double>(k));
        spec[k][0] *= s;
        spec[k][1] *= s;
    }
    fftw_execute(inv);
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(inv);
    }
    fftw_free(spec);
    return x;
}

std::vector<double> add_scaled(const std::vector<double>& signal, std::vector<double> noise, double power) {
    const double pn = mean_square(noise);
    const double scale = pn > 0.0 ? std::sqrt(power / pn) : 0.0;
    for (std::size_t i = 0; i < noise.size(); ++i) noise[i] = signal[i] + scale * noise[i];
    return noise;
}

}  // namespace

NoiseKind parse_noise_kind(const std::string& s) {
    if (s == "systematic") return NoiseKind::Systematic;
    if (s == "awgn" || s == "white") return NoiseKind::Awgn;
    if (s == "pink" || s == "1/f") return NoiseKind::Pink;
    throw ConfigError("unknown noise kind '" + s + "' (expected systematic, awgn, pink)");
}

std::string to_string(NoiseKind k) {
    switch (k) {
        case NoiseKind::Systematic: return "systematic";
        case NoiseKind::Awgn: return "awgn";
        case NoiseKind::Pink: return "pink";
    }
    return "?";
}

void NoiseConfig::validate() const {
    if (!std::isfinite(snr_db)) throw ConfigError("snr_db must be finite");
    if (!(channels[0] || channels[1] || channels[2])) throw ConfigError("noise needs at least one channel");
    for (double d : delta)
        if (!std::isfinite(d)) throw ConfigError("systematic delta must be finite");
}

EffectiveDrive apply_systematic(const EffectiveDrive& drive, const std::array<double, 3>& delta) {
    EffectiveDrive out = drive;
    for (auto& w : out.omega)
        for (int k = 0; k < 3; ++k) w(k) *= 1.0 + delta[k];
    return out;
}

std::vector<double> add_awgn(const std::vector<double>& signal, double snr_db, std::uint64_t seed) {
    if (snr_db >= kNoiselessSnrDb) return signal;
    const double p = noise_power(signal, snr_db);
    std::vector<double> out = white(signal.size(), seed);
    const double sd = std::sqrt(p);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = signal[i] + sd * out[i];
    return out;
}

std::vector<double> add_pink(const std::vector<double>& signal, double snr_db, std::uint64_t seed) {
    if (snr_db >= kNoiselessSnrDb) return signal;
    const double p = noise_power(signal, snr_db);
    return add_scaled(signal, pink(signal.size(), seed), p);
}

EffectiveDrive apply_noise(const EffectiveDrive& drive, const NoiseConfig& cfg, std::uint64_t run_seed) {
    cfg.validate();
    if (cfg.kind == NoiseKind::Systematic) return apply_systematic(drive, cfg.delta);
    EffectiveDrive out = drive;
    std::vector<double> ch(drive.omega.size());
    for (int k = 0; k < 3; ++k) {
        if (!cfg.channels[k]) continue;
        for (std::size_t i = 0; i < ch.size(); ++i) ch[i] = drive.omega[i](k);
        const std::uint64_t s = run_seed * 3 + static_cast<std::uint64_t>(k);
        const std::vector<double> noisy =
            cfg.kind == NoiseKind::Awgn ? add_awgn(ch, cfg.snr_db, s) : add_pink(ch, cfg.snr_db, s);
        for (std::size_t i = 0; i < ch.size(); ++i) out.omega[i](k) = noisy[i];
    }
    return out;
}

EnsembleStats monte_carlo(const GateModel& model, const PathSpec& spec, const NoiseConfig& cfg, std::size_t n_runs,
                          unsigned threads) {
    if (n_runs < 1) throw ConfigError("monte_carlo needs at least one run");
    cfg.validate();
    model.validate();
    const std::vector<double> grid = uniform_grid(spec.total_time, model.steps);
    const EffectiveDrive base = midpoint_drive(spec, grid);

    EnsembleStats st;
    st.runs.resize(n_runs);
    IntegratorOptions opts;
    opts.keep_states = false;
    opts.max_snapshots = 2;
    parallel_for(n_runs, threads, [&](std::size_t i) {
        RunRecord& r = st.runs[i];
        r.index = i;
        r.seed = cfg.seed + i;
        try {
            const EffectiveDrive noisy = apply_noise(base, cfg, r.seed);
            r.infidelity = 1.0 - simulate_single_gate(model, spec, opts, &noisy).fidelity;
            r.ok = true;
        } catch (const Error& e) {
            r.infidelity = std::numeric_limits<double>::quiet_NaN();
            r.ok = false;
            r.error = e.what();
        }
    });

    double sum = 0.0;
    st.min = std::numeric_limits<double>::infinity();
    st.max = -std::numeric_limits<double>::infinity();
    for (const auto& r : st.runs) {
        if (!r.ok) {
            ++st.failed;
            continue;
        }
        ++st.count;
        sum += r.infidelity;
        st.min = std::min(st.min, r.infidelity);
        st.max = std::max(st.max, r.infidelity);
    }
    if (st.count == 0) throw NumericError("every Monte Carlo run failed; first error: " + st.runs.front().error);
    st.mean = sum / static_cast<double>(st.count);
    return st;
}

}  // namespace catgate
