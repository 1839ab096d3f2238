#include "fracsig/synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "fracsig/errors.hpp"
#include "fracsig/fbm.hpp"
#include "fracsig/fractional_core.hpp"

namespace fracsig {

namespace {

constexpr std::size_t kMaxIntegrationPoints = std::size_t{1} << 24;
constexpr double kBandInset = 0.01;

// Independent streams per stochastic ingredient.
enum Stream : std::uint64_t { kRhythmStream = 1, kNoiseStream = 2, kSurrogateStream = 3 };

std::uint64_t stream_seed(std::uint64_t seed, Stream stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (std::uint64_t{words[0]} << 32) | words[1];
}

void standardize(std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double ss = 0.0;
    for (double& x : v) {
        x -= mean;
        ss += x * x;
    }
    const double sd = std::sqrt(ss / n);
    if (sd > 0.0)
        for (double& x : v) x /= sd;
}

std::vector<double> response_fluctuation(const SynthesisConfig& cfg, const StimulusTrain& train, std::size_t n) {
    const std::size_t m = oversampling_factor(train, cfg.sample_rate);
    const std::size_t fine = (n - 1) * m + 1;
    if (fine > kMaxIntegrationPoints)
        throw ConfigError("pulse width too small for the duration: integration grid would need " +
                          std::to_string(fine) + " points");
    const double dt_fine = 1.0 / (cfg.sample_rate * static_cast<double>(m));
    auto flux = sample_train(train, dt_fine, fine).release();
    const double mean = std::accumulate(flux.begin(), flux.end(), 0.0) / static_cast<double>(fine);
    for (double& f : flux) f -= mean;

    auto out = fractional_integral_strided(SampledFunction(std::move(flux), dt_fine), cfg.params.H,
                                           QuadratureScheme::product_trapezoid, m);
    const double k = response_prefactor(cfg.params);
    for (double& v : out) v *= k;
    return out;
}

std::vector<double> uniform_surrogate(const SynthesisConfig& cfg, std::size_t n) {
    std::mt19937_64 rng(stream_seed(cfg.seed, kSurrogateStream));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> out(n);
    const double f = cfg.target_frequency;
    std::size_t current = static_cast<std::size_t>(-1);
    double amp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / cfg.sample_rate;
        const auto half_wave = static_cast<std::size_t>(std::floor(2.0 * f * t));
        if (half_wave != current) {
            current = half_wave;
            amp = u(rng);
        }
        out[i] = amp * std::sin(2.0 * std::numbers::pi * f * t);
    }
    return out;
}

} // namespace

void SynthesisConfig::validate() const {
    params.validate();
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) throw ConfigError("sample_rate must be positive");
    if (!(duration > 0.0) || !std::isfinite(duration)) throw ConfigError("duration must be positive");
    if (!(target_frequency >= 0.0)) throw ConfigError("target_frequency must be non-negative");
    if (!(sample_rate > 2.0 * target_frequency))
        throw ConfigError("target_frequency " + std::to_string(target_frequency) +
                          " Hz is not resolvable at sample_rate " + std::to_string(sample_rate) + " Hz");
    if (!(noise_hurst > 0.0 && noise_hurst < 1.0)) throw ConfigError("noise_hurst must lie in (0, 1)");
    if (!(noise_amplitude >= 0.0)) throw ConfigError("noise_amplitude must be non-negative");
    if (!(rhythm_jitter >= 0.0 && rhythm_jitter < 0.5)) throw ConfigError("rhythm_jitter must lie in [0, 0.5)");
    if (!(band_low < band_high)) throw ConfigError("band_low must be below band_high");
    if (mode == SynthesisMode::uniform_surrogate && target_frequency <= 0.0)
        throw ConfigError("uniform surrogate needs a positive target_frequency");
    if (sample_count() < 2) throw ConfigError("duration shorter than two samples");
}

std::size_t SynthesisConfig::sample_count() const {
    return static_cast<std::size_t>(std::llround(duration * sample_rate));
}

StimulusTrain rhythm_train(const GaussianPulse& tmpl, double frequency, double jitter, double t_end,
                           std::uint64_t seed) {
    if (!(frequency > 0.0)) throw DomainError("rhythm frequency must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> offset(0.0, jitter / frequency);
    StimulusTrain train;
    for (std::size_t k = 1;; ++k) {
        const double nominal = tmpl.t_star + static_cast<double>(k) / frequency;
        if (nominal > t_end) break;
        const double shift = jitter > 0.0 ? offset(rng) : 0.0;
        train.add(GaussianPulse{tmpl.phi0, nominal + shift, tmpl.sigma});
    }
    return train;
}

std::size_t oversampling_factor(const StimulusTrain& train, double sample_rate) {
    if (train.empty()) return 1;
    double sigma_min = train.pulses().front().sigma;
    for (const auto& p : train.pulses()) sigma_min = std::min(sigma_min, p.sigma);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(4.0 / (sample_rate * sigma_min))));
}

TimeSeries synthesize_eeg(const SynthesisConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.sample_count();
    const double dt = 1.0 / cfg.sample_rate;

    std::vector<double> composite;
    if (cfg.mode == SynthesisMode::uniform_surrogate) {
        composite = uniform_surrogate(cfg, n);
    } else {
        composite.assign(n, 0.0);
        if (!cfg.train.empty()) {
            StimulusTrain train = cfg.train;
            if (cfg.target_frequency > 0.0) {
                train.merge(rhythm_train(cfg.train.pulses().front(), cfg.target_frequency, cfg.rhythm_jitter,
                                         static_cast<double>(n - 1) * dt, stream_seed(cfg.seed, kRhythmStream)));
            }
            composite = response_fluctuation(cfg, train, n);
            standardize(composite);
        }
        if (cfg.noise_amplitude > 0.0) {
            const auto path = fbm_generate(cfg.noise_hurst, n + 1, dt, stream_seed(cfg.seed, kNoiseStream));
            auto noise = increments(path);
            standardize(noise);
            for (std::size_t i = 0; i < n; ++i) composite[i] += cfg.noise_amplitude * noise[i];
        }
    }

    const auto [lo, hi] = std::minmax_element(composite.begin(), composite.end());
    const double span = *hi - *lo;
    if (!(span > 0.0)) return TimeSeries(std::vector<double>(n, cfg.params.V0), dt);

    const double width = cfg.band_high - cfg.band_low;
    const double target_lo = cfg.band_low + kBandInset * width;
    const double target_hi = cfg.band_high - kBandInset * width;
    const double gain = (target_hi - target_lo) / span;
    const double base = *lo;
    for (double& v : composite) v = target_lo + (v - base) * gain;
    return TimeSeries(std::move(composite), dt);
}

} // namespace fracsig
