#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fracsig/errors.hpp"
#include "fracsig/fractal_analysis.hpp"
#include "fracsig/spectral_analysis.hpp"
#include "fracsig/synthesis.hpp"

namespace fracsig {
namespace {

SynthesisConfig reference_config() {
    SynthesisConfig cfg;
    cfg.params = make_model_params(0.055, 0.215, std::nullopt, 0.79, 31.99);
    cfg.train = StimulusTrain({{1.0, 0.002, 0.001}});
    return cfg;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v.size() % 2 ? v[v.size() / 2] : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
}

TEST(Synthesis, ReferenceInBandAtTargetFrequency) {
    const auto cfg = reference_config();
    const auto ts = synthesize_eeg(cfg);
    ASSERT_EQ(ts.size(), cfg.sample_count());
    EXPECT_DOUBLE_EQ(ts.dt(), 1.0 / cfg.sample_rate);
    for (double v : ts.values()) {
        EXPECT_GT(v, -60.0);
        EXPECT_LT(v, 60.0);
    }
    EXPECT_NEAR(dominant_frequency(ts), 34.0, 2.0);
    EXPECT_TRUE(validate_signal(ts, {-60.0, 60.0}, 34.0, 2.0).pass);
}

TEST(Synthesis, SeedsChangeTheSignalNotTheRhythm) {
    for (std::uint64_t seed : {2u, 3u, 4u, 5u}) {
        auto cfg = reference_config();
        cfg.seed = seed;
        EXPECT_NEAR(dominant_frequency(synthesize_eeg(cfg)), 34.0, 2.0) << seed;
    }
}

TEST(Synthesis, Deterministic) {
    const auto a = synthesize_eeg(reference_config());
    const auto b = synthesize_eeg(reference_config());
    EXPECT_TRUE(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
    auto other = reference_config();
    other.seed = 2;
    const auto c = synthesize_eeg(other);
    EXPECT_FALSE(std::equal(a.values().begin(), a.values().end(), c.values().begin()));
}

TEST(Synthesis, QuietConfigIsConstantRest) {
    auto cfg = reference_config();
    cfg.train = StimulusTrain{};
    cfg.noise_amplitude = 0.0;
    const auto ts = synthesize_eeg(cfg);
    for (double v : ts.values()) EXPECT_EQ(v, 31.99);
}

TEST(Synthesis, SlidingHurstTracksNoiseExponent) {
    for (double H : {0.6, 0.79}) {
        auto cfg = reference_config();
        cfg.noise_hurst = H;
        const auto s = hurst_sliding(synthesize_eeg(cfg), 1024, 256);
        EXPECT_NEAR(median(s.h), H, 0.1) << H;
    }
}

TEST(Synthesis, Multifractal) {
    const auto ts = synthesize_eeg(reference_config());
    EXPECT_GT(fractal_spectrum(ts, -20, 20, 0.5, dyadic_resolutions(ts)).width(), 0.1);
}

TEST(Synthesis, UniformSurrogateStaysInBand) {
    auto cfg = reference_config();
    cfg.mode = SynthesisMode::uniform_surrogate;
    const auto ts = synthesize_eeg(cfg);
    EXPECT_TRUE(validate_signal(ts, {-60.0, 60.0}, 34.0, 2.0).pass);
}

TEST(Synthesis, RhythmTrainSpacing) {
    const auto r = rhythm_train({1.0, 0.002, 0.001}, 34.0, 0.0, 1.0, 9);
    ASSERT_EQ(r.size(), 33u);
    EXPECT_NEAR(r.pulses()[0].t_star, 0.002 + 1.0 / 34.0, 1e-12);
    EXPECT_EQ(oversampling_factor(StimulusTrain({{1.0, 0.0, 0.001}}), 256.0), 16u);
}

TEST(Synthesis, InfeasibleSettingsRejected) {
    auto cfg = reference_config();
    cfg.target_frequency = 128.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    EXPECT_THROW(synthesize_eeg(cfg), ConfigError);
    cfg = reference_config();
    cfg.band_low = 60.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = reference_config();
    cfg.duration = 0.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
}

} // namespace
} // namespace fracsig
