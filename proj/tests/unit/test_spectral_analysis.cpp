#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracsig/errors.hpp"
#include "fracsig/spectral_analysis.hpp"

namespace fracsig {
namespace {

TimeSeries tones(std::size_t n, double fs, std::vector<std::pair<double, double>> parts, double offset = 0.0) {
    std::vector<double> v(n, offset);
    for (std::size_t i = 0; i < n; ++i)
        for (auto [f, a] : parts) v[i] += a * std::sin(2.0 * std::numbers::pi * f * i / fs);
    return TimeSeries(std::move(v), 1.0 / fs);
}

TEST(Periodogram, SinePeakDominates) {
    const auto p = periodogram(tones(1024, 256.0, {{34.0, 1.0}}));
    ASSERT_EQ(p.frequency.size(), 513u);
    const std::size_t peak = std::max_element(p.power.begin(), p.power.end()) - p.power.begin();
    EXPECT_NEAR(p.frequency[peak], 34.0, 0.25);
    for (std::size_t k = 0; k < p.power.size(); ++k)
        if (k + 1 < peak || k > peak + 1) EXPECT_GE(p.power[peak], 100.0 * p.power[k]) << k;
}

TEST(Periodogram, Parseval) {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g(3.0, 2.0);
    std::vector<double> v(1000);
    for (auto& x : v) x = g(rng);
    double mean = 0.0, var = 0.0;
    for (double x : v) mean += x / v.size();
    for (double x : v) var += (x - mean) * (x - mean) / v.size();
    const auto p = periodogram(TimeSeries(v, 0.01));
    double total = 0.0;
    for (double x : p.power) total += x;
    EXPECT_NEAR(total / var, 1.0, 1e-6);
}

TEST(Periodogram, ConstantHasNoPower) {
    const auto p = periodogram(TimeSeries(std::vector<double>(64, 7.0), 0.01));
    for (double x : p.power) EXPECT_LT(x, 1e-24);
    EXPECT_THROW(periodogram(TimeSeries(std::vector<double>(15, 1.0), 0.01)), DomainError);
}

TEST(DominantFrequency, Examples) {
    EXPECT_NEAR(dominant_frequency(tones(4096, 256.0, {{34.0, 1.0}})), 34.0, 256.0 / 4096.0);
    EXPECT_NEAR(dominant_frequency(tones(4096, 256.0, {{10.0, 1.0}, {40.0, 0.2}})), 10.0, 0.1);
    EXPECT_THROW(dominant_frequency(TimeSeries(std::vector<double>(64, 1.0), 0.01)), DegenerateInputError);
}

TEST(Band, Classification) {
    EXPECT_EQ(classify_band(10.0), EegBand::alpha);
    EXPECT_EQ(classify_band(34.0), EegBand::gamma);
    EXPECT_EQ(classify_band(0.1), EegBand::none);
    EXPECT_EQ(classify_band(2.0), EegBand::delta);
    EXPECT_EQ(classify_band(4.0), EegBand::theta);
    EXPECT_EQ(classify_band(13.0), EegBand::alpha);
    EXPECT_EQ(classify_band(30.0), EegBand::beta);
    EXPECT_EQ(classify_band(150.0), EegBand::none);
    EXPECT_THROW(classify_band(-1.0), DomainError);
    EXPECT_EQ(to_string(EegBand::gamma), "gamma");
}

TEST(Validate, SineInBandPasses) {
    const auto r = validate_signal(tones(4096, 256.0, {{34.0, 50.0}}), {-60.0, 60.0}, 34.0, 2.0);
    EXPECT_TRUE(r.pass) << r.reason;
    EXPECT_TRUE(r.reason.empty());
    EXPECT_EQ(r.stats.band_label, EegBand::gamma);
}

TEST(Validate, ConstantOutOfBandFailsOnAmplitude) {
    const auto r = validate_signal(TimeSeries(std::vector<double>(256, 100.0), 1.0 / 256), {-60.0, 60.0}, 34.0, 2.0);
    EXPECT_FALSE(r.pass);
    EXPECT_NE(r.reason.find("amplitude"), std::string::npos) << r.reason;
    EXPECT_TRUE(std::isnan(r.stats.dominant_frequency));
}

TEST(Validate, MonotoneInToleranceAndBand) {
    const auto ts = tones(4096, 256.0, {{33.0, 40.0}, {5.0, 10.0}});
    bool passed_before = true;
    for (double tol : {3.0, 2.0, 1.5, 1.0, 0.5, 0.1}) {
        const bool pass = validate_signal(ts, {-60.0, 60.0}, 34.0, tol).pass;
        if (!passed_before) EXPECT_FALSE(pass);
        passed_before = pass;
    }
    passed_before = true;
    for (double half : {100.0, 60.0, 50.1, 49.9, 30.0}) {
        const bool pass = validate_signal(ts, {-half, half}, 33.0, 1.0).pass;
        if (!passed_before) EXPECT_FALSE(pass);
        passed_before = pass;
    }
    EXPECT_THROW(validate_signal(ts, {60.0, -60.0}, 34.0, 2.0), DomainError);
    EXPECT_THROW(validate_signal(ts, {-60.0, 60.0}, 34.0, 0.0), DomainError);
}

} // namespace
} // namespace fracsig
