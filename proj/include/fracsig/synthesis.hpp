#pragma once

#include <cstdint>

#include "fracsig/response_model.hpp"
#include "fracsig/stimulus.hpp"
#include "fracsig/time_series.hpp"

namespace fracsig {

enum class SynthesisMode {
    model,             ///< stimulus response plus fractional Gaussian noise
    uniform_surrogate, ///< half-waves at the target rate with uniformly drawn peak amplitudes
};

/// Settings of the EEG-like signal generator.
///
/// In model mode the signal is built from
///   1. the declared stimulus train, extended by a rhythm train: copies of the first
///      declared pulse repeated at target_frequency, each jittered by a Gaussian offset
///      of rhythm_jitter periods;
///   2. the boundary response to that train with its mean flux removed, i.e. the
///      fluctuation of V about its mean power-law growth;
///   3. fractional Gaussian noise (increments of fractional Brownian motion) with
///      Hurst exponent noise_hurst, weighted noise_amplitude relative to the response;
/// and the sum is mapped affinely onto the amplitude band (inset by 1% per side).
/// An empty train contributes nothing; a signal with no variation is returned as V0.
struct SynthesisConfig {
    ModelParams params;
    StimulusTrain train;
    double sample_rate = 256.0;
    double duration = 16.0;
    double noise_hurst = 0.79;
    double noise_amplitude = 2.0;
    double rhythm_jitter = 0.05;
    double band_low = -60.0;
    double band_high = 60.0;
    double target_frequency = 34.0; ///< 0 disables the rhythm train
    std::uint64_t seed = 1;
    SynthesisMode mode = SynthesisMode::model;

    /// Throws ConfigError for infeasible settings (target at or above Nyquist, empty band, ...).
    void validate() const;
    std::size_t sample_count() const;
};

/// Rhythm pulses after tmpl.t_star at 1 / frequency spacing until t_end (the template itself excluded).
StimulusTrain rhythm_train(const GaussianPulse& tmpl, double frequency, double jitter, double t_end,
                           std::uint64_t seed);

/// Oversampling factor so the integration grid resolves the narrowest pulse by four steps.
std::size_t oversampling_factor(const StimulusTrain& train, double sample_rate);

/// Deterministic given cfg (including seed).
TimeSeries synthesize_eeg(const SynthesisConfig& cfg);

} // namespace fracsig
