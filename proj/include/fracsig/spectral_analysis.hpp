#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fracsig/time_series.hpp"

namespace fracsig {

/// One-sided power spectrum on the grid k / (n dt), k = 0..n/2.
/// Normalized so the powers sum to the (population) variance of the signal.
struct Periodogram {
    std::vector<double> frequency;
    std::vector<double> power;
};

/// Mean-removed, rectangular-window periodogram. Requires at least 16 samples.
Periodogram periodogram(const TimeSeries& ts);

/// Frequency of the largest non-DC bin, ties toward the lower frequency.
/// Throws DegenerateInputError if the spectrum is identically zero.
double dominant_frequency(const TimeSeries& ts);

enum class EegBand { none, delta, theta, alpha, beta, gamma };

std::string_view to_string(EegBand band) noexcept;

/// delta [0.5, 4), theta [4, 8), alpha [8, 13], beta (13, 30], gamma (30, 100].
EegBand classify_band(double frequency);

struct AmplitudeBand {
    double low;
    double high;
};

struct SignalStats {
    double v_min = 0.0;
    double v_max = 0.0;
    double dominant_frequency = 0.0; ///< NaN when the spectrum is degenerate
    EegBand band_label = EegBand::none;
    bool within_band = false;
};

struct ValidationResult {
    SignalStats stats;
    bool pass = false;
    std::string reason; ///< empty on pass
};

/// Passes iff every sample lies strictly inside the band and the dominant
/// frequency is within tol of target. Never throws on a degenerate spectrum.
ValidationResult validate_signal(const TimeSeries& ts, AmplitudeBand band, double target_frequency,
                                 double tolerance);

} // namespace fracsig
