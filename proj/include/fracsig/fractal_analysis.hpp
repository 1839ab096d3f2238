#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracsig/time_series.hpp"

namespace fracsig {

/// Value distribution of a series on N = ceil((v_max - v_min) / resolution) bins
/// anchored at v_min. Probabilities include empty bins and sum to 1.
struct ProbabilityHistogram {
    double v_min = 0.0;
    double v_max = 0.0;
    double resolution = 0.0;
    std::vector<double> w;

    std::size_t bin_count() const noexcept { return w.size(); }
};

ProbabilityHistogram build_histogram(const TimeSeries& ts, double resolution);
ProbabilityHistogram build_histogram(std::span<const double> values, double resolution);

/// Renyi entropy in bits over occupied bins; the Shannon form is used for |q - 1| < 1e-9.
double renyi_entropy(const ProbabilityHistogram& h, double q);

struct DimensionEstimate {
    double value = 0.0;
    double r_squared = 1.0;
};

/// Resolutions range / 2^first_level, ..., range / 2^(first_level + levels - 1).
/// A constant series gets the same ladder on a unit range.
std::vector<double> dyadic_resolutions(const TimeSeries& ts, int levels = 8, int first_level = 3);

/// Generalized dimension N_q: least-squares slope of E_q against log2(range / resolution).
///
/// The one-bin resolution (resolution = range) has E_q = 0 for every q and is used
/// as the anchor of the fit, i.e. the line passes through the origin. Because E_q is
/// non-increasing in q at every resolution, so is the fitted slope. Requires at least
/// five resolutions spanning at least two octaves (ConfigError otherwise).
DimensionEstimate generalized_dimension(const TimeSeries& ts, double q, std::span<const double> resolutions);

struct FractalSpectrum {
    std::vector<double> q;
    std::vector<double> dims;
    std::vector<double> r_squared;
    std::vector<double> resolutions;
    double n_plus_inf_direct = 0.0;  ///< slope of -log2(w_max)
    double n_minus_inf_direct = 0.0; ///< slope of -log2(w_min)

    /// N at the smallest q minus N at the largest q.
    double width() const noexcept { return dims.empty() ? 0.0 : dims.front() - dims.back(); }
};

/// Spectrum on q_min, q_min + dq, ... (up to q_max).
FractalSpectrum fractal_spectrum(const TimeSeries& ts, double q_min, double q_max, double dq,
                                 std::span<const double> resolutions);

/// Classical rescaled-range Hurst estimate: non-overlapping windows of 8, 16, ...
/// samples (sizes with fewer than four windows are dropped), slope of log2 mean R/S
/// against log2 window size. Throws DomainError for fewer than 64 samples and
/// DegenerateInputError when every window has zero spread.
double hurst_rs(const TimeSeries& ts);
double hurst_rs(std::span<const double> values);

/// R/S estimate per window. Entry i covers samples [i*stride, i*stride + window) and is
/// stamped with the time of its last sample. Degenerate windows hold NaN and are listed in gaps.
struct SlidingHurst {
    double t_first = 0.0;
    double dt = 0.0;
    std::vector<double> h;
    std::vector<std::size_t> gaps;
};

SlidingHurst hurst_sliding(const TimeSeries& ts, std::size_t window, std::size_t stride);

} // namespace fracsig
