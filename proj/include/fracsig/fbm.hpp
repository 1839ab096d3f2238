#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fracsig/time_series.hpp"

namespace fracsig {

/// Exact-covariance synthesis methods for fractional Gaussian noise.
enum class FgnMethod {
    circulant,  ///< Davies-Harte circulant embedding, O(n log n); falls back to sequential if the embedding is not PSD
    sequential, ///< Durbin-Levinson conditional sampling, O(n^2)
};

/// n samples of unit-variance fractional Gaussian noise with Hurst exponent H in (0, 1):
/// autocovariance g(k) = (|k+1|^2H - 2|k|^2H + |k-1|^2H) / 2.
std::vector<double> fgn_generate(double H, std::size_t n, std::uint64_t seed,
                                 FgnMethod method = FgnMethod::circulant);

/// Fractional Brownian motion path sampled at 0, dt, ..., (n-1) dt with B(0) = 0 and
/// Var[B(t)] = t^2H.
TimeSeries fbm_generate(double H, std::size_t n, double dt, std::uint64_t seed,
                        FgnMethod method = FgnMethod::circulant);

/// First differences of a path; length size() - 1.
std::vector<double> increments(const TimeSeries& path);

} // namespace fracsig
