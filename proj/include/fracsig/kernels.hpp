#pragma once

// Data-parallel inner loops. Each kernel exists twice with identical
// signatures: `serial` is the reference implementation kept for testing,
// `parallel` is the OpenMP version used by the public API. Every output
// element is produced by one thread with the same operation order as the
// serial loop, so both variants agree bit for bit.

#include <cstddef>
#include <span>
#include <vector>

#include "fracsig/fractional_core.hpp"

namespace fracsig::kernels {

/// Lag weights of a product-integration rule on a uniform grid of n points.
///
/// Trapezoid: out[m] = scale * (head[m] * f[0] + sum_{k=0}^{m-1} lag[k] * f[m-k]), lag[0] = 1.
/// Rectangle: out[m] = scale * sum_{k=1}^{m} lag[k] * f[m-k].
struct ProductWeights {
    QuadratureScheme scheme;
    double scale;
    std::vector<double> lag;
    std::vector<double> head;
};

ProductWeights make_product_weights(QuadratureScheme scheme, double order, double dt, std::size_t n);

/// Occupied-bin probabilities at one resolution of the ladder.
struct LevelProbabilities {
    std::vector<double> w;
    double w_min;
    double w_max;
};

namespace serial {

/// Writes the integral at indices 0, stride, 2*stride, ... into out (size ceil(n / stride)).
void product_integral(const ProductWeights& weights, std::span<const double> f, std::size_t stride,
                      std::span<double> out);

/// Renyi entropies (bits) for every (q, level): out[iq * levels.size() + il].
void renyi_table(std::span<const LevelProbabilities> levels, std::span<const double> q,
                 std::span<double> out);

/// R/S Hurst estimate for windows starting at 0, stride, 2*stride, ...; NaN marks a degenerate window.
void hurst_windows(std::span<const double> x, std::size_t window, std::size_t stride, std::span<double> out);

} // namespace serial

namespace parallel {

void product_integral(const ProductWeights& weights, std::span<const double> f, std::size_t stride,
                      std::span<double> out);

void renyi_table(std::span<const LevelProbabilities> levels, std::span<const double> q,
                 std::span<double> out);

void hurst_windows(std::span<const double> x, std::size_t window, std::size_t stride, std::span<double> out);

} // namespace parallel

// Single-element bodies shared by both variants.
namespace detail {

double product_integral_at(const ProductWeights& weights, std::span<const double> f, std::size_t m);
double renyi_entropy_bits(const LevelProbabilities& level, double q);
/// NaN when every window of every size is degenerate or fewer than two sizes fit.
double hurst_rs_estimate(std::span<const double> x) noexcept;

} // namespace detail

} // namespace fracsig::kernels
