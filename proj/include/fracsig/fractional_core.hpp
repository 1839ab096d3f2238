#pragma once

#include <cstddef>
#include <vector>

#include "fracsig/time_series.hpp"

namespace fracsig {

/// Product-integration rules for the Abel kernel (t - s)^(order - 1).
///
/// Both rules integrate the kernel exactly over every sub-interval against a
/// piecewise interpolant of the integrand, so the singular endpoint is never
/// sampled.
enum class QuadratureScheme {
    product_rectangle, ///< piecewise-constant (left value) interpolant, first order
    product_trapezoid, ///< piecewise-linear interpolant, second order
};

/// Convergence order on smooth integrands.
int convergence_order(QuadratureScheme scheme) noexcept;

/// Gamma function on the positive reals (Lanczos, g = 7, nine terms).
/// Relative accuracy is better than 1e-13 on (0, 171].
double gamma_function(double x);

/// Riemann-Liouville fractional integral of the given order in (0, 1]:
///
///     (1 / Gamma(order)) * integral_{t0}^{t} f(s) (t - s)^(order - 1) ds
///
/// evaluated at every sample instant of f. The lower terminal is f.t0().
SampledFunction fractional_integral(const SampledFunction& f, double order,
                                    QuadratureScheme scheme = QuadratureScheme::product_trapezoid);

/// As fractional_integral, but only at sample indices 0, stride, 2*stride, ...
/// Used when the integrand must be resolved on a finer grid than the output.
std::vector<double> fractional_integral_strided(const SampledFunction& f, double order,
                                                QuadratureScheme scheme, std::size_t stride);

/// Heat kernel (4 pi D t)^(-d/2) exp(-r^2 / (4 D t)) in d = 1, 2 or 3 dimensions.
double classical_kernel(double r, double t, double diffusivity, int dimension);

} // namespace fracsig
