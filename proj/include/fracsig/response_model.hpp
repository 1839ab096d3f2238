#pragma once

#include <cstddef>
#include <optional>

#include "fracsig/stimulus.hpp"
#include "fracsig/time_series.hpp"

namespace fracsig {

/// Physical parameters of the fractional-diffusion response.
struct ModelParams {
    double C = 0.055;       ///< propagation speed (m/s)
    double D = 0.215 * 0.055 * 0.055; ///< diffusion coefficient (m^2/s)
    double tau = 0.215;     ///< reaction time (s)
    double H = 0.79;        ///< Hurst exponent, (0, 1]
    double V0 = 31.99;      ///< initial potential (uV)
    int d = 1;              ///< Euclidean dimension

    /// Throws DomainError on out-of-range values or when D != tau * C^2 (1e-6 relative).
    void validate() const;
};

/// Builds parameters from the supplied subset of {tau, D}: the missing one is
/// derived from D = tau C^2; if both are given they must agree.
ModelParams make_model_params(double C, std::optional<double> tau, std::optional<double> D, double H, double V0,
                              int d = 1);

/// D = tau C^2.
double derive_diffusivity(double tau, double C);
/// tau = D / C^2.
double derive_reaction_time(double D, double C);

/// H = (1 + d - N) / 2; throws DomainError naming N when H falls outside [0, 1].
double hurst_from_dimension(double representative_dimension, int d = 1);
/// N = 1 + d - 2 H.
double dimension_from_hurst(double H, int d = 1);

/// Time-dependent diffusivity C D t^(2H - 1).
double generalized_diffusivity(double t, const ModelParams& params);

/// C^(2H - 1) D^(-H), the factor multiplying the fractional integral of the flux.
double response_prefactor(const ModelParams& params);

/// Potential at the stimulated boundary:
///
///     V(t) = V0 + C^(2H-1) D^(-H) / Gamma(H) * integral_0^t phi(s) (t - s)^(H-1) ds
///
/// on the grid 0, dt, ..., (n-1) dt.
TimeSeries solve_response(const StimulusTrain& train, const ModelParams& params, double dt, std::size_t n);

/// Same response for an arbitrary sampled flux; the lower terminal is flux.t0().
TimeSeries solve_response(const SampledFunction& flux, const ModelParams& params);

} // namespace fracsig
