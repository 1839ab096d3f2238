#include "fracsig/response_model.hpp"

#include <cmath>
#include <sstream>

#include "fracsig/errors.hpp"
#include "fracsig/fractional_core.hpp"

namespace fracsig {

namespace {

constexpr double kConsistencyTolerance = 1e-6;

bool positive(double x) { return x > 0.0 && std::isfinite(x); }

} // namespace

void ModelParams::validate() const {
    if (!positive(C)) throw DomainError("propagation speed C must be positive");
    if (!positive(D)) throw DomainError("diffusion coefficient D must be positive");
    if (!positive(tau)) throw DomainError("reaction time tau must be positive");
    if (!(H > 0.0 && H <= 1.0)) throw DomainError("Hurst exponent H must lie in (0, 1]");
    if (!std::isfinite(V0)) throw DomainError("initial potential V0 must be finite");
    if (d < 1 || d > 3) throw DomainError("Euclidean dimension d must be 1, 2 or 3");
    const double expected = tau * C * C;
    if (std::abs(D - expected) > kConsistencyTolerance * expected) {
        std::ostringstream msg;
        msg << "inconsistent parameters: D = " << D << " but tau * C^2 = " << expected;
        throw DomainError(msg.str());
    }
}

ModelParams make_model_params(double C, std::optional<double> tau, std::optional<double> D, double H, double V0,
                              int d) {
    ModelParams p;
    p.C = C;
    p.H = H;
    p.V0 = V0;
    p.d = d;
    if (tau && D) {
        p.tau = *tau;
        p.D = *D;
    } else if (D) {
        p.D = *D;
        p.tau = derive_reaction_time(*D, C);
    } else {
        p.tau = tau.value_or(ModelParams{}.tau);
        p.D = derive_diffusivity(p.tau, C);
    }
    p.validate();
    return p;
}

double derive_diffusivity(double tau, double C) {
    if (!positive(tau) || !positive(C)) throw DomainError("derive_diffusivity requires tau > 0 and C > 0");
    return tau * C * C;
}

double derive_reaction_time(double D, double C) {
    if (!positive(D) || !positive(C)) throw DomainError("derive_reaction_time requires D > 0 and C > 0");
    return D / (C * C);
}

double hurst_from_dimension(double representative_dimension, int d) {
    const double h = 0.5 * (1.0 + d - representative_dimension);
    if (!(h >= 0.0 && h <= 1.0)) {
        std::ostringstream msg;
        msg << "representative dimension " << representative_dimension << " gives H = " << h
            << " outside [0, 1] for d = " << d;
        throw DomainError(msg.str());
    }
    return h;
}

double dimension_from_hurst(double H, int d) { return 1.0 + d - 2.0 * H; }

double generalized_diffusivity(double t, const ModelParams& params) {
    if (!(t > 0.0)) throw DomainError("generalized_diffusivity requires t > 0");
    return params.C * params.D * std::pow(t, 2.0 * params.H - 1.0);
}

double response_prefactor(const ModelParams& params) {
    return std::pow(params.C, 2.0 * params.H - 1.0) * std::pow(params.D, -params.H);
}

TimeSeries solve_response(const StimulusTrain& train, const ModelParams& params, double dt, std::size_t n) {
    return solve_response(sample_train(train, dt, n), params);
}

TimeSeries solve_response(const SampledFunction& flux, const ModelParams& params) {
    params.validate();
    auto values = fractional_integral_strided(flux, params.H, QuadratureScheme::product_trapezoid, 1);
    const double k = response_prefactor(params);
    for (double& v : values) v = params.V0 + k * v;
    return TimeSeries(std::move(values), flux.dt(), flux.t0());
}

} // namespace fracsig
