#include "fracsig/fractional_core.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fracsig/errors.hpp"
#include "fracsig/kernels.hpp"

namespace fracsig {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

void check_order(double order) {
    if (!(order > 0.0 && order <= 1.0))
        throw DomainError("fractional order must lie in (0, 1], got " + std::to_string(order));
}

} // namespace

int convergence_order(QuadratureScheme scheme) noexcept {
    return scheme == QuadratureScheme::product_trapezoid ? 2 : 1;
}

double gamma_function(double x) {
    if (!std::isfinite(x) || !(x > 0.0))
        throw DomainError("gamma_function requires a finite positive argument");
    if (x < 0.5) return gamma_function(x + 1.0) / x;

    const double z = x - 1.0;
    double series = kLanczosCoefficients[0];
    for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i)
        series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
    const double t = z + kLanczosG + 0.5;
    // t^(z + 1/2) split in two so large arguments do not overflow before e^-t.
    const double half_power = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) * series;
}

SampledFunction fractional_integral(const SampledFunction& f, double order, QuadratureScheme scheme) {
    auto values = fractional_integral_strided(f, order, scheme, 1);
    return SampledFunction(std::move(values), f.dt(), f.t0());
}

std::vector<double> fractional_integral_strided(const SampledFunction& f, double order,
                                                QuadratureScheme scheme, std::size_t stride) {
    check_order(order);
    if (stride == 0) throw DomainError("stride must be at least 1");
    const auto weights = kernels::make_product_weights(scheme, order, f.dt(), f.size());
    std::vector<double> out((f.size() + stride - 1) / stride);
    kernels::parallel::product_integral(weights, f.values(), stride, out);
    return out;
}

double classical_kernel(double r, double t, double diffusivity, int dimension) {
    if (!(t > 0.0)) throw DomainError("classical_kernel requires t > 0");
    if (!(diffusivity > 0.0)) throw DomainError("classical_kernel requires D > 0");
    if (dimension < 1 || dimension > 3) throw DomainError("classical_kernel requires d in {1, 2, 3}");
    const double four_dt = 4.0 * diffusivity * t;
    return std::pow(std::numbers::pi * four_dt, -0.5 * dimension) * std::exp(-r * r / four_dt);
}

} // namespace fracsig
