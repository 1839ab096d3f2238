#include "fracsig/fbm.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fracsig/errors.hpp"
#include "fftw_util.hpp"

namespace fracsig {

namespace {

double fgn_autocovariance(double H, std::size_t k) {
    const double kd = static_cast<double>(k);
    const double e = 2.0 * H;
    return 0.5 * (std::pow(kd + 1.0, e) - 2.0 * std::pow(kd, e) + std::pow(std::abs(kd - 1.0), e));
}

// Returns false when the circulant embedding has a negative eigenvalue.
bool fgn_circulant(double H, std::size_t n, std::mt19937_64& rng, std::vector<double>& out) {
    std::size_t half = 1;
    while (half < n) half *= 2;
    const std::size_t m = 2 * half;

    // Eigenvalues of the circulant whose first row is g(0..half), g(half-1..1).
    auto row = internal::fftw_buffer<double>(m);
    auto spectrum = internal::fftw_buffer<fftw_complex>(half + 1);
    for (std::size_t k = 0; k <= half; ++k) row[k] = fgn_autocovariance(H, k);
    for (std::size_t k = half + 1; k < m; ++k) row[k] = row[m - k];
    internal::execute_r2c(static_cast<int>(m), row.get(), spectrum.get());
    std::vector<double> lambda(half + 1);
    for (std::size_t k = 0; k <= half; ++k) {
        lambda[k] = spectrum[k][0];
        if (lambda[k] < -1e-10 * std::abs(spectrum[0][0])) return false;
        lambda[k] = std::max(lambda[k], 0.0);
    }

    std::normal_distribution<double> normal;
    const double md = static_cast<double>(m);
    auto coeff = internal::fftw_buffer<fftw_complex>(half + 1);
    coeff[0][0] = std::sqrt(lambda[0] / md) * normal(rng);
    coeff[0][1] = 0.0;
    for (std::size_t k = 1; k < half; ++k) {
        const double a = std::sqrt(lambda[k] / (2.0 * md));
        coeff[k][0] = a * normal(rng);
        coeff[k][1] = a * normal(rng);
    }
    coeff[half][0] = std::sqrt(lambda[half] / md) * normal(rng);
    coeff[half][1] = 0.0;

    auto field = internal::fftw_buffer<double>(m);
    internal::execute_c2r(static_cast<int>(m), coeff.get(), field.get());
    out.assign(field.get(), field.get() + n);
    return true;
}

void fgn_sequential(double H, std::size_t n, std::mt19937_64& rng, std::vector<double>& out) {
    std::normal_distribution<double> normal;
    std::vector<double> gamma(n);
    for (std::size_t k = 0; k < n; ++k) gamma[k] = fgn_autocovariance(H, k);

    // Durbin-Levinson: phi holds the order-k prediction coefficients.
    std::vector<double> phi(n, 0.0), prev(n, 0.0);
    out.assign(n, 0.0);
    double variance = gamma[0];
    out[0] = std::sqrt(variance) * normal(rng);
    for (std::size_t k = 1; k < n; ++k) {
        double num = gamma[k];
        for (std::size_t j = 1; j < k; ++j) num -= prev[j] * gamma[k - j];
        const double reflection = num / variance;
        phi[k] = reflection;
        for (std::size_t j = 1; j < k; ++j) phi[j] = prev[j] - reflection * prev[k - j];
        variance *= 1.0 - reflection * reflection;

        double mean = 0.0;
        for (std::size_t j = 1; j <= k; ++j) mean += phi[j] * out[k - j];
        out[k] = mean + std::sqrt(std::max(variance, 0.0)) * normal(rng);
        std::copy(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(k + 1), prev.begin());
    }
}

} // namespace

std::vector<double> fgn_generate(double H, std::size_t n, std::uint64_t seed, FgnMethod method) {
    if (!(H > 0.0 && H < 1.0)) throw DomainError("fractional Gaussian noise requires H in (0, 1)");
    if (n == 0) throw DomainError("fractional Gaussian noise requires at least one sample");
    std::mt19937_64 rng(seed);
    std::vector<double> out;
    if (method == FgnMethod::circulant && fgn_circulant(H, n, rng, out)) return out;
    fgn_sequential(H, n, rng, out);
    return out;
}

TimeSeries fbm_generate(double H, std::size_t n, double dt, std::uint64_t seed, FgnMethod method) {
    if (!(H > 0.0 && H < 1.0)) throw DomainError("fractional Brownian motion requires H in (0, 1)");
    if (n < 2) throw DomainError("fractional Brownian motion requires at least two samples");
    if (!(dt > 0.0)) throw DomainError("fractional Brownian motion requires dt > 0");
    const auto noise = fgn_generate(H, n - 1, seed, method);
    const double scale = std::pow(dt, H);
    std::vector<double> path(n);
    path[0] = 0.0;
    double sum = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        sum += noise[i - 1];
        path[i] = scale * sum;
    }
    return TimeSeries(std::move(path), dt, 0.0);
}

std::vector<double> increments(const TimeSeries& path) {
    const auto v = path.values();
    std::vector<double> out;
    if (v.size() < 2) return out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i] - v[i - 1]);
    return out;
}

} // namespace fracsig
