#include "fracsig/stimulus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fracsig/errors.hpp"

namespace fracsig {

namespace {

// exp(-x^2) is exactly zero in double precision beyond this many widths.
constexpr double kSupportWidths = 28.0;

} // namespace

void GaussianPulse::validate() const {
    if (!std::isfinite(phi0)) throw DomainError("pulse amplitude phi0 must be finite");
    if (!std::isfinite(t_star)) throw DomainError("pulse peak time t_star must be finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("pulse width sigma must be positive");
}

StimulusTrain::StimulusTrain(std::vector<GaussianPulse> pulses) : pulses_(std::move(pulses)) {
    for (const auto& p : pulses_) p.validate();
}

void StimulusTrain::add(const GaussianPulse& pulse) {
    pulse.validate();
    pulses_.push_back(pulse);
}

StimulusTrain& StimulusTrain::merge(const StimulusTrain& other) {
    pulses_.insert(pulses_.end(), other.pulses_.begin(), other.pulses_.end());
    return *this;
}

double pulse_value(const GaussianPulse& pulse, double t) {
    const double u = (t - pulse.t_star) / pulse.sigma;
    return pulse.phi0 * std::exp(-u * u);
}

double train_value(const StimulusTrain& train, double t) {
    double sum = 0.0;
    for (const auto& p : train.pulses()) sum += pulse_value(p, t);
    return sum;
}

SampledFunction sample_train(const StimulusTrain& train, double dt, std::size_t n) {
    if (!(dt > 0.0)) throw DomainError("sample_train requires dt > 0");
    if (n == 0) throw DomainError("sample_train requires at least one sample");
    std::vector<double> values(n, 0.0);
    // Pulse by pulse over its numerical support; terms outside it are exactly zero,
    // so the result matches train_value sample for sample.
    for (const auto& p : train.pulses()) {
        const double lo = (p.t_star - kSupportWidths * p.sigma) / dt;
        const double hi = (p.t_star + kSupportWidths * p.sigma) / dt;
        if (hi < 0.0 || lo > static_cast<double>(n - 1)) continue;
        const auto first = static_cast<std::size_t>(std::max(0.0, std::floor(lo)));
        const auto last = std::min(n - 1, static_cast<std::size_t>(std::ceil(hi)));
        for (std::size_t i = first; i <= last; ++i) values[i] += pulse_value(p, static_cast<double>(i) * dt);
    }
    return SampledFunction(std::move(values), dt, 0.0);
}

StimulusTrain poisson_train(double rate, std::size_t count, double phi0, double sigma, std::uint64_t seed,
                            double t_start) {
    if (!(rate > 0.0) || !std::isfinite(rate)) throw DomainError("pulse rate must be positive");
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> gap(rate);
    StimulusTrain train;
    double t = t_start;
    for (std::size_t i = 0; i < count; ++i) {
        t += gap(rng);
        train.add(GaussianPulse{phi0, t, sigma});
    }
    return train;
}

} // namespace fracsig
