#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fracsig/time_series.hpp"

namespace fracsig {

/// Gaussian stimulus pulse phi0 * exp(-(t - t_star)^2 / sigma^2).
///
/// The exponent uses sigma^2, not 2 sigma^2, so the pulse falls to phi0 / e at
/// t_star +/- sigma. Its integral over the real line is phi0 * sigma * sqrt(pi).
struct GaussianPulse {
    double phi0 = 1.0;
    double t_star = 0.0;
    double sigma = 1.0;

    /// Throws DomainError unless sigma > 0 and every field is finite.
    void validate() const;
};

/// Concurrent stimuli combined by superposition. May be empty.
class StimulusTrain {
public:
    StimulusTrain() = default;
    explicit StimulusTrain(std::vector<GaussianPulse> pulses);

    const std::vector<GaussianPulse>& pulses() const noexcept { return pulses_; }
    bool empty() const noexcept { return pulses_.empty(); }
    std::size_t size() const noexcept { return pulses_.size(); }

    void add(const GaussianPulse& pulse);
    /// Appends every pulse of other, keeping order.
    StimulusTrain& merge(const StimulusTrain& other);

private:
    std::vector<GaussianPulse> pulses_;
};

double pulse_value(const GaussianPulse& pulse, double t);
double train_value(const StimulusTrain& train, double t);

/// Train sampled at 0, dt, 2 dt, ... (n samples).
SampledFunction sample_train(const StimulusTrain& train, double dt, std::size_t n);

/// count pulses with exponential inter-arrival times (mean 1 / rate) after t_start.
/// Equal-probability arrivals, fully determined by seed.
StimulusTrain poisson_train(double rate, std::size_t count, double phi0, double sigma, std::uint64_t seed,
                            double t_start = 0.0);

} // namespace fracsig
