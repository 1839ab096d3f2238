#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracsig {

/// Uniformly sampled scalar signal. Samples are finite, dt > 0, at least one sample.
class TimeSeries {
public:
    TimeSeries(std::vector<double> values, double dt, double t0 = 0.0);

    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }
    double dt() const noexcept { return dt_; }
    double t0() const noexcept { return t0_; }
    double time(std::size_t i) const noexcept { return t0_ + static_cast<double>(i) * dt_; }

    /// Moves the samples out; the series is left empty and must not be used afterwards.
    std::vector<double> release() && { return std::move(values_); }

private:
    std::vector<double> values_;
    double dt_;
    double t0_;
};

/// Integrands and fluxes share the representation of signals.
using SampledFunction = TimeSeries;

} // namespace fracsig
