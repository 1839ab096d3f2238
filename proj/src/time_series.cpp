#include "fracsig/time_series.hpp"

#include <cmath>
#include <string>

#include "fracsig/errors.hpp"

namespace fracsig {

TimeSeries::TimeSeries(std::vector<double> values, double dt, double t0)
    : values_(std::move(values)), dt_(dt), t0_(t0) {
    if (values_.empty()) throw DomainError("time series must have at least one sample");
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) throw DomainError("sampling interval must be positive and finite");
    if (!std::isfinite(t0_)) throw DomainError("start time must be finite");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw DomainError("non-finite sample at index " + std::to_string(i));
    }
}

} // namespace fracsig
