#include "fracsig/spectral_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "fftw_util.hpp"
#include "fracsig/errors.hpp"

namespace fracsig {

Periodogram periodogram(const TimeSeries& ts) {
    const std::size_t n = ts.size();
    if (n < 16) throw DomainError("periodogram requires at least 16 samples");
    const auto v = ts.values();
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);

    auto in = internal::fftw_buffer<double>(n);
    auto out = internal::fftw_buffer<fftw_complex>(n / 2 + 1);
    for (std::size_t i = 0; i < n; ++i) in[i] = v[i] - mean;
    internal::execute_r2c(static_cast<int>(n), in.get(), out.get());

    Periodogram p;
    const std::size_t bins = n / 2 + 1;
    p.frequency.resize(bins);
    p.power.resize(bins);
    const double nd = static_cast<double>(n);
    const double norm = 1.0 / (nd * nd);
    for (std::size_t k = 0; k < bins; ++k) {
        p.frequency[k] = static_cast<double>(k) / (nd * ts.dt());
        const double mag2 = out[k][0] * out[k][0] + out[k][1] * out[k][1];
        // Bins other than DC and (for even n) Nyquist stand for two conjugate frequencies.
        const bool paired = k != 0 && !(n % 2 == 0 && k == n / 2);
        p.power[k] = (paired ? 2.0 : 1.0) * mag2 * norm;
    }
    return p;
}

double dominant_frequency(const TimeSeries& ts) {
    const auto p = periodogram(ts);
    std::size_t best = 1;
    for (std::size_t k = 2; k < p.power.size(); ++k)
        if (p.power[k] > p.power[best]) best = k;

    const auto v = ts.values();
    const double scale = std::max(std::abs(*std::max_element(v.begin(), v.end())),
                                  std::abs(*std::min_element(v.begin(), v.end())));
    // Anything below this is rounding left over from mean removal.
    const double floor = std::pow(1e-12 * scale, 2.0);
    if (!(p.power[best] > floor)) throw DegenerateInputError("spectrum is identically zero (constant signal)");
    return p.frequency[best];
}

std::string_view to_string(EegBand band) noexcept {
    switch (band) {
    case EegBand::delta: return "delta";
    case EegBand::theta: return "theta";
    case EegBand::alpha: return "alpha";
    case EegBand::beta: return "beta";
    case EegBand::gamma: return "gamma";
    case EegBand::none: break;
    }
    return "none";
}

EegBand classify_band(double f) {
    if (!(f >= 0.0)) throw DomainError("frequency must be non-negative");
    if (f >= 0.5 && f < 4.0) return EegBand::delta;
    if (f >= 4.0 && f < 8.0) return EegBand::theta;
    if (f >= 8.0 && f <= 13.0) return EegBand::alpha;
    if (f > 13.0 && f <= 30.0) return EegBand::beta;
    if (f > 30.0 && f <= 100.0) return EegBand::gamma;
    return EegBand::none;
}

ValidationResult validate_signal(const TimeSeries& ts, AmplitudeBand band, double target_frequency,
                                 double tolerance) {
    if (!(band.low < band.high)) throw DomainError("amplitude band requires low < high");
    if (!(tolerance > 0.0)) throw DomainError("frequency tolerance must be positive");

    ValidationResult r;
    const auto v = ts.values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    r.stats.v_min = *lo;
    r.stats.v_max = *hi;
    r.stats.within_band = r.stats.v_min > band.low && r.stats.v_max < band.high;

    std::ostringstream reason;
    bool frequency_ok = false;
    try {
        r.stats.dominant_frequency = dominant_frequency(ts);
        r.stats.band_label = classify_band(r.stats.dominant_frequency);
        frequency_ok = std::abs(r.stats.dominant_frequency - target_frequency) <= tolerance;
        if (!frequency_ok)
            reason << "dominant frequency " << r.stats.dominant_frequency << " Hz is not within " << tolerance
                   << " Hz of " << target_frequency << " Hz";
    } catch (const DegenerateInputError& e) {
        r.stats.dominant_frequency = std::numeric_limits<double>::quiet_NaN();
        reason << "degenerate spectrum: " << e.what();
    } catch (const DomainError& e) {
        r.stats.dominant_frequency = std::numeric_limits<double>::quiet_NaN();
        reason << "spectrum unavailable: " << e.what();
    }
    if (!r.stats.within_band) {
        std::ostringstream amp;
        amp << "amplitude: samples span [" << r.stats.v_min << ", " << r.stats.v_max << "] uV, outside ("
            << band.low << ", " << band.high << ") uV";
        const auto rest = reason.str();
        r.reason = rest.empty() ? amp.str() : amp.str() + "; " + rest;
    } else {
        r.reason = reason.str();
    }
    r.pass = r.stats.within_band && frequency_ok;
    return r;
}

} // namespace fracsig
