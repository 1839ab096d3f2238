#include "fracsig/fractal_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fracsig/errors.hpp"
#include "fracsig/kernels.hpp"

namespace fracsig {

namespace {

std::size_t bin_count_for(double range, double resolution) {
    if (range <= 0.0) return 1;
    const double ratio = range / resolution;
    const double nearest = std::round(ratio);
    // A ladder built as range / 2^k must not gain a sliver bin from rounding.
    if (nearest >= 1.0 && std::abs(ratio - nearest) <= 1e-9 * nearest) return static_cast<std::size_t>(nearest);
    return static_cast<std::size_t>(std::max(1.0, std::ceil(ratio)));
}

kernels::LevelProbabilities occupied(const ProbabilityHistogram& h) {
    kernels::LevelProbabilities level;
    level.w.reserve(h.w.size());
    for (double w : h.w)
        if (w > 0.0) level.w.push_back(w);
    const auto [lo, hi] = std::minmax_element(level.w.begin(), level.w.end());
    level.w_min = *lo;
    level.w_max = *hi;
    return level;
}

void check_ladder(std::span<const double> resolutions) {
    if (resolutions.size() < 5)
        throw ConfigError("generalized dimension needs at least 5 resolutions, got " +
                          std::to_string(resolutions.size()));
    for (double r : resolutions)
        if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("resolutions must be positive");
    const auto [lo, hi] = std::minmax_element(resolutions.begin(), resolutions.end());
    if (*hi / *lo < 4.0 * (1.0 - 1e-12)) throw ConfigError("resolutions must span at least two octaves");
}

struct OriginFit {
    double slope;
    double r_squared;
};

OriginFit fit_through_origin(std::span<const double> x, std::span<const double> y) {
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    const double slope = sxy / sxx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - slope * x[i];
        ss_res += r * r;
    }
    return {slope, syy > 0.0 ? 1.0 - ss_res / syy : 1.0};
}

// Histograms of every ladder level plus their log2(range / resolution) abscissae.
struct Ladder {
    std::vector<kernels::LevelProbabilities> levels;
    std::vector<double> x;
};

Ladder build_ladder(const TimeSeries& ts, std::span<const double> resolutions) {
    Ladder ladder;
    const auto v = ts.values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double range = *hi - *lo;
    for (double r : resolutions) {
        ladder.levels.push_back(occupied(build_histogram(v, r)));
        ladder.x.push_back(std::log2(range / r));
    }
    return ladder;
}

bool is_constant(const TimeSeries& ts) {
    const auto v = ts.values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *lo == *hi;
}

} // namespace

ProbabilityHistogram build_histogram(const TimeSeries& ts, double resolution) {
    return build_histogram(ts.values(), resolution);
}

ProbabilityHistogram build_histogram(std::span<const double> values, double resolution) {
    if (!(resolution > 0.0) || !std::isfinite(resolution)) throw DomainError("histogram resolution must be positive");
    if (values.empty()) throw DomainError("histogram of an empty series");
    ProbabilityHistogram h;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    h.v_min = *lo;
    h.v_max = *hi;
    h.resolution = resolution;
    const std::size_t bins = bin_count_for(h.v_max - h.v_min, resolution);
    std::vector<std::size_t> counts(bins, 0);
    for (double v : values) {
        const double pos = (v - h.v_min) / resolution;
        const auto idx = std::min(bins - 1, static_cast<std::size_t>(std::max(0.0, pos)));
        ++counts[idx];
    }
    const double total = static_cast<double>(values.size());
    h.w.resize(bins);
    for (std::size_t i = 0; i < bins; ++i) h.w[i] = static_cast<double>(counts[i]) / total;
    return h;
}

double renyi_entropy(const ProbabilityHistogram& h, double q) {
    if (!std::isfinite(q)) throw DomainError("moment order q must be finite");
    return kernels::detail::renyi_entropy_bits(occupied(h), q);
}

std::vector<double> dyadic_resolutions(const TimeSeries& ts, int levels, int first_level) {
    const auto v = ts.values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double range = *hi > *lo ? *hi - *lo : 1.0;
    std::vector<double> out;
    for (int k = 0; k < levels; ++k) out.push_back(std::ldexp(range, -(first_level + k)));
    return out;
}

DimensionEstimate generalized_dimension(const TimeSeries& ts, double q, std::span<const double> resolutions) {
    check_ladder(resolutions);
    if (is_constant(ts)) return {0.0, 1.0};
    const auto ladder = build_ladder(ts, resolutions);
    std::vector<double> e(ladder.levels.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = kernels::detail::renyi_entropy_bits(ladder.levels[i], q);
    const auto fit = fit_through_origin(ladder.x, e);
    return {fit.slope, fit.r_squared};
}

FractalSpectrum fractal_spectrum(const TimeSeries& ts, double q_min, double q_max, double dq,
                                 std::span<const double> resolutions) {
    if (!(q_min < q_max)) throw ConfigError("spectrum requires q_min < q_max");
    if (!(dq > 0.0)) throw ConfigError("spectrum requires dq > 0");
    check_ladder(resolutions);

    FractalSpectrum s;
    s.resolutions.assign(resolutions.begin(), resolutions.end());
    const auto steps = static_cast<std::size_t>(std::floor((q_max - q_min) / dq + 1e-9));
    for (std::size_t k = 0; k <= steps; ++k) s.q.push_back(q_min + static_cast<double>(k) * dq);

    if (is_constant(ts)) {
        s.dims.assign(s.q.size(), 0.0);
        s.r_squared.assign(s.q.size(), 1.0);
        return s;
    }

    const auto ladder = build_ladder(ts, resolutions);
    const std::size_t nl = ladder.levels.size();
    std::vector<double> table(s.q.size() * nl);
    kernels::parallel::renyi_table(ladder.levels, s.q, table);

    s.dims.resize(s.q.size());
    s.r_squared.resize(s.q.size());
    for (std::size_t iq = 0; iq < s.q.size(); ++iq) {
        const auto fit = fit_through_origin(ladder.x, std::span<const double>(table).subspan(iq * nl, nl));
        s.dims[iq] = fit.slope;
        s.r_squared[iq] = fit.r_squared;
    }

    std::vector<double> top(nl), bottom(nl);
    for (std::size_t il = 0; il < nl; ++il) {
        top[il] = -std::log2(ladder.levels[il].w_max);
        bottom[il] = -std::log2(ladder.levels[il].w_min);
    }
    s.n_plus_inf_direct = fit_through_origin(ladder.x, top).slope;
    s.n_minus_inf_direct = fit_through_origin(ladder.x, bottom).slope;
    return s;
}

double hurst_rs(const TimeSeries& ts) { return hurst_rs(ts.values()); }

double hurst_rs(std::span<const double> values) {
    if (values.size() < 64) throw DomainError("R/S estimate requires at least 64 samples");
    const double h = kernels::detail::hurst_rs_estimate(values);
    if (std::isnan(h)) throw DegenerateInputError("R/S estimate undefined: every window has zero spread");
    return h;
}

SlidingHurst hurst_sliding(const TimeSeries& ts, std::size_t window, std::size_t stride) {
    if (window < 64) throw DomainError("sliding R/S window must be at least 64 samples");
    if (stride == 0) throw DomainError("sliding R/S stride must be at least 1");
    if (window > ts.size()) throw DomainError("sliding R/S window longer than the series");

    SlidingHurst out;
    const std::size_t count = (ts.size() - window) / stride + 1;
    out.h.resize(count);
    kernels::parallel::hurst_windows(ts.values(), window, stride, out.h);
    out.t_first = ts.time(window - 1);
    out.dt = ts.dt() * static_cast<double>(stride);
    for (std::size_t i = 0; i < count; ++i)
        if (std::isnan(out.h[i])) out.gaps.push_back(i);
    return out;
}

} // namespace fracsig
