#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "fracsig/errors.hpp"
#include "fracsig/fractional_core.hpp"
#include "fracsig/kernels.hpp"

namespace fracsig::kernels {

namespace {

// Below this lag the closed-form differences are evaluated directly; above it
// the binomial series avoids cancellation between terms of size k^(order+1).
constexpr std::size_t kSeriesThreshold = 8;

// (1 + x)^b + (1 - x)^b - 2 = 2 * sum_{j>=1} C(b, 2j) x^(2j), |x| <= 1/8.
double symmetric_second_difference(double b, double x) {
    double coeff = 1.0; // C(b, 0)
    double power = 1.0;
    double sum = 0.0;
    for (int j = 1; j <= 24; ++j) {
        coeff *= (b - j + 1) / j;
        power *= x;
        if (j % 2 == 0) sum += coeff * power;
    }
    return 2.0 * sum;
}

// (1 - x)^b - 1 + b x = sum_{j>=2} C(b, j) (-x)^j, |x| <= 1/8.
double first_order_remainder(double b, double x) {
    double coeff = 1.0;
    double power = 1.0;
    double sum = 0.0;
    for (int j = 1; j <= 24; ++j) {
        coeff *= (b - j + 1) / j;
        power *= -x;
        if (j >= 2) sum += coeff * power;
    }
    return sum;
}

} // namespace

ProductWeights make_product_weights(QuadratureScheme scheme, double order, double dt, std::size_t n) {
    ProductWeights w;
    w.scheme = scheme;
    w.lag.assign(std::max<std::size_t>(n, 1), 0.0);

    if (scheme == QuadratureScheme::product_trapezoid) {
        const double b = order + 1.0;
        w.scale = std::pow(dt, order) / gamma_function(order + 2.0);
        w.lag[0] = 1.0;
        for (std::size_t k = 1; k < n; ++k) {
            const double kd = static_cast<double>(k);
            if (k < kSeriesThreshold) {
                w.lag[k] = std::pow(kd + 1.0, b) - 2.0 * std::pow(kd, b) + std::pow(kd - 1.0, b);
            } else {
                w.lag[k] = std::pow(kd, b) * symmetric_second_difference(b, 1.0 / kd);
            }
        }
        w.head.assign(std::max<std::size_t>(n, 1), 0.0);
        for (std::size_t m = 1; m < n; ++m) {
            const double md = static_cast<double>(m);
            if (m < kSeriesThreshold) {
                w.head[m] = std::pow(md - 1.0, b) - (md - order - 1.0) * std::pow(md, order);
            } else {
                w.head[m] = std::pow(md, b) * first_order_remainder(b, 1.0 / md);
            }
        }
    } else {
        w.scale = std::pow(dt, order) / gamma_function(order + 1.0);
        if (n > 1) w.lag[1] = 1.0;
        for (std::size_t k = 2; k < n; ++k) {
            const double kd = static_cast<double>(k);
            w.lag[k] = -std::pow(kd, order) * std::expm1(order * std::log1p(-1.0 / kd));
        }
    }
    return w;
}

namespace detail {

double product_integral_at(const ProductWeights& weights, std::span<const double> f, std::size_t m) {
    if (m == 0) return 0.0;
    const double* lag = weights.lag.data();
    double sum = 0.0;
    if (weights.scheme == QuadratureScheme::product_trapezoid) {
        sum = weights.head[m] * f[0];
        for (std::size_t k = 0; k < m; ++k) sum += lag[k] * f[m - k];
    } else {
        for (std::size_t k = 1; k <= m; ++k) sum += lag[k] * f[m - k];
    }
    return weights.scale * sum;
}

double renyi_entropy_bits(const LevelProbabilities& level, double q) {
    if (std::abs(q - 1.0) < 1e-9) {
        double h = 0.0;
        for (double w : level.w) h -= w * std::log2(w);
        return h;
    }
    const double a = q - 1.0;
    if (std::abs(a) < 0.5) {
        // sum w^q = 1 + sum w (w^a - 1); avoids dividing a rounded log by a small a
        double s = 0.0;
        for (double w : level.w) s += w * std::expm1(a * std::log(w));
        return -std::log1p(s) / (a * std::numbers::ln2);
    }
    // Factor out the dominant term so w^q neither overflows (q << 0) nor underflows (q >> 0).
    const double ref = q > 0.0 ? level.w_max : level.w_min;
    double sum = 0.0;
    for (double w : level.w) sum += std::pow(w / ref, q);
    return (q * std::log2(ref) + std::log2(sum)) / (1.0 - q);
}

double hurst_rs_estimate(std::span<const double> x) noexcept {
    const std::size_t n = x.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int points = 0;
    bool any_spread = false;
    for (std::size_t size = 8; size <= n / 4; size *= 2) {
        const std::size_t windows = n / size;
        double rs_sum = 0.0;
        std::size_t used = 0;
        for (std::size_t w = 0; w < windows; ++w) {
            const auto seg = x.subspan(w * size, size);
            const double mean = std::accumulate(seg.begin(), seg.end(), 0.0) / static_cast<double>(size);
            double cum = 0.0, lo = 0.0, hi = 0.0, ss = 0.0;
            for (double v : seg) {
                const double d = v - mean;
                cum += d;
                lo = std::min(lo, cum);
                hi = std::max(hi, cum);
                ss += d * d;
            }
            const double s = std::sqrt(ss / static_cast<double>(size));
            if (s > 0.0 && s > 1e-14 * std::abs(mean)) {
                rs_sum += (hi - lo) / s;
                ++used;
            }
        }
        if (used == 0) continue;
        any_spread = true;
        const double lx = std::log2(static_cast<double>(size));
        const double ly = std::log2(rs_sum / static_cast<double>(used));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++points;
    }
    if (!any_spread || points < 2) return std::numeric_limits<double>::quiet_NaN();
    const double p = points;
    return (p * sxy - sx * sy) / (p * sxx - sx * sx);
}

} // namespace detail

namespace serial {

void product_integral(const ProductWeights& weights, std::span<const double> f, std::size_t stride,
                      std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = detail::product_integral_at(weights, f, i * stride);
}

void renyi_table(std::span<const LevelProbabilities> levels, std::span<const double> q, std::span<double> out) {
    for (std::size_t iq = 0; iq < q.size(); ++iq)
        for (std::size_t il = 0; il < levels.size(); ++il)
            out[iq * levels.size() + il] = detail::renyi_entropy_bits(levels[il], q[iq]);
}

void hurst_windows(std::span<const double> x, std::size_t window, std::size_t stride, std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = detail::hurst_rs_estimate(x.subspan(i * stride, window));
}

} // namespace serial

} // namespace fracsig::kernels
