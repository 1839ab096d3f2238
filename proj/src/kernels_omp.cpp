#include <cstdint>

#include "fracsig/kernels.hpp"

namespace fracsig::kernels::parallel {

void product_integral(const ProductWeights& weights, std::span<const double> f, std::size_t stride,
                      std::span<double> out) {
    const auto count = static_cast<std::int64_t>(out.size());
    // Cost grows linearly with the output index; dynamic chunks balance the triangle.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        out[idx] = detail::product_integral_at(weights, f, idx * stride);
    }
}

void renyi_table(std::span<const LevelProbabilities> levels, std::span<const double> q, std::span<double> out) {
    const auto nq = static_cast<std::int64_t>(q.size());
    const auto nl = static_cast<std::int64_t>(levels.size());
#pragma omp parallel for collapse(2) schedule(static)
    for (std::int64_t iq = 0; iq < nq; ++iq)
        for (std::int64_t il = 0; il < nl; ++il)
            out[static_cast<std::size_t>(iq * nl + il)] =
                detail::renyi_entropy_bits(levels[static_cast<std::size_t>(il)], q[static_cast<std::size_t>(iq)]);
}

void hurst_windows(std::span<const double> x, std::size_t window, std::size_t stride, std::span<double> out) {
    const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        out[idx] = detail::hurst_rs_estimate(x.subspan(idx * stride, window));
    }
}

} // namespace fracsig::kernels::parallel
