// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to compare thread counts.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "fracsig/kernels.hpp"

namespace {

using namespace fracsig;
using namespace fracsig::kernels;

std::vector<double> noise(std::size_t n) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<double> v(n);
    for (auto& x : v) x = g(rng);
    return v;
}

template <auto Kernel>
void product_integral(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto f = noise(n);
    const auto w = make_product_weights(QuadratureScheme::product_trapezoid, 0.79, 1.0 / n, n);
    std::vector<double> out(n);
    for (auto _ : state) {
        Kernel(w, f, 1, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(state.range(0));
}

template <auto Kernel>
void renyi_table(benchmark::State& state) {
    const auto x = noise(static_cast<std::size_t>(state.range(0)));
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    std::vector<LevelProbabilities> levels;
    for (int k = 3; k <= 10; ++k) {
        std::vector<double> counts(std::size_t{1} << k, 0.0);
        for (double v : x)
            counts[std::min(counts.size() - 1, static_cast<std::size_t>((v - *lo) / (*hi - *lo) * counts.size()))] += 1;
        std::vector<double> w;
        for (double c : counts)
            if (c > 0) w.push_back(c / x.size());
        levels.push_back({w, *std::min_element(w.begin(), w.end()), *std::max_element(w.begin(), w.end())});
    }
    std::vector<double> q;
    for (double v = -20.0; v <= 20.0; v += 0.5) q.push_back(v);
    std::vector<double> out(q.size() * levels.size());
    for (auto _ : state) {
        Kernel(levels, q, out);
        benchmark::DoNotOptimize(out.data());
    }
}

template <auto Kernel>
void hurst_windows(benchmark::State& state) {
    const auto x = noise(static_cast<std::size_t>(state.range(0)));
    const std::size_t window = 1024, stride = 64;
    std::vector<double> out((x.size() - window) / stride + 1);
    for (auto _ : state) {
        Kernel(x, window, stride, out);
        benchmark::DoNotOptimize(out.data());
    }
}

BENCHMARK(product_integral<serial::product_integral>)->Name("product_integral/serial")->RangeMultiplier(4)->Range(1 << 10, 1 << 14);
BENCHMARK(product_integral<parallel::product_integral>)->Name("product_integral/omp")->RangeMultiplier(4)->Range(1 << 10, 1 << 14);
BENCHMARK(renyi_table<serial::renyi_table>)->Name("renyi_table/serial")->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(renyi_table<parallel::renyi_table>)->Name("renyi_table/omp")->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(hurst_windows<serial::hurst_windows>)->Name("hurst_windows/serial")->Arg(1 << 14)->Arg(1 << 16);
BENCHMARK(hurst_windows<parallel::hurst_windows>)->Name("hurst_windows/omp")->Arg(1 << 14)->Arg(1 << 16);

} // namespace

BENCHMARK_MAIN();
