#pragma once

#include <fftw3.h>

#include <cstddef>
#include <memory>
#include <mutex>

namespace fracsig::internal {

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuffer<T> fftw_buffer(std::size_t count) {
    return FftwBuffer<T>(static_cast<T*>(fftw_malloc(sizeof(T) * count)));
}

// The FFTW planner is not thread-safe; execution is.
inline std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

inline void execute_r2c(int n, double* in, fftw_complex* out) {
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(n, in, out, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

inline void execute_c2r(int n, fftw_complex* in, double* out) {
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_c2r_1d(n, in, out, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

} // namespace fracsig::internal
