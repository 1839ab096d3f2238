#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "fracsig/synthesis.hpp"

namespace fracsig::io {

struct AnalysisConfig {
    double q_min = -20.0;
    double q_max = 20.0;
    double dq = 0.5;
    int resolutions = 8; ///< dyadic levels, range/8 downwards
    std::size_t rs_window = 1024;
    std::size_t rs_stride = 256;

    void validate() const;
};

struct RunConfig {
    SynthesisConfig synthesis;
    AnalysisConfig analysis;
    bool diffusivity_derived = true; ///< D came from tau * C^2
};

/// Sectioned key = value text:
///
///     [model]      C, tau, D, H, V0, d
///     [stimulus]   phi0, sigma, and either t_star (comma list) or rate, count, seed
///     [synthesis]  sample_rate, duration, noise_hurst, noise_amplitude, rhythm_jitter,
///                  band_low, band_high, target_frequency, seed, mode (model | uniform)
///     [analysis]   q_min, q_max, dq, resolutions, rs_window, rs_stride
///
/// '#' and ';' start comments. Unknown sections or keys, duplicates, missing required
/// keys and inconsistent values all throw ConfigError (ParseError when a line is at fault).
RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::filesystem::path& path);

} // namespace fracsig::io
