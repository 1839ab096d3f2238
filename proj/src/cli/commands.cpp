#include "fracsig/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "fracsig/errors.hpp"
#include "fracsig/fractal_analysis.hpp"
#include "fracsig/io/run_config.hpp"
#include "fracsig/io/signal_file.hpp"
#include "fracsig/spectral_analysis.hpp"
#include "fracsig/synthesis.hpp"

namespace fracsig::cli {

namespace {

constexpr double kSimulateFrequencyTolerance = 2.0;

std::string fmt(double v) {
    if (std::isnan(v)) return "n/a";
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 8);
    return std::string(buf, ptr);
}

std::optional<AmplitudeBand> parse_band(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    AmplitudeBand band{};
    const auto parse = [](std::string_view s, double& v) {
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        return !s.empty() && ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(v);
    };
    const std::string_view all(text);
    if (!parse(all.substr(0, colon), band.low) || !parse(all.substr(colon + 1), band.high)) return std::nullopt;
    if (!(band.low < band.high)) return std::nullopt;
    return band;
}

void print_stats(std::ostream& out, const SignalStats& s) {
    out << "v_min = " << fmt(s.v_min) << " uV\n"
        << "v_max = " << fmt(s.v_max) << " uV\n"
        << "dominant_frequency = " << fmt(s.dominant_frequency) << " Hz\n"
        << "band = " << to_string(s.band_label) << "\n"
        << "within_amplitude_band = " << (s.within_band ? "yes" : "no") << "\n";
}

struct SignalSummary {
    std::size_t samples = 0;
    double v_min = NAN, v_max = NAN, dominant = NAN, hurst = NAN, width = NAN;
};

SignalSummary summarize(const TimeSeries& ts) {
    SignalSummary s;
    s.samples = ts.size();
    const auto [lo, hi] = std::minmax_element(ts.values().begin(), ts.values().end());
    s.v_min = *lo;
    s.v_max = *hi;
    try { s.dominant = dominant_frequency(ts); } catch (const std::exception&) {}
    try { s.hurst = hurst_rs(ts); } catch (const std::exception&) {}
    const io::AnalysisConfig a;
    s.width = fractal_spectrum(ts, a.q_min, a.q_max, a.dq, dyadic_resolutions(ts, a.resolutions)).width();
    return s;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path, std::ostream& out) {
    const auto cfg = io::load_run_config(config_path);
    const auto& syn = cfg.synthesis;
    const auto ts = synthesize_eeg(syn);
    io::write_signal(ts, out_path);

    out << "D = " << fmt(syn.params.D) << " m^2/s (" << (cfg.diffusivity_derived ? "derived from tau*C^2" : "given")
        << ")\n"
        << "seed = " << syn.seed << "\n"
        << "samples = " << ts.size() << " at " << fmt(syn.sample_rate) << " Hz\n";
    const AmplitudeBand band{syn.band_low, syn.band_high};
    if (syn.target_frequency > 0.0) {
        const auto check = validate_signal(ts, band, syn.target_frequency, kSimulateFrequencyTolerance);
        out << "dominant_frequency = " << fmt(check.stats.dominant_frequency) << " Hz\n"
            << "internal check: " << (check.pass ? "PASS" : "FAIL");
        if (!check.pass) out << " (" << check.reason << ")";
        out << "\n";
    } else {
        const auto [lo, hi] = std::minmax_element(ts.values().begin(), ts.values().end());
        const bool inside = *lo > band.low && *hi < band.high;
        out << "internal check: " << (inside ? "PASS" : "FAIL (amplitude outside band)") << "\n";
    }
    out << "wrote " << out_path << "\n";
    return kSuccess;
}

struct AnalyzeOptions {
    std::string signal;
    std::string spectrum_out;
    std::string hurst_out;
    std::string config;
    bool hurst = false;
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out) {
    io::AnalysisConfig a;
    if (!opt.config.empty()) a = io::load_run_config(opt.config).analysis;
    const auto ts = io::read_signal(opt.signal);

    const auto spectrum = fractal_spectrum(ts, a.q_min, a.q_max, a.dq, dyadic_resolutions(ts, a.resolutions));
    std::ostringstream table;
    table << "q,N_q,r2\n";
    for (std::size_t i = 0; i < spectrum.q.size(); ++i)
        table << fmt(spectrum.q[i]) << ',' << fmt(spectrum.dims[i]) << ',' << fmt(spectrum.r_squared[i]) << '\n';
    if (opt.spectrum_out.empty()) {
        out << table.str();
    } else {
        io::write_text_atomic(opt.spectrum_out, table.str());
        out << "wrote " << opt.spectrum_out << "\n";
    }
    out << "spectrum_width = " << fmt(spectrum.width()) << "\n"
        << "N_plus_inf_direct = " << fmt(spectrum.n_plus_inf_direct) << "\n"
        << "N_minus_inf_direct = " << fmt(spectrum.n_minus_inf_direct) << "\n";

    if (opt.hurst) {
        out << "hurst_rs = " << fmt(hurst_rs(ts)) << "\n";
        const std::size_t window = std::min(a.rs_window, ts.size());
        const auto sliding = hurst_sliding(ts, window, a.rs_stride);
        std::ostringstream rows;
        rows << "t,H\n";
        for (std::size_t i = 0; i < sliding.h.size(); ++i)
            rows << fmt(sliding.t_first + static_cast<double>(i) * sliding.dt) << ',' << fmt(sliding.h[i]) << '\n';
        out << "sliding_window = " << window << " stride = " << a.rs_stride << " gaps = " << sliding.gaps.size()
            << "\n";
        if (opt.hurst_out.empty()) {
            out << rows.str();
        } else {
            io::write_text_atomic(opt.hurst_out, rows.str());
            out << "wrote " << opt.hurst_out << "\n";
        }
    }
    return kSuccess;
}

int cmd_validate(const std::string& signal, const std::string& band_text, double freq, double tol,
                 std::ostream& out, std::ostream& err) {
    const auto band = parse_band(band_text);
    if (!band) {
        err << "error: malformed --band '" << band_text << "' (expected low:high with low < high)\n";
        return kConfigError;
    }
    if (!(tol > 0.0)) {
        err << "error: --tol must be positive\n";
        return kConfigError;
    }
    const auto ts = io::read_signal(signal);
    const auto r = validate_signal(ts, *band, freq, tol);
    print_stats(out, r.stats);
    out << "result = " << (r.pass ? "PASS" : "FAIL") << "\n";
    if (!r.pass) out << "reason = " << r.reason << "\n";
    return r.pass ? kSuccess : kValidationFailed;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, std::ostream& out, std::ostream& err) {
    std::optional<TimeSeries> a, b;
    try {
        a = io::read_signal(a_path);
        b = io::read_signal(b_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    const auto sa = summarize(*a);
    const auto sb = summarize(*b);
    const auto row = [&](const char* name, double x, double y) {
        const double diff = std::isnan(x) || std::isnan(y) ? NAN : std::abs(x - y);
        out << std::left << std::setw(20) << name << std::setw(14) << fmt(x) << std::setw(14) << fmt(y)
            << fmt(diff) << "\n";
    };
    out << std::left << std::setw(20) << "metric" << std::setw(14) << "A" << std::setw(14) << "B" << "|A-B|\n";
    row("v_min_uV", sa.v_min, sb.v_min);
    row("v_max_uV", sa.v_max, sb.v_max);
    row("dominant_freq_Hz", sa.dominant, sb.dominant);
    row("hurst_rs", sa.hurst, sb.hurst);
    row("spectrum_width", sa.width, sb.width);
    if (sa.samples != sb.samples)
        out << "note: lengths differ (" << sa.samples << " vs " << sb.samples
            << " samples); statistics are length-independent\n";
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional-diffusion EEG response model and multifractal signal analysis", "fracsig"};
    app.require_subcommand(1);

    std::string config, out_path;
    auto* simulate = app.add_subcommand("simulate", "generate a signal from a run config");
    simulate->add_option("config", config, "run config file")->required();
    simulate->add_option("--out", out_path, "output signal CSV")->required();

    AnalyzeOptions analyze_opt;
    auto* analyze = app.add_subcommand("analyze", "fractal spectrum and Hurst analysis of a signal");
    analyze->add_option("signal", analyze_opt.signal, "signal CSV")->required();
    analyze->add_option("--spectrum", analyze_opt.spectrum_out, "write (q, N_q, r2) table here");
    analyze->add_flag("--hurst", analyze_opt.hurst, "R/S estimate and sliding-window series");
    analyze->add_option("--hurst-out", analyze_opt.hurst_out, "write sliding-window series here");
    analyze->add_option("--config", analyze_opt.config, "run config whose [analysis] section to use");

    std::string validate_signal_path, band_text;
    double freq = 0.0, tol = 0.0;
    auto* validate = app.add_subcommand("validate", "check amplitude band and dominant frequency");
    validate->add_option("signal", validate_signal_path, "signal CSV")->required();
    validate->add_option("--band", band_text, "amplitude band low:high in uV")->required();
    validate->add_option("--freq", freq, "target frequency (Hz)")->required();
    validate->add_option("--tol", tol, "frequency tolerance (Hz)")->required();

    std::string compare_a, compare_b;
    auto* compare = app.add_subcommand("compare", "side-by-side statistics of two signals");
    compare->add_option("a", compare_a, "first signal CSV")->required();
    compare->add_option("b", compare_b, "second signal CSV")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kConfigError;
    }

    try {
        if (*simulate) return cmd_simulate(config, out_path, out);
        if (*analyze) return cmd_analyze(analyze_opt, out);
        if (*validate) return cmd_validate(validate_signal_path, band_text, freq, tol, out, err);
        if (*compare) return cmd_compare(compare_a, compare_b, out, err);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const DegenerateInputError& e) {
        err << "degenerate input: " << e.what() << "\n";
        return kRuntimeError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kRuntimeError;
}

} // namespace fracsig::cli
