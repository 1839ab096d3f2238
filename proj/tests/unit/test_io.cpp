#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fracsig/errors.hpp"
#include "fracsig/io/run_config.hpp"
#include "fracsig/io/signal_file.hpp"

namespace fracsig::io {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "fracsig_io_tests";
    fs::create_directories(dir);
    return dir / name;
}

RunConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_run_config(in);
}

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

TEST(SignalFile, RoundTrip) {
    const TimeSeries ts({0.1, -3.25, 1e-300, 31.99, 2.0 / 3.0}, 1.0 / 256.0, 0.5);
    const auto path = scratch("round.csv");
    write_signal(ts, path);
    const auto back = read_signal(path);
    ASSERT_EQ(back.size(), ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) EXPECT_EQ(back[i], ts[i]);
    EXPECT_NEAR(back.dt(), ts.dt(), 1e-15);
    EXPECT_EQ(back.t0(), 0.5);
    EXPECT_EQ(format_signal(back), format_signal(ts));
}

TEST(SignalFile, ParsesThreeRows) {
    std::istringstream in("t,v\n0,1\n0.1,2\n0.2,3\n");
    const auto ts = parse_signal(in);
    ASSERT_EQ(ts.size(), 3u);
    EXPECT_NEAR(ts.dt(), 0.1, 1e-15);
    EXPECT_EQ(ts[2], 3.0);
}

TEST(SignalFile, BadValueNamesLine) {
    std::istringstream in("t,v\n0,1\n0.1,abc\n");
    try {
        parse_signal(in);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(SignalFile, RejectsMalformedInput) {
    const auto rejects = [](const std::string& text) {
        std::istringstream in(text);
        EXPECT_THROW(parse_signal(in), ParseError) << text;
    };
    rejects("t,v\n0,1\n0.1,2\n0.25,3\n"); // non-uniform
    rejects("t,v\n0,1\n0,2\n");          // not increasing
    rejects("time,value\n0,1\n1,2\n");   // header
    rejects("t,v\n0,1,2\n1,2\n");        // extra field
    rejects("t,v\n0,nan\n1,2\n");        // non-finite
    rejects("t,v\n0,1\n");               // one sample
    EXPECT_THROW(read_signal(scratch("does_not_exist.csv")), IoError);
}

TEST(RunConfigParse, ReferenceValues) {
    const auto cfg = parse(
        "[model]\nC = 0.055\ntau = 0.215\nH = 0.79\nV0 = 31.99\n"
        "[stimulus]\nphi0 = 1\nt_star = 0.002\nsigma = 0.001\n"
        "[synthesis]\nseed = 9 ; trailing comment\n");
    EXPECT_TRUE(cfg.diffusivity_derived);
    EXPECT_NEAR(cfg.synthesis.params.D, 6.50375e-4, 1e-12);
    EXPECT_EQ(cfg.synthesis.seed, 9u);
    ASSERT_EQ(cfg.synthesis.train.size(), 1u);
    EXPECT_EQ(cfg.synthesis.train.pulses()[0].sigma, 0.001);
    EXPECT_EQ(cfg.analysis.resolutions, 8);
}

TEST(RunConfigParse, MultiplePulsesAndPoisson) {
    const auto listed = parse("[stimulus]\nphi0 = 1, 2\nt_star = 0.1, 0.2\nsigma = 0.01\n");
    ASSERT_EQ(listed.synthesis.train.size(), 2u);
    EXPECT_EQ(listed.synthesis.train.pulses()[1].phi0, 2.0);
    const auto poisson = parse("[stimulus]\nphi0 = 1\nsigma = 0.001\nrate = 10\ncount = 25\nseed = 3\n");
    EXPECT_EQ(poisson.synthesis.train.size(), 25u);
}

TEST(RunConfigParse, Errors) {
    EXPECT_NE(error_of("[stimulus]\nphi0 = 1\nt_star = 0.002\n").find("sigma"), std::string::npos);
    EXPECT_NE(error_of("[model]\nCee = 1\n").find("Cee"), std::string::npos);
    EXPECT_NE(error_of("[model]\nC = 0.055\ntau = 0.215\nD = 0.001\n").find("[model]"), std::string::npos);
    EXPECT_FALSE(error_of("[model]\nC = 0.055\ntau = 0.215\nD = 0.001\n").empty());
    EXPECT_FALSE(error_of("[nope]\n").empty());
    EXPECT_FALSE(error_of("C = 1\n").empty());
    EXPECT_FALSE(error_of("[model]\nC = 1\nC = 2\n").empty());
    EXPECT_FALSE(error_of("[model]\nH = abc\n").empty());
    EXPECT_FALSE(error_of("[synthesis]\ntarget_frequency = 200\n").empty());
    EXPECT_FALSE(error_of("[synthesis]\nmode = fancy\n").empty());
    EXPECT_FALSE(error_of("[analysis]\nresolutions = 3\n").empty());
}

} // namespace
} // namespace fracsig::io
