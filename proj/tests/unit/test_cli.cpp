#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "fracsig/cli/commands.hpp"
#include "fracsig/fbm.hpp"
#include "fracsig/io/signal_file.hpp"

namespace fracsig::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kReferenceConfig = fs::path(FRACSIG_CONFIG_DIR) / "reference.ini";

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("fracsig_cli_" + std::string(
            ::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name) << text;
        return path(name);
    }

    std::string simulated() const {
        const auto out = path("sim.csv");
        EXPECT_EQ(invoke({"simulate", kReferenceConfig.string(), "--out", out}).code, kSuccess);
        return out;
    }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
};

TEST_F(Cli, SimulateWritesBandLimitedSignal) {
    const auto out = path("sim.csv");
    const auto r = invoke({"simulate", kReferenceConfig.string(), "--out", out});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    EXPECT_NE(r.out.find("D = 0.000650375"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("internal check: PASS"), std::string::npos) << r.out;
    const auto ts = io::read_signal(out);
    EXPECT_EQ(ts.size(), 4096u);
    for (double v : ts.values()) EXPECT_TRUE(v > -60.0 && v < 60.0);
}

TEST_F(Cli, SimulateIsByteIdentical) {
    const auto a = path("a.csv"), b = path("b.csv");
    ASSERT_EQ(invoke({"simulate", kReferenceConfig.string(), "--out", a}).code, kSuccess);
    ASSERT_EQ(invoke({"simulate", kReferenceConfig.string(), "--out", b}).code, kSuccess);
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(Cli, SimulateConfigErrors) {
    const auto cfg = write("nosigma.ini", "[stimulus]\nphi0 = 1\nt_star = 0.002\n");
    const auto r = invoke({"simulate", cfg, "--out", path("x.csv")});
    EXPECT_EQ(r.code, kConfigError);
    EXPECT_NE(r.err.find("sigma"), std::string::npos) << r.err;
    EXPECT_EQ(invoke({"simulate", path("missing.ini"), "--out", path("x.csv")}).code, kRuntimeError);
    EXPECT_EQ(invoke({"simulate", kReferenceConfig.string()}).code, kConfigError);
    EXPECT_EQ(invoke({"frobnicate"}).code, kConfigError);
}

TEST_F(Cli, AnalyzeSimulatedSignal) {
    const auto sig = simulated();
    const auto table = path("spectrum.csv");
    const auto hurst = path("hurst.csv");
    const auto r = invoke({"analyze", sig, "--spectrum", table, "--hurst", "--hurst-out", hurst});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto pos = r.out.find("spectrum_width = ");
    ASSERT_NE(pos, std::string::npos);
    EXPECT_GT(std::stod(r.out.substr(pos + 17)), 0.1);
    std::istringstream rows(slurp(table));
    std::string line;
    std::getline(rows, line);
    EXPECT_EQ(line, "q,N_q,r2");
    int count = 0;
    double previous = INFINITY;
    while (std::getline(rows, line)) {
        const auto first = line.find(',');
        const double n_q = std::stod(line.substr(first + 1));
        EXPECT_LE(n_q, previous + 1e-3) << line;
        previous = n_q;
        ++count;
    }
    EXPECT_EQ(count, 81);
    EXPECT_EQ(slurp(hurst).rfind("t,H\n", 0), 0u);
    EXPECT_NE(r.out.find("hurst_rs = "), std::string::npos);
}

TEST_F(Cli, AnalyzeConstantSignal) {
    const auto sig = path("const.csv");
    io::write_signal(TimeSeries(std::vector<double>(256, 31.99), 1.0 / 256), sig);
    const auto table = path("spectrum.csv");
    ASSERT_EQ(invoke({"analyze", sig, "--spectrum", table}).code, kSuccess);
    std::istringstream rows(slurp(table));
    std::string line;
    std::getline(rows, line);
    while (std::getline(rows, line)) {
        const auto first = line.find(','), second = line.find(',', first + 1);
        EXPECT_EQ(line.substr(first + 1, second - first - 1), "0") << line;
    }
    EXPECT_EQ(invoke({"analyze", sig, "--hurst"}).code, kRuntimeError);
}

TEST_F(Cli, AnalyzeInputErrors) {
    const auto bad = write("bad.csv", "t,v\n0,1\n0.1,abc\n");
    const auto r = invoke({"analyze", bad});
    EXPECT_EQ(r.code, kConfigError);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
    EXPECT_EQ(invoke({"analyze", path("missing.csv")}).code, kRuntimeError);
}

TEST_F(Cli, ValidateOutcomes) {
    const auto sig = simulated();
    EXPECT_EQ(invoke({"validate", sig, "--band", "-60:60", "--freq", "34", "--tol", "2"}).code, kSuccess);
    EXPECT_EQ(invoke({"validate", sig, "--band=-60:60", "--freq", "34", "--tol", "2"}).code, kSuccess);
    EXPECT_EQ(invoke({"validate", sig, "--band", "60:-60", "--freq", "34", "--tol", "2"}).code, kConfigError);
    EXPECT_EQ(invoke({"validate", sig, "--band", "-60;60", "--freq", "34", "--tol", "2"}).code, kConfigError);
    EXPECT_EQ(invoke({"validate", sig, "--band", "-60:60", "--freq", "12", "--tol", "2"}).code, kValidationFailed);

    const auto constant = path("c.csv");
    io::write_signal(TimeSeries(std::vector<double>(256, 100.0), 1.0 / 256), constant);
    const auto r = invoke({"validate", constant, "--band", "-60:60", "--freq", "34", "--tol", "2"});
    EXPECT_EQ(r.code, kValidationFailed);
    EXPECT_NE(r.out.find("amplitude"), std::string::npos) << r.out;
}

TEST_F(Cli, CompareSelfAndDifferentGenerators) {
    const auto sig = simulated();
    const auto self = invoke({"compare", sig, sig});
    ASSERT_EQ(self.code, kSuccess);
    std::istringstream lines(self.out);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) EXPECT_EQ(line.substr(line.find_last_of(' ') + 1), "0") << line;

    const auto low = path("h03.csv"), high = path("h08.csv");
    io::write_signal(TimeSeries(fgn_generate(0.3, 8192, 5), 1.0 / 256), low);
    io::write_signal(TimeSeries(fgn_generate(0.8, 4096, 6), 1.0 / 256), high);
    const auto r = invoke({"compare", low, high});
    ASSERT_EQ(r.code, kSuccess);
    const auto pos = r.out.find("hurst_rs");
    ASSERT_NE(pos, std::string::npos);
    std::istringstream row(r.out.substr(pos, r.out.find('\n', pos) - pos));
    std::string name;
    double a = 0, b = 0, diff = 0;
    row >> name >> a >> b >> diff;
    EXPECT_GE(diff, 0.3) << r.out;
    EXPECT_NE(r.out.find("lengths differ"), std::string::npos);
    EXPECT_EQ(invoke({"compare", sig, path("missing.csv")}).code, kRuntimeError);
}

TEST_F(Cli, BinaryExitCodes) {
    const auto exit_of = [](const std::string& args) {
        const int status = std::system((std::string(FRACSIG_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const auto sig = path("sim.csv");
    EXPECT_EQ(exit_of("simulate " + kReferenceConfig.string() + " --out " + sig), 0);
    EXPECT_EQ(exit_of("validate " + sig + " --band -60:60 --freq 34 --tol 2"), 0);
    EXPECT_EQ(exit_of("validate " + sig + " --band 60:-60 --freq 34 --tol 2"), 2);
    EXPECT_EQ(exit_of("validate " + sig + " --band -10:10 --freq 34 --tol 2"), 3);
    EXPECT_EQ(exit_of("analyze " + path("nothing.csv")), 1);
    EXPECT_EQ(exit_of("--help"), 0);
}

} // namespace
} // namespace fracsig::cli
