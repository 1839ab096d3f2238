#include "fracsig/io/signal_file.hpp"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "fracsig/errors.hpp"

namespace fracsig::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line, const char* column) {
    field = trim(field);
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || field.empty())
        throw ParseError(line, std::string("malformed ") + column + " value '" + std::string(field) + "'");
    if (!std::isfinite(value)) throw ParseError(line, std::string("non-finite ") + column + " value");
    return value;
}

void append_double(std::string& out, double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

} // namespace

TimeSeries parse_signal(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError(1, "empty signal file");
    ++line_no;
    if (trim(line) != "t,v") throw ParseError(1, "expected header 't,v'");

    std::vector<double> times, values;
    std::vector<std::size_t> lines;
    while (std::getline(in, line)) {
        ++line_no;
        const auto row = trim(line);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
            throw ParseError(line_no, "expected two comma-separated fields");
        times.push_back(parse_number(row.substr(0, comma), line_no, "time"));
        values.push_back(parse_number(row.substr(comma + 1), line_no, "signal"));
        lines.push_back(line_no);
    }
    if (values.size() < 2) throw ParseError(line_no, "signal needs at least two samples to define a sampling interval");

    const std::size_t n = times.size();
    const double dt = (times.back() - times.front()) / static_cast<double>(n - 1);
    if (!(dt > 0.0)) throw ParseError(lines.back(), "time column is not strictly increasing");
    for (std::size_t i = 1; i < n; ++i) {
        const double step = times[i] - times[i - 1];
        if (!(step > 0.0)) throw ParseError(lines[i], "time column is not strictly increasing");
        if (std::abs(step - dt) > 1e-9 * dt) throw ParseError(lines[i], "non-uniform time step");
    }
    return TimeSeries(std::move(values), dt, times.front());
}

TimeSeries read_signal(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open signal file '" + path.string() + "'");
    return parse_signal(in);
}

std::string format_signal(const TimeSeries& ts) {
    std::string out = "t,v\n";
    out.reserve(ts.size() * 40);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        append_double(out, ts.time(i));
        out.push_back(',');
        append_double(out, ts[i]);
        out.push_back('\n');
    }
    return out;
}

void write_signal(const TimeSeries& ts, const std::filesystem::path& path) {
    write_text_atomic(path, format_signal(ts));
}

void write_text_atomic(const std::filesystem::path& path, const std::string& contents) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + tmp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ignore;
            std::filesystem::remove(tmp, ignore);
            throw IoError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at '" + path.string() + "'");
    }
}

} // namespace fracsig::io
