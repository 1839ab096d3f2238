#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fracsig/time_series.hpp"

namespace fracsig::io {

// Signal files are UTF-8 CSV: a "t,v" header, then one "time,value" row per sample,
// '.' decimal separator, newline-delimited, uniformly spaced strictly increasing times.

/// Throws ParseError (with line number) on malformed rows, non-finite numbers or
/// non-uniform spacing (1e-9 relative).
TimeSeries parse_signal(std::istream& in);

/// Throws IoError when the file cannot be opened.
TimeSeries read_signal(const std::filesystem::path& path);

/// Shortest round-trip decimal representation of every sample.
std::string format_signal(const TimeSeries& ts);

/// Writes via a temporary file in the same directory and renames it into place.
void write_signal(const TimeSeries& ts, const std::filesystem::path& path);
void write_text_atomic(const std::filesystem::path& path, const std::string& contents);

} // namespace fracsig::io
