#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracsig {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid or inconsistent configuration (bad key, missing key, infeasible setting).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number of the offending row.
class ParseError : public ConfigError {
public:
    ParseError(std::size_t line, const std::string& what)
        : ConfigError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is well formed but carries no information for the requested estimate
/// (constant series, all-zero spectrum).
class DegenerateInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fracsig
