#pragma once

#include <stdexcept>
#include <string>

namespace hiercop {

// Error taxonomy mirrored by the CLI exit codes: configuration problems,
// data/ingestion problems, and numeric failures (non-convergence, degenerate
// inputs discovered mid-computation). Precondition violations on library
// entry points throw std::domain_error directly.

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hiercop
