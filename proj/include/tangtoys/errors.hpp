#pragma once

#include <stdexcept>
#include <string>

namespace tangtoys {

// Base for everything thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: scenarios, config files, log files, capability mismatches,
// precondition breaches caused by the caller. The CLI maps these to exit 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed text input; carries a 1-based line (and column where known).
class ParseError : public ValidationError {
public:
    ParseError(int line, int column, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    ParseError(int line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_ = 0;
    int column_ = 0;
};

// A sensor channel or actuator not present on the device profile.
class CapabilityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Missing or inconsistent configuration (e.g. vitals without a baseline).
class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Replay asked for window data the log does not contain.
class ReplayGapError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A broken internal invariant: indicates a bug, not bad input.
// The CLI maps these to exit 2.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace tangtoys
