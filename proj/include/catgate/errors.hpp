#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace catgate {

// All library errors derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSpaceError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DegenerateFrameError : public Error {
public:
    using Error::Error;
};

/// Root finding or quadrature failed to converge, or an integrator detected
/// stiffness, norm drift or loss of positivity.
class NumericError : public Error {
public:
    using Error::Error;
};

class NoSolutionError : public NumericError {
public:
    using NumericError::NumericError;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

using WarningHandler = std::function<void(const std::string&)>;

/// Installs a sink for non-fatal diagnostics (truncation tails, gap margins).
/// Returns the previous handler. The default writes to stderr.
WarningHandler set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace catgate
