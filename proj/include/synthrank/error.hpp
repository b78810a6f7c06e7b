#pragma once

#include <stdexcept>
#include <string>

namespace synthrank {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad run configuration: unknown variable ids, invalid alpha, dependent
/// listed among predictors. Maps to CLI exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed input data (CSV/JSON structure, non-numeric cells).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Violated numeric precondition: empty column, rank deficiency,
/// domain errors in the distribution functions.
class ComputeError : public Error {
public:
    using Error::Error;
};

}  // namespace synthrank
