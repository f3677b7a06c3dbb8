#pragma once

#include <stdexcept>
#include <string>

namespace raminv {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration values (non-positive spacings, bad parameters,
/// out-of-range arguments).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Mismatched grids or vector lengths between operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Unusable data: empty valid sets, malformed files, missing columns.
class DataError : public Error {
public:
    using Error::Error;
};

/// Numerical failures: domain violations, non-finite intermediate values.
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace raminv
