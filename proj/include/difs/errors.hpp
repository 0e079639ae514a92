#pragma once

#include <stdexcept>
#include <string>

namespace difs {

// Base class for every error thrown by this library. CLI maps these to
// exit code 2 (data error); anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A region or index falls outside its tensor.
class BoundsError : public Error {
public:
    using Error::Error;
};

// Caller supplied an invalid value (bad bbox, k out of range, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// Inconsistent configuration (missing signature layer, channel mismatch, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// A file failed to parse: bad magic, truncation, malformed row.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace difs
