#pragma once

#include <stdexcept>
#include <string>

namespace mvsbm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside its documented domain (k = 0, probability > 1, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Inputs disagree with each other (size mismatch, label out of range).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The per-view signal d*eps^2/4 - 1 is not positive.
class BelowThreshold : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class DegenerateStatistics : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public IoError {
public:
    using IoError::IoError;
};

}  // namespace mvsbm
