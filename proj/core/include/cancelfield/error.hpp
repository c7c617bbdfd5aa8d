#pragma once

#include <stdexcept>
#include <string>

namespace cancelfield {

/// Root of every error raised by the library. Callers that only need to
/// distinguish "ours" from everything else catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// jetalg
class ExprParseError : public Error {
public:
    ExprParseError(const std::string& msg, std::size_t column)
        : Error("parse error at column " + std::to_string(column) + ": " + msg), column_(column) {}
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

class InvalidRule : public Error {
public:
    using Error::Error;
};

class IterationLimitExceeded : public Error {
public:
    using Error::Error;
};

class TimeJetPresent : public Error {
public:
    using Error::Error;
};

// numerics / solver / cancel
class NonFinite : public Error {
public:
    using Error::Error;
};

class InvalidGrid : public Error {
public:
    using Error::Error;
};

class CflViolation : public Error {
public:
    using Error::Error;
};

class MonotonicityViolated : public Error {
public:
    using Error::Error;
};

class DegenerateMagneticField : public Error {
public:
    using Error::Error;
};

// verify
class InsufficientGrids : public Error {
public:
    using Error::Error;
};

class InconsistentCase : public Error {
public:
    using Error::Error;
};

} // namespace cancelfield
