#pragma once

#include <stdexcept>
#include <string>

namespace frdt {

// Root of every error raised by the library. Callers that only need to
// report failures can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (Γ at x <= 0,
// negative time, malformed initial-condition parameters, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Exponential-sum term count exceeded the configured cap.
class BlowUpError : public Error {
public:
    using Error::Error;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

// Spectrum index requested beyond the stored truncation order.
class InsufficientOrderError : public Error {
public:
    using Error::Error;
};

class UnsupportedRepresentationError : public Error {
public:
    using Error::Error;
};

class NoOracleError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace frdt
