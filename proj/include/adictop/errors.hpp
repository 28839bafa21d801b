#pragma once

#include <stdexcept>
#include <string>

namespace adictop {

// Base class for all errors raised by the library.  The CLI maps these to
// exit code 2 (bad input / unmet precondition); anything else is an
// internal error (exit 1).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-domain input (zero denominator, composite "prime", ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// An element of one ground field was fed to an operation pinned to the other.
class FieldMismatchError : public DomainError {
public:
    using DomainError::DomainError;
};

// A stated precondition of an operation does not hold for the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A value cannot be represented at the requested precision (e.g. expanding a
// negative-valuation element without Laurent mode).
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Jacobian / derivative fails the unit test in the local context.
class SingularError : public Error {
public:
    using Error::Error;
};

// Newton iteration failed to reach the target residual valuation.
class NoConvergenceError : public Error {
public:
    using Error::Error;
};

// A congruence or linear system has no solution.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// Asked to bound the unbounded (the whole field).
class UnboundedError : public Error {
public:
    using Error::Error;
};

// Descriptor combination outside the supported fragment.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Text input rejected; carries the offending position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace adictop
