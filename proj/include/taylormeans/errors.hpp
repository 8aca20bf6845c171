#pragma once

#include <stdexcept>
#include <string>

namespace taylormeans {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument is outside the mathematical domain (non-positive evaluation
// point, interval with a <= 0 or a >= b, even order where odd is required...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// An operation that needs a nonzero polynomial was given the zero polynomial.
struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& what) : Error(what) {}
};

// Sign-variation counting over an interval requires nonzero endpoint values.
struct EndpointRootError : Error {
    explicit EndpointRootError(const std::string& what) : Error(what) {}
};

// Exact deflation left a nonzero remainder.
struct NotDivisibleError : Error {
    explicit NotDivisibleError(const std::string& what) : Error(what) {}
};

// Integer exponent for which the relevant derivative vanishes identically,
// so the construction degenerates.
struct ExcludedExponentError : Error {
    explicit ExcludedExponentError(const std::string& what) : Error(what) {}
};

// The density whose moments we need changes sign on the interval.
struct SignChangeError : Error {
    explicit SignChangeError(const std::string& what) : Error(what) {}
};

// A quantity that a theorem pins to one sign came out with the other one.
struct SignViolationError : Error {
    explicit SignViolationError(const std::string& what) : Error(what) {}
};

// Adaptive integration hit its subdivision cap before reaching tolerance.
struct QuadratureError : Error {
    explicit QuadratureError(const std::string& what) : Error(what) {}
};

// An iterative solve stopped without meeting its residual target.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// A nonreal root has no conjugate partner in the computed root set.
struct UnpairedRootError : Error {
    explicit UnpairedRootError(const std::string& what) : Error(what) {}
};

// Two independent constructions of the same object disagree.
struct MismatchError : Error {
    explicit MismatchError(const std::string& what) : Error(what) {}
};

// Malformed command-line input (maps to exit code 2).
struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace taylormeans
