#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzfrac {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Which endpoint function of a fuzzy number an error refers to.
enum class Side { lower, upper };

inline const char* to_string(Side s) { return s == Side::lower ? "lower" : "upper"; }

/// An endpoint array runs the wrong way in alpha beyond the validation tolerance.
class MonotonicityViolation : public Error {
public:
    MonotonicityViolation(Side side, std::size_t index)
        : Error(std::string("endpoint array '") + fuzzfrac::to_string(side) +
                "' violates monotonicity at level index " + std::to_string(index)),
          side_(side),
          index_(index) {}

    Side side() const { return side_; }
    std::size_t index() const { return index_; }

private:
    Side side_;
    std::size_t index_;
};

/// lower(1) exceeds upper(1) beyond the validation tolerance.
class CrossingViolation : public Error {
public:
    CrossingViolation(double lower1, double upper1)
        : Error("lower(1) = " + std::to_string(lower1) + " exceeds upper(1) = " +
                std::to_string(upper1)) {}
};

/// A NaN or infinity where a finite value is required.
class NonFinite : public Error {
public:
    explicit NonFinite(const std::string& what) : Error("non-finite value: " + what) {}
};

/// Two fuzzy values live on different alpha grids.
class GridMismatch : public Error {
public:
    GridMismatch(std::size_t lhs_levels, std::size_t rhs_levels)
        : Error("alpha-grid mismatch: " + std::to_string(lhs_levels) + " vs " +
                std::to_string(rhs_levels) + " levels") {}
};

/// Triangular parameters do not satisfy a <= b <= c.
class InvalidOrdering : public Error {
public:
    InvalidOrdering(double a, double b, double c)
        : Error("triangular parameters must satisfy a <= b <= c, got (" + std::to_string(a) +
                ", " + std::to_string(b) + ", " + std::to_string(c) + ")") {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A power-function exponent below q-1, where the fractional derivative
/// multiplier changes sign across the gamma poles.
class UnsupportedExponent : public Error {
public:
    UnsupportedExponent(double exponent, double q)
        : Error("exponent " + std::to_string(exponent) + " is below q-1 = " +
                std::to_string(q - 1.0) + "; not supported by the power-rule calculus"),
          exponent_(exponent) {}

    double exponent() const { return exponent_; }

private:
    double exponent_;
};

/// A kernel sample came out negative.
class KernelSignError : public Error {
public:
    KernelSignError(double t, double s, double value)
        : Error("kernel is negative at (t, s) = (" + std::to_string(t) + ", " +
                std::to_string(s) + "): " + std::to_string(value)) {}
};

/// Malformed input text (JSON documents, shorthand literals).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace fuzzfrac
