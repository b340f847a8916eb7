#ifndef F4OSC_ERRORS_HPP
#define F4OSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace f4osc {

// Division by an exact zero (rational or Gaussian-rational denominator).
struct DivisionByZeroError : std::domain_error {
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

// A symbolic expression exceeded the hard total-degree cap.
struct DegreeCapError : std::length_error {
    explicit DegreeCapError(const std::string& what) : std::length_error(what) {}
};

// Root finding was asked for the identically-zero polynomial.
struct ZeroPolynomialError : std::invalid_argument {
    explicit ZeroPolynomialError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed (construction faults, indefinite
// grading, shape violations).  Reaching this means a bug or tampered input,
// not a user error.
struct FaultError : std::logic_error {
    explicit FaultError(const std::string& what) : std::logic_error(what) {}
};

// Gamma evaluated exactly at a non-positive integer: pole, undefined.
struct GammaPoleError : std::domain_error {
    explicit GammaPoleError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace f4osc

#endif
