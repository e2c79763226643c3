#ifndef ADIACHAIN_ERRORS_HPP
#define ADIACHAIN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adiachain {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejected input: dimension mismatch, parameter out of range, NaN/Inf entry.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// Failed structural check: reducible or periodic pattern, detailed-balance
// violation, asymmetric Hamiltonian, degenerate spectrum. Messages name the
// failed check and the offending indices.
class StructureError : public Error {
public:
    using Error::Error;
};

// A scan hit its cap before reaching the target. Carries the last distance
// observed and, when the caller tracks one, the (time, distance) curve
// accumulated so far.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& msg, double last_value,
                     std::vector<std::pair<double, double>> curve = {})
        : Error(msg), last_value(last_value), curve(std::move(curve)) {}

    double last_value;
    std::vector<std::pair<double, double>> curve;
};

// Numerical failure (eigensolve or fixed-point residual out of tolerance).
class NumericalError : public Error {
public:
    NumericalError(const std::string& msg, double residual)
        : Error(msg), residual(residual) {}

    double residual;
};

}  // namespace adiachain

#endif  // ADIACHAIN_ERRORS_HPP
