#pragma once

#include <stdexcept>
#include <string>

namespace psik {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside a formula's stated domain (x, T, kappa ranges, disc <= 0, ...).
struct DomainError : Error {
    using Error::Error;
};

// Degree/signature relation n = r1 + 2*r2 violated.
struct SignatureMismatch : DomainError {
    using DomainError::DomainError;
};

// Input below a bound's validity threshold (e.g. x < 2000 for bound 1.5).
struct ValidityError : DomainError {
    using DomainError::DomainError;
};

// Root solver failed to reach its residual target.
struct ConvergenceError : Error {
    using Error::Error;
};

// Crossover search exhausted the grid without the bound taking over.
struct NoCrossoverError : Error {
    using Error::Error;
};

// Sieve / enumeration request above the memory guard.
struct LimitExceededError : Error {
    using Error::Error;
};

} // namespace psik
