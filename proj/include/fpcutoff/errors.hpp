#pragma once

#include <stdexcept>
#include <string>

namespace fpcutoff {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument: wrong sign, non-finite input, mismatched sizes.
struct DomainError : Error {
    using Error::Error;
};

// A model inequality is violated; the message names the inequality.
struct ConstraintError : Error {
    using Error::Error;
};

// Requested moment diverges (full-space profile with too heavy a tail).
// Distinct from DomainError so callers can treat "infinite" as a value.
struct InfiniteMomentError : Error {
    using Error::Error;
};

// Adaptive quadrature ran out of subdivisions; carries the best estimate.
struct ConvergenceError : Error {
    double best_value;
    double abs_error_estimate;
    int subdivisions;
    ConvergenceError(const std::string& what, double value, double err, int sub)
        : Error(what), best_value(value), abs_error_estimate(err), subdivisions(sub) {}
};

// Explicit PDE step requested with dt above the stability bound,
// or the running clip audit exceeded its mass-loss budget.
struct StabilityError : Error {
    using Error::Error;
};

// Grid too coarse to resolve the initial profile.
struct ResolutionError : Error {
    using Error::Error;
};

// Trend fit asked for with fewer than 3 finite points.
struct InsufficientDataError : Error {
    using Error::Error;
};

// Dense-matrix path capped (d > 64).
struct UnsupportedSizeError : Error {
    using Error::Error;
};

// Operation precondition violated (e.g. support containment for the
// Bregman entropy form in the compact regime).
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace fpcutoff
