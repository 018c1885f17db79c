#pragma once

#include <stdexcept>
#include <string>

namespace lfe {

// Base of all library errors.  ValidationError covers bad inputs and broken
// invariants (CLI exit code 1); NumericalError covers evaluations that ran
// but failed to meet a tolerance or consistency check (CLI exit code 2).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

// Instance fails an admissibility invariant (unitarity of the root number,
// Luo-Rudnick-Sarnak lower bound on the spectral parameters, ...).
struct AdmissibilityError : ValidationError {
    using ValidationError::ValidationError;
};

// A coefficient beyond the declared length was requested.  Always a hard
// error, never a silent zero, so truncation-length bugs surface loudly.
struct CoefficientExhaustion : ValidationError {
    using ValidationError::ValidationError;
};

// An abscissa or gamma argument left the safe principal-branch strip.
struct StripViolation : ValidationError {
    using ValidationError::ValidationError;
};

// Contour parameters are unusable (pole on the contour, tail inequality
// violated, nonpositive step).
struct ContourError : ValidationError {
    using ValidationError::ValidationError;
};

// Argument outside a function's domain (x <= 0, Re z <= 0, s = 1, ...).
struct DomainError : ValidationError {
    using ValidationError::ValidationError;
};

// Malformed or schema-violating instance document.
struct SchemaError : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace lfe
