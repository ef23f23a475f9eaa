#pragma once

#include <stdexcept>
#include <string>

namespace amalg {

// Base for everything thrown by the library. The CLI maps subclasses to
// exit codes: ValidationError (and descendants) -> 2, all other Errors -> 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad files, bad parameters, shape violations.
struct ValidationError : Error {
    using Error::Error;
};

struct BadParameter : ValidationError {
    using ValidationError::ValidationError;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotPositive : Error {
    using Error::Error;
};

struct NotPositiveProduct : Error {
    using Error::Error;
};

struct NoIdentity : Error {
    using Error::Error;
};

struct NotAM : Error {
    using Error::Error;
};

struct IdentityNotOrderUnit : Error {
    using Error::Error;
};

struct NotSubalgebra : Error {
    using Error::Error;
};

struct IndexOutsideSupport : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct NotRepresentedPointwise : Error {
    using Error::Error;
};

// Sentinels. Reaching one of these after its guarding check passed would
// falsify a verified statement, not signal bad input.
struct TheoremViolation : Error {
    using Error::Error;
};

// Distinct from NotSubalgebra on purpose: it is only reachable if the
// square-membership case analysis behind the quotient construction fails
// on a subspace that already passed subalgebra_check.
struct ContradictsSubalgebra : TheoremViolation {
    using TheoremViolation::TheoremViolation;
};

} // namespace amalg
