#pragma once

#include <stdexcept>

namespace torusband {

// Bad input from the caller: rejected parameters or an operation applied
// outside its domain. The CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCoprime : DomainError { using DomainError::DomainError; };
struct NoInverse : DomainError { using DomainError::DomainError; };
struct UnknotInput : DomainError { using DomainError::DomainError; };
struct ConstraintViolation : DomainError { using DomainError::DomainError; };

// A broken internal invariant. Any of these firing falsifies the model or
// signals a bug, so they carry diagnostics and are never swallowed. The CLI
// maps them to exit code 3.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArithmeticOverflow : InvariantError { using InvariantError::InvariantError; };
struct FitFailure : InvariantError { using InvariantError::InvariantError; };
struct CFMismatch : InvariantError { using InvariantError::InvariantError; };
struct ZeroDenominator : InvariantError { using InvariantError::InvariantError; };
struct InexactDivision : InvariantError { using InvariantError::InvariantError; };
struct DivisionByZero : InvariantError { using InvariantError::InvariantError; };
struct MalformedAlexander : InvariantError { using InvariantError::InvariantError; };
struct StructureViolation : InvariantError { using InvariantError::InvariantError; };
struct TheoremViolation : InvariantError { using InvariantError::InvariantError; };

}  // namespace torusband
