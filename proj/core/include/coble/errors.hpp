#pragma once

#include <stdexcept>
#include <string>

namespace coble {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : MathError {
    DivisionByZero() : MathError("division by zero") {}
};

struct MixedFieldError : MathError {
    using MathError::MathError;
};

struct NotInSpan : MathError {
    using MathError::MathError;
};

struct NotKhatInvariant : MathError {
    using MathError::MathError;
};

struct DegreeNotDivisibleBy3 : MathError {
    using MathError::MathError;
};

struct InternalCountMismatch : MathError {
    using MathError::MathError;
};

struct EigenspaceDimensionError : MathError {
    using MathError::MathError;
};

struct SingularSystem : MathError {
    using MathError::MathError;
};

struct ZeroGradient : MathError {
    using MathError::MathError;
};

struct PreconditionViolation : MathError {
    using MathError::MathError;
};

struct CounterexamplePoint : MathError {
    using MathError::MathError;
};

struct NonIntegralDimension : MathError {
    using MathError::MathError;
};

struct NonIntegralGenus : MathError {
    using MathError::MathError;
};

// integral but negative genus, i.e. the ramification data cannot come from a cover
struct InadmissibleCover : MathError {
    using MathError::MathError;
};

struct NoSolution : MathError {
    using MathError::MathError;
};

struct NonUnique : MathError {
    using MathError::MathError;
};

struct SpanMismatch : MathError {
    using MathError::MathError;
};

}  // namespace coble
