#pragma once

#include <stdexcept>

namespace qduality {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix-level preconditions.
struct NotHermitian : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct BadDimension : Error { using Error::Error; };

// Probability / Bloch-vector conversions.
struct BadProbabilityVector : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// Density-matrix validation, one error per violated defining property.
struct NotPositive : Error { using Error::Error; };
struct TraceNotOne : Error { using Error::Error; };
struct SubmatrixViolation : Error { using Error::Error; };

// State construction.
struct BadRank : Error { using Error::Error; };
struct ParamOutOfRange : Error { using Error::Error; };

// Verification suites.
struct UnknownMeasure : Error { using Error::Error; };

// CLI surface.
struct UsageError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace qduality
