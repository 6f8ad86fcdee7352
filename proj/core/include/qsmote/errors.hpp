#pragma once

#include <stdexcept>
#include <string>

namespace qsmote {

// Root of the toolkit's exception hierarchy. The three direct children map
// onto the CLI exit codes: ConfigError -> 2, DataError -> 3, everything
// else (including InternalError) -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad run configuration: invalid flag values, unreadable config file,
// unwritable output locations.
struct ConfigError : Error {
    using Error::Error;
};

// The input data violates a documented contract (missing label column,
// non-numeric feature, class too small for the fold count, ...).
struct DataError : Error {
    using Error::Error;
};

// Caller broke an API precondition; in the CLI these surface as exit 4.
struct InternalError : Error {
    using Error::Error;
};

// --- qsim ---
struct NonPowerOfTwoLength : InternalError { using InternalError::InternalError; };
struct ZeroNorm : InternalError { using InternalError::InternalError; };
struct QubitOutOfRange : InternalError { using InternalError::InternalError; };
struct DuplicateQubit : InternalError { using InternalError::InternalError; };

// --- swaptest ---
struct LengthMismatch : InternalError { using InternalError::InternalError; };
struct ZeroNormVector : InternalError { using InternalError::InternalError; };

// --- channels ---
struct DimensionMismatch : InternalError { using InternalError::InternalError; };
struct BoundsLengthMismatch : InternalError { using InternalError::InternalError; };

// --- cluster / learn ---
struct EmptyInput : DataError { using DataError::DataError; };
struct TooFewSamples : DataError { using DataError::DataError; };
struct RankTooHigh : DataError { using DataError::DataError; };
struct SingleClass : DataError { using DataError::DataError; };

// --- qsmote ---
struct UnknownLabel : DataError { using DataError::DataError; };
struct MinorityLabelEmpty : DataError { using DataError::DataError; };

// --- eval ---
struct ClassTooSmall : DataError { using DataError::DataError; };

// --- cli / csv ---
struct MissingLabelColumn : DataError { using DataError::DataError; };
struct NonNumericFeature : DataError { using DataError::DataError; };
struct EmptyFile : DataError { using DataError::DataError; };
struct NaNValue : DataError { using DataError::DataError; };
struct UnwritableOutput : ConfigError { using ConfigError::ConfigError; };

}  // namespace qsmote
