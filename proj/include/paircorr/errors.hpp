#pragma once

#include <stdexcept>
#include <string>

namespace paircorr {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands carry different scale_bits.
struct PrecisionMismatchError : Error {
    using Error::Error;
};

// Input too small for the statistic (e.g. pair counting on N < 2).
struct DegenerateInputError : Error {
    using Error::Error;
};

// s-grid empty, unsorted or negative.
struct InvalidGridError : Error {
    using Error::Error;
};

// Generator parameters out of range (L+S < 2, non-square matrix, ...).
struct InvalidParamsError : Error {
    using Error::Error;
};

// Digital construction requires a prime base.
struct UnsupportedBaseError : Error {
    using Error::Error;
};

// A finite digit stream ran out before the request was satisfied.
struct InsufficientDigitsError : Error {
    using Error::Error;
};

// Requested precision cannot support the computation exactly.
struct InsufficientPrecisionError : Error {
    using Error::Error;
};

// Request exceeds the configured memory/size budget.
struct ResourceLimitError : Error {
    using Error::Error;
};

// A search-based construction could not be completed.
struct ConstructionFailedError : Error {
    using Error::Error;
};

// Set-valued input violates a precondition (e.g. duplicate integers).
struct InvalidSetError : Error {
    using Error::Error;
};

// File parsing / writing failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace paircorr
