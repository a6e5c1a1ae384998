#pragma once

#include <stdexcept>
#include <string>

namespace isospec {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched matrix/vector dimensions or an unsupported size.
struct DimensionError : Error {
    using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

/// The two matrices have different spectra; no orthogonal conjugator exists.
struct NoConjugatorError : Error {
    using Error::Error;
};

/// Operation is only defined for pencils with exactly two components.
struct UnsupportedRankError : Error {
    using Error::Error;
};

/// A stated precondition (e.g. isospectrality of the input pair) fails.
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace isospec
