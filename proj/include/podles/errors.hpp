#pragma once

#include <stdexcept>
#include <string>

namespace podles {

/* Base class for all library errors, so callers can catch one type. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Raw word-sum or expression text that cannot be parsed. */
struct MalformedInputError : Error {
    using Error::Error;
};

/* Arithmetic between elements with different bases or parameter points. */
struct IncompatibleOperandsError : Error {
    using Error::Error;
};

struct InvalidParamsError : Error {
    using Error::Error;
};

/* s = 0 is the standard-sphere boundary case, outside the generic family. */
struct SZeroParamError : InvalidParamsError {
    using InvalidParamsError::InvalidParamsError;
};

/* Functional calculus evaluated outside the function's domain. */
struct DomainError : Error {
    using Error::Error;
};

struct NotTraceClassError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct SymbolUndefinedError : Error {
    using Error::Error;
};

/* Window radius too small to represent a Laurent polynomial faithfully. */
struct WindowTooSmallError : Error {
    using Error::Error;
};

/* Pair of operators fails the twisted boundary condition for L_N. */
struct NotMemberError : Error {
    using Error::Error;
};

/* Truncated Fredholm rank sits on the threshold; larger cutoff needed. */
struct IndeterminateIndexError : Error {
    using Error::Error;
};

} // namespace podles
