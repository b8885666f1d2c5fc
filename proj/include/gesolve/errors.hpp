#ifndef GESOLVE_ERRORS_HPP
#define GESOLVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gesolve {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input-shape and precondition violations.
struct DimensionError : Error {
    using Error::Error;
};

/// An opaque evaluator threw or produced non-finite values.
struct EvalError : Error {
    using Error::Error;
};

/// Hausdorff distance requested for an empty set (empty set-valued inverse).
struct EmptySetError : Error {
    using Error::Error;
};

/// Face enumeration over more nonnegative coordinates than the hard bound.
struct EnumerationLimitError : Error {
    using Error::Error;
};

/// p-factor operator requested along h = 0.
struct DegenerateDirectionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& what, int line_, int column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

/// Base point of a problem file violates the solution inclusion.
struct InvalidBasePoint : Error {
    using Error::Error;
};

struct InsufficientSamples : Error {
    using Error::Error;
};

/// A theorem hypothesis failed at the queried point; callers map these to
/// exit code 2 rather than treating them as usage errors.
struct HypothesisError : Error {
    using Error::Error;
};

/// All derivative tensors up to the declared order vanish; the declared
/// degeneracy order is wrong or too low.
struct OrderTooLowError : HypothesisError {
    using HypothesisError::HypothesisError;
};

/// Lower-order derivatives do not vanish: the problem is not completely
/// degenerate of the declared order.
struct NotDegenerateError : HypothesisError {
    using HypothesisError::HypothesisError;
};

/// The Banach direction condition has no solution on any face.
struct BanachConditionFails : HypothesisError {
    using HypothesisError::HypothesisError;
};

/// Set-valued inverse empty on every sample, or the fixed-point map
/// returned an empty set.
struct NotRegularError : HypothesisError {
    using HypothesisError::HypothesisError;
};

/// Observed step ratios stayed at or above one after burn-in.
struct NoContractionError : HypothesisError {
    using HypothesisError::HypothesisError;
};

struct NonConvergence : HypothesisError {
    using HypothesisError::HypothesisError;
};

/// Direction failed the p-order kernel inclusion.
struct NotInKernel : HypothesisError {
    using HypothesisError::HypothesisError;
};

}  // namespace gesolve

#endif
