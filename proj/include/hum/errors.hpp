#ifndef HUM_ERRORS_HPP
#define HUM_ERRORS_HPP

#include <stdexcept>

namespace hum {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// |b_1| >= 1: the co-analytic linear coefficient leaves the admissible range.
class B1TooLarge : public Error {
    using Error::Error;
};

/// An operation restricted to the signed-coefficient convention received a
/// series that violates it (complex entries, or the wrong convention tag).
class SignConventionViolation : public Error {
    using Error::Error;
};

/// Evaluation point lies on or outside the unit circle.
class PointOutsideDisk : public Error {
    using Error::Error;
};

/// |f(z)| fell below the degeneracy tolerance where a quotient is required.
class DegenerateDenominator : public Error {
    using Error::Error;
};

/// The operation excludes z = 0.
class OriginExcluded : public Error {
    using Error::Error;
};

/// A convex-weight vector does not sum to one (or has negative entries).
class WeightsNotConvex : public Error {
    using Error::Error;
};

/// Coefficient index outside the series or generator range.
class IndexOutOfRange : public Error {
    using Error::Error;
};

/// Scalar argument outside its admissible range.
class ParamOutOfRange : public Error {
    using Error::Error;
};

/// A documented operation precondition does not hold for the given inputs.
class PreconditionViolated : public Error {
    using Error::Error;
};

/// Malformed input file; the message names the offending field.
class ParseError : public Error {
    using Error::Error;
};

} // namespace hum

#endif
