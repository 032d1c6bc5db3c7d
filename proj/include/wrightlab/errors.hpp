#ifndef WRIGHTLAB_ERRORS_HPP
#define WRIGHTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wrightlab {

/// Base class for every numerical failure raised by the library.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A gamma argument sits on a pole (a nonpositive integer).
class PoleError : public NumericError {
public:
    using NumericError::NumericError;
};

/// The result does not fit in a double.
class OverflowError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Inputs outside the region where the requested quantity is defined.
class DomainError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Series terms grew without bound.
class DivergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Tolerance not reached within the configured number of terms.
class MaxTermsError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Quadrature level differences did not drop below tolerance.
class NonConvergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

/// An integrand produced a non-finite value at an interior node.
class EvaluationError : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace wrightlab

#endif
