#pragma once

#include <stdexcept>
#include <string>

namespace ncp {

// Base class for every mathematical failure the library can signal.
// Harness code catches this (and only this) to record a failed check
// instead of aborting the whole run.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live over different matrix dimensions.
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

// Operands are expanded about different base points.
class BasePointMismatch : public Error {
  public:
    using Error::Error;
};

// A derivative (or a deeper chain) would drop the valid order below zero.
class OrderExhausted : public Error {
  public:
    using Error::Error;
};

// Series inversion failed: the constant coefficient matrix is singular.
class SingularConstantTerm : public Error {
  public:
    using Error::Error;
};

// No invertible pivot during elimination; the matrix has no inverse
// over the series ring.
class MatrixNotInvertible : public Error {
  public:
    using Error::Error;
};

// A quasideterminant is undefined because the required submatrix
// inverse does not exist; the message names the submatrix.
class SubmatrixNotInvertible : public Error {
  public:
    using Error::Error;
};

// Seed initial data violates the algebraic constraint required of it.
class ConstraintViolated : public Error {
  public:
    using Error::Error;
};

// The integration constant extracted during the second-order reduction
// is not a central scalar constant.
class GammaNotConstant : public Error {
  public:
    using Error::Error;
};

// A determinant needed for a rational solution vanishes at the chosen
// expansion point.
class BasePointSingular : public Error {
  public:
    using Error::Error;
};

// Invalid configuration file or option set.
class ConfigError : public Error {
  public:
    using Error::Error;
};

}  // namespace ncp
