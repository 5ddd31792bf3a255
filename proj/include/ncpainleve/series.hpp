#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncpainleve/coef_matrix.hpp"

namespace ncp {

// Element of the working differential ring: an m x m matrix whose
// entries are truncated formal power series in the local variable
// t = x - x0, stored as matrix coefficients c0..cK.  The value is
// guaranteed correct modulo t^{K+1}; K is the valid order and every
// operation tracks it explicitly:
//
//   product      ->  min of the operands' orders
//   derivative   ->  order - 1
//   inverse      ->  same order
//
// Values are immutable after construction; all operations return new
// values and are safe to share across threads.
class RingElem {
  public:
    RingElem(const Rational& base_point, std::vector<CoefMatrix> coeffs);

    static RingElem zero(int dim, const Rational& x0, int order);
    static RingElem one(int dim, const Rational& x0, int order);
    static RingElem constant(const CoefMatrix& c0, const Rational& x0, int order);
    static RingElem scalar(const Rational& r, int dim, const Rational& x0, int order);
    // The independent variable itself: x = x0 + t, so derive(x) == 1.
    static RingElem variable(int dim, const Rational& x0, int order);

    int dim() const { return dim_; }
    int valid_order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& base_point() const { return x0_; }
    const CoefMatrix& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<CoefMatrix>& coeffs() const { return c_; }

    // Same value, valid order lowered to `order`.
    RingElem truncated(int order) const;

    // Termwise d/dt; fails with OrderExhausted at order 0.
    RingElem derive() const;

    // Two-sided inverse up to the valid order; requires the constant
    // coefficient matrix to be invertible (SingularConstantTerm).
    RingElem invert() const;

    // Re-expands an exactly polynomial value about a new base point.
    // The caller asserts that all coefficients beyond the stored ones
    // vanish; under that assumption the shift is exact.
    RingElem recentered(const Rational& new_x0) const;

    RingElem scaled(const Rational& r) const;

    friend RingElem operator+(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const Rational& r, const RingElem& a) { return a.scaled(r); }
    RingElem operator-() const;

    // Exact equality of all coefficients up to the common valid order.
    friend bool operator==(const RingElem& a, const RingElem& b);
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

    bool is_zero() const;

    struct Nonzero {
        int coeff;
        int row;
        int col;
    };
    // Location of the first nonzero coefficient entry, if any.
    std::optional<Nonzero> first_nonzero() const;

    std::string str() const;

  private:
    int dim_;
    Rational x0_;
    std::vector<CoefMatrix> c_;  // size = valid order + 1
};

void check_compatible(const RingElem& a, const RingElem& b);

}  // namespace ncp
