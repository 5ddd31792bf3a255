#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ncpainleve/errors.hpp"

namespace ncp {

// Arbitrary-precision rational number, always in lowest terms with a
// positive denominator.  Arithmetic is exact; there is no rounding
// anywhere in the library.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: integers embed implicitly
    Rational(long n, long d);
    explicit Rational(const mpq_class& v) : v_(v) {}

    // Accepts "p" or "p/q" with optional leading sign on p; q > 0.
    static Rational parse(std::string_view text);

    // C(n, k) as an exact rational (integer-valued).
    static Rational binomial(unsigned long n, unsigned long k);

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) {
        v_ += b.v_;
        return *this;
    }
    Rational& operator-=(const Rational& b) {
        v_ -= b.v_;
        return *this;
    }
    Rational& operator*=(const Rational& b) {
        v_ *= b.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    // "p" when the denominator is 1, else "p/q".
    std::string str() const { return v_.get_str(); }
    // Always "p/q", including "p/1"; the canonical machine-readable form.
    std::string str_frac() const;

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ncp
