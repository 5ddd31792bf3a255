#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncpainleve/rational.hpp"

namespace ncp {

// Dense m x m matrix of exact rationals: one series coefficient.
// Multiplication is noncommutative for m >= 2; everything stays exact.
class CoefMatrix {
  public:
    explicit CoefMatrix(int dim);  // zero matrix
    static CoefMatrix identity(int dim);
    static CoefMatrix scalar(int dim, const Rational& r);  // r * I

    int dim() const { return dim_; }
    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

    friend CoefMatrix operator+(const CoefMatrix& a, const CoefMatrix& b);
    friend CoefMatrix operator-(const CoefMatrix& a, const CoefMatrix& b);
    friend CoefMatrix operator*(const CoefMatrix& a, const CoefMatrix& b);
    friend CoefMatrix operator*(const Rational& r, const CoefMatrix& a);
    CoefMatrix operator-() const;
    CoefMatrix& operator+=(const CoefMatrix& b);
    CoefMatrix& operator-=(const CoefMatrix& b);

    friend bool operator==(const CoefMatrix& a, const CoefMatrix& b);
    friend bool operator!=(const CoefMatrix& a, const CoefMatrix& b) { return !(a == b); }

    bool is_zero() const;
    // r * I for some rational r; reports r through `value` when asked.
    bool is_scalar(Rational* value = nullptr) const;

    // Exact Gauss-Jordan inverse; nullopt when singular.
    std::optional<CoefMatrix> inverse() const;
    bool invertible() const { return inverse().has_value(); }

    std::string str() const;  // "[[a, b], [c, d]]", for messages and debugging

  private:
    int dim_;
    std::vector<Rational> a_;  // row-major
};

void check_same_dim(const CoefMatrix& a, const CoefMatrix& b);

}  // namespace ncp
