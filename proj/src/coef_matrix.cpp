#include "ncpainleve/coef_matrix.hpp"

#include <sstream>

namespace ncp {

CoefMatrix::CoefMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw Error("matrix dimension must be positive");
    a_.assign(static_cast<std::size_t>(dim) * dim, Rational(0));
}

CoefMatrix CoefMatrix::identity(int dim) {
    CoefMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
    return m;
}

CoefMatrix CoefMatrix::scalar(int dim, const Rational& r) {
    CoefMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = r;
    return m;
}

void check_same_dim(const CoefMatrix& a, const CoefMatrix& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

CoefMatrix operator+(const CoefMatrix& a, const CoefMatrix& b) {
    check_same_dim(a, b);
    CoefMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
    return out;
}

CoefMatrix operator-(const CoefMatrix& a, const CoefMatrix& b) {
    check_same_dim(a, b);
    CoefMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
    return out;
}

CoefMatrix operator*(const CoefMatrix& a, const CoefMatrix& b) {
    check_same_dim(a, b);
    const int n = a.dim_;
    CoefMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

CoefMatrix operator*(const Rational& r, const CoefMatrix& a) {
    CoefMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = r * a.a_[i];
    return out;
}

CoefMatrix CoefMatrix::operator-() const {
    CoefMatrix out(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

CoefMatrix& CoefMatrix::operator+=(const CoefMatrix& b) {
    check_same_dim(*this, b);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
    return *this;
}

CoefMatrix& CoefMatrix::operator-=(const CoefMatrix& b) {
    check_same_dim(*this, b);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
    return *this;
}

bool operator==(const CoefMatrix& a, const CoefMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
}

bool CoefMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool CoefMatrix::is_scalar(Rational* value) const {
    const Rational& d = at(0, 0);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if (i == j && at(i, j) != d) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    if (value) *value = d;
    return true;
}

std::optional<CoefMatrix> CoefMatrix::inverse() const {
    const int n = dim_;
    CoefMatrix work(*this);
    CoefMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        Rational p = work.at(col, col);
        Rational ip = Rational(1) / p;
        for (int c = 0; c < n; ++c) {
            work.at(col, c) *= ip;
            inv.at(col, c) *= ip;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Rational f = work.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                work.at(r, c) -= f * work.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::string CoefMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < dim_; ++j) os << (j ? ", " : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace ncp
