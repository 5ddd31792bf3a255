#include "ncpainleve/ncmat.hpp"

namespace ncp {

NCMat::NCMat(int size, const RingElem& fill) : n_(size) {
    if (size < 1) throw Error("matrix size must be positive");
    e_.assign(static_cast<std::size_t>(size) * size, fill);
}

NCMat::NCMat(std::vector<std::vector<RingElem>> rows) : n_(static_cast<int>(rows.size())) {
    if (rows.empty()) throw Error("matrix size must be positive");
    e_.reserve(static_cast<std::size_t>(n_) * n_);
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != n_) throw Error("matrix rows of unequal length");
        for (auto& x : row) {
            check_compatible(rows.front().front(), x);
            e_.push_back(std::move(x));
        }
    }
}

NCMat NCMat::identity(int size, int dim, const Rational& x0, int order) {
    NCMat m(size, RingElem::zero(dim, x0, order));
    for (int i = 0; i < size; ++i) m.at(i, i) = RingElem::one(dim, x0, order);
    return m;
}

NCMat NCMat::minor_matrix(int p, int q) const {
    if (n_ < 2) throw Error("no minors of a 1x1 matrix");
    NCMat out(n_ - 1, e_.front());
    for (int r = 0, rr = 0; r < n_; ++r) {
        if (r == p) continue;
        for (int c = 0, cc = 0; c < n_; ++c) {
            if (c == q) continue;
            out.at(rr, cc) = at(r, c);
            ++cc;
        }
        ++rr;
    }
    return out;
}

int NCMat::min_order() const {
    int k = e_.front().valid_order();
    for (const auto& x : e_) k = std::min(k, x.valid_order());
    return k;
}

NCMat operator*(const NCMat& a, const NCMat& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("matrix sizes differ in product");
    NCMat out(a.n_, a.e_.front());
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) {
            RingElem acc = a.at(i, 0) * b.at(0, j);
            for (int k = 1; k < a.n_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

NCMat operator+(const NCMat& a, const NCMat& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("matrix sizes differ in sum");
    NCMat out(a.n_, a.e_.front());
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

NCMat operator-(const NCMat& a, const NCMat& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("matrix sizes differ in difference");
    NCMat out(a.n_, a.e_.front());
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

RingElem det_cofactor(const NCMat& a) {
    if (a.elem_dim() != 1)
        throw DimensionMismatch("cofactor determinant requires scalar series entries");
    if (a.size() == 1) return a.at(0, 0);
    RingElem acc = RingElem::zero(1, a.base_point(), a.min_order());
    for (int c = 0; c < a.size(); ++c) {
        if (a.at(0, c).is_zero()) continue;
        RingElem term = a.at(0, c) * det_cofactor(a.minor_matrix(0, c));
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace ncp
