#pragma once

#include <vector>

#include "ncpainleve/series.hpp"

namespace ncp {

// Square matrix with RingElem entries.  All entries share the matrix
// dimension and base point; valid orders may differ entry by entry
// (operations truncate pairwise).  Indices are 0-based throughout.
class NCMat {
  public:
    NCMat(int size, const RingElem& fill);
    explicit NCMat(std::vector<std::vector<RingElem>> rows);
    static NCMat identity(int size, int dim, const Rational& x0, int order);

    int size() const { return n_; }
    int elem_dim() const { return e_.front().dim(); }
    const Rational& base_point() const { return e_.front().base_point(); }

    RingElem& at(int r, int c) { return e_[static_cast<std::size_t>(r) * n_ + c]; }
    const RingElem& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * n_ + c]; }

    // A^{pq}: delete row p and column q (size must be >= 2).
    NCMat minor_matrix(int p, int q) const;

    // Smallest valid order over all entries.
    int min_order() const;

    friend NCMat operator*(const NCMat& a, const NCMat& b);
    friend NCMat operator+(const NCMat& a, const NCMat& b);
    friend NCMat operator-(const NCMat& a, const NCMat& b);

  private:
    int n_;
    std::vector<RingElem> e_;  // row-major
};

// Commutative cofactor determinant; defined for matrices whose entries
// are scalar series (elem_dim == 1).
RingElem det_cofactor(const NCMat& a);

}  // namespace ncp
