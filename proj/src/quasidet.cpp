#include "ncpainleve/quasidet.hpp"

#include <sstream>

namespace ncp {

namespace {

// View the n x n matrix of m x m series blocks as an (n*m) x (n*m)
// matrix of scalar series, all truncated to the common valid order.
NCMat flatten(const NCMat& a) {
    const int n = a.size();
    const int m = a.elem_dim();
    const int k = a.min_order();
    NCMat out(n * m, RingElem::zero(1, a.base_point(), k));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const RingElem& block = a.at(p, q);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) {
                    std::vector<CoefMatrix> coeffs;
                    coeffs.reserve(static_cast<std::size_t>(k) + 1);
                    for (int t = 0; t <= k; ++t) {
                        CoefMatrix e(1);
                        e.at(0, 0) = block.coeff(t).at(r, c);
                        coeffs.push_back(std::move(e));
                    }
                    out.at(p * m + r, q * m + c) = RingElem(a.base_point(), std::move(coeffs));
                }
        }
    return out;
}

NCMat reblock(const NCMat& flat, int n, int m) {
    const int k = flat.min_order();
    NCMat out(n, RingElem::zero(m, flat.base_point(), k));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            std::vector<CoefMatrix> coeffs(static_cast<std::size_t>(k) + 1, CoefMatrix(m));
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) {
                    const RingElem& s = flat.at(p * m + r, q * m + c);
                    for (int t = 0; t <= k; ++t) coeffs[t].at(r, c) = s.coeff(t).at(0, 0);
                }
            out.at(p, q) = RingElem(flat.base_point(), std::move(coeffs));
        }
    return out;
}

// Gauss-Jordan over the scalar truncated-series ring.  A pivot must be
// a unit, i.e. have nonzero constant coefficient; for an invertible
// matrix over this local ring a unit pivot always exists in the
// current column, so plain row pivoting suffices.
NCMat gauss_jordan(NCMat work) {
    const int n = work.size();
    NCMat inv = NCMat::identity(n, 1, work.base_point(), work.min_order());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!work.at(r, col).coeff(0).at(0, 0).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw MatrixNotInvertible("no invertible pivot in column " + std::to_string(col) +
                                      " during elimination");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        RingElem ip = work.at(col, col).invert();
        for (int c = 0; c < n; ++c) {
            work.at(col, c) = ip * work.at(col, c);
            inv.at(col, c) = ip * inv.at(col, c);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            RingElem f = work.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                work.at(r, c) = work.at(r, c) - f * work.at(col, c);
                inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
            }
        }
    }
    return inv;
}

}  // namespace

NCMat nc_invert_matrix(const NCMat& a) {
    const int n = a.size();
    const int m = a.elem_dim();
    return reblock(gauss_jordan(flatten(a)), n, m);
}

RingElem quasidet(const NCMat& a, int row, int col) {
    const int n = a.size();
    if (row < 0 || row >= n || col < 0 || col >= n)
        throw Error("quasidet position out of range");
    if (n == 1) return a.at(0, 0);

    NCMat minor = a.minor_matrix(row, col);
    NCMat minor_inv = [&] {
        try {
            return nc_invert_matrix(minor);
        } catch (const MatrixNotInvertible& e) {
            std::ostringstream os;
            os << "quasideterminant at (" << row << ", " << col << ") undefined: submatrix A^{"
               << row << "," << col << "} is not invertible (" << e.what() << ")";
            throw SubmatrixNotInvertible(os.str());
        }
    }();

    // r_i * (A^{ij})^{-1} * c_j with the minor's index maps back into A
    RingElem acc = RingElem::zero(a.elem_dim(), a.base_point(), minor.min_order());
    for (int k = 0; k < n; ++k) {
        if (k == col) continue;
        const int kk = k < col ? k : k - 1;
        for (int l = 0; l < n; ++l) {
            if (l == row) continue;
            const int ll = l < row ? l : l - 1;
            acc = acc + a.at(row, k) * minor_inv.at(kk, ll) * a.at(l, col);
        }
    }
    return a.at(row, col) - acc;
}

RingElem sylvester_rhs(const NCMat& a) {
    const int n = a.size();
    if (n < 2) throw Error("sylvester_rhs needs a matrix of size >= 2");
    NCMat d = a.minor_matrix(n - 2, n - 2);
    NCMat b = a.minor_matrix(n - 2, n - 1);
    NCMat c = a.minor_matrix(n - 1, n - 2);
    NCMat a0 = a.minor_matrix(n - 1, n - 1);
    const int p = n - 2;  // quasideterminant position inside the submatrices
    return quasidet(d, p, p) - quasidet(b, p, p) * quasidet(a0, p, p).invert() * quasidet(c, p, p);
}

}  // namespace ncp
