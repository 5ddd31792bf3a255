#pragma once

#include "ncpainleve/ncmat.hpp"

namespace ncp {

// Quasideterminant |A|_{ij} = a_ij - r_i (A^{ij})^{-1} c_j, where r_i is
// row i with a_ij removed and c_j is column j with a_ij removed.  For a
// 1x1 matrix it is the single entry.  Defined whenever A^{ij} is
// invertible over the series ring; otherwise SubmatrixNotInvertible
// names the submatrix that failed.
RingElem quasidet(const NCMat& a, int row, int col);

// Inverse of a matrix over the series ring.  The matrix is flattened to
// (n*m) x (n*m) scalar series, eliminated with unit pivots (a pivot is
// usable iff its constant coefficient is nonzero), and re-blocked.
NCMat nc_invert_matrix(const NCMat& a);

// Right-hand side of the quasideterminant cross-ratio identity: with
// A0, B, C, D the four size-(n-1) submatrices obtained by deleting the
// last or next-to-last row and column,
//   |A|_{n-1,n-1} = |D| - |B| |A0|^{-1} |C|
// with every quasideterminant taken at position (n-2, n-2).
RingElem sylvester_rhs(const NCMat& a);

}  // namespace ncp
