#pragma once

// Test-side oracles, kept independent of the production evaluation
// paths they check (the library inverts via flatten-and-eliminate; the
// oracle below recurses through the definition).

#include "ncpainleve/quasidet.hpp"

namespace oracles {

ncp::RingElem quasidet_recursive(const ncp::NCMat& a, int i, int j);

// Inverse assembled entrywise from the inverse-entry relation:
// (A^{-1})_{pq} = |A|_{qp}^{-1}.  Exponential cost; fine for n <= 3.
inline ncp::NCMat invert_recursive(const ncp::NCMat& a) {
    ncp::NCMat out = a;
    for (int p = 0; p < a.size(); ++p)
        for (int q = 0; q < a.size(); ++q) out.at(p, q) = quasidet_recursive(a, q, p).invert();
    return out;
}

inline ncp::RingElem quasidet_recursive(const ncp::NCMat& a, int i, int j) {
    if (a.size() == 1) return a.at(0, 0);
    ncp::NCMat minor_inv = invert_recursive(a.minor_matrix(i, j));
    ncp::RingElem acc =
        ncp::RingElem::zero(a.elem_dim(), a.base_point(), minor_inv.min_order());
    for (int k = 0; k < a.size(); ++k) {
        if (k == j) continue;
        const int kk = k < j ? k : k - 1;
        for (int l = 0; l < a.size(); ++l) {
            if (l == i) continue;
            const int ll = l < i ? l : l - 1;
            acc = acc + a.at(i, k) * minor_inv.at(kk, ll) * a.at(l, j);
        }
    }
    return a.at(i, j) - acc;
}

}  // namespace oracles
