#pragma once

// Dense, naive rational elimination used as an independent check on the
// sparse routines. Deliberately simple; no pivoting heuristics.

#include <vector>

#include "curvmod/sparse.hpp"

namespace oracle {

using curvmod::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline Dense to_dense(const curvmod::SparseMatrix& m) {
    Dense d(m.nrows(), std::vector<Rational>(m.ncols(), Rational(0)));
    for (int i = 0; i < m.nrows(); ++i)
        for (const auto& [j, v] : m.row(i)) d[i][j] = v;
    return d;
}

// Returns rank; reduces `a` to rref in place.
inline int dense_rref(Dense& a) {
    if (a.empty()) return 0;
    int nr = static_cast<int>(a.size());
    int nc = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int p = -1;
        for (int i = r; i < nr; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Rational pv = a[r][c];
        for (auto& x : a[r]) x /= pv;
        for (int i = 0; i < nr; ++i)
            if (i != r && a[i][c] != 0) {
                Rational f = a[i][c];
                for (int j = 0; j < nc; ++j) a[i][j] -= f * a[r][j];
            }
        ++r;
    }
    return r;
}

inline int dense_rank(const curvmod::SparseMatrix& m) {
    Dense d = to_dense(m);
    return dense_rref(d);
}

} // namespace oracle
