#pragma once

#include "curvmod/liealg.hpp"
#include "curvmod/rootsys.hpp"

namespace curvmod {

// Chevalley-basis Lie algebra of a root system, with the root bookkeeping
// needed for gradings. Basis order: h_1..h_r, then e_alpha over the positive
// roots (height, then lex), then f_alpha in the same order.
struct ChevalleyAlgebra {
    LieAlgebraPtr algebra;
    RootSystem roots;

    int cartan_index(int i) const { return i; }
    int e_index(int pos_root) const { return roots.rank + pos_root; }
    int f_index(int pos_root) const {
        return roots.rank + static_cast<int>(roots.positive_roots.size()) + pos_root;
    }
};

// Structure constants are fixed deterministically by extraspecial pairs under
// the (height, lex) order on positive roots, with N_{alpha,beta} = p+1 > 0 on
// extraspecial pairs.
ChevalleyAlgebra chevalley(const RootSystem& r);

// One-grading by the coefficient of the chosen simple root; requires that
// coefficient to be 1 in the highest root (throws NotOneGraded otherwise).
// The grading element (the dual fundamental coweight in the Cartan) is
// computed and stored.
GradedLieAlgebra grade_by_node(const ChevalleyAlgebra& c, int node);

} // namespace curvmod
