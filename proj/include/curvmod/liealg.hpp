#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "curvmod/sparse.hpp"

namespace curvmod {

// Finite-dimensional Lie algebra over Q given by structure constants on a
// labeled basis: [e_i, e_j] = sum_k c_ij^k e_k. Only i<j is stored;
// antisymmetry is implied.
class LieAlgebra {
public:
    LieAlgebra(std::vector<std::string> labels,
               std::vector<std::vector<std::vector<std::pair<int, Rational>>>> upper);

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    // [e_i, e_j] as a sparse coefficient list (any i, j).
    std::vector<std::pair<int, Rational>> bracket(int i, int j) const;
    SparseVec bracket(const SparseVec& a, const SparseVec& b) const;

    // Adjoint action matrix of e_i.
    SparseMatrix ad(int i) const;

private:
    int dim_;
    std::vector<std::string> labels_;
    // upper_[i][j-i-1] for i<j
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> upper_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct Representation {
    LieAlgebraPtr algebra;
    int dim = 0;
    std::vector<SparseMatrix> action; // one dim x dim matrix per basis vector
};

bool check_jacobi(const LieAlgebra& l);
bool check_representation(const Representation& rho);

Representation adjoint_rep(const LieAlgebraPtr& l);

// Builds the abstract algebra spanned by the given matrices (which must be
// linearly independent and closed under commutator) together with the tautological
// representation on the column space.
Representation algebra_from_matrices(std::vector<std::string> labels,
                                     std::vector<SparseMatrix> mats, int space_dim);

// Orthogonal algebra of the split symmetric form on Q^n (hyperbolic pairs,
// plus one unit vector when n is odd), with its standard representation.
// Basis: X_{a,b} for a<b, X_{a,b} v = B(b,v) a - B(a,v) b.
Representation so_split(int n);

enum class Parity { Even, Odd };

// Half-spinor representation of so_split(2m) of dimension 2^{m-1}, realized on
// the chosen-parity part of the exterior algebra on m fermionic generators.
Representation half_spinor_rep(int n, Parity parity);

// Direct sum with a one-dimensional center acting as the identity; the center
// generator is appended as the last basis vector.
Representation append_center(const Representation& rho);

Representation gl_rep(int n);
Representation sl_rep(int n);

Representation dual_rep(const Representation& rho);
Representation wedge_rep(const Representation& rho, int k);
Representation tensor_rep(const Representation& rho, const Representation& sigma);

// Basis-order helpers shared by the tensor functors and the cochain indexing:
// wedge tuples are strictly increasing, enumerated lexicographically.
std::vector<std::vector<int>> increasing_tuples(int n, int k);

struct GradedLieAlgebra {
    LieAlgebraPtr algebra;
    std::vector<int> degree;                  // per basis vector, in {-1,0,1}
    std::optional<SparseVec> grading_element; // coordinates in the basis

    std::vector<int> component(int d) const; // basis indices of degree d, increasing
};

// Checks [g_a, g_b] subset g_{a+b} (zero when |a+b| > 1) and, when present,
// [E, x] = deg(x) x.
bool check_grading(const GradedLieAlgebra& g);

// Degree-0 subalgebra acting on the degree d component (d = -1 or +1) via the
// bracket. The returned algebra is the degree-0 subalgebra with inherited labels.
Representation component_rep(const GradedLieAlgebra& g, int d);

} // namespace curvmod
