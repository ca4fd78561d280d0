#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "curvmod/liealg.hpp"

namespace curvmod {

// Column indexing for cochain spaces wedge^k V* (x) W: wedge tuples strictly
// increasing in lexicographic order, value index fastest-varying.
struct CochainSpace {
    int n = 0;         // dim V
    int k = 0;         // wedge degree
    int value_dim = 0; // dim W
    long dim() const;
    long index(const std::vector<int>& tuple, int value) const;
};

struct CurvatureReport {
    int dim_V = 0;
    int dim_g = 0;
    int dim_domain = 0; // wedge^2 V* (x) g
    int dim_K = 0;
    int dim_prolongation = 0;
    int dim_spencer_h12 = 0;
    int ricci_trace_rank_on_K = 0;
    bool ricci_type = false;
};

// psi |-> ((x,y,z) |-> psi(x,y)z + psi(y,z)x + psi(z,x)y), cyclic sum with no
// 1/3 factor, from wedge^2 V* (x) g to wedge^3 V* (x) V.
SparseMatrix bianchi_matrix(const Representation& rho);

// Canonical kernel basis of the Bianchi map: the formal curvature module.
SubspaceBasis curvature_module(const Representation& rho);

// Kernel of the antisymmetrization V* (x) g -> wedge^2 V* (x) V,
// A |-> ((x,y) |-> A(x)y - A(y)x): the first prolongation.
SubspaceBasis prolongation(const Representation& rho);

// dim K - rank of the antisymmetrizing map on V* (x) g^(1).
int spencer_h12(const Representation& rho);

// psi |-> ((x,y) |-> tr(z |-> psi(z,x)y)) from wedge^2 V* (x) g to V* (x) V*,
// codomain index row-major (first factor slow).
SparseMatrix ricci_trace_matrix(const Representation& rho);

CurvatureReport is_ricci_type(const Representation& rho);

// Chevalley-Eilenberg differential of the degree -1 abelian subalgebra with
// coefficients in the whole graded algebra:
// (d psi)(v_0..v_k) = sum_i (-1)^i [v_i, psi(.. v_i-hat ..)].
SparseMatrix lie_cochain_differential(const GradedLieAlgebra& g, int k);

// Restriction to cochains with values in the degree `value_degree` component;
// the image lands in values of degree value_degree - 1.
SparseMatrix lie_cochain_differential_component(const GradedLieAlgebra& g, int k,
                                                int value_degree);

// Entrywise check that d maps V*(x)g_{+1} into wedge^2 V*(x)g_0, V*(x)g_0 into
// wedge^2 V*(x)g_{-1}, and kills V*(x)g_{-1}.
bool verify_homogeneity(const GradedLieAlgebra& g);

// The constant c with d restricted to wedge^2 V*(x)g_0 equal to c times the
// Bianchi matrix of the g_0-action on g_{-1}. Throws NotProportional if no
// such constant exists; returns -1 when both maps are zero (dim V < 3).
Rational verify_prop1(const GradedLieAlgebra& g);

// (dim of the d-image of V*(x)g_{+1}, whether that image equals the kernel of
// the Bianchi map), both inside wedge^2 V*(x)g_0, compared by canonical bases.
std::pair<int, bool> image_decomposition(const GradedLieAlgebra& g);

// n^2 x n^2 matrix of the Ricci trace composed with d on V*(x)g_{+1} = V*(x)V*.
SparseMatrix tR_circ_dLie(const GradedLieAlgebra& g);

enum class RankMode { Exact, Modular };

// dim ker(d at k) - rank(d at k-1). Modular mode requires at least 3 primes
// that must agree; the result is then a probabilistic value.
int lie_cohomology_dim(const GradedLieAlgebra& g, int k, RankMode mode = RankMode::Exact,
                       const std::vector<std::uint64_t>& primes = {});

// Same, restricted to the single graded component of the cochain values.
int lie_cohomology_component_dim(const GradedLieAlgebra& g, int k, int value_degree,
                                 RankMode mode = RankMode::Exact,
                                 const std::vector<std::uint64_t>& primes = {});

} // namespace curvmod
