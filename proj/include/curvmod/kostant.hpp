#pragma once

#include <string>
#include <vector>

#include "curvmod/rootsys.hpp"

namespace curvmod {

// One summand of H^k of the degree -1 abelian subalgebra with adjoint
// coefficients, per Kostant: w runs over length-k minimal coset
// representatives and the summand is the Levi module of weight w.lambda.
struct CohomologyComponent {
    WeylElement w;
    Weight weight;          // w.lambda in fundamental coordinates
    int homogeneity = 0;    // grading-element eigenvalue of the weight
    int value_degree = 0;   // homogeneity - k, in {-1, 0, +1}
    std::string located_in; // "wedge^k V* (x) {V | g0 | V*}"
    Integer dimension;      // Weyl dimension over the Levi factor
};

// Weyl dimension formula evaluated over the Levi positive roots (those with
// coefficient 0 at the node). mu must be Levi-dominant (NonDominant otherwise).
Integer weyl_dimension(const RootSystem& r, int node, const Weight& mu);

// Kostant's recipe with lambda = the highest root; NotOneGraded unless the
// node yields a one-grading.
std::vector<CohomologyComponent> kostant_h(const RootSystem& r, int node, int k);

} // namespace curvmod
