#pragma once

#include <string>
#include <vector>

#include "curvmod/liealg.hpp"

namespace curvmod {

// Named representations for the CLI and bindings:
//   so<n>-split, gl<n>, sl<n>,
//   spin10c-center       (even half-spinor of so(10) plus a center; alias: spin10)
//   spin10c-center-odd   (odd parity variant; alias: spin10-odd)
// Throws UnknownAlgebra for anything else.
Representation catalog_lookup(const std::string& name);

// Named graded algebras: e6-chevalley, a<n>-chevalley. `node` is 1-based
// (Bourbaki numbering).
GradedLieAlgebra graded_catalog_lookup(const std::string& name, int node);

std::vector<std::string> catalog_names();

} // namespace curvmod
