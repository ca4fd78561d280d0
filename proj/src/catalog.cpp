#include "curvmod/catalog.hpp"

#include <cstdlib>

#include "curvmod/chevalley.hpp"
#include "curvmod/errors.hpp"

namespace curvmod {

namespace {

// parses "<prefix><number><suffix>", returns the number or -1
int parse_sized(const std::string& name, const std::string& prefix, const std::string& suffix) {
    if (name.size() <= prefix.size() + suffix.size()) return -1;
    if (name.compare(0, prefix.size(), prefix) != 0) return -1;
    if (name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) return -1;
    std::string mid = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
    if (mid.empty() || mid.find_first_not_of("0123456789") != std::string::npos) return -1;
    long v = std::strtol(mid.c_str(), nullptr, 10);
    return (v >= 1 && v <= 64) ? static_cast<int>(v) : -1;
}

} // namespace

Representation catalog_lookup(const std::string& name) {
    if (name == "spin10c-center" || name == "spin10")
        return append_center(half_spinor_rep(10, Parity::Even));
    if (name == "spin10c-center-odd" || name == "spin10-odd")
        return append_center(half_spinor_rep(10, Parity::Odd));
    if (int n = parse_sized(name, "so", "-split"); n >= 2) return so_split(n);
    if (int n = parse_sized(name, "gl", ""); n >= 1) return gl_rep(n);
    if (int n = parse_sized(name, "sl", ""); n >= 2) return sl_rep(n);
    throw UnknownAlgebra("no algebra named '" + name + "' in the catalog");
}

GradedLieAlgebra graded_catalog_lookup(const std::string& name, int node) {
    char type = 0;
    int rank = 0;
    if (name == "e6-chevalley") {
        type = 'E';
        rank = 6;
    } else if (int n = parse_sized(name, "a", "-chevalley"); n >= 1) {
        type = 'A';
        rank = n;
    } else {
        throw UnknownAlgebra("no graded algebra named '" + name + "' in the catalog");
    }
    if (node < 1 || node > rank) throw Error("node out of range (1-based Bourbaki numbering)");
    return grade_by_node(chevalley(build_root_system(type, rank)), node - 1);
}

std::vector<std::string> catalog_names() {
    return {"spin10c-center", "spin10c-center-odd", "so<n>-split", "gl<n>", "sl<n>",
            "e6-chevalley", "a<n>-chevalley"};
}

} // namespace curvmod
