#include "curvmod/reports.hpp"

#include "curvmod/catalog.hpp"
#include "curvmod/errors.hpp"

namespace curvmod {

using nlohmann::ordered_json;

ordered_json report_header(const std::string& command, const std::string& mode) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["mode"] = mode;
    j["conventions"] = {{"normalization", "cyclic-sum"},
                        {"ricci_trace", "first-wedge-slot"},
                        {"node_numbering", "bourbaki-1-based"},
                        {"scalars", "exact-rational"}};
    return j;
}

ordered_json curvature_report_json(const CurvatureReport& rep) {
    ordered_json j;
    j["dim_V"] = rep.dim_V;
    j["dim_g"] = rep.dim_g;
    j["dim_domain"] = rep.dim_domain;
    j["dim_K"] = rep.dim_K;
    j["dim_prolongation"] = rep.dim_prolongation;
    j["dim_spencer_h12"] = rep.dim_spencer_h12;
    j["ricci_trace_rank_on_K"] = rep.ricci_trace_rank_on_K;
    j["ricci_type"] = rep.ricci_type;
    return j;
}

namespace {

ordered_json component_json(const CohomologyComponent& c) {
    ordered_json j;
    std::vector<int> word;
    for (int i : c.w.word) word.push_back(i + 1); // 1-based, matching the node numbering
    j["word"] = word;
    j["length"] = c.w.length;
    j["weight"] = c.weight;
    j["homogeneity"] = c.homogeneity;
    j["located_in"] = c.located_in;
    j["dimension"] = c.dimension.get_str();
    return j;
}

} // namespace

ordered_json full_report(const std::string& algebra) {
    bool odd = algebra == "spin10-odd" || algebra == "spin10c-center-odd";
    bool even = algebra == "spin10" || algebra == "spin10c-center";
    if (!odd && !even)
        throw UnknownAlgebra("full report is defined for the spin10 algebras only");
    std::string canon = odd ? "spin10c-center-odd" : "spin10c-center";
    int node = odd ? 6 : 1;

    ordered_json j = report_header("report", "exact");
    j["algebra"] = canon;
    j["curvature"] = curvature_report_json(is_ricci_type(catalog_lookup(canon)));

    auto g = graded_catalog_lookup("e6-chevalley", node);
    auto tr = tR_circ_dLie(g);
    auto [img, eq] = image_decomposition(g);
    ordered_json gc;
    gc["node"] = node;
    gc["prop1_constant"] = rational_to_text(verify_prop1(g));
    gc["homogeneity_ok"] = verify_homogeneity(g);
    gc["tr_dlie_rank"] = rank(tr);
    gc["tr_dlie_invertible"] = rank(tr) == tr.ncols();
    gc["dlie_image_dim"] = img;
    gc["dlie_image_equals_curvature_kernel"] = eq;
    gc["h2_g0_component_dim"] = lie_cohomology_component_dim(g, 2, 0);
    auto r = build_root_system('E', 6);
    ordered_json comps = ordered_json::array();
    for (const auto& c : kostant_h(r, node - 1, 2)) comps.push_back(component_json(c));
    gc["kostant_k2"] = comps;
    j["graded_checks"] = gc;
    return j;
}

ordered_json kmodule_report(const std::string& algebra) {
    ordered_json j = report_header("kmodule", "exact");
    j["algebra"] = algebra;
    j["curvature"] = curvature_report_json(is_ricci_type(catalog_lookup(algebra)));
    return j;
}

ordered_json prolong_report(const std::string& algebra) {
    ordered_json j = report_header("prolong", "exact");
    j["algebra"] = algebra;
    j["dim_prolongation"] = prolongation(catalog_lookup(algebra)).size();
    return j;
}

ordered_json cohomology_report(const std::string& algebra, int node, int degree,
                               RankMode mode, const std::vector<std::uint64_t>& primes) {
    bool modular = mode == RankMode::Modular;
    ordered_json j = report_header("cohomology", modular ? "modular, probabilistic" : "exact");
    j["algebra"] = algebra;
    j["node"] = node;
    j["degree"] = degree;
    if (modular) j["primes"] = primes;
    auto g = graded_catalog_lookup(algebra, node);
    j["dimension"] = lie_cohomology_dim(g, degree, mode, primes);
    ordered_json by_value;
    for (int d : {-1, 0, 1})
        by_value[d == -1 ? "V" : (d == 0 ? "g0" : "V*")] =
            lie_cohomology_component_dim(g, degree, d, mode, primes);
    j["component_dimensions"] = by_value;
    return j;
}

ordered_json kostant_report(const std::string& type, int node, int degree) {
    if (type.size() != 2 || type[0] < 'A' || type[0] > 'G' || type[1] < '1' || type[1] > '9')
        throw UnsupportedType("expected a type like A3 or E6");
    auto r = build_root_system(type[0], type[1] - '0');
    ordered_json j = report_header("kostant", "exact");
    j["type"] = type;
    j["node"] = node;
    j["degree"] = degree;
    if (node < 1 || node > r.rank) throw Error("node out of range (1-based)");
    ordered_json comps = ordered_json::array();
    for (const auto& c : kostant_h(r, node - 1, degree)) comps.push_back(component_json(c));
    j["components"] = comps;
    return j;
}

} // namespace curvmod
