// Python bindings for the main operations: curvature module reports,
// prolongations, Lie algebra cohomology, and Kostant components.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvmod/catalog.hpp"
#include "curvmod/curvature.hpp"
#include "curvmod/kostant.hpp"
#include "curvmod/reports.hpp"

namespace py = pybind11;
using namespace curvmod;

namespace {

py::object big_int(const Integer& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::dict report_dict(const CurvatureReport& r) {
    py::dict d;
    d["dim_V"] = r.dim_V;
    d["dim_g"] = r.dim_g;
    d["dim_domain"] = r.dim_domain;
    d["dim_K"] = r.dim_K;
    d["dim_prolongation"] = r.dim_prolongation;
    d["dim_spencer_h12"] = r.dim_spencer_h12;
    d["ricci_trace_rank_on_K"] = r.ricci_trace_rank_on_K;
    d["ricci_type"] = r.ricci_type;
    return d;
}

py::dict component_dict(const CohomologyComponent& c) {
    py::dict d;
    std::vector<int> word;
    for (int i : c.w.word) word.push_back(i + 1); // 1-based node numbering
    d["word"] = word;
    d["length"] = c.w.length;
    d["weight"] = c.weight;
    d["homogeneity"] = c.homogeneity;
    d["value_degree"] = c.value_degree;
    d["located_in"] = c.located_in;
    d["dimension"] = big_int(c.dimension);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact curvature-module and Lie-cohomology computations";
    m.attr("__version__") = kToolVersion;

    py::register_exception<Error>(m, "CurvmodError");

    m.def("catalog_names", &catalog_names, "Names accepted by the catalog lookups.");

    m.def(
        "curvature_report",
        [](const std::string& algebra) { return report_dict(is_ricci_type(catalog_lookup(algebra))); },
        py::arg("algebra"),
        "Curvature module, prolongation, Spencer cohomology, and Ricci-type verdict.");

    m.def(
        "prolongation_dim",
        [](const std::string& algebra) { return prolongation(catalog_lookup(algebra)).size(); },
        py::arg("algebra"), "Dimension of the first prolongation.");

    m.def(
        "cohomology_dim",
        [](const std::string& algebra, int node, int degree) {
            return lie_cohomology_dim(graded_catalog_lookup(algebra, node), degree);
        },
        py::arg("algebra"), py::arg("node"), py::arg("degree"),
        "dim H^degree(g_-1, g) for the one-grading at the given Bourbaki node.");

    m.def(
        "cohomology_component_dim",
        [](const std::string& algebra, int node, int degree, int value_degree) {
            return lie_cohomology_component_dim(graded_catalog_lookup(algebra, node), degree,
                                                value_degree);
        },
        py::arg("algebra"), py::arg("node"), py::arg("degree"), py::arg("value_degree"),
        "Contribution of the value-degree component to H^degree.");

    m.def(
        "kostant",
        [](const std::string& type, int node, int degree) {
            if (type.size() != 2) throw UnsupportedType("expected a type like A3 or E6");
            auto r = build_root_system(type[0], type[1] - '0');
            py::list out;
            for (const auto& c : kostant_h(r, node - 1, degree)) out.append(component_dict(c));
            return out;
        },
        py::arg("type"), py::arg("node"), py::arg("degree"),
        "Bott-Borel-Weil components of H^degree as a list of dicts.");

    m.def(
        "verify_prop1",
        [](const std::string& algebra, int node) {
            return rational_to_text(verify_prop1(graded_catalog_lookup(algebra, node)));
        },
        py::arg("algebra"), py::arg("node"),
        "Proportionality constant between the graded and curvature differentials.");

    m.def(
        "verify_homogeneity",
        [](const std::string& algebra, int node) {
            return verify_homogeneity(graded_catalog_lookup(algebra, node));
        },
        py::arg("algebra"), py::arg("node"));

    m.def(
        "report_json",
        [](const std::string& algebra) { return full_report(algebra).dump(2) + "\n"; },
        py::arg("algebra") = "spin10",
        "Full pipeline report as a deterministic JSON string.");
}
