"""Exact curvature-module and Lie-cohomology computations."""

from ._core import (
    CurvmodError,
    __version__,
    catalog_names,
    cohomology_component_dim,
    cohomology_dim,
    curvature_report,
    kostant,
    prolongation_dim,
    report_json,
    verify_homogeneity,
    verify_prop1,
)

__all__ = [
    "CurvmodError",
    "__version__",
    "catalog_names",
    "cohomology_component_dim",
    "cohomology_dim",
    "curvature_report",
    "kostant",
    "prolongation_dim",
    "report_json",
    "verify_homogeneity",
    "verify_prop1",
]
