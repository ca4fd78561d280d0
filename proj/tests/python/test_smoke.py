import json

import pytest

try:
    import curvmod as cm
except ImportError:  # running against the build tree, before any install
    import _core as cm


def test_version():
    assert cm.__version__ == "0.1.0"


def test_catalog_names():
    names = cm.catalog_names()
    assert "spin10c-center" in names and "e6-chevalley" in names


def test_so3_curvature_report():
    r = cm.curvature_report("so3-split")
    assert r["dim_K"] == 6
    assert r["dim_prolongation"] == 0
    assert r["ricci_type"] is True
    assert r["ricci_trace_rank_on_K"] == 6


def test_so4_not_ricci_type():
    r = cm.curvature_report("so4-split")
    assert r["dim_K"] == 20
    assert r["ricci_type"] is False


def test_gl2_prolongation():
    assert cm.prolongation_dim("gl2") == 6


def test_a2_cohomology():
    assert cm.cohomology_dim("a2-chevalley", 1, 1) == 4
    parts = [cm.cohomology_component_dim("a2-chevalley", 1, 1, d) for d in (-1, 0, 1)]
    assert sum(parts) == 4


def test_kostant_matches_cohomology():
    comps = cm.kostant("A3", 1, 2)
    assert sum(c["dimension"] for c in comps) == cm.cohomology_dim("a3-chevalley", 1, 2)
    assert all(c["length"] == 2 for c in comps)


def test_graded_checks_small():
    assert cm.verify_homogeneity("a3-chevalley", 1)
    assert cm.verify_prop1("a3-chevalley", 1) in ("1/1", "-1/1")


def test_report_json_deterministic():
    a = cm.report_json("spin10")
    b = cm.report_json("spin10")
    assert a == b
    doc = json.loads(a)
    assert doc["schema_version"] == 1
    assert doc["curvature"]["dim_K"] == 256
    assert doc["curvature"]["ricci_type"] is True


def test_unknown_algebra_raises():
    with pytest.raises(cm.CurvmodError):
        cm.curvature_report("no-such-algebra")
