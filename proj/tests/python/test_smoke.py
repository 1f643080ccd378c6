import json

import pytest

import cwres

XY = {"variables": ["x", "y"], "ideal": "x, y"}
XYZ = {"variables": ["x", "y", "z"], "ideal": "x, y, z"}

KOSZUL3_CW = {
    "cells": [
        [{"id": "c0", "mdeg": [1, 0, 0]}, {"id": "c1", "mdeg": [0, 1, 0]}, {"id": "c2", "mdeg": [0, 0, 1]}],
        [{"id": "c0.1", "mdeg": [1, 1, 0]}, {"id": "c0.2", "mdeg": [1, 0, 1]}, {"id": "c1.2", "mdeg": [0, 1, 1]}],
        [{"id": "c0.1.2", "mdeg": [1, 1, 1]}],
    ],
    "boundaries": [
        {"rows": 3, "cols": 3, "entries": [[0, 0, -1], [0, 1, -1], [1, 0, 1], [1, 2, -1], [2, 1, 1], [2, 2, 1]]},
        {"rows": 3, "cols": 1, "entries": [[0, 0, 1], [1, 0, -1], [2, 0, 1]]},
    ],
}

LOOP_EDGE = {
    "cells": [[{"id": "v", "mdeg": [1, 0]}], [{"id": "loop", "mdeg": [1, 1]}]],
    "boundaries": [{"rows": 1, "cols": 1, "entries": []}],
}


def test_parse_ideal_normalizes():
    ideal = cwres.parse_ideal("x*y, x*y*z", ["x", "y", "z"])
    assert ideal["generators"] == [[1, 1, 0]]


def test_parse_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        cwres.parse_ideal("x**y", ["x", "y"])
    with pytest.raises(ValueError):
        cwres.parse_ideal("q", ["x", "y"])


def test_resolve_betti_of_two_coordinates():
    out = cwres.resolve(XY, 2)
    entries = {(e["i"], tuple(e["mdeg"])): e["beta"] for e in out["betti"]["entries"]}
    assert entries == {(0, (1, 0)): 1, (0, (0, 1)): 1, (1, (1, 1)): 1}
    assert out["resolution"]["p"] == 2


def test_resolve_matches_oracle():
    for p in (2, 3, 5):
        out = cwres.resolve({"variables": ["x", "y", "z"], "ideal": "x*y, y*z, x*z"}, p)
        oracle = cwres.betti_oracle({"variables": ["x", "y", "z"], "ideal": "x*y, y*z, x*z"}, p)
        assert out["betti"] == oracle


def test_face_poset_counts():
    poset = cwres.face_poset(KOSZUL3_CW, 2)
    assert len(poset["elements"]) == 7
    assert len(poset["covers"]) == 9


def test_check_support():
    report = cwres.check_support(KOSZUL3_CW, XYZ, 2)
    assert report["supported"] is True
    mismatch = cwres.check_support(KOSZUL3_CW, XY, 2)
    assert mismatch["supported"] is False
    assert mismatch["reason"] == "cardinality"


def test_transform_end_to_end():
    cert = cwres.transform(XYZ, KOSZUL3_CW, 2)
    assert cert["status"] == "ok"
    assert cert["stage_reached"] == "complete"
    assert cert["stages"]["poset_equality"]["equal"] is True
    # dimension <= 2: the transform returns X itself
    assert cert["stages"]["transform"]["y"] == KOSZUL3_CW


def test_transform_rejects_irregular_complex():
    cert = cwres.transform(XY, LOOP_EDGE, 2)
    assert cert["status"] == "NotRegular"
    assert cert["stage_reached"] == "regularity"


def test_validate_and_regularity():
    assert cwres.validate_cw(KOSZUL3_CW)["ok"] is True
    assert cwres.regular_two_skeleton(KOSZUL3_CW) is True
    assert cwres.regular_two_skeleton(LOOP_EDGE) is False


def test_find_basis_is_standard_in_low_dimensions():
    basis = cwres.find_basis(KOSZUL3_CW, 2)
    assert basis["status"] == "ok"
    for level in basis["levels"]:
        for vec in level:
            assert vec["stage"] == 0


def test_outputs_are_deterministic():
    a = json.dumps(cwres.transform(XYZ, KOSZUL3_CW, 3), sort_keys=True)
    b = json.dumps(cwres.transform(XYZ, KOSZUL3_CW, 3), sort_keys=True)
    assert a == b
