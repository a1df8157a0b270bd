import json

import pytest

from quatcross import jsonio
from quatcross.geometry import AffineSubspace, PointLocus, SphereK, loci_isclose
from quatcross.oracle import RandomConfig, random_locus, random_moebius
from quatcross.quaternion import I, INF, J, K, ONE

from conftest import q


def roundtrip(value):
    return json.loads(json.dumps(value))


def test_quaternion_roundtrip_is_bit_exact():
    p = q(0.1, 1 / 3, -2e-300, 1e300)
    assert jsonio.quaternion_from_json(roundtrip(jsonio.quaternion_to_json(p))) == p
    assert jsonio.ext_from_json(roundtrip(jsonio.ext_to_json(INF))) is INF
    assert jsonio.quaternion_from_json([1, 2, 3, 4]) == q(1, 2, 3, 4)


@pytest.mark.parametrize("bad", [[1, 2, 3], "x", [1, 2, 3, "4"], [True, 0, 0, 0], {"t": 1}])
def test_bad_quaternions(bad):
    with pytest.raises(ValueError):
        jsonio.quaternion_from_json(bad)


def test_nonfinite_rejected():
    with pytest.raises(ValueError):
        jsonio.quaternion_from_json([float("nan"), 0, 0, 0])


def test_points():
    pts = jsonio.points_from_json([[0, 0, 0, 0], "inf"], 2)
    assert pts[1] is INF
    with pytest.raises(ValueError):
        jsonio.points_from_json([[0, 0, 0, 0]], 2)
    with pytest.raises(ValueError):
        jsonio.points_from_json({"a": 1})


def test_matrix_roundtrip():
    T = random_moebius(RandomConfig(seed=3))
    m = jsonio.matrix_from_json(roundtrip(jsonio.matrix_to_json(T)))
    assert m == T.matrix
    with pytest.raises(ValueError):
        jsonio.matrix_from_json({"a": [1, 0, 0, 0]})


def test_locus_roundtrip():
    cfg = RandomConfig(seed=4)
    rng = cfg.rng()
    loci = [PointLocus(I), PointLocus(INF), SphereK(ONE, 2.0, 3)]
    loci += [random_locus(k, cfg, rng, affine_fraction=f) for k in (1, 2, 3) for f in (0.0, 1.0)]
    for L in loci:
        back = jsonio.locus_from_json(roundtrip(jsonio.locus_to_json(L)))
        assert loci_isclose(back, L, tol=1e-14)
        if isinstance(L, AffineSubspace):
            assert back.extended == L.extended


def test_locus_schema():
    doc = jsonio.locus_to_json(SphereK(ONE, 1.0, 1, AffineSubspace.spanning(ONE, [J, K], False)))
    assert doc["kind"] == "sphere" and doc["dim"] == 1 and doc["extended"] is False
    assert set(doc["carrier"]) == {"base", "basis"}
    assert jsonio.locus_to_json(PointLocus(INF)) == {"kind": "point", "center": "inf", "dim": 0}
    with pytest.raises(ValueError):
        jsonio.locus_from_json({"kind": "blob"})
    with pytest.raises(ValueError):
        jsonio.locus_from_json({"kind": "affine", "dim": 2, "carrier": {"base": [0, 0, 0, 0], "basis": [[0, 1, 0, 0]]}})
