"""JSON encodings of the library's value types.

* quaternion: ``[t, x, y, z]``; the point at infinity: ``"inf"``
* matrix: ``{"a": q, "b": q, "c": q, "d": q}``
* locus: ``{"kind": "point"|"sphere"|"affine", "center", "radius", "dim",
  "carrier": {"base", "basis"}, "extended"}`` (keys that do not apply to a
  kind are omitted)
"""

from __future__ import annotations

import math

from .geometry import AffineSubspace, Locus, PointLocus, SphereK
from .moebius import MatGL2H, Moebius
from .quaternion import INF, ExtQuaternion, Quaternion, is_inf


def quaternion_to_json(q: Quaternion) -> list[float]:
    return [float(c) for c in q]


def quaternion_from_json(value) -> Quaternion:
    if not isinstance(value, list) or len(value) != 4:
        raise ValueError(f"a quaternion is an array of 4 numbers, got {value!r}")
    if not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in value):
        raise ValueError(f"quaternion components must be numbers, got {value!r}")
    if not all(math.isfinite(c) for c in value):
        raise ValueError("quaternion components must be finite")
    return Quaternion.from_array(value)


def ext_to_json(q: ExtQuaternion):
    return "inf" if is_inf(q) else quaternion_to_json(q)


def ext_from_json(value) -> ExtQuaternion:
    if value == "inf":
        return INF
    return quaternion_from_json(value)


def points_from_json(value, count: int | None = None) -> list[ExtQuaternion]:
    if not isinstance(value, list):
        raise ValueError("expected an array of points")
    if count is not None and len(value) != count:
        raise ValueError(f"expected {count} points, got {len(value)}")
    return [ext_from_json(v) for v in value]


def matrix_to_json(m) -> dict:
    if isinstance(m, Moebius):
        m = m.matrix
    return {name: quaternion_to_json(q) for name, q in zip("abcd", m.entries())}


def matrix_from_json(value) -> MatGL2H:
    if not isinstance(value, dict) or set(value) != set("abcd"):
        raise ValueError('a matrix is {"a": .., "b": .., "c": .., "d": ..}')
    return MatGL2H(*(quaternion_from_json(value[n]) for n in "abcd"))


def _carrier_to_json(A: AffineSubspace) -> dict:
    return {"base": quaternion_to_json(A.base), "basis": [quaternion_to_json(b) for b in A.basis]}


def _carrier_from_json(value, extended: bool) -> AffineSubspace:
    if not isinstance(value, dict) or "base" not in value or "basis" not in value:
        raise ValueError('a carrier is {"base": q, "basis": [q, ...]}')
    return AffineSubspace.spanning(
        quaternion_from_json(value["base"]),
        [quaternion_from_json(b) for b in value["basis"]],
        extended,
    )


def locus_to_json(L: Locus) -> dict:
    if isinstance(L, PointLocus):
        return {"kind": "point", "center": ext_to_json(L.point), "dim": 0}
    if isinstance(L, SphereK):
        return {
            "kind": "sphere",
            "center": quaternion_to_json(L.center),
            "radius": float(L.radius),
            "dim": L.dim,
            "carrier": None if L.carrier is None else _carrier_to_json(L.carrier),
            "extended": False,
        }
    return {"kind": "affine", "dim": L.dim, "carrier": _carrier_to_json(L), "extended": L.extended}


def locus_from_json(value) -> Locus:
    if not isinstance(value, dict) or "kind" not in value:
        raise ValueError("a locus is an object with a 'kind' key")
    kind = value["kind"]
    if kind == "point":
        return PointLocus(ext_from_json(value["center"]))
    if kind == "sphere":
        dim = int(value["dim"])
        carrier = value.get("carrier")
        return SphereK(
            quaternion_from_json(value["center"]),
            float(value["radius"]),
            dim,
            None if carrier is None else _carrier_from_json(carrier, False),
        )
    if kind == "affine":
        A = _carrier_from_json(value["carrier"], bool(value.get("extended", True)))
        if "dim" in value and int(value["dim"]) != A.dim:
            raise ValueError("dim does not match the carrier basis")
        return A
    raise ValueError(f"unknown locus kind {kind!r}")
