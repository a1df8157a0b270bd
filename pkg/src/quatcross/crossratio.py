"""The quaternionic cross-ratio and its Moebius invariants.

For four distinct finite points::

    Q(q1, q2, q3, q4) = (q2 - q1)^-1 (q4 - q1) (q4 - q3)^-1 (q2 - q3)

One point may be infinity; the value is then the limit as that point runs
off to infinity.  Three of the four limits are direction independent.  The
limit in the second slot is only defined up to conjugation, and we take it
along the positive real axis, which gives ``(q4 - q1)(q4 - q3)^-1``; its
norm and real part do not depend on that choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import DegenerateInput, DuplicatePoints, InfiniteCrossRatio
from .moebius import Moebius, _negligible
from .quaternion import (
    ExtQuaternion,
    Quaternion,
    as_ext,
    inv,
    is_inf,
    isclose,
    mul,
    norm,
)
from .tolerance import resolve


@dataclass(frozen=True)
class CrossRatioInvariant:
    """``(|Q|, Re Q)``; two quadruples are Moebius-equivalent iff these agree."""

    norm: float
    re: float

    def isclose(self, other: "CrossRatioInvariant", tol=None) -> bool:
        pol = resolve(tol)
        scale = max(self.norm, other.norm)
        return pol.close(abs(self.norm - other.norm), scale) and pol.close(
            abs(self.re - other.re), scale
        )

    def as_complex(self) -> complex:
        """``Re Q + i |Im Q|``, the complex form (defined up to conjugation)."""
        imag = max(self.norm**2 - self.re**2, 0.0) ** 0.5
        return complex(self.re, imag)


def check_distinct(points: Sequence[ExtQuaternion], tol=None) -> None:
    for (m, p), (n, q) in combinations(enumerate(points), 2):
        if isclose(p, q, tol):
            raise DuplicatePoints(f"points {m + 1} and {n + 1} coincide")


def cross_ratio(q1, q2, q3, q4, tol=None) -> ExtQuaternion:
    pts = [as_ext(q) for q in (q1, q2, q3, q4)]
    check_distinct(pts, tol)
    q1, q2, q3, q4 = pts
    if is_inf(q1):
        return mul(inv(q4 - q3), q2 - q3)
    if is_inf(q2):
        return mul(q4 - q1, inv(q4 - q3))
    if is_inf(q3):
        return mul(inv(q2 - q1), q4 - q1)
    if is_inf(q4):
        return mul(inv(q2 - q1), q2 - q3)
    return mul(mul(mul(inv(q2 - q1), q4 - q1), inv(q4 - q3)), q2 - q3)


def r_invariant(q1, q2, q3, q4, tol=None) -> CrossRatioInvariant:
    Q = cross_ratio(q1, q2, q3, q4, tol)
    if is_inf(Q):
        raise InfiniteCrossRatio("cross-ratio is infinite")
    return invariant_of(Q)


def invariant_of(Q: Quaternion) -> CrossRatioInvariant:
    n = norm(Q)
    # |Re Q| <= |Q| can fail by one ulp after the square root.
    return CrossRatioInvariant(n, max(-n, min(n, Q.t)))


def conjugator_identity_residual(T: Moebius, q1, q2, q3, q4, tol=None) -> float:
    """``|Q(T q1, .., T q4) - u Q(q1, .., q4) u^-1|`` with ``u = c q2 + d``."""
    pts = [as_ext(q) for q in (q1, q2, q3, q4)]
    if is_inf(pts[1]):
        raise DegenerateInput("second point must be finite")
    a, b, c, d = T.matrix.entries()
    q2 = pts[1]
    u = mul(c, q2) + d
    if _negligible(norm(u), max(norm(c) * norm(q2), norm(d)), tol):
        raise DegenerateInput("c q2 + d vanishes")
    images = [T.apply(p, tol) for p in pts]
    lhs = cross_ratio(*images, tol=tol)
    rhs = cross_ratio(*pts, tol=tol)
    if is_inf(lhs) or is_inf(rhs):
        raise DegenerateInput("infinite cross-ratio")
    return norm(lhs - mul(mul(u, rhs), inv(u)))


def _finite(points) -> list[Quaternion]:
    out = []
    for p in points:
        p = as_ext(p)
        if is_inf(p):
            raise DegenerateInput("chain invariants take finite points only")
        out.append(p)
    return out


def _chain(points: list[Quaternion], pairs, tol) -> Quaternion:
    result = Quaternion(1.0)
    for m, n, invert in pairs:
        diff = points[m] - points[n]
        if isclose(points[m], points[n], tol):
            raise DuplicatePoints(f"points {m + 1} and {n + 1} coincide")
        result = mul(result, inv(diff) if invert else diff)
    return result


def chain_invariant(points, tol=None) -> Quaternion:
    """``(q1 - q2)(q2 - q3)^-1 (q3 - q4)(q4 - q5)^-1 ... (q_2n-1 - q_2n)(q_2n - q1)^-1``.

    Norm and real part are Moebius invariant.  Only cyclically consecutive
    points need to differ.
    """
    pts = _finite(points)
    if len(pts) < 4 or len(pts) % 2:
        raise ValueError("need an even number (>= 4) of points")
    n = len(pts)
    pairs = [(m, (m + 1) % n, m % 2 == 1) for m in range(n)]
    return _chain(pts, pairs, tol)


def five_point_chain(q1, q2, q3, q4, q5, tol=None) -> Quaternion:
    """``(q1 - q2)(q2 - q3)^-1 (q3 - q4)(q4 - q5)^-1 (q5 - q3)(q3 - q1)^-1``.

    The six point chain with the third point repeated in sixth position.
    """
    pts = _finite([q1, q2, q3, q4, q5])
    pairs = [(0, 1, False), (1, 2, True), (2, 3, False), (3, 4, True), (4, 2, False), (2, 0, True)]
    return _chain(pts, pairs, tol)

