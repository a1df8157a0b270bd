"""Constructing transformations with prescribed values at 3, 4 or 5 points.

Every solver works in the normalized chart: both configurations are moved
so that their first three points become ``0, 1, inf``.  There the only
freedom left is a conjugation ``q -> a q a^-1``, i.e. a rotation of the
imaginary 3-space, and the remaining points are the cross-ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.spatial.transform import Rotation as ScipyRotation

from .crossratio import check_distinct, cross_ratio, invariant_of
from .errors import DegenerateInput, Infeasible, InvariantMismatch, NormMismatch, ZeroVector
from .moebius import MatGL2H, Moebius
from .quaternion import (
    ONE,
    ZERO,
    Quaternion,
    Rotation3,
    as_ext,
    commutes,
    im,
    inv,
    is_inf,
    mul,
    norm,
)
from .tolerance import resolve


def normalize_to_standard(q1, q2, q3, tol=None) -> Moebius:
    """The map ``q -> Q(q1, q2, q3, q)``, sending q1, q2, q3 to 0, 1, inf.

    When one of the points is infinity the matching limit of the
    cross-ratio is realized directly, so ``N(q4) == cross_ratio(q1, .., q4)``
    holds for every input.
    """
    q1, q2, q3 = (as_ext(q) for q in (q1, q2, q3))
    check_distinct([q1, q2, q3], tol)
    if is_inf(q1):
        w = inv(q2 - q3)
        m = MatGL2H(ZERO, ONE, w, -mul(w, q3))
    elif is_inf(q2):
        m = MatGL2H(ONE, -q1, ONE, -q3)
    elif is_inf(q3):
        u = inv(q2 - q1)
        m = MatGL2H(u, -mul(u, q1), ZERO, ONE)
    else:
        u, w = inv(q2 - q1), inv(q2 - q3)
        m = MatGL2H(u, -mul(u, q1), w, -mul(w, q3))
    return Moebius(m)


def solve_three(src: Sequence, dst: Sequence, tol=None) -> Moebius:
    """A transformation with ``T(src[n]) == dst[n]`` for n = 0, 1, 2."""
    N = normalize_to_standard(*src, tol=tol)
    M = normalize_to_standard(*dst, tol=tol)
    return M.inverse() @ N


def _vec(q: Quaternion) -> np.ndarray:
    return np.array([q.x, q.y, q.z])


def _perpendicular(u: Quaternion) -> Quaternion:
    # Gram-Schmidt against i, then j.
    uv = _vec(u)
    for e in (np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])):
        p = e - e.dot(uv) * uv
        n = np.linalg.norm(p)
        if n > 1e-6:
            return Quaternion.from_vector(p / n)
    raise AssertionError("unreachable for a unit vector")


def _align_units(u: Quaternion, w: Quaternion, tol=None) -> Rotation3:
    """Rotation taking unit imaginary ``u`` to unit imaginary ``w``."""
    s = u + w
    ns = norm(s)
    if u == w:
        return Rotation3.identity()
    if ns > 0.5:
        return Rotation3.from_quaternion(s)
    # Near or exactly antipodal: flip u to -u about a perpendicular p, then
    # the half turn taking -u to w; for w = -u this is a half turn about u p.
    p = _perpendicular(u)
    return Rotation3.from_quaternion(mul(w - u, p))


def align_vector(v: Quaternion, w: Quaternion, tol=None) -> Rotation3:
    """A rotation of the imaginary 3-space taking ``Im v`` to ``Im w``.

    The generic construction conjugates by ``v/|v| + w/|w|`` (a half turn
    about the bisector); equal directions give the identity.
    """
    pol = resolve(tol)
    v, w = im(v), im(w)
    nv, nw = norm(v), norm(w)
    if nv <= pol.abs or nw <= pol.abs:
        raise ZeroVector("cannot align a zero vector")
    if not pol.close(abs(nv - nw), max(nv, nw)):
        raise NormMismatch(f"|v| = {nv:.17g} but |w| = {nw:.17g}")
    return _align_units(v / nv, w / nw, tol)


def matrix_to_rotation(m: np.ndarray) -> Rotation3:
    """Unit quaternion of a 3x3 rotation matrix."""
    x, y, z, w = ScipyRotation.from_matrix(np.asarray(m, dtype=float)).as_quat()
    return Rotation3.from_quaternion(Quaternion(float(w), float(x), float(y), float(z)))


def _frame(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    e1 = a / np.linalg.norm(a)
    e2 = b - b.dot(e1) * e1
    e2 /= np.linalg.norm(e2)
    return np.column_stack([e1, e2, np.cross(e1, e2)])


def _align_two(v1, v2, w1, w2, method: str, scale: float, tol=None) -> Rotation3:
    """Feasibility is assumed; handles zero and collinear inputs."""
    pol = resolve(tol)
    n1, n2, m1, m2 = norm(v1), norm(v2), norm(w1), norm(w2)
    small = lambda n: pol.close(n, scale)  # noqa: E731
    if small(n1) or small(m1):
        if small(n2) or small(m2):
            return Rotation3.identity()
        return _align_units(v2 / n2, w2 / m2, tol)
    first = _align_units(v1 / n1, w1 / m1, tol)
    if small(n2) or small(m2):
        return first
    cross = np.cross(_vec(v1), _vec(v2))
    if pol.close(float(np.linalg.norm(cross)), n1 * n2):
        return first
    if method == "frame":
        E = _frame(_vec(v1), _vec(v2))
        F = _frame(_vec(w1), _vec(w2))
        return matrix_to_rotation(F @ E.T)
    if method == "twist":
        axis = _vec(w1) / m1
        r = _vec(first.rotate(v2))
        r_perp = r - r.dot(axis) * axis
        t_perp = _vec(w2) - _vec(w2).dot(axis) * axis
        angle = math.atan2(axis.dot(np.cross(r_perp, t_perp)), r_perp.dot(t_perp))
        return Rotation3.about_axis(Quaternion.from_vector(axis), angle).compose(first)
    raise ValueError(f"unknown method {method!r}")


def align_two_vectors(v1, v2, w1, w2, method: str = "frame", tol=None) -> Rotation3:
    """The rotation with ``R(v1) = w1`` and ``R(v2) = w2`` (imaginary parts).

    Exists iff ``|v1| = |w1|``, ``|v2| = |w2|`` and ``|v1 - v2| = |w1 - w2|``.
    ``method="frame"`` transports orthonormal frames; ``method="twist"``
    aligns the first pair and then turns about ``w1``.
    """
    pol = resolve(tol)
    v1, v2, w1, w2 = (im(q) for q in (v1, v2, w1, w2))
    scale = max(norm(v1), norm(v2), norm(w1), norm(w2))
    checks = [
        ("|v1| = |w1|", norm(v1), norm(w1)),
        ("|v2| = |w2|", norm(v2), norm(w2)),
        ("|v1 - v2| = |w1 - w2|", norm(v1 - v2), norm(w1 - w2)),
    ]
    for label, lhs, rhs in checks:
        if not pol.close(abs(lhs - rhs), scale):
            raise Infeasible(f"{label} fails: {lhs:.17g} vs {rhs:.17g}")
    return _align_two(v1, v2, w1, w2, method, scale, tol)


def _conjugation(r: Rotation3) -> Moebius:
    return Moebius.conjugation(r.unit)


def _check_invariants(pairs, tol) -> None:
    """``pairs``: (Q, Q') tuples that must share norm and real part."""
    pol = resolve(tol)
    for kind in ("norm", "real_part"):
        for Q, Qp in pairs:
            s, sp = invariant_of(Q), invariant_of(Qp)
            scale = max(s.norm, sp.norm)
            lhs, rhs = (s.norm, sp.norm) if kind == "norm" else (s.re, sp.re)
            if not pol.close(abs(lhs - rhs), scale):
                raise InvariantMismatch(
                    f"{kind} of cross-ratio differs: {lhs:.17g} vs {rhs:.17g}", reason=kind
                )


@dataclass(frozen=True)
class FourPointSolution:
    """One solution of a four point problem plus its residual freedom.

    Every solution is ``member(angle)`` for some angle: the base map
    followed, in the normalized target chart, by a rotation about ``axis``.
    When the cross-ratio is real (``degenerate``) the freedom is the full
    rotation group, ``axis`` is zero and ``member`` needs an explicit axis.
    """

    base: Moebius
    axis: Quaternion
    degenerate: bool = False
    _source_chart: Moebius = field(default=None, repr=False, compare=False)
    _target_chart: Moebius = field(default=None, repr=False, compare=False)
    _rotation: Rotation3 = field(default=None, repr=False, compare=False)

    def member(self, angle: float, axis: Quaternion | None = None) -> Moebius:
        if axis is None:
            if self.degenerate:
                raise ValueError("degenerate solution: pass an explicit axis")
            axis = self.axis
        twist = Rotation3.about_axis(axis, angle).compose(self._rotation)
        return self._target_chart.inverse() @ _conjugation(twist) @ self._source_chart


def solve_four(src: Sequence, dst: Sequence, tol=None) -> FourPointSolution:
    src = [as_ext(q) for q in src]
    dst = [as_ext(q) for q in dst]
    Q = cross_ratio(*src, tol=tol)
    Qp = cross_ratio(*dst, tol=tol)
    _check_invariants([(Q, Qp)], tol)
    N = normalize_to_standard(*src[:3], tol=tol)
    M = normalize_to_standard(*dst[:3], tol=tol)
    pol = resolve(tol)
    v, w = im(Q), im(Qp)
    scale = max(norm(Q), norm(Qp))
    if pol.close(norm(v), scale) or pol.close(norm(w), scale):
        r = Rotation3.identity()
        axis, degenerate = ZERO, True
    else:
        r = _align_units(v / norm(v), w / norm(w), tol)
        axis, degenerate = w / norm(w), False
    base = M.inverse() @ _conjugation(r) @ N
    return FourPointSolution(base, axis, degenerate, N, M, r)


@dataclass(frozen=True)
class FivePointSolution:
    map: Moebius
    unique: bool


def five_point_cross_ratios(points: Sequence, tol=None) -> tuple[Quaternion, Quaternion]:
    """``Q(q1, q2, q3, q4)`` and ``Q(q1, q2, q3, q5)``."""
    p = [as_ext(q) for q in points]
    if len(p) != 5:
        raise ValueError("need exactly five points")
    check_distinct(p, tol)
    Q4 = cross_ratio(p[0], p[1], p[2], p[3], tol=tol)
    Q5 = cross_ratio(p[0], p[1], p[2], p[4], tol=tol)
    if is_inf(Q4) or is_inf(Q5):
        raise DegenerateInput("infinite cross-ratio")
    return Q4, Q5


def solve_five(src: Sequence, dst: Sequence, method: str = "frame", tol=None) -> FivePointSolution:
    """The transformation with ``T(src[n]) == dst[n]`` for all five points.

    Feasible iff the two pairs of cross-ratios share norms, real parts and
    mutual distance.  ``unique`` is False when the sources lie on a common
    2-sphere or 2-plane; the returned map is then one of many.
    """
    src = [as_ext(q) for q in src]
    dst = [as_ext(q) for q in dst]
    Q4, Q5 = five_point_cross_ratios(src, tol)
    P4, P5 = five_point_cross_ratios(dst, tol)
    _check_invariants([(Q4, P4), (Q5, P5)], tol)
    pol = resolve(tol)
    scale = max(norm(Q4), norm(Q5), norm(P4), norm(P5))
    lhs, rhs = norm(Q4 - Q5), norm(P4 - P5)
    if not pol.close(abs(lhs - rhs), scale):
        raise InvariantMismatch(
            f"|Q4 - Q5| differs: {lhs:.17g} vs {rhs:.17g}", reason="distance"
        )
    r = _align_two(im(Q4), im(Q5), im(P4), im(P5), method, scale, tol)
    N = normalize_to_standard(*src[:3], tol=tol)
    M = normalize_to_standard(*dst[:3], tol=tol)
    T = M.inverse() @ _conjugation(r) @ N
    return FivePointSolution(T, not commutes(Q4, Q5, tol))
