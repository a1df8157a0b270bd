"""Spheres and affine subspaces of R^4, and loci cut out by cross-ratio conditions.

Points of H are treated as vectors of R^4 with coordinates ``(t, x, y, z)``.
A :class:`SphereK` of dimension k lives in an affine carrier of dimension
k + 1 (the whole space when k = 3).  An :class:`AffineSubspace` with
``extended=True`` also contains infinity, which is how planes and lines
appear as Moebius images of spheres.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from statistics import NormalDist
from typing import Sequence, Union

import numpy as np

from .correspondence import (
    _align_units,
    _check_invariants,
    five_point_cross_ratios,
    normalize_to_standard,
)
from .crossratio import check_distinct, cross_ratio
from .errors import DegenerateInput, FitFailure, HypothesisViolation
from .moebius import Moebius
from .quaternion import (
    INF,
    ExtQuaternion,
    Quaternion,
    as_ext,
    as_quaternion,
    commutator,
    commutes,
    im,
    inv,
    is_inf,
    is_real,
    mul,
    norm,
)
from .tolerance import resolve

RANK_THRESHOLD = 1e-8
MAP_VALIDATION_TOL = 1e-7
N_VALIDATION = 20

_GAUSS = NormalDist()

__all__ = [
    "AffineSubspace", "SphereK", "PointLocus", "Locus", "contains", "kind", "loci_isclose",
    "is_cocircular", "is_cospherical5", "commutator", "fit_sphere", "locus_points", "map_locus",
    "apollonius", "norm_level_set", "locus_fourth", "locus_fifth",
]


def _arr(q) -> np.ndarray:
    return as_quaternion(q).to_array()


def _q(v: np.ndarray) -> Quaternion:
    return Quaternion.from_array(v)


@dataclass(frozen=True)
class AffineSubspace:
    """``base + span(basis)`` in R^4, with an orthonormal basis of 1 to 3 vectors."""

    base: Quaternion
    basis: tuple[Quaternion, ...]
    extended: bool = True

    def __post_init__(self):
        object.__setattr__(self, "base", as_quaternion(self.base))
        object.__setattr__(self, "basis", tuple(as_quaternion(b) for b in self.basis))
        B = self.basis_matrix()
        if not 1 <= B.shape[1] <= 3:
            raise ValueError("affine subspaces here have dimension 1, 2 or 3")
        if np.abs(B.T @ B - np.eye(B.shape[1])).max() > 1e-12:
            raise ValueError("basis is not orthonormal")

    @classmethod
    def spanning(cls, point, directions, extended: bool = True) -> "AffineSubspace":
        """Orthonormalize ``directions`` and move the base to the foot from 0."""
        D = np.column_stack([_arr(d) for d in directions])
        Qm, R = np.linalg.qr(D)
        if np.min(np.abs(np.diag(R))) <= 1e-12 * max(1.0, np.abs(R).max()):
            raise DegenerateInput("directions are linearly dependent")
        # Gram-Schmidt orientation: the first basis vector points along the first direction
        Qm = Qm * np.where(np.diag(R) < 0, -1.0, 1.0)
        p = _arr(point)
        foot = p - Qm @ (Qm.T @ p)
        return cls(_q(foot), tuple(_q(c) for c in Qm.T), extended)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> np.ndarray:
        return np.column_stack([b.to_array() for b in self.basis])

    def projector(self) -> np.ndarray:
        B = self.basis_matrix()
        return B @ B.T

    def distance(self, p) -> float:
        if is_inf(p):
            return 0.0 if self.extended else math.inf
        d = _arr(p) - self.base.to_array()
        B = self.basis_matrix()
        return float(np.linalg.norm(d - B @ (B.T @ d)))

    def residual(self, p) -> float:
        return _relative(self.distance(p), p)

    def contains(self, p, tol: float = 1e-9) -> bool:
        return self.residual(p) <= tol


@dataclass(frozen=True)
class SphereK:
    """A k-sphere: points of ``carrier`` at distance ``radius`` from ``center``."""

    center: Quaternion
    radius: float
    dim: int
    carrier: AffineSubspace | None = None

    def __post_init__(self):
        object.__setattr__(self, "center", as_quaternion(self.center))
        if self.dim not in (1, 2, 3):
            raise ValueError("sphere dimension must be 1, 2 or 3")
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.dim == 3:
            object.__setattr__(self, "carrier", None)
        elif self.carrier is None or self.carrier.dim != self.dim + 1:
            raise ValueError(f"a {self.dim}-sphere needs a {self.dim + 1}-dimensional carrier")

    def carrier_matrix(self) -> np.ndarray:
        return np.eye(4) if self.carrier is None else self.carrier.basis_matrix()

    def distance(self, p) -> float:
        if is_inf(p):
            return math.inf
        d = _arr(p) - self.center.to_array()
        B = self.carrier_matrix()
        par = B.T @ d
        perp = d - B @ par
        return float(math.hypot(np.linalg.norm(perp), np.linalg.norm(par) - self.radius))

    def residual(self, p) -> float:
        return _relative(self.distance(p), p)

    def contains(self, p, tol: float = 1e-9) -> bool:
        return self.residual(p) <= tol


@dataclass(frozen=True)
class PointLocus:
    point: ExtQuaternion

    dim = 0

    def distance(self, p) -> float:
        if is_inf(p) or is_inf(self.point):
            return 0.0 if (is_inf(p) and is_inf(self.point)) else math.inf
        return norm(as_quaternion(p) - self.point)

    def residual(self, p) -> float:
        return _relative(self.distance(p), p)

    def contains(self, p, tol: float = 1e-9) -> bool:
        return self.residual(p) <= tol


Locus = Union[PointLocus, SphereK, AffineSubspace]


def _relative(dist: float, p) -> float:
    if dist == 0.0 or math.isinf(dist):
        return dist
    return dist / max(1.0, norm(as_quaternion(p)))


def contains(L: Locus, p, tol: float = 1e-9) -> bool:
    """Membership with residual ``distance / max(1, |p|) <= tol``."""
    return L.contains(as_ext(p), tol)


def kind(L: Locus) -> str:
    if isinstance(L, PointLocus):
        return "point"
    if isinstance(L, SphereK):
        return "sphere"
    return "affine"


def loci_isclose(L1: Locus, L2: Locus, tol: float = 1e-8) -> bool:
    """Geometric equality; the ``extended`` flag of affine loci is ignored."""
    if kind(L1) != kind(L2) or L1.dim != L2.dim:
        return False
    if isinstance(L1, PointLocus):
        if is_inf(L1.point) or is_inf(L2.point):
            return is_inf(L1.point) and is_inf(L2.point)
        return L2.residual(L1.point) <= tol
    if isinstance(L1, SphereK):
        scale = max(1.0, L1.radius, L2.radius)
        if norm(L1.center - L2.center) > tol * scale or abs(L1.radius - L2.radius) > tol * scale:
            return False
        if L1.carrier is None:
            return True
        return bool(np.abs(L1.carrier.projector() - L2.carrier.projector()).max() <= tol)
    if np.abs(L1.projector() - L2.projector()).max() > tol:
        return False
    return L2.residual(L1.base) <= tol


def is_cocircular(q1, q2, q3, q4, tol=None) -> bool:
    """Four points lie on one circle or line iff their cross-ratio is real."""
    return is_real(cross_ratio(q1, q2, q3, q4, tol=tol), tol)


def is_cospherical5(q1, q2, q3, q4, q5, tol=None) -> bool:
    """Five points lie on one 2-sphere or 2-plane iff Q(1,2,3,4) and Q(1,2,3,5) commute."""
    Q4, Q5 = five_point_cross_ratios([q1, q2, q3, q4, q5], tol)
    return commutes(Q4, Q5, tol)


def _affine_hull(P: np.ndarray):
    """Affine hull of the rows of ``P``: base point, orthonormal directions, rank."""
    p0 = P[0]
    D = P[1:] - p0
    _, s, vt = np.linalg.svd(D, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        raise DegenerateInput("points coincide")
    rank = int(np.sum(s > RANK_THRESHOLD * s[0]))
    return p0, vt[:rank].T, rank


def _flat(base: np.ndarray, B: np.ndarray, extended: bool = True) -> AffineSubspace:
    foot = base - B @ (B.T @ base)
    return AffineSubspace(_q(foot), tuple(_q(c) for c in B.T), extended)


def fit_sphere(points: Sequence, k: int) -> Locus:
    """The k-sphere, or k-dimensional affine subspace, through ``points``.

    Needs at least k + 2 points.  If they span a (k + 1)-dimensional hull
    the circumsphere inside that hull is returned (least squares when
    there are more than k + 2 points); if they span only k dimensions the
    affine subspace they span is returned.
    """
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    pts = [as_ext(p) for p in points]
    if any(is_inf(p) for p in pts):
        raise DegenerateInput("cannot fit through infinity")
    P = np.array([p.to_array() for p in pts])
    if len(P) < k + 2:
        raise DegenerateInput(f"need at least {k + 2} points for a {k}-sphere")
    p0, B, rank = _affine_hull(P)
    if rank < k:
        raise DegenerateInput(f"points span only {rank} dimensions")
    if rank > k + 1:
        raise FitFailure(f"points span {rank} dimensions, too many for a {k}-sphere")
    if rank == k:
        return _flat(p0, B)
    Y = (P[1:] - p0) @ B
    rhs = 0.5 * np.sum((P[1:] - p0) ** 2, axis=1)
    y, *_ = np.linalg.lstsq(Y, rhs, rcond=None)
    c = p0 + B @ y
    radius = float(np.mean(np.linalg.norm(P - c, axis=1)))
    carrier = None if k == 3 else AffineSubspace(_q(c), tuple(_q(col) for col in B.T), False)
    return SphereK(_q(c), radius, k, carrier)


def _fit_flat(points: Sequence[Quaternion], k: int) -> AffineSubspace:
    P = np.array([p.to_array() for p in points])
    c = P.mean(axis=0)
    _, _, vt = np.linalg.svd(P - c, full_matrices=False)
    return _flat(c, vt[:k].T)


def _golden(n: int, d: int, offset: int = 0) -> np.ndarray:
    """``n`` points of the d-dimensional golden-ratio (Kronecker) sequence in (0, 1)^d."""
    phi = 2.0
    for _ in range(64):
        phi = (1.0 + phi) ** (1.0 / (d + 1))
    alpha = np.array([phi ** -(m + 1) for m in range(d)])
    idx = np.arange(offset + 1, offset + n + 1)[:, None]
    return (0.5 + idx * alpha) % 1.0


def locus_points(L: Locus, n: int, offset: int = 0) -> list[Quaternion]:
    """Deterministic, well spread points on a sphere or affine subspace."""
    if isinstance(L, PointLocus):
        return [L.point] * n
    if isinstance(L, SphereK):
        B = L.carrier_matrix()
        u = _golden(n, B.shape[1], offset)
        g = np.vectorize(_GAUSS.inv_cdf)(np.clip(u, 1e-12, 1 - 1e-12))
        g /= np.linalg.norm(g, axis=1, keepdims=True)
        c = L.center.to_array()
        return [_q(c + L.radius * (B @ row)) for row in g]
    B = L.basis_matrix()
    u = 4.0 * _golden(n, B.shape[1], offset) - 2.0
    b = L.base.to_array()
    return [_q(b + B @ row) for row in u]


def _locus_scale(L: Locus) -> float:
    return L.radius if isinstance(L, SphereK) else 1.0


def map_locus(T: Moebius, L: Locus, tol: float = MAP_VALIDATION_TOL) -> Locus:
    """Image of a k-sphere or k-plane under ``T``; k is preserved.

    The image is a plane exactly when ``L`` passes through the pole of
    ``T``.  It is found by mapping k + 2 sample points and fitting, then
    checked against 20 further samples (``FitFailure`` beyond ``tol``).
    Maps without a finite pole are similarities and are applied exactly.
    """
    if isinstance(L, PointLocus):
        return PointLocus(T.apply(L.point))
    if isinstance(L, AffineSubspace) and not L.extended:
        L = replace(L, extended=True)
    if T.pole() is INF:
        return _map_similarity(T, L)
    k = L.dim
    pole = T.pole()
    pol = resolve(None)
    through_inf = L.residual(pole) <= max(pol.abs, pol.rel)
    keep_away = 0.05 * _locus_scale(L)

    def usable(p):
        return is_inf(pole) or norm(p - pole) > keep_away

    def images(count, offset):
        out, m = [], offset
        while len(out) < count:
            batch = [p for p in locus_points(L, count, m) if usable(p)]
            m += count
            for p in batch:
                img = T.apply(p)
                if not is_inf(img):
                    out.append(img)
            if m - offset > 1000 * count:
                raise FitFailure("could not sample the locus away from the pole")
        return out[:count]

    fit_pts = images(k + 2, 0)
    if through_inf:
        result = _fit_flat(fit_pts, k)
    else:
        result = fit_sphere(fit_pts, k)
    checks = images(N_VALIDATION, 10_000)
    if isinstance(L, AffineSubspace) and not through_inf:
        checks.append(T.apply(INF))
    worst = max(result.residual(p) for p in checks)
    if worst > tol:
        raise FitFailure(f"image does not fit a {k}-dimensional locus (residual {worst:.3g})")
    return result


def _map_similarity(T: Moebius, L: Locus) -> Locus:
    # c = 0: q -> a q d^-1 + b d^-1 is a similarity, map the data exactly.
    a, _, _, d = T.matrix.entries()
    dinv = inv(d)
    factor = norm(a) * norm(dinv)

    def lin(v):
        return mul(mul(a, v), dinv) / factor

    def carrier(A: AffineSubspace, through, extended) -> AffineSubspace:
        return AffineSubspace.spanning(through, [lin(b) for b in A.basis], extended)

    if isinstance(L, SphereK):
        c = T.apply(L.center)
        C = None if L.carrier is None else carrier(L.carrier, c, False)
        return SphereK(c, L.radius * factor, L.dim, C)
    return carrier(L, T.apply(L.base), L.extended)


def apollonius(p1, p2, A: float) -> Locus:
    """``{s : |s - p1|^2 = A |s - p2|^2}``: a 3-plane when A = 1, else a 3-sphere."""
    p1, p2 = as_quaternion(p1), as_quaternion(p2)
    if not A > 0:
        raise ValueError("A must be positive")
    gap = norm(p1 - p2)
    if resolve(None).close(gap, max(norm(p1), norm(p2))):
        raise DegenerateInput("p1 and p2 coincide")
    if A == 1.0:
        n = (p2 - p1).to_array() / gap
        mid = 0.5 * (p1 + p2).to_array()
        _, _, vt = np.linalg.svd(n[None, :])
        return _flat(mid, vt[1:].T, extended=False)
    center = (p1 - A * p2) / (1.0 - A)
    radius = math.sqrt(A) * gap / abs(1.0 - A)
    return SphereK(center, radius, 3)


def norm_level_set(q1, q2, q3, N: float, tol=None) -> Locus:
    """``{q in H : |Q(q1, q2, q3, q)| = N}``, a 3-sphere or a 3-plane."""
    q1, q2, q3 = (as_ext(q) for q in (q1, q2, q3))
    check_distinct([q1, q2, q3], tol)
    if not N > 0:
        raise ValueError("N must be positive")
    if is_inf(q3):
        return SphereK(q1, N * norm(q2 - q1), 3)
    if is_inf(q1):
        return SphereK(q3, norm(q2 - q3) / N, 3)
    if is_inf(q2):
        return apollonius(q1, q3, N * N)
    A = (N * norm(q2 - q1) / norm(q2 - q3)) ** 2
    return apollonius(q1, q3, A)


def _imaginary_carrier(center: Quaternion) -> AffineSubspace:
    return AffineSubspace(Quaternion(center.t), (Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)))


def locus_fourth(src: Sequence, dst3: Sequence, tol=None) -> Locus:
    """All images of ``src[3]`` under maps sending ``src[:3]`` to ``dst3``.

    A single point when the cross-ratio of ``src`` is real, otherwise the
    image of the conjugacy sphere ``{p : Re p = Re Q, |p| = |Q|}``.
    """
    src = [as_ext(q) for q in src]
    Q = cross_ratio(*src, tol=tol)
    back = normalize_to_standard(*dst3, tol=tol).inverse()
    if is_real(Q, tol):
        return PointLocus(back.apply(Quaternion(Q.t)))
    sphere = SphereK(Quaternion(Q.t), norm(im(Q)), 2, _imaginary_carrier(Q))
    return map_locus(back, sphere)


def locus_fifth(src: Sequence, dst4: Sequence, tol=None) -> Locus:
    """All images of ``src[4]`` under maps sending ``src[:4]`` to ``dst4``.

    Requires matching invariants for the first four points and a non-real
    ``Q(src[:4])``.  The result is a circle or line, collapsing to a point when
    the two source cross-ratios commute.
    """
    src = [as_ext(q) for q in src]
    dst4 = [as_ext(q) for q in dst4]
    Q4, Q5 = five_point_cross_ratios(src, tol)
    P4 = cross_ratio(*dst4, tol=tol)
    _check_invariants([(Q4, P4)], tol)
    if is_real(Q4, tol):
        raise HypothesisViolation("the first four points are cocircular")
    pol = resolve(tol)
    back = normalize_to_standard(*dst4[:3], tol=tol).inverse()
    if is_real(P4, tol):
        raise HypothesisViolation("the target cross-ratio is real")
    r0 = _align_units(im(Q4) / norm(im(Q4)), im(P4) / norm(im(P4)), tol)
    u = (im(P4) / norm(im(P4))).to_array()
    v = r0.rotate(im(Q5)).to_array()
    on_axis = v.dot(u) * u
    spoke = v - on_axis
    rho = float(np.linalg.norm(spoke))
    if pol.close(rho, norm(Q5)):
        return PointLocus(back.apply(Quaternion(Q5.t) + _q(v)))
    e1 = spoke / rho
    e2 = np.concatenate([[0.0], np.cross(u[1:], e1[1:])])
    center = Quaternion(Q5.t) + _q(on_axis)
    circle = SphereK(center, rho, 1, AffineSubspace.spanning(center, [_q(e1), _q(e2)], False))
    return map_locus(back, circle)
