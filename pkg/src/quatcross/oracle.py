"""Independent checking machinery: exact rational quaternions and seeded samplers.

Nothing in the double-precision path depends on this module.  The samplers
draw from explicitly seeded ``numpy.random.Generator`` streams; passing the
same :class:`RandomConfig` gives the same stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import DuplicatePoints, GeneratorExhausted
from .geometry import AffineSubspace, Locus, PointLocus, SphereK, fit_sphere
from .moebius import MatGL2H, Moebius
from .quaternion import Quaternion, Rotation3, is_inf, mul, norm


@dataclass(frozen=True)
class RationalQuaternion:
    t: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    def __init__(self, t=0, x=0, y=0, z=0):
        for name, v in zip("txyz", (t, x, y, z)):
            object.__setattr__(self, name, Fraction(v))

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> "RationalQuaternion":
        # Fraction(float) is exact.
        return cls(q.t, q.x, q.y, q.z)

    def to_quaternion(self) -> Quaternion:
        return Quaternion(float(self.t), float(self.x), float(self.y), float(self.z))

    def __add__(self, o):
        return RationalQuaternion(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o):
        return RationalQuaternion(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)

    def __neg__(self):
        return RationalQuaternion(-self.t, -self.x, -self.y, -self.z)

    def __mul__(self, o):
        if not isinstance(o, RationalQuaternion):
            o = RationalQuaternion(o)
        return RationalQuaternion(
            self.t * o.t - self.x * o.x - self.y * o.y - self.z * o.z,
            self.t * o.x + self.x * o.t + self.y * o.z - self.z * o.y,
            self.t * o.y - self.x * o.z + self.y * o.t + self.z * o.x,
            self.t * o.z + self.x * o.y - self.y * o.x + self.z * o.t,
        )

    def norm2(self) -> Fraction:
        return self.t**2 + self.x**2 + self.y**2 + self.z**2

    def conj(self) -> "RationalQuaternion":
        return RationalQuaternion(self.t, -self.x, -self.y, -self.z)

    def inv(self) -> "RationalQuaternion":
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        c = self.conj()
        return RationalQuaternion(c.t / n, c.x / n, c.y / n, c.z / n)

    def is_zero(self) -> bool:
        return self.norm2() == 0


def rq(t=0, x=0, y=0, z=0) -> RationalQuaternion:
    return RationalQuaternion(t, x, y, z)


def exact_cross_ratio(q1, q2, q3, q4) -> RationalQuaternion:
    """``(q2 - q1)^-1 (q4 - q1)(q4 - q3)^-1 (q2 - q3)`` in exact arithmetic."""
    pts = [p if isinstance(p, RationalQuaternion) else RationalQuaternion.from_quaternion(p) for p in (q1, q2, q3, q4)]
    for (m, p), (n, q) in combinations(enumerate(pts), 2):
        if (p - q).is_zero():
            raise DuplicatePoints(f"points {m + 1} and {n + 1} coincide")
    q1, q2, q3, q4 = pts
    return (q2 - q1).inv() * (q4 - q1) * (q4 - q3).inv() * (q2 - q3)


def exact_chain(points: Sequence[RationalQuaternion], pairs) -> RationalQuaternion:
    """Ordered product of ``(p_m - p_n)`` or its inverse for ``(m, n, invert)`` in ``pairs``."""
    out = RationalQuaternion(1)
    for m, n, invert in pairs:
        d = points[m] - points[n]
        out = out * (d.inv() if invert else d)
    return out


@dataclass(frozen=True)
class RandomConfig:
    seed: int = 0
    scale: float = 1.0
    pole_margin: float = 0.05

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def _stream(cfg: RandomConfig, rng):
    return cfg.rng() if rng is None else rng


def random_quaternion(cfg: RandomConfig, rng=None) -> Quaternion:
    rng = _stream(cfg, rng)
    return Quaternion.from_array(rng.uniform(-cfg.scale, cfg.scale, 4))


def random_points(n: int, cfg: RandomConfig, rng=None) -> list[Quaternion]:
    """``n`` points uniform in the box, pairwise at least ``pole_margin * scale`` apart."""
    rng = _stream(cfg, rng)
    for _ in range(1000):
        pts = [random_quaternion(cfg, rng) for _ in range(n)]
        if all(norm(p - q) >= cfg.pole_margin * cfg.scale for p, q in combinations(pts, 2)):
            return pts
    raise GeneratorExhausted("could not draw well separated points")


def _inverse_condition(m: MatGL2H) -> float:
    s = np.linalg.svd(m.realization(), compute_uv=False)
    return float(s[-1] / s[0])


def random_moebius(cfg: RandomConfig, rng=None) -> Moebius:
    """A random map whose 4x4 realization has inverse condition number above ``pole_margin``."""
    rng = _stream(cfg, rng)
    for _ in range(1000):
        entries = [random_quaternion(cfg, rng) for _ in range(4)]
        try:
            m = MatGL2H(*entries)
        except Exception:
            continue
        if _inverse_condition(m) > cfg.pole_margin:
            return Moebius(m)
    raise GeneratorExhausted("no well conditioned matrix in 1000 draws")


def pole_distance(T: Moebius, q: Quaternion) -> float:
    """``|cq + d|`` relative to ``|c||q| + |d|``; 0 at the pole."""
    _, _, c, d = T.matrix.entries()
    return norm(mul(c, q) + d) / (norm(c) * norm(q) + norm(d))


def random_points_for(T: Moebius, n: int, cfg: RandomConfig, rng=None) -> list[Quaternion]:
    """Separated points whose images under ``T`` are finite and also separated."""
    rng = _stream(cfg, rng)
    for _ in range(1000):
        pts = random_points(n, cfg, rng)
        if min(pole_distance(T, p) for p in pts) < cfg.pole_margin:
            continue
        imgs = [T.apply(p) for p in pts]
        big = max(norm(q) for q in imgs)
        if all(norm(p - q) >= cfg.pole_margin * max(1.0, big) * 1e-2 for p, q in combinations(imgs, 2)):
            return pts
    raise GeneratorExhausted("could not draw points away from the pole")


def random_rotation(rng: np.random.Generator) -> Rotation3:
    return Rotation3.from_quaternion(Quaternion.from_array(rng.normal(size=4)))


def random_unit_imaginary(rng: np.random.Generator) -> Quaternion:
    v = rng.normal(size=3)
    return Quaternion.from_vector(v / np.linalg.norm(v))


def _orthonormal(k: int, rng) -> np.ndarray:
    Qm, _ = np.linalg.qr(rng.normal(size=(4, k)))
    return Qm


def random_affine(k: int, cfg: RandomConfig, rng=None, extended: bool = True) -> AffineSubspace:
    rng = _stream(cfg, rng)
    B = _orthonormal(k, rng)
    return AffineSubspace.spanning(random_quaternion(cfg, rng), [Quaternion.from_array(c) for c in B.T], extended)


def random_sphere(k: int, cfg: RandomConfig, rng=None) -> SphereK:
    rng = _stream(cfg, rng)
    center = random_quaternion(cfg, rng)
    radius = float(rng.uniform(0.5, 1.5) * cfg.scale)
    carrier = None
    if k < 3:
        B = _orthonormal(k + 1, rng)
        carrier = AffineSubspace.spanning(center, [Quaternion.from_array(c) for c in B.T], False)
    return SphereK(center, radius, k, carrier)


def random_locus(k: int, cfg: RandomConfig, rng=None, affine_fraction: float = 0.3) -> Locus:
    rng = _stream(cfg, rng)
    if rng.uniform() < affine_fraction:
        return random_affine(k, cfg, rng)
    return random_sphere(k, cfg, rng)


def sample_locus(L: Locus, n: int, cfg: RandomConfig, rng=None) -> list[Quaternion]:
    """``n`` random points of ``L`` (spheres: uniform; planes: uniform in a box)."""
    rng = _stream(cfg, rng)
    if isinstance(L, PointLocus):
        return [L.point] * n
    if isinstance(L, SphereK):
        B = L.carrier_matrix()
        g = rng.normal(size=(n, B.shape[1]))
        g /= np.linalg.norm(g, axis=1, keepdims=True)
        c = L.center.to_array()
        return [Quaternion.from_array(c + L.radius * (B @ row)) for row in g]
    B = L.basis_matrix()
    u = rng.uniform(-cfg.scale, cfg.scale, size=(n, B.shape[1]))
    b = L.base.to_array()
    return [Quaternion.from_array(b + B @ row) for row in u]


def fit_residual(points: Sequence[Quaternion], k: int) -> float:
    """Fit a k-sphere (or k-plane) through the first k + 2 points; worst residual of the rest."""
    if any(is_inf(p) for p in points):
        raise ValueError("finite points only")
    L = fit_sphere(points[: k + 2], k)
    rest = points[k + 2 :]
    return max((L.residual(p) for p in rest), default=0.0)
