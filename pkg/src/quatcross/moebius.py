"""Fractional linear transformations ``q -> (aq + b)(cq + d)^-1`` of H u {inf}.

A 2x2 quaternionic matrix acts on column vectors ``(x, y)`` representing
``x y^-1``, so composition of maps is the ordinary matrix product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateInput, SingularMatrix
from .quaternion import (
    INF,
    ONE,
    ZERO,
    I,
    J,
    K,
    ExtQuaternion,
    Quaternion,
    as_quaternion,
    from_complex_matrix,
    inv,
    is_inf,
    isclose,
    mul,
    norm,
    to_complex_matrix,
)
from .tolerance import resolve

SINGULAR_THRESHOLD = 1e-12

# Five points of H that do not lie on a common 2-sphere or 2-plane, so a
# transformation is pinned down by its values there.
PROBE_POINTS = (ZERO, ONE, I, J, K)


@dataclass(frozen=True)
class MatGL2H:
    """Invertible 2x2 quaternionic matrix ``[[a, b], [c, d]]``.

    Construction checks invertibility through the 4x4 complex realization:
    ``|det| > 1e-12 * scale**4`` where ``scale`` is the largest entry norm.
    """

    a: Quaternion
    b: Quaternion
    c: Quaternion
    d: Quaternion
    det: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_quaternion(getattr(self, name)))
        det = abs(np.linalg.det(self.realization()))
        scale = self.scale
        object.__setattr__(self, "det", float(det))
        if not (scale > 0 and det > SINGULAR_THRESHOLD * scale**4):
            raise SingularMatrix(f"matrix is not invertible (|det| = {det:.3g})")

    @classmethod
    def _unchecked(cls, a, b, c, d) -> "MatGL2H":
        # For products and inverses of matrices already known to be invertible.
        m = object.__new__(cls)
        object.__setattr__(m, "a", a)
        object.__setattr__(m, "b", b)
        object.__setattr__(m, "c", c)
        object.__setattr__(m, "d", d)
        object.__setattr__(m, "det", float("nan"))
        return m

    @property
    def scale(self) -> float:
        return max(norm(self.a), norm(self.b), norm(self.c), norm(self.d))

    def realization(self) -> np.ndarray:
        """4x4 complex matrix built blockwise from :func:`to_complex_matrix`."""
        return np.block(
            [
                [to_complex_matrix(self.a), to_complex_matrix(self.b)],
                [to_complex_matrix(self.c), to_complex_matrix(self.d)],
            ]
        )

    def entries(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return self.a, self.b, self.c, self.d

    def __matmul__(self, other: "MatGL2H") -> "MatGL2H":
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return MatGL2H._unchecked(
            mul(a, e) + mul(b, g),
            mul(a, f) + mul(b, h),
            mul(c, e) + mul(d, g),
            mul(c, f) + mul(d, h),
        )

    def inverse(self) -> "MatGL2H":
        m = np.linalg.inv(self.realization())
        return MatGL2H._unchecked(
            from_complex_matrix(m[0:2, 0:2]),
            from_complex_matrix(m[0:2, 2:4]),
            from_complex_matrix(m[2:4, 0:2]),
            from_complex_matrix(m[2:4, 2:4]),
        )

    def scaled(self, s: float) -> "MatGL2H":
        return MatGL2H(self.a * s, self.b * s, self.c * s, self.d * s)


def make_matrix(a, b, c, d) -> MatGL2H:
    return MatGL2H(a, b, c, d)


def _negligible(value: float, scale: float, tol=None) -> bool:
    # Projective quantities have no absolute scale; only the relative part
    # of the policy applies.
    return value <= resolve(tol).rel * scale


@dataclass(frozen=True)
class Moebius:
    """The transformation ``q -> (aq + b)(cq + d)^-1`` induced by ``matrix``."""

    matrix: MatGL2H

    @classmethod
    def from_entries(cls, a, b, c, d) -> "Moebius":
        return cls(MatGL2H(a, b, c, d))

    @classmethod
    def identity(cls) -> "Moebius":
        return cls(MatGL2H(ONE, ZERO, ZERO, ONE))

    @classmethod
    def translation(cls, shift) -> "Moebius":
        return cls(MatGL2H(ONE, as_quaternion(shift), ZERO, ONE))

    @classmethod
    def left_multiplication(cls, factor) -> "Moebius":
        return cls(MatGL2H(as_quaternion(factor), ZERO, ZERO, ONE))

    @classmethod
    def conjugation(cls, a) -> "Moebius":
        """``q -> a q a^-1``; fixes 0, 1 and infinity."""
        a = as_quaternion(a)
        return cls(MatGL2H(a, ZERO, ZERO, a))

    @classmethod
    def inversion(cls) -> "Moebius":
        """``q -> q^-1``."""
        return cls(MatGL2H(ZERO, ONE, ONE, ZERO))

    def apply(self, q: ExtQuaternion, tol=None) -> ExtQuaternion:
        a, b, c, d = self.matrix.entries()
        if is_inf(q):
            if _negligible(norm(c), self.matrix.scale, tol):
                return INF
            return mul(a, inv(c))
        q = as_quaternion(q)
        den = mul(c, q) + d
        if _negligible(norm(den), max(norm(c) * norm(q), norm(d)), tol):
            return INF
        return mul(mul(a, q) + b, inv(den))

    def __call__(self, q: ExtQuaternion) -> ExtQuaternion:
        return self.apply(q)

    def compose(self, other: "Moebius") -> "Moebius":
        """The map ``q -> self(other(q))``."""
        return Moebius(self.matrix @ other.matrix)

    def __matmul__(self, other: "Moebius") -> "Moebius":
        return self.compose(other)

    def inverse(self) -> "Moebius":
        return Moebius(self.matrix.inverse())

    def pole(self) -> ExtQuaternion:
        """The point sent to infinity."""
        return self.inverse().apply(INF)

    def isclose(self, other: "Moebius", tol=None) -> bool:
        """Projective equality, tested on :data:`PROBE_POINTS`."""
        return all(isclose(self.apply(p), other.apply(p), tol) for p in PROBE_POINTS)


def apply(T: Moebius, q: ExtQuaternion) -> ExtQuaternion:
    return T.apply(q)


def compose(S: Moebius, T: Moebius) -> Moebius:
    return S.compose(T)


def inverse(T: Moebius) -> Moebius:
    return T.inverse()


def difference_identity_residual(T: Moebius, q1: Quaternion, q2: Quaternion) -> float:
    """Residual of the two-point difference identity for ``T``.

    With ``T^-1 = [[a', b'], [c', d']]`` the identity reads::

        T(q1) - T(q2) = (a' - q2 c')^-1 (q1 - q2) (c q1 + d)^-1
                      = (a' - q1 c')^-1 (q1 - q2) (c q2 + d)^-1

    Returns the larger of the two residual norms.
    """
    q1, q2 = as_quaternion(q1), as_quaternion(q2)
    a, b, c, d = T.matrix.entries()
    ai, _, ci, _ = T.matrix.inverse().entries()
    factors = {
        "a' - q2 c'": ai - mul(q2, ci),
        "a' - q1 c'": ai - mul(q1, ci),
        "c q1 + d": mul(c, q1) + d,
        "c q2 + d": mul(c, q2) + d,
    }
    scale = T.matrix.scale * (1.0 + max(norm(q1), norm(q2)))
    iscale = T.matrix.inverse().scale * (1.0 + max(norm(q1), norm(q2)))
    for name, f in factors.items():
        s = iscale if name.startswith("a'") else scale
        if _negligible(norm(f), s):
            raise DegenerateInput(f"factor {name} vanishes")
    t1, t2 = T.apply(q1), T.apply(q2)
    if is_inf(t1) or is_inf(t2):
        raise DegenerateInput("image at infinity")
    lhs = t1 - t2
    diff = q1 - q2
    first = mul(mul(inv(factors["a' - q2 c'"]), diff), inv(factors["c q1 + d"]))
    second = mul(mul(inv(factors["a' - q1 c'"]), diff), inv(factors["c q2 + d"]))
    return max(norm(lhs - first), norm(lhs - second))


def theta_stabilizer(theta: float) -> Moebius:
    """Rotation matrix ``[[cos, -sin], [sin, cos]]``.

    Fixes every point of the unit imaginary sphere ``{|q| = 1, Re q = 0}``.
    """
    c, s = math.cos(theta), math.sin(theta)
    return Moebius(MatGL2H(Quaternion(c), Quaternion(-s), Quaternion(s), Quaternion(c)))
