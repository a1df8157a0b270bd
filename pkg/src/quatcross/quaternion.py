"""Quaternion arithmetic, the extended line H u {inf}, and conjugation rotations.

Quaternions are written ``t + x i + y j + z k`` with the Hamilton convention
``ij = k, jk = i, ki = j``.  Finite points of the extended line are plain
:class:`Quaternion` values; the point at infinity is the singleton
:data:`INF`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .errors import DivisionByZero
from .tolerance import ZERO_THRESHOLD, resolve


@dataclass(frozen=True, slots=True)
class Quaternion:
    t: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, values: Iterable[float]) -> "Quaternion":
        t, x, y, z = (float(v) for v in values)
        return cls(t, x, y, z)

    @classmethod
    def from_vector(cls, v: Iterable[float]) -> "Quaternion":
        """Pure imaginary quaternion with imaginary part ``v`` (3 values)."""
        x, y, z = (float(c) for c in v)
        return cls(0.0, x, y, z)

    def to_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z])

    def to_list(self) -> list[float]:
        return [self.t, self.x, self.y, self.z]

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def __iter__(self):
        yield self.t
        yield self.x
        yield self.y
        yield self.z

    def __add__(self, other):
        other = as_quaternion(other)
        return Quaternion(
            self.t + other.t, self.x + other.x, self.y + other.y, self.z + other.z
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = as_quaternion(other)
        return Quaternion(
            self.t - other.t, self.x - other.x, self.y - other.y, self.z - other.z
        )

    def __rsub__(self, other):
        return as_quaternion(other) - self

    def __neg__(self):
        return Quaternion(-self.t, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        s = float(other)
        return Quaternion(self.t * s, self.x * s, self.y * s, self.z * s)

    def __rmul__(self, other):
        s = float(other)
        return Quaternion(s * self.t, s * self.x, s * self.y, s * self.z)

    def __truediv__(self, other):
        # Real divisors only; quaternion division is ambiguous (left/right).
        s = float(other)
        return Quaternion(self.t / s, self.x / s, self.y / s, self.z / s)

    def __abs__(self):
        return norm(self)

    def __repr__(self):
        return f"Quaternion({self.t!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def conj(self) -> "Quaternion":
        return conj(self)

    def inv(self) -> "Quaternion":
        return inv(self)

    def norm(self) -> float:
        return norm(self)

    def norm2(self) -> float:
        return norm2(self)

    @property
    def re(self) -> float:
        return self.t

    @property
    def im(self) -> "Quaternion":
        return Quaternion(0.0, self.x, self.y, self.z)

    def dot(self, other: "Quaternion") -> float:
        """Euclidean inner product on R^4."""
        return self.t * other.t + self.x * other.x + self.y * other.y + self.z * other.z

    def is_finite(self) -> bool:
        return True


class Infinity:
    """The point at infinity of the extended quaternion line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash("quatcross.INF")

    def __reduce__(self):
        return (Infinity, ())

    def is_finite(self) -> bool:
        return False


INF = Infinity()
ExtQuaternion = Union[Quaternion, Infinity]

ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def as_quaternion(value) -> Quaternion:
    """Coerce a real number or a length-4 sequence to a Quaternion."""
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float, np.floating, np.integer)):
        return Quaternion(float(value), 0.0, 0.0, 0.0)
    return Quaternion.from_array(value)


def as_ext(value) -> ExtQuaternion:
    if isinstance(value, Infinity):
        return value
    if isinstance(value, str) and value == "inf":
        return INF
    if isinstance(value, float) and math.isinf(value):
        return INF
    return as_quaternion(value)


def is_inf(q) -> bool:
    return isinstance(q, Infinity)


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    if not isinstance(p, Quaternion):
        p = as_quaternion(p)
    if not isinstance(q, Quaternion):
        q = as_quaternion(q)
    # Grouping keeps conj(pq) == conj(q) conj(p) and Re(pq) == Re(qp)
    # bit-for-bit, not just up to rounding.
    return Quaternion(
        p.t * q.t - (p.x * q.x + p.y * q.y + p.z * q.z),
        (p.t * q.x + p.x * q.t) + (p.y * q.z - p.z * q.y),
        (p.t * q.y + p.y * q.t) + (p.z * q.x - p.x * q.z),
        (p.t * q.z + p.z * q.t) + (p.x * q.y - p.y * q.x),
    )


def conj(q: Quaternion) -> Quaternion:
    q = as_quaternion(q)
    return Quaternion(q.t, -q.x, -q.y, -q.z)


def norm2(q: Quaternion) -> float:
    if not isinstance(q, Quaternion):
        q = as_quaternion(q)
    return q.t * q.t + q.x * q.x + q.y * q.y + q.z * q.z


def norm(q: Quaternion) -> float:
    if not isinstance(q, Quaternion):
        q = as_quaternion(q)
    # hypot avoids underflow/overflow of the squared norm
    return math.hypot(q.t, q.x, q.y, q.z)


def re(q: Quaternion) -> float:
    q = as_quaternion(q)
    return q.t


def im(q: Quaternion) -> Quaternion:
    q = as_quaternion(q)
    return Quaternion(0.0, q.x, q.y, q.z)


def inv(q: Quaternion) -> Quaternion:
    """Multiplicative inverse ``conj(q) / |q|^2``."""
    q = as_quaternion(q)
    n = norm(q)
    if not n > ZERO_THRESHOLD:
        raise DivisionByZero(f"cannot invert {q!r}")
    if n < 1e-150 or n > 1e150:
        # |q|^2 would under/overflow; scale first.
        s = conj(q) / n
        return s / n
    return conj(q) / norm2(q)


def isclose(p, q, tol=None) -> bool:
    """Tolerance-aware equality on the extended line.

    Infinity equals only infinity; finite values use the hybrid policy
    ``|p - q| <= abs + rel * max(|p|, |q|)``.
    """
    if is_inf(p) or is_inf(q):
        return is_inf(p) and is_inf(q)
    p, q = as_quaternion(p), as_quaternion(q)
    pol = resolve(tol)
    return pol.close(norm(p - q), max(norm(p), norm(q)))


def is_real(q: Quaternion, tol=None) -> bool:
    """True when the imaginary part is negligible relative to ``|q|``."""
    q = as_quaternion(q)
    pol = resolve(tol)
    return pol.close(norm(im(q)), norm(q))


def commutator(p: Quaternion, q: Quaternion) -> Quaternion:
    """``pq - qp``; equals twice the cross product of the imaginary parts."""
    return mul(p, q) - mul(q, p)


def commutes(p: Quaternion, q: Quaternion, tol=None) -> bool:
    return resolve(tol).close(norm(commutator(p, q)), norm(p) * norm(q))


def to_complex_matrix(q: Quaternion) -> np.ndarray:
    """2x2 complex realization ``[[t - iz, -y - ix], [y - ix, t + iz]]``.

    Determinant is ``|q|^2`` and trace is ``2 Re q``.
    """
    q = as_quaternion(q)
    return np.array(
        [
            [complex(q.t, -q.z), complex(-q.y, -q.x)],
            [complex(q.y, -q.x), complex(q.t, q.z)],
        ]
    )


def from_complex_matrix(m: np.ndarray) -> Quaternion:
    """Inverse of :func:`to_complex_matrix`, read off the first row."""
    a, b = complex(m[0, 0]), complex(m[0, 1])
    return Quaternion(a.real, -b.imag, -b.real, -a.imag)


def conj_by(a: Quaternion, q: Quaternion) -> Quaternion:
    """``a q a^-1``; preserves norm and real part."""
    a, q = as_quaternion(a), as_quaternion(q)
    return mul(mul(a, q), inv(a))


@dataclass(frozen=True, slots=True)
class Rotation3:
    """A rotation of the imaginary 3-space, stored as a canonical unit quaternion.

    Canonical sign: ``t >= 0``, and if ``t == 0`` the first nonzero of
    ``x, y, z`` is positive.  Build instances with :meth:`from_quaternion`.
    """

    unit: Quaternion

    @classmethod
    def from_quaternion(cls, a: Quaternion) -> "Rotation3":
        a = as_quaternion(a)
        n = norm(a)
        if not n > ZERO_THRESHOLD:
            raise DivisionByZero(f"no rotation for {a!r}")
        u = a / n
        for c in u:
            if c != 0.0:
                if c < 0.0:
                    u = -u
                break
        return cls(u)

    @classmethod
    def identity(cls) -> "Rotation3":
        return cls(ONE)

    @classmethod
    def about_axis(cls, axis, angle: float) -> "Rotation3":
        """Right-handed rotation by ``angle`` about the imaginary direction ``axis``."""
        axis = as_quaternion(axis)
        n = norm(im(axis))
        if not n > ZERO_THRESHOLD:
            raise DivisionByZero("zero rotation axis")
        u = im(axis) / n
        h = 0.5 * angle
        return cls.from_quaternion(Quaternion(math.cos(h)) + math.sin(h) * u)

    def rotate(self, v: Quaternion) -> Quaternion:
        u = self.unit
        return mul(mul(u, v), conj(u))

    def __call__(self, v: Quaternion) -> Quaternion:
        return self.rotate(v)

    def compose(self, other: "Rotation3") -> "Rotation3":
        """Rotation applying ``other`` first, then ``self``."""
        return Rotation3.from_quaternion(mul(self.unit, other.unit))

    def inverse(self) -> "Rotation3":
        return Rotation3.from_quaternion(conj(self.unit))

    def matrix(self) -> np.ndarray:
        t, x, y, z = self.unit
        return np.array(
            [
                [1 - 2 * (y * y + z * z), 2 * (x * y - t * z), 2 * (x * z + t * y)],
                [2 * (x * y + t * z), 1 - 2 * (x * x + z * z), 2 * (y * z - t * x)],
                [2 * (x * z - t * y), 2 * (y * z + t * x), 1 - 2 * (x * x + y * y)],
            ]
        )

    def isclose(self, other: "Rotation3", tol=None) -> bool:
        # The canonical sign can flip for t ~ 0, so compare up to sign.
        return isclose(self.unit, other.unit, tol) or isclose(self.unit, -other.unit, tol)


def rotation_from(a: Quaternion) -> Rotation3:
    """The rotation ``v -> a v a^-1`` of the imaginary quaternions."""
    return Rotation3.from_quaternion(a)


def rotate(r: Rotation3, v: Quaternion) -> Quaternion:
    return r.rotate(v)
