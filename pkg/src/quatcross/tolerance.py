"""Global tolerance policy shared by every predicate in the package.

Two values are considered equal when ``|p - q| <= abs + rel * max(|p|, |q|)``.
The active policy lives in a context variable, so ``with tolerance(...)``
overrides are local to the current thread/task.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace

DEFAULT_ABS = 1e-9
DEFAULT_REL = 1e-9
# Below this norm a quaternion is not inverted (underflow guard only).
ZERO_THRESHOLD = 1e-300


@dataclass(frozen=True)
class Tolerance:
    abs: float = DEFAULT_ABS
    rel: float = DEFAULT_REL

    def close(self, diff: float, scale: float) -> bool:
        """True when a difference of size ``diff`` is negligible at ``scale``."""
        return diff <= self.abs + self.rel * scale


_ACTIVE: contextvars.ContextVar[Tolerance] = contextvars.ContextVar(
    "quatcross_tolerance", default=Tolerance()
)


def get_tolerance() -> Tolerance:
    return _ACTIVE.get()


def set_tolerance(abs: float | None = None, rel: float | None = None) -> Tolerance:
    """Replace the active policy in the current context; returns the old one."""
    old = _ACTIVE.get()
    new = old
    if abs is not None:
        new = replace(new, abs=float(abs))
    if rel is not None:
        new = replace(new, rel=float(rel))
    _ACTIVE.set(new)
    return old


@contextlib.contextmanager
def tolerance(abs: float | None = None, rel: float | None = None):
    old = _ACTIVE.get()
    new = Tolerance(
        old.abs if abs is None else float(abs), old.rel if rel is None else float(rel)
    )
    token = _ACTIVE.set(new)
    try:
        yield new
    finally:
        _ACTIVE.reset(token)


def resolve(tol) -> Tolerance:
    """Accept ``None`` (active policy), a float (both parts) or a Tolerance."""
    if tol is None:
        return _ACTIVE.get()
    if isinstance(tol, Tolerance):
        return tol
    return Tolerance(float(tol), float(tol))
