"""Vector algebra of Minkowski 3-space E^3_1.

Coordinates are ``(t, a, b)`` with metric ``diag(-1, +1, +1)``; the first
axis is timelike and corresponds to the ``i`` unit of the split quaternions.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, Sequence


class CausalClass(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"

    def __str__(self) -> str:
        return self.value


CAUSAL_RTOL = 1e-12


def causal_tolerance(euclidean_sq: float) -> float:
    """Scale-aware threshold below which a quadratic form counts as zero."""
    return CAUSAL_RTOL * max(1.0, euclidean_sq)


@dataclass(frozen=True)
class MinkowskiVec3:
    t: float
    a: float
    b: float

    def __iter__(self) -> Iterator[float]:
        yield self.t
        yield self.a
        yield self.b

    def __add__(self, other: MinkowskiVec3) -> MinkowskiVec3:
        return MinkowskiVec3(self.t + other.t, self.a + other.a, self.b + other.b)

    def __sub__(self, other: MinkowskiVec3) -> MinkowskiVec3:
        return MinkowskiVec3(self.t - other.t, self.a - other.a, self.b - other.b)

    def __neg__(self) -> MinkowskiVec3:
        return MinkowskiVec3(-self.t, -self.a, -self.b)

    def __mul__(self, s: float) -> MinkowskiVec3:
        return MinkowskiVec3(s * self.t, s * self.a, s * self.b)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> MinkowskiVec3:
        return MinkowskiVec3(self.t / s, self.a / s, self.b / s)

    def euclidean_sq(self) -> float:
        return self.t * self.t + self.a * self.a + self.b * self.b

    def euclidean_norm(self) -> float:
        return math.sqrt(self.euclidean_sq())

    def to_list(self) -> list[float]:
        return [self.t, self.a, self.b]

    @classmethod
    def from_seq(cls, values: Sequence[float]) -> MinkowskiVec3:
        if len(values) != 3:
            raise ValueError(f"expected 3 components, got {len(values)}")
        t, a, b = (float(c) for c in values)
        return cls(t, a, b)


ZERO = MinkowskiVec3(0.0, 0.0, 0.0)
E_T = MinkowskiVec3(1.0, 0.0, 0.0)
E_A = MinkowskiVec3(0.0, 1.0, 0.0)
E_B = MinkowskiVec3(0.0, 0.0, 1.0)


def metric(u: MinkowskiVec3, v: MinkowskiVec3) -> float:
    return -u.t * v.t + u.a * v.a + u.b * v.b


def lorentz_cross(u: MinkowskiVec3, v: MinkowskiVec3) -> MinkowskiVec3:
    """Lorentzian cross product, the determinant with first row (-i, j, k).

    Metric-orthogonal to both factors; ``E_T ^ E_A == E_B`` matches ``i j = k``.
    """
    return MinkowskiVec3(
        u.b * v.a - u.a * v.b,
        u.b * v.t - u.t * v.b,
        u.t * v.a - u.a * v.t,
    )


def causal_character(w: MinkowskiVec3) -> CausalClass:
    # the zero vector is spacelike by convention
    if w == ZERO:
        return CausalClass.SPACELIKE
    q = metric(w, w)
    eps = causal_tolerance(w.euclidean_sq())
    if q > eps:
        return CausalClass.SPACELIKE
    if q < -eps:
        return CausalClass.TIMELIKE
    return CausalClass.LIGHTLIKE


def vnorm(w: MinkowskiVec3) -> float:
    return math.sqrt(abs(metric(w, w)))


def on_h2(w: MinkowskiVec3, tol: float = 1e-10) -> bool:
    """Membership in the upper sheet of the unit hyperboloid <w, w> = -1."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return abs(metric(w, w) + 1.0) <= tol and w.t > 0


def on_s12(w: MinkowskiVec3, tol: float = 1e-10) -> bool:
    """Membership in the de Sitter surface <w, w> = +1."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return abs(metric(w, w) - 1.0) <= tol
