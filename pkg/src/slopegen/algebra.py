"""Split-quaternion arithmetic.

A split quaternion ``p = w + x i + y j + z k`` obeys ``i^2 = -1``,
``j^2 = k^2 = 1`` and ``i j = -j i = k``, ``j k = -k j = -i``,
``k i = -i k = j``.  Components are stored in the order ``(w, x, y, z)``.
The vector part ``(x, y, z)`` is read as a vector ``(t, a, b)`` of E^3_1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from numbers import Real
from typing import Iterator, Sequence

from .errors import DegenerateNorm, NotDecomposable, NotInvertible
from .minkowski import (
    CausalClass,
    E_T,
    MinkowskiVec3,
    causal_character,
    causal_tolerance,
    vnorm,
)

__all__ = [
    "CausalClass",
    "PolarKind",
    "PolarDecomposition",
    "SplitQuaternion",
    "ONE",
    "I",
    "J",
    "K",
    "multiply",
    "conjugate",
    "quadratic_form",
    "norm",
    "classify",
    "inverse",
    "normalize",
    "polar_decompose",
    "reconstruct",
]


@dataclass(frozen=True)
class SplitQuaternion:
    w: float
    x: float
    y: float
    z: float

    @classmethod
    def pure(cls, v: MinkowskiVec3) -> SplitQuaternion:
        return cls(0.0, v.t, v.a, v.b)

    @classmethod
    def from_parts(cls, scalar: float, vector: MinkowskiVec3) -> SplitQuaternion:
        return cls(scalar, vector.t, vector.a, vector.b)

    @classmethod
    def from_seq(cls, values: Sequence[float]) -> SplitQuaternion:
        if len(values) != 4:
            raise ValueError(f"expected 4 components, got {len(values)}")
        w, x, y, z = (float(c) for c in values)
        return cls(w, x, y, z)

    @property
    def scalar(self) -> float:
        return self.w

    @property
    def vector(self) -> MinkowskiVec3:
        return MinkowskiVec3(self.x, self.y, self.z)

    def __iter__(self) -> Iterator[float]:
        yield from (self.w, self.x, self.y, self.z)

    def to_list(self) -> list[float]:
        return [self.w, self.x, self.y, self.z]

    def euclidean_sq(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __add__(self, other: SplitQuaternion) -> SplitQuaternion:
        return SplitQuaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: SplitQuaternion) -> SplitQuaternion:
        return SplitQuaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> SplitQuaternion:
        return SplitQuaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, SplitQuaternion):
            return multiply(self, other)
        if isinstance(other, Real):
            s = float(other)
            return SplitQuaternion(s * self.w, s * self.x, s * self.y, s * self.z)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self * other
        return NotImplemented

    def __truediv__(self, s: float) -> SplitQuaternion:
        return SplitQuaternion(self.w / s, self.x / s, self.y / s, self.z / s)


ONE = SplitQuaternion(1.0, 0.0, 0.0, 0.0)
I = SplitQuaternion(0.0, 1.0, 0.0, 0.0)
J = SplitQuaternion(0.0, 0.0, 1.0, 0.0)
K = SplitQuaternion(0.0, 0.0, 0.0, 1.0)


def multiply(p: SplitQuaternion, q: SplitQuaternion) -> SplitQuaternion:
    """``p x q = p1 q1 + <Vp, Vq> + p1 Vq + q1 Vp + Vp ^ Vq``."""
    p1, p2, p3, p4 = p.w, p.x, p.y, p.z
    q1, q2, q3, q4 = q.w, q.x, q.y, q.z
    return SplitQuaternion(
        p1 * q1 - p2 * q2 + p3 * q3 + p4 * q4,
        p1 * q2 + q1 * p2 + (p4 * q3 - p3 * q4),
        p1 * q3 + q1 * p3 + (p4 * q2 - p2 * q4),
        p1 * q4 + q1 * p4 + (p2 * q3 - p3 * q2),
    )


def conjugate(p: SplitQuaternion) -> SplitQuaternion:
    return SplitQuaternion(p.w, -p.x, -p.y, -p.z)


def quadratic_form(p: SplitQuaternion) -> float:
    """Signature (2, 2) form ``w^2 + x^2 - y^2 - z^2``; equals the scalar of p x conj(p)."""
    return p.w * p.w + p.x * p.x - p.y * p.y - p.z * p.z


def norm(p: SplitQuaternion) -> float:
    return math.sqrt(abs(quadratic_form(p)))


def _tolerance(p: SplitQuaternion) -> float:
    return causal_tolerance(p.euclidean_sq())


def classify(p: SplitQuaternion) -> CausalClass:
    ip = quadratic_form(p)
    eps = _tolerance(p)
    if ip > eps:
        return CausalClass.TIMELIKE
    if ip < -eps:
        return CausalClass.SPACELIKE
    return CausalClass.LIGHTLIKE


def inverse(p: SplitQuaternion) -> SplitQuaternion:
    ip = quadratic_form(p)
    if abs(ip) <= _tolerance(p):
        raise NotInvertible(f"lightlike quaternion {p.to_list()} has no inverse")
    c = conjugate(p)
    return SplitQuaternion(c.w / ip, c.x / ip, c.y / ip, c.z / ip)


def normalize(p: SplitQuaternion) -> SplitQuaternion:
    n = norm(p)
    # compare on the quadratic scale so the threshold matches classify()
    if n * n <= _tolerance(p):
        raise DegenerateNorm(f"quaternion {p.to_list()} has zero norm")
    return p / n


class PolarKind(enum.Enum):
    SPACELIKE_FORM = "spacelike"                  # N (sinh t + v cosh t), v spacelike
    TIMELIKE_SPACELIKE_VEC = "timelike-spacelike"  # N (cosh t + v sinh t), v spacelike
    TIMELIKE_TIMELIKE_VEC = "timelike-timelike"    # N (cos t + v sin t), v timelike


@dataclass(frozen=True)
class PolarDecomposition:
    kind: PolarKind
    magnitude: float
    angle: float
    axis: MinkowskiVec3


def reconstruct(d: PolarDecomposition) -> SplitQuaternion:
    if d.kind is PolarKind.SPACELIKE_FORM:
        s, c = math.sinh(d.angle), math.cosh(d.angle)
        return SplitQuaternion.from_parts(d.magnitude * s, d.axis * (d.magnitude * c))
    if d.kind is PolarKind.TIMELIKE_SPACELIKE_VEC:
        c, s = math.cosh(d.angle), math.sinh(d.angle)
    else:
        c, s = math.cos(d.angle), math.sin(d.angle)
    return SplitQuaternion.from_parts(d.magnitude * c, d.axis * (d.magnitude * s))


def polar_decompose(p: SplitQuaternion) -> PolarDecomposition:
    """Polar form of a non-lightlike split quaternion.

    A zero vector part yields the trigonometric kind with axis ``(1, 0, 0)``
    and angle 0 (or pi for a negative scalar).  Timelike quaternions with a
    spacelike vector part and a negative scalar part have no hyperbolic
    polar form and raise :class:`NotDecomposable`.
    """
    cls = classify(p)
    if cls is CausalClass.LIGHTLIKE:
        raise NotDecomposable(f"lightlike quaternion {p.to_list()}")
    n = norm(p)
    vec = p.vector
    vn = vnorm(vec)

    if cls is CausalClass.SPACELIKE:
        # vector part of a spacelike quaternion is always spacelike
        angle = math.asinh(p.w / n)
        return PolarDecomposition(PolarKind.SPACELIKE_FORM, n, angle, vec / (n * math.cosh(angle)))

    if vec.euclidean_sq() == 0.0:
        angle = 0.0 if p.w > 0 else math.pi
        return PolarDecomposition(PolarKind.TIMELIKE_TIMELIKE_VEC, n, angle, E_T)

    vcls = causal_character(vec)
    if vcls is CausalClass.LIGHTLIKE:
        raise NotDecomposable(f"vector part of {p.to_list()} is lightlike")
    if vcls is CausalClass.TIMELIKE:
        angle = math.atan2(vn, p.w)
        return PolarDecomposition(PolarKind.TIMELIKE_TIMELIKE_VEC, n, angle, vec / vn)
    if p.w < 0:
        raise NotDecomposable(
            f"{p.to_list()}: negative scalar part has no form N (cosh t + v sinh t)"
        )
    angle = math.asinh(vn / n)
    return PolarDecomposition(PolarKind.TIMELIKE_SPACELIKE_VEC, n, angle, vec / vn)
