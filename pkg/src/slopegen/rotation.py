"""Lorentz rotations of E^3_1 induced by unit timelike split quaternions.

The sandwich ``v -> q v q^-1`` is the normative definition of every
rotation matrix here.  The printed closed forms (:func:`published_matrix`,
:func:`closed_form_matrix`) are kept only as cross-checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .algebra import SplitQuaternion, classify, inverse, multiply, quadratic_form
from .cases import SlopeCase
from .errors import AxisCausalityMismatch, AxisNotUnit, NotTimelike
from .minkowski import (
    E_A,
    E_B,
    E_T,
    CausalClass,
    MinkowskiVec3,
    causal_character,
    vnorm,
)

ETA = np.diag([-1.0, 1.0, 1.0])
AXIS_UNIT_TOL = 1e-10


@dataclass(frozen=True)
class LorentzMatrix3:
    """3x3 real matrix, row-major, rows and columns indexed by (t, a, b)."""

    entries: tuple[float, ...]

    def __post_init__(self):
        if len(self.entries) != 9:
            raise ValueError(f"expected 9 entries, got {len(self.entries)}")

    @classmethod
    def from_array(cls, m) -> LorentzMatrix3:
        arr = np.asarray(m, dtype=float)
        if arr.shape != (3, 3):
            raise ValueError(f"expected a 3x3 array, got shape {arr.shape}")
        return cls(tuple(float(x) for x in arr.ravel()))

    @classmethod
    def from_columns(cls, c0: MinkowskiVec3, c1: MinkowskiVec3, c2: MinkowskiVec3) -> LorentzMatrix3:
        return cls.from_array(np.array([list(c0), list(c1), list(c2)]).T)

    @classmethod
    def identity(cls) -> LorentzMatrix3:
        return cls.from_array(np.eye(3))

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        return self.entries[3 * i + j]

    def __iter__(self) -> Iterator[float]:
        return iter(self.entries)

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(3, 3)

    def apply(self, v: MinkowskiVec3) -> MinkowskiVec3:
        e = self.entries
        return MinkowskiVec3(
            e[0] * v.t + e[1] * v.a + e[2] * v.b,
            e[3] * v.t + e[4] * v.a + e[5] * v.b,
            e[6] * v.t + e[7] * v.a + e[8] * v.b,
        )

    def __matmul__(self, other):
        if isinstance(other, LorentzMatrix3):
            return LorentzMatrix3.from_array(self.array() @ other.array())
        if isinstance(other, MinkowskiVec3):
            return self.apply(other)
        return NotImplemented

    def det(self) -> float:
        return float(np.linalg.det(self.array()))

    def metric_defect(self) -> float:
        """Largest entry of ``|M^T eta M - eta|``."""
        m = self.array()
        return float(np.abs(m.T @ ETA @ m - ETA).max())

    def lorentz_defect(self) -> float:
        """Distance from SO_1(3): max of the metric defect and ``|det M - 1|``."""
        return max(self.metric_defect(), abs(self.det() - 1.0))

    def to_list(self) -> list[float]:
        return list(self.entries)

    @classmethod
    def from_seq(cls, values: Sequence[float]) -> LorentzMatrix3:
        return cls(tuple(float(x) for x in values))

    def format_text(self, fmt: str = "{: .17e}") -> str:
        rows = []
        for i in range(3):
            rows.append("  ".join(fmt.format(self.entries[3 * i + j]) for j in range(3)))
        return "\n".join(rows)


def _require_timelike(q: SplitQuaternion) -> None:
    if classify(q) is not CausalClass.TIMELIKE:
        raise NotTimelike(f"{q.to_list()} is not timelike (I = {quadratic_form(q)!r})")


def sandwich(q: SplitQuaternion, v: MinkowskiVec3) -> MinkowskiVec3:
    """Vector part of ``q x v x q^-1`` with v embedded as a pure quaternion."""
    _require_timelike(q)
    r = multiply(multiply(q, SplitQuaternion.pure(v)), inverse(q))
    return r.vector


def sandwich_quaternion(q: SplitQuaternion, v: MinkowskiVec3) -> SplitQuaternion:
    """Like :func:`sandwich` but keeps the (ideally zero) scalar part."""
    _require_timelike(q)
    return multiply(multiply(q, SplitQuaternion.pure(v)), inverse(q))


def rotation_matrix(q: SplitQuaternion) -> LorentzMatrix3:
    """Matrix whose columns are the sandwiched basis vectors.

    Any timelike q is accepted; the sandwich is invariant under rescaling q.
    """
    return LorentzMatrix3.from_columns(sandwich(q, E_T), sandwich(q, E_A), sandwich(q, E_B))


def published_matrix(q: SplitQuaternion) -> LorentzMatrix3:
    """Closed-form rotation matrix of a unit timelike quaternion, entry by entry as printed."""
    p1, p2, p3, p4 = q.w, q.x, q.y, q.z
    return LorentzMatrix3((
        p1 * p1 + p2 * p2 + p3 * p3 + p4 * p4,
        2 * p1 * p4 - 2 * p2 * p3,
        -2 * p1 * p3 - 2 * p2 * p4,
        2 * p2 * p3 + 2 * p4 * p1,
        p1 * p1 - p2 * p2 - p3 * p3 + p4 * p4,
        -2 * p3 * p4 - 2 * p2 * p1,
        2 * p2 * p4 - 2 * p3 * p1,
        2 * p2 * p1 - 2 * p3 * p4,
        p1 * p1 - p2 * p2 + p3 * p3 - p4 * p4,
    ))


@dataclass(frozen=True)
class Rotor:
    q: SplitQuaternion
    case: SlopeCase
    angle: float  # half-angle argument xi/2


def _check_axis(case: SlopeCase, axis: MinkowskiVec3) -> None:
    want = case.tangent_character
    got = causal_character(axis)
    if got is not want:
        raise AxisCausalityMismatch(
            f"{case.value} needs a {want.value} axis, got {got.value} {axis.to_list()}"
        )
    if abs(vnorm(axis) - 1.0) > AXIS_UNIT_TOL:
        raise AxisNotUnit(f"axis {axis.to_list()} has norm {vnorm(axis)!r}")


def case_rotor(case: SlopeCase, xi: float, axis: MinkowskiVec3) -> Rotor:
    """Half-angle rotor ``c(xi/2) - s(xi/2) axis`` whose sandwich rotates by xi."""
    _check_axis(case, axis)
    half = 0.5 * xi
    if case.spherical:
        c, s = math.cos(half), math.sin(half)
    else:
        c, s = math.cosh(half), math.sinh(half)
    return Rotor(SplitQuaternion.from_parts(c, axis * (-s)), case, half)


def full_angle_quaternion(case: SlopeCase, xi: float, axis: MinkowskiVec3) -> SplitQuaternion:
    """``c(xi) - s(xi) axis``: the square of the half-angle rotor."""
    if case.spherical:
        c, s = math.cos(xi), math.sin(xi)
    else:
        c, s = math.cosh(xi), math.sinh(xi)
    return SplitQuaternion.from_parts(c, axis * (-s))


def closed_form_matrix(case: SlopeCase, xi: float, axis_derivative: MinkowskiVec3) -> LorentzMatrix3:
    """Printed closed-form rotation matrix of the family, evaluated entrywise.

    ``C = c(xi/2)^2``, ``S = s(xi/2)^2`` and ``D = s(xi)`` with circular
    functions for the spherical family and hyperbolic ones otherwise.
    """
    _check_axis(case, axis_derivative)
    f1, f2, f3 = axis_derivative.t, axis_derivative.a, axis_derivative.b
    if case.spherical:
        C, S, D = math.cos(xi / 2) ** 2, math.sin(xi / 2) ** 2, math.sin(xi)
    else:
        C, S, D = math.cosh(xi / 2) ** 2, math.sinh(xi / 2) ** 2, math.sinh(xi)
    return LorentzMatrix3((
        C + S * (f1 * f1 + f2 * f2 + f3 * f3),
        -2 * S * f1 * f2 - D * f3,
        -2 * S * f1 * f3 + D * f2,
        2 * S * f1 * f2 - D * f3,
        C + S * (-f1 * f1 - f2 * f2 + f3 * f3),
        -2 * S * f2 * f3 + D * f1,
        2 * S * f1 * f3 + D * f2,
        -2 * S * f2 * f3 - D * f1,
        C + S * (-f1 * f1 + f2 * f2 - f3 * f3),
    ))


def axis_plane_spectral_radius(m: LorentzMatrix3, axis: MinkowskiVec3) -> float:
    """Spectral radius of ``m`` restricted to the metric-orthogonal complement of ``axis``."""
    a = np.array(list(axis))
    # basis of {w : <w, axis> = 0}: Euclidean null space of the covector eta @ axis
    cov = ETA @ a
    _, _, vt = np.linalg.svd(cov.reshape(1, 3))
    basis = vt[1:].T  # 3x2
    mat = m.array()
    # express m @ basis in the basis (least squares is exact for an invariant plane)
    coords, *_ = np.linalg.lstsq(basis, mat @ basis, rcond=None)
    return float(np.max(np.abs(np.linalg.eigvals(coords))))

