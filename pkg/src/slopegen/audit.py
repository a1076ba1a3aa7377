"""Reference closed forms and the entrywise audit of printed rotation matrices.

Three worked examples are encoded exactly as published: the profile curve,
the homothetic motion, the rotation matrix and the resulting surface.  Their
matrices assume the shortcut ``tanh 7 ~ 1`` / ``coth 7 ~ 1``, i.e. the angle
``xi = ln u``; the audit compares them against the sandwich construction at
that same angle, so only typographical disagreements remain.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import SplitQuaternion
from .cases import SlopeCase
from .curves import ProfileCurve, builtin
from .minkowski import CausalClass, MinkowskiVec3, metric
from .rotation import (
    LorentzMatrix3,
    case_rotor,
    closed_form_matrix,
    full_angle_quaternion,
    published_matrix,
    rotation_matrix,
)

CONFIRM_TOL = 1e-10
SQRT2_2 = math.sqrt(2.0) / 2.0


def _ex1_surface(u, v):
    L = math.log(u)
    s = u * math.cosh(7.0)
    return MinkowskiVec3(s * math.cosh(L) * math.cosh(v), -s * math.sinh(L), s * math.cosh(L) * math.sinh(v))


def _ex1_matrix(u, v):
    L = math.log(u)
    C, S = math.cosh(L / 2) ** 2, math.sinh(L / 2) ** 2
    return LorentzMatrix3((
        C + S * math.cosh(2 * v), -math.sinh(L) * math.cosh(v), -S * math.sinh(2 * v),
        -math.sinh(L) * math.cosh(v), math.cosh(L), math.sinh(L) * math.sinh(v),
        S * math.sinh(2 * v), -math.sinh(L) * math.sinh(v), C - S * math.cosh(2 * v),
    ))


def _ex1_motion(u, v):
    L = math.log(u)
    s = u * math.cosh(7.0)
    return SplitQuaternion(s * math.cosh(L), -s * math.sinh(L) * math.sinh(v), 0.0, -s * math.sinh(L) * math.cosh(v))


def _ex2_surface(u, v):
    L = math.log(u)
    s = SQRT2_2 * u
    return MinkowskiVec3(s * math.cos(L) * math.sinh(v), s * math.sin(L), s * math.cos(L) * math.cosh(v))


def _ex2_matrix(u, v):
    L = math.log(u)
    C, S = math.cos(L / 2) ** 2, math.sin(L / 2) ** 2
    return LorentzMatrix3((
        C + S * math.cosh(2 * v), math.sin(L / 2) * math.sinh(v), -S * math.sinh(2 * v),
        math.sin(L) * math.sinh(v), math.cosh(L), -math.sin(L) * math.cosh(v),
        S * math.sinh(2 * v), math.sin(L) * math.cosh(v), C - S * math.cosh(2 * v),
    ))


def _ex2_motion(u, v):
    L = math.log(u)
    s = SQRT2_2 * u
    return SplitQuaternion(s * math.cos(L), -s * math.sin(L) * math.cosh(v), 0.0, -s * math.sin(L) * math.sinh(v))


def _ex3_surface(u, v):
    L = math.log(u)
    s = u * math.sinh(7.0)
    return MinkowskiVec3(-s * math.sinh(L), s * math.cosh(L) * math.cos(v), s * math.cosh(L) * math.sin(v))


def _ex3_matrix(u, v):
    L = math.log(u)
    C, S = math.cosh(L / 2) ** 2, math.sinh(L / 2) ** 2
    return LorentzMatrix3((
        math.cosh(L), -math.sinh(L) * math.cos(v), -math.sinh(L) * math.sin(v),
        -math.sinh(L) * math.cos(v), C + S * math.cos(2 * v), S * math.sin(2 * v),
        -math.sinh(L) * math.sin(v), S * math.sin(2 * v), C - S * math.cos(2 * v),
    ))


def _ex3_motion(u, v):
    L = math.log(u)
    s = u * math.sinh(7.0)
    return SplitQuaternion(s * math.cosh(L), 0.0, s * math.sinh(L) * math.sin(v), -s * math.sinh(L) * math.cos(v))


@dataclass(frozen=True)
class ReferenceExample:
    key: str
    case: SlopeCase
    theta: float
    curve_name: str
    approximate: bool  # closed forms use xi = ln u instead of the exact slope factor
    surface: Callable[[float, float], MinkowskiVec3]
    matrix: Callable[[float, float], LorentzMatrix3]
    motion: Callable[[float, float], SplitQuaternion]

    @property
    def curve(self) -> ProfileCurve:
        return builtin(self.curve_name)

    @property
    def label(self) -> str:
        return f"{self.case.value} (theta={self.theta:.6g}, {self.curve_name})"


EXAMPLES: dict[str, ReferenceExample] = {
    ex.key: ex
    for ex in (
        ReferenceExample("timelike-cone", SlopeCase.TIMELIKE_CONE, 7.0, "h2-hyperbola", True,
                         _ex1_surface, _ex1_matrix, _ex1_motion),
        ReferenceExample("spacelike-cone-spherical", SlopeCase.SPACELIKE_CONE_SPHERICAL, math.pi / 4,
                         "s12-timelike-hyperbola", False, _ex2_surface, _ex2_matrix, _ex2_motion),
        ReferenceExample("spacelike-cone-hyperbolic", SlopeCase.SPACELIKE_CONE_HYPERBOLIC, 7.0,
                         "s12-circle", True, _ex3_surface, _ex3_matrix, _ex3_motion),
    )
}


def example_for(case: SlopeCase) -> ReferenceExample:
    return next(ex for ex in EXAMPLES.values() if ex.case is case)


# ---------------------------------------------------------------- audit

@dataclass(frozen=True)
class AuditEntry:
    source: str
    row: int  # 1-based
    col: int
    max_deviation: float

    @property
    def confirmed(self) -> bool:
        return self.max_deviation <= CONFIRM_TOL

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "row": self.row,
            "col": self.col,
            "max_deviation": self.max_deviation,
            "confirmed": self.confirmed,
        }


@dataclass(frozen=True)
class AuditReport:
    entries: tuple[AuditEntry, ...]
    motion_deviation: dict[str, float]
    sandwich_lorentz_max_dev: float

    @property
    def discrepancies(self) -> list[AuditEntry]:
        return [e for e in self.entries if not e.confirmed]

    @property
    def passed(self) -> bool:
        # printed typos are reported, never fatal
        return self.sandwich_lorentz_max_dev <= CONFIRM_TOL

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "sandwich_lorentz_max_dev": self.sandwich_lorentz_max_dev,
            "confirm_tolerance": CONFIRM_TOL,
            "entries": [e.to_dict() for e in self.entries],
            "discrepancies": [e.to_dict() for e in self.discrepancies],
            "motion_deviation": dict(self.motion_deviation),
        }

    def format_table(self) -> str:
        lines = [f"{'source':<36} {'entry':>5}  {'max deviation':>13}  status"]
        for e in self.entries:
            status = "confirmed" if e.confirmed else "DISAGREES"
            lines.append(f"{e.source:<36} ({e.row},{e.col})  {e.max_deviation:13.3e}  {status}")
        return "\n".join(lines)


def entry_deviation(printed: LorentzMatrix3, truth: LorentzMatrix3) -> np.ndarray:
    """Entrywise ``|printed - truth| / (1 + |truth|)``, shape (3, 3)."""
    p, t = printed.array(), truth.array()
    return np.abs(p - t) / (1.0 + np.abs(t))


def _random_axis(rng: np.random.Generator, character: CausalClass) -> MinkowskiVec3:
    while True:
        w = MinkowskiVec3.from_seq(rng.uniform(-2.0, 2.0, size=3))
        q = metric(w, w)
        if character is CausalClass.SPACELIKE and q > 0.1:
            return w / math.sqrt(q)
        if character is CausalClass.TIMELIKE and q < -0.1:
            return w / math.sqrt(-q)


def random_unit_timelike(rng: np.random.Generator) -> SplitQuaternion:
    while True:
        p = SplitQuaternion.from_seq(rng.uniform(-2.0, 2.0, size=4))
        ip = p.w ** 2 + p.x ** 2 - p.y ** 2 - p.z ** 2
        if ip > 0.1:
            return p / math.sqrt(ip)


def _tabulate(source: str, pairs, worst: np.ndarray | None = None) -> list[AuditEntry]:
    if worst is None:
        worst = np.zeros((3, 3))
    for printed, truth in pairs:
        worst = np.maximum(worst, entry_deviation(printed, truth))
    return [AuditEntry(source, i + 1, j + 1, float(worst[i, j])) for i in range(3) for j in range(3)]


def matrix_audit(samples: int = 50, seed: int = 0) -> AuditReport:
    """Compare every printed rotation matrix against the sandwich construction."""
    rng = np.random.default_rng(seed)
    entries: list[AuditEntry] = []
    lorentz = 0.0

    pairs = []
    for _ in range(samples):
        q = random_unit_timelike(rng)
        truth = rotation_matrix(q)
        lorentz = max(lorentz, truth.lorentz_defect())
        pairs.append((published_matrix(q), truth))
    entries += _tabulate("generic R_p", pairs)

    for case in SlopeCase:
        pairs = []
        for _ in range(samples):
            axis = _random_axis(rng, case.tangent_character)
            angle = float(rng.uniform(-2.0, 2.0))
            truth = rotation_matrix(case_rotor(case, angle, axis).q)
            lorentz = max(lorentz, truth.lorentz_defect())
            pairs.append((closed_form_matrix(case, angle, axis), truth))
        entries += _tabulate(f"family {case.value}", pairs)

    motion_dev: dict[str, float] = {}
    us = np.linspace(0.5, 3.0, 7)
    vs = np.linspace(-2.0, 2.0, 7)
    for ex in EXAMPLES.values():
        curve = ex.curve
        scale = ex.case.scale_factor(ex.theta)
        pairs = []
        worst_motion = 0.0
        for u in us:
            for v in vs:
                u, v = float(u), float(v)
                angle = math.log(u)  # the examples' shortcut for xi
                axis = curve.derivative(v)
                truth = rotation_matrix(case_rotor(ex.case, angle, axis).q)
                lorentz = max(lorentz, truth.lorentz_defect())
                pairs.append((ex.matrix(u, v), truth))
                expect = full_angle_quaternion(ex.case, angle, axis) * (u * scale)
                got = ex.motion(u, v)
                worst_motion = max(worst_motion, max(
                    abs(a - b) / (1.0 + abs(b)) for a, b in zip(got, expect)
                ))
        entries += _tabulate(f"example {ex.key}", pairs)
        motion_dev[ex.key] = worst_motion

    return AuditReport(tuple(entries), motion_dev, lorentz)


def surface_deviation(ex: ReferenceExample, u, v, forms: dict[str, np.ndarray]) -> dict[str, float]:
    """Max per-point relative distance ``|x - x_printed| / |x_printed|`` for each form.

    ``forms`` is the output of :func:`slopegen.slope_surfaces.evaluate` at the
    flattened points ``u``, ``v``.
    """
    printed = np.array([list(ex.surface(float(a), float(b))) for a, b in zip(u, v)])
    ref = np.linalg.norm(printed, axis=1)
    out = {}
    for name in ("direct", "product", "homothetic"):
        pts = forms[name]
        if name == "product":
            pts = pts[:, 1:]
        out[name] = float(np.max(np.linalg.norm(pts - printed, axis=1) / ref))
    return out
