"""Timelike constant slope surfaces in three equivalent forms.

For each family the surface point is computed three independent ways:

* ``direct``: ``scale (c(xi) f + s(xi) f ^ f')`` using the Lorentzian cross product;
* ``product_form``: the split-quaternion product ``Q1 x Q2`` with the full-angle
  quaternion ``Q1 = c(xi) - s(xi) f'`` and the pure quaternion ``Q2 = scale f``;
* ``homothetic_form``: ``scale R f`` where ``R`` is the sandwich matrix of the
  half-angle rotor ``c(xi/2) - s(xi/2) f'``.

``c``/``s`` are cosh/sinh, or cos/sin for the spherical family.  The scalar
functions work point by point through :mod:`slopegen.algebra`; :func:`evaluate`
and :func:`verify` run whole grids through the batched kernels.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import _pykernels as _pyk
from . import kernels as _kernels
from .algebra import SplitQuaternion, multiply
from .cases import SlopeCase
from .curves import ProfileCurve
from .errors import DegenerateNormal, InvalidSpec, InvalidTheta, NonpositiveU
from .minkowski import MinkowskiVec3, lorentz_cross, metric, vnorm
from .rotation import case_rotor, full_angle_quaternion, rotation_matrix

__all__ = [
    "SlopeCase",
    "SurfaceSpec",
    "VerificationReport",
    "xi",
    "scale",
    "direct",
    "q1",
    "q2",
    "product_quaternion",
    "product_form",
    "homothetic_form",
    "surface_normal",
    "slope_cosine",
    "partials",
    "evaluate",
    "verify",
]

# thresholds for VerificationReport.passed
FORM_TOL = 1e-9
ROTOR_TOL = 1e-10
LORENTZ_TOL = 1e-10
SLOPE_STD_TOL = 1e-6
MAX_EXCLUDED_FRACTION = 0.01

# numerical partials for the normals
DIFF_METHOD = "complex-step"
CS_STEP = 1e-20
FD_REL_STEP_U = 1e-6
FD_STEP_V = 1e-6
DEGENERATE_RATIO = 1e-9

# Deliberately wrong slope factors for negative testing.  Applied only to the
# quaternion routes so the direct form keeps the true surface.
XI_OVERRIDES: dict[str, Callable[[float], float]] = {
    "tan": math.tan,
    "cot": lambda th: 1.0 / math.tan(th),
    "tanh": math.tanh,
    "coth": lambda th: 1.0 / math.tanh(th),
}


@dataclass(frozen=True)
class SurfaceSpec:
    case: SlopeCase
    theta: float
    curve: ProfileCurve
    u_range: tuple[float, float]
    v_range: tuple[float, float]
    nu: int = 40
    nv: int = 40
    xi_override: str | None = None

    def __post_init__(self):
        err = self.case.theta_error(self.theta)
        if err:
            raise InvalidTheta(err)
        if not self.curve.compatible_with(self.case):
            raise InvalidSpec(
                f"curve {self.curve.name} ({self.curve.ambient.value}, "
                f"{self.curve.tangent_character.value} tangent) does not fit {self.case.value}; "
                f"need {self.case.ambient.value} with {self.case.tangent_character.value} tangent"
            )
        u0, u1 = self.u_range
        v0, v1 = self.v_range
        if u0 <= 0:
            raise NonpositiveU(f"u_min must be positive, got {u0!r}")
        if not (math.isfinite(u1) and u0 < u1):
            raise InvalidSpec(f"need u_min < u_max, got {self.u_range}")
        if not (math.isfinite(v0) and math.isfinite(v1) and v0 < v1):
            raise InvalidSpec(f"need v_min < v_max, got {self.v_range}")
        if self.nu < 2 or self.nv < 2:
            raise InvalidSpec(f"grid needs nu, nv >= 2, got {self.nu}x{self.nv}")
        if self.xi_override is not None and self.xi_override not in XI_OVERRIDES:
            raise InvalidSpec(f"unknown xi override {self.xi_override!r}")

    @property
    def scale_factor(self) -> float:
        return self.case.scale_factor(self.theta)

    @property
    def slope_factor(self) -> float:
        return self.case.slope_factor(self.theta)

    @property
    def rotor_slope_factor(self) -> float:
        """Slope factor used by the quaternion routes (differs only under an override)."""
        if self.xi_override is None:
            return self.slope_factor
        return XI_OVERRIDES[self.xi_override](self.theta)

    def notes(self) -> list[str]:
        out = []
        if self.case.spherical and self.theta == math.pi / 2:
            out.append("theta = pi/2: xi vanishes identically and the surface is the cone u g(v)")
        if self.xi_override is not None:
            out.append(f"xi override {self.xi_override!r} active on the quaternion routes")
        return out

    def grid_axes(self) -> tuple[np.ndarray, np.ndarray]:
        """Node coordinates ``u_i = u_min + i du`` and ``v_j = v_min + j dv``."""
        u0, u1 = self.u_range
        v0, v1 = self.v_range
        du = (u1 - u0) / (self.nu - 1)
        dv = (v1 - v0) / (self.nv - 1)
        return u0 + du * np.arange(self.nu), v0 + dv * np.arange(self.nv)

    def grid_points(self) -> tuple[np.ndarray, np.ndarray]:
        """Flattened u-major grid (row i holds fixed u_i)."""
        us, vs = self.grid_axes()
        uu, vv = np.meshgrid(us, vs, indexing="ij")
        return uu.ravel(), vv.ravel()

    def describe(self) -> dict:
        return {
            "case": self.case.value,
            "theta": self.theta,
            "curve": self.curve.describe(),
            "u_range": list(self.u_range),
            "v_range": list(self.v_range),
        }


# ---------------------------------------------------------------- scalar API

def _check_u(u: float) -> None:
    if not u > 0:
        raise NonpositiveU(f"u must be positive, got {u!r}")


def xi(case: SlopeCase, theta: float, u: float) -> float:
    _check_u(u)
    err = case.theta_error(theta)
    if err:
        raise InvalidTheta(err)
    return case.slope_factor(theta) * math.log(u)


def scale(case: SlopeCase, theta: float, u: float) -> float:
    _check_u(u)
    return u * case.scale_factor(theta)


def _cs(case: SlopeCase, angle: float) -> tuple[float, float]:
    if case.spherical:
        return math.cos(angle), math.sin(angle)
    return math.cosh(angle), math.sinh(angle)


def _rotor_xi(spec: SurfaceSpec, u: float) -> float:
    _check_u(u)
    return spec.rotor_slope_factor * math.log(u)


def direct(spec: SurfaceSpec, u: float, v: float) -> MinkowskiVec3:
    c, s = _cs(spec.case, xi(spec.case, spec.theta, u))
    f = spec.curve.position(v)
    fp = spec.curve.derivative(v)
    return (f * c + lorentz_cross(f, fp) * s) * scale(spec.case, spec.theta, u)


def q1(spec: SurfaceSpec, u: float, v: float) -> SplitQuaternion:
    return full_angle_quaternion(spec.case, _rotor_xi(spec, u), spec.curve.derivative(v))


def q2(spec: SurfaceSpec, u: float, v: float) -> SplitQuaternion:
    return SplitQuaternion.pure(spec.curve.position(v) * scale(spec.case, spec.theta, u))


def product_quaternion(spec: SurfaceSpec, u: float, v: float) -> SplitQuaternion:
    """``Q1 x Q2`` before projecting away its (vanishing) scalar part."""
    return multiply(q1(spec, u, v), q2(spec, u, v))


def product_form(spec: SurfaceSpec, u: float, v: float) -> MinkowskiVec3:
    return product_quaternion(spec, u, v).vector


def homothetic_form(spec: SurfaceSpec, u: float, v: float) -> MinkowskiVec3:
    rotor = case_rotor(spec.case, _rotor_xi(spec, u), spec.curve.derivative(v))
    m = rotation_matrix(rotor.q)
    return m.apply(spec.curve.position(v)) * scale(spec.case, spec.theta, u)


def surface_normal(spec: SurfaceSpec, u: float, v: float, method: str | None = None) -> MinkowskiVec3:
    """Unit normal ``x_u ^ x_v`` with the partials differentiated numerically from the direct form."""
    _check_u(u)
    x, xu, xv = partials(spec, np.array([u], float), np.array([v], float), method)
    n = _pyk.cross(xu, xv)[0]
    nn = math.sqrt(abs(-n[0] ** 2 + n[1] ** 2 + n[2] ** 2))
    if not nn > DEGENERATE_RATIO * np.linalg.norm(xu[0]) * np.linalg.norm(xv[0]):
        raise DegenerateNormal(f"surface is singular near (u, v) = ({u!r}, {v!r})")
    return MinkowskiVec3.from_seq(n / nn)


def slope_cosine(spec: SurfaceSpec, u: float, v: float, method: str | None = None) -> float:
    """``<x, N> / (|x| |N|)`` at one point; the sign follows the orientation of ``x_u ^ x_v``."""
    x = direct(spec, u, v)
    n = surface_normal(spec, u, v, method)
    xn = vnorm(x)
    if xn <= 1e-9:
        raise DegenerateNormal(f"position vector is null at ({u!r}, {v!r})")
    return metric(x, n) / (xn * vnorm(n))


# ---------------------------------------------------------------- batched API

def _cs_arrays(case: SlopeCase, angle: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if case.spherical:
        return np.cos(angle), np.sin(angle)
    return np.cosh(angle), np.sinh(angle)


def _direct_batch(spec: SurfaceSpec, u: np.ndarray, v: np.ndarray, k) -> np.ndarray:
    pos = _kernels.as_rows(spec.curve.positions(v), 3)
    der = _kernels.as_rows(spec.curve.derivatives(v), 3)
    c, s = _cs_arrays(spec.case, spec.slope_factor * np.log(u))
    x = c[:, None] * pos + s[:, None] * k.cross(pos, der)
    return x * (spec.scale_factor * u)[:, None]


def _forms_chunk(spec: SurfaceSpec, u: np.ndarray, v: np.ndarray, k) -> dict[str, np.ndarray]:
    n = len(u)
    pos = _kernels.as_rows(spec.curve.positions(v), 3)
    der = _kernels.as_rows(spec.curve.derivatives(v), 3)
    sc = spec.scale_factor * u
    rxi = spec.rotor_slope_factor * np.log(u)

    c, s = _cs_arrays(spec.case, rxi)
    quat1 = np.empty((n, 4))
    quat1[:, 0] = c
    quat1[:, 1:] = -s[:, None] * der
    quat2 = np.zeros((n, 4))
    quat2[:, 1:] = sc[:, None] * pos
    product = k.qmul(quat1, quat2)

    ch, sh = _cs_arrays(spec.case, 0.5 * rxi)
    rotor = np.empty((n, 4))
    rotor[:, 0] = ch
    rotor[:, 1:] = -sh[:, None] * der
    mats = k.sandwich_matrices(rotor)
    homothetic = k.matvec(mats, pos) * sc[:, None]

    return {
        "direct": _direct_batch(spec, u, v, k),
        "product": product,
        "homothetic": homothetic,
        "q1": quat1,
        "rotor": rotor,
        "matrices": mats,
    }


def _threads(threads: int | None) -> int:
    if threads is None:
        try:
            threads = int(os.environ.get("SLOPEGEN_THREADS", "1"))
        except ValueError:
            threads = 1
    return max(1, threads)


def _chunked(fn, u: np.ndarray, v: np.ndarray, threads: int) -> dict[str, np.ndarray]:
    n = len(u)
    if threads <= 1 or n < 2 * threads:
        return fn(u, v)
    bounds = np.linspace(0, n, threads + 1).astype(int)
    pieces = [(u[a:b], v[a:b]) for a, b in zip(bounds[:-1], bounds[1:])]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda p: fn(*p), pieces))
    return {key: np.concatenate([p[key] for p in parts]) for key in parts[0]}


def evaluate(spec: SurfaceSpec, u=None, v=None, backend: str | None = None,
             threads: int | None = None) -> dict[str, np.ndarray]:
    """All three forms plus the intermediate quaternions and matrices.

    ``u``/``v`` default to the spec's flattened grid.  ``product`` holds full
    quaternions ``(n, 4)``; ``direct`` and ``homothetic`` are ``(n, 3)``.
    """
    if u is None or v is None:
        u, v = spec.grid_points()
    u = np.asarray(u, dtype=float).ravel()
    v = np.asarray(v, dtype=float).ravel()
    if np.any(~(u > 0)):
        raise NonpositiveU("all u must be positive")
    k = _kernels.get(backend) if backend else _kernels.backend
    return _chunked(lambda a, b: _forms_chunk(spec, a, b, k), u, v, _threads(threads))


def direct_points(spec: SurfaceSpec, u, v, backend: str | None = None) -> np.ndarray:
    k = _kernels.get(backend) if backend else _kernels.backend
    return _direct_batch(spec, np.asarray(u, float).ravel(), np.asarray(v, float).ravel(), k)


def _direct_generic(spec: SurfaceSpec, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Direct form on real or complex parameter arrays (numpy only)."""
    pos = spec.curve.positions(v)
    der = spec.curve.derivatives(v)
    c, s = _cs_arrays(spec.case, spec.slope_factor * np.log(u))
    x = c[:, None] * pos + s[:, None] * _pyk.cross(pos, der)
    return x * (spec.scale_factor * u)[:, None]


def partials(spec: SurfaceSpec, u: np.ndarray, v: np.ndarray, method: str | None = None):
    """Position and first partials of the direct form, shape ``(n, 3)`` each.

    ``complex-step`` (default) perturbs along the imaginary axis and has no
    subtractive cancellation; ``central`` uses central differences with steps
    ``1e-6 u`` and ``1e-6``.
    """
    method = method or DIFF_METHOD
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    x = _direct_generic(spec, u, v)
    if method == "complex-step":
        hu = CS_STEP * u
        xu = _direct_generic(spec, u + 1j * hu, v.astype(complex)).imag / hu[:, None]
        xv = _direct_generic(spec, u.astype(complex), v + 1j * CS_STEP).imag / CS_STEP
    elif method == "central":
        hu = FD_REL_STEP_U * u
        xu = (_direct_generic(spec, u + hu, v) - _direct_generic(spec, u - hu, v)) / (2 * hu)[:, None]
        xv = (_direct_generic(spec, u, v + FD_STEP_V) - _direct_generic(spec, u, v - FD_STEP_V)) / (2 * FD_STEP_V)
    else:
        raise ValueError(f"unknown differentiation method {method!r}")
    return np.ascontiguousarray(x), np.ascontiguousarray(xu), np.ascontiguousarray(xv)


def slope_field(spec: SurfaceSpec, u=None, v=None, backend: str | None = None,
                threads: int | None = None, method: str | None = None) -> dict[str, np.ndarray]:
    """Slope cosine, nondegeneracy ratio and normal orthogonality per grid point."""
    if u is None or v is None:
        u, v = spec.grid_points()
    u = np.asarray(u, dtype=float).ravel()
    v = np.asarray(v, dtype=float).ravel()
    k = _kernels.get(backend) if backend else _kernels.backend

    def chunk(a, b):
        x, xu, xv = partials(spec, a, b, method)
        cosine, ratio, ortho = k.slope_terms(x, xu, xv)
        return {"cosine": cosine, "ratio": ratio, "orthogonality": ortho, "x": x}

    return _chunked(chunk, u, v, _threads(threads))


# ---------------------------------------------------------------- verification

@dataclass(frozen=True)
class VerificationReport:
    max_form_deviation: float
    slope_cosine_mean: float | None
    slope_cosine_stddev: float | None
    rotor_unit_max_dev: float
    lorentz_orthogonality_max_dev: float
    grid: tuple[int, int]
    passed: bool
    excluded_points: int = 0
    cone_violations: int = 0
    spec: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "max_form_deviation": self.max_form_deviation,
            "slope_cosine_mean": self.slope_cosine_mean,
            "slope_cosine_stddev": self.slope_cosine_stddev,
            "rotor_unit_max_dev": self.rotor_unit_max_dev,
            "lorentz_orthogonality_max_dev": self.lorentz_orthogonality_max_dev,
            "grid": list(self.grid),
            "pass": self.passed,
            "excluded_points": self.excluded_points,
            "cone_violations": self.cone_violations,
            "spec": dict(self.spec),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        return cls(
            max_form_deviation=d["max_form_deviation"],
            slope_cosine_mean=d["slope_cosine_mean"],
            slope_cosine_stddev=d["slope_cosine_stddev"],
            rotor_unit_max_dev=d["rotor_unit_max_dev"],
            lorentz_orthogonality_max_dev=d["lorentz_orthogonality_max_dev"],
            grid=tuple(d["grid"]),
            passed=d["pass"],
            excluded_points=d.get("excluded_points", 0),
            cone_violations=d.get("cone_violations", 0),
            spec=d.get("spec", {}),
            notes=tuple(d.get("notes", ())),
        )


def mean_std(values) -> tuple[float, float]:
    """Population mean and standard deviation with compensated summation."""
    vals = [float(x) for x in values]
    if not vals:
        return math.nan, math.nan
    m = math.fsum(vals) / len(vals)
    var = math.fsum((x - m) ** 2 for x in vals) / len(vals)
    return m, math.sqrt(var)


def form_deviations(forms: dict[str, np.ndarray]) -> np.ndarray:
    """Per-point max pairwise Euclidean distance among the three forms.

    The product is compared as a full quaternion against ``(0, x)`` so a
    nonzero scalar part counts as a deviation.
    """
    d = forms["direct"]
    h = forms["homothetic"]
    p = forms["product"]
    d4 = np.concatenate([np.zeros((len(d), 1)), d], axis=1)
    h4 = np.concatenate([np.zeros((len(h), 1)), h], axis=1)
    return np.max(
        np.stack([
            np.linalg.norm(d - h, axis=1),
            np.linalg.norm(d4 - p, axis=1),
            np.linalg.norm(h4 - p, axis=1),
        ]),
        axis=0,
    )


def cone_violations(case: SlopeCase, x: np.ndarray) -> int:
    q = -x[:, 0] ** 2 + x[:, 1] ** 2 + x[:, 2] ** 2
    bad = ~(q < 0) if case is SlopeCase.TIMELIKE_CONE else ~(q > 0)
    return int(np.count_nonzero(bad))


def verify(spec: SurfaceSpec, backend: str | None = None, threads: int | None = None) -> VerificationReport:
    k = _kernels.get(backend) if backend else _kernels.backend
    forms = evaluate(spec, backend=backend, threads=threads)
    d = forms["direct"]
    scale_ref = 1.0 + float(np.max(np.linalg.norm(d, axis=1)))
    form_dev = float(np.max(form_deviations(forms))) / scale_ref

    unit_dev = float(max(
        np.max(np.abs(k.quadratic_forms(forms["q1"]) - 1.0)),
        np.max(np.abs(k.quadratic_forms(forms["rotor"]) - 1.0)),
    ))
    lorentz_dev = float(np.max(k.lorentz_defects(forms["matrices"])))

    sf = slope_field(spec, backend=backend, threads=threads)
    good = np.isfinite(sf["cosine"]) & (sf["ratio"] > DEGENERATE_RATIO)
    excluded = int(len(good) - np.count_nonzero(good))
    if np.any(good):
        # the normal line, not its orientation, is geometric: x_u ^ x_v flips
        # sign across singular curves of the parametrization
        mean, std = mean_std(np.abs(sf["cosine"][good]))
    else:
        mean = std = None

    cones = cone_violations(spec.case, d)
    notes = spec.notes()
    if excluded:
        notes.append(f"{excluded} singular grid points excluded from slope statistics")

    passed = (
        form_dev <= FORM_TOL
        and unit_dev <= ROTOR_TOL
        and lorentz_dev <= LORENTZ_TOL
        and std is not None
        and std <= SLOPE_STD_TOL
        and excluded < MAX_EXCLUDED_FRACTION * len(good)
        and cones == 0
    )
    return VerificationReport(
        max_form_deviation=form_dev,
        slope_cosine_mean=mean,
        slope_cosine_stddev=std,
        rotor_unit_max_dev=unit_dev,
        lorentz_orthogonality_max_dev=lorentz_dev,
        grid=(spec.nu, spec.nv),
        passed=bool(passed),
        excluded_points=excluded,
        cone_violations=cones,
        spec=spec.describe(),
        notes=tuple(notes),
    )
