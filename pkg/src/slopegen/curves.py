"""Unit-speed profile curves on H^2 and S^2_1 with analytic derivatives.

Every curve is vectorized: ``positions(v)`` and ``derivatives(v)`` take an
array of parameters and return an ``(n, 3)`` array of ``(t, a, b)`` rows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .cases import Ambient, SlopeCase
from .errors import InvalidParam, UnknownCurve
from .minkowski import CausalClass, MinkowskiVec3

ArrayFn = Callable[[np.ndarray], np.ndarray]

FD_STEP = 1e-5


@dataclass(frozen=True)
class ProfileCurve:
    name: str
    ambient: Ambient
    tangent_character: CausalClass
    position_fn: ArrayFn = field(repr=False, compare=False)
    derivative_fn: ArrayFn = field(repr=False, compare=False)
    params: Mapping[str, float] = field(default_factory=dict)

    # complex parameters are passed through for complex-step differentiation
    def positions(self, v) -> np.ndarray:
        return self.position_fn(_param_array(v))

    def derivatives(self, v) -> np.ndarray:
        return self.derivative_fn(_param_array(v))

    def position(self, v: float) -> MinkowskiVec3:
        return MinkowskiVec3.from_seq(self.positions(v)[0])

    def derivative(self, v: float) -> MinkowskiVec3:
        return MinkowskiVec3.from_seq(self.derivatives(v)[0])

    @property
    def ambient_value(self) -> float:
        return -1.0 if self.ambient is Ambient.H2 else 1.0

    @property
    def speed_value(self) -> float:
        return 1.0 if self.tangent_character is CausalClass.SPACELIKE else -1.0

    def compatible_with(self, case: SlopeCase) -> bool:
        return self.ambient is case.ambient and self.tangent_character is case.tangent_character

    def describe(self) -> str:
        if not self.params:
            return self.name
        extra = ",".join(f"{k}={v!r}" for k, v in sorted(self.params.items()))
        return f"{self.name}({extra})"


def _param_array(v) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(v))
    if np.iscomplexobj(arr):
        return arr.astype(complex)
    return arr.astype(float)


def _rows(*cols: np.ndarray) -> np.ndarray:
    return np.stack(np.broadcast_arrays(*cols), axis=-1)


def _h2_hyperbola(params):
    def pos(v):
        return _rows(np.cosh(v), np.zeros_like(v), np.sinh(v))

    def der(v):
        return _rows(np.sinh(v), np.zeros_like(v), np.cosh(v))

    return Ambient.H2, CausalClass.SPACELIKE, pos, der


def _h2_circle(params):
    a = params["a"]
    if a == 0:
        raise InvalidParam("h2-circle needs a != 0 (a = 0 collapses to a point)")
    ch, r = math.cosh(a), math.sinh(a)

    def pos(v):
        s = v / r
        return _rows(np.full_like(v, ch), r * np.cos(s), r * np.sin(s))

    def der(v):
        s = v / r
        return _rows(np.zeros_like(v), -np.sin(s), np.cos(s))

    return Ambient.H2, CausalClass.SPACELIKE, pos, der


def _s12_timelike_hyperbola(params):
    # S^2_1 cut by the plane a = alpha, |alpha| < 1
    alpha = params.get("a", 0.0)
    if not -1.0 < alpha < 1.0:
        raise InvalidParam(f"s12-timelike-hyperbola needs |a| < 1, got {alpha!r}")
    r = math.sqrt(1.0 - alpha * alpha)

    def pos(v):
        s = v / r
        return _rows(r * np.sinh(s), np.full_like(v, alpha), r * np.cosh(s))

    def der(v):
        s = v / r
        return _rows(np.cosh(s), np.zeros_like(v), np.sinh(s))

    return Ambient.S12, CausalClass.TIMELIKE, pos, der


def _s12_circle(params):
    def pos(v):
        return _rows(np.zeros_like(v), np.cos(v), np.sin(v))

    def der(v):
        return _rows(np.zeros_like(v), -np.sin(v), np.cos(v))

    return Ambient.S12, CausalClass.SPACELIKE, pos, der


def _s12_spacelike_circle_like(params):
    # S^2_1 cut by the plane t = sinh a: a circle of radius cosh a
    a = params["a"]
    sh, r = math.sinh(a), math.cosh(a)

    def pos(v):
        s = v / r
        return _rows(np.full_like(v, sh), r * np.cos(s), r * np.sin(s))

    def der(v):
        s = v / r
        return _rows(np.zeros_like(v), -np.sin(s), np.cos(s))

    return Ambient.S12, CausalClass.SPACELIKE, pos, der


# name -> (builder, default params)
_REGISTRY: dict[str, tuple[Callable, dict[str, float]]] = {
    "h2-hyperbola": (_h2_hyperbola, {}),
    "h2-circle": (_h2_circle, {"a": 1.0}),
    "s12-timelike-hyperbola": (_s12_timelike_hyperbola, {"a": 0.0}),
    "s12-circle": (_s12_circle, {}),
    "s12-spacelike-circle-like": (_s12_spacelike_circle_like, {"a": 0.5}),
}


def registry() -> list[str]:
    return sorted(_REGISTRY)


def builtin(name: str, params: Mapping[str, float] | None = None) -> ProfileCurve:
    try:
        build, defaults = _REGISTRY[name]
    except KeyError:
        raise UnknownCurve(f"unknown curve {name!r}; known: {', '.join(registry())}") from None
    merged = dict(defaults)
    for key, value in (params or {}).items():
        if key not in defaults:
            raise InvalidParam(f"curve {name!r} takes no parameter {key!r}")
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise InvalidParam(f"parameter {key}={value!r} is not a number") from None
        if not math.isfinite(value):
            raise InvalidParam(f"parameter {key}={value!r} is not finite")
        merged[key] = value
    ambient, tangent, pos, der = build(merged)
    return ProfileCurve(name, ambient, tangent, pos, der, merged)


@dataclass(frozen=True)
class ValidationOutcome:
    n: int
    ambient_deviation: float
    speed_deviation: float
    orthogonality_deviation: float
    fd_deviation: float

    def ok(self, tol: float = 1e-10, fd_tol: float = 1e-7) -> bool:
        return (
            max(self.ambient_deviation, self.speed_deviation, self.orthogonality_deviation) <= tol
            and self.fd_deviation <= fd_tol
        )


def _metric_rows(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return -x[:, 0] * y[:, 0] + x[:, 1] * y[:, 1] + x[:, 2] * y[:, 2]


def validate(curve: ProfileCurve, v_min: float, v_max: float, n: int) -> ValidationOutcome:
    """Sample the curve and measure how far it is from its stated hypotheses."""
    if n < 2 or not v_min < v_max:
        raise ValueError("need n >= 2 and v_min < v_max")
    v = np.linspace(v_min, v_max, n)
    p = curve.positions(v)
    d = curve.derivatives(v)
    fd = (curve.positions(v + FD_STEP) - curve.positions(v - FD_STEP)) / (2 * FD_STEP)
    return ValidationOutcome(
        n=n,
        ambient_deviation=float(np.max(np.abs(_metric_rows(p, p) - curve.ambient_value))),
        speed_deviation=float(np.max(np.abs(_metric_rows(d, d) - curve.speed_value))),
        orthogonality_deviation=float(np.max(np.abs(_metric_rows(p, d)))),
        fd_deviation=float(np.max(np.abs(fd - d))),
    )
