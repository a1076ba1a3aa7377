"""The three families of timelike constant slope surfaces."""
from __future__ import annotations

import enum
import math

from .minkowski import CausalClass


class Ambient(enum.Enum):
    H2 = "H2"
    S12 = "S12"


class SlopeCase(enum.Enum):
    """Surface family.

    ``TIMELIKE_CONE``: ``u cosh(th) (cosh xi f + sinh xi f ^ f')``, xi = tanh(th) ln u,
    f a unit spacelike curve on H^2.
    ``SPACELIKE_CONE_SPHERICAL``: ``u sin(th) (cos xi g + sin xi g ^ g')``,
    xi = cot(th) ln u, g a unit timelike curve on S^2_1.
    ``SPACELIKE_CONE_HYPERBOLIC``: ``u sinh(th) (cosh xi h + sinh xi h ^ h')``,
    xi = coth(th) ln u, h a unit spacelike curve on S^2_1.
    """

    TIMELIKE_CONE = "timelike-cone"
    SPACELIKE_CONE_SPHERICAL = "spacelike-cone-spherical"
    SPACELIKE_CONE_HYPERBOLIC = "spacelike-cone-hyperbolic"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> SlopeCase:
        try:
            return cls(name)
        except ValueError:
            choices = ", ".join(c.value for c in cls)
            raise ValueError(f"unknown case {name!r}; expected one of {choices}") from None

    @property
    def spherical(self) -> bool:
        """True when the rotation angle is circular (timelike axis)."""
        return self is SlopeCase.SPACELIKE_CONE_SPHERICAL

    @property
    def ambient(self) -> Ambient:
        return Ambient.H2 if self is SlopeCase.TIMELIKE_CONE else Ambient.S12

    @property
    def tangent_character(self) -> CausalClass:
        """Causal character required of the profile curve's tangent (= rotation axis)."""
        return CausalClass.TIMELIKE if self.spherical else CausalClass.SPACELIKE

    def slope_factor(self, theta: float) -> float:
        if self is SlopeCase.TIMELIKE_CONE:
            return math.tanh(theta)
        if self is SlopeCase.SPACELIKE_CONE_SPHERICAL:
            return 1.0 / math.tan(theta)
        return 1.0 / math.tanh(theta)

    def scale_factor(self, theta: float) -> float:
        if self is SlopeCase.TIMELIKE_CONE:
            return math.cosh(theta)
        if self is SlopeCase.SPACELIKE_CONE_SPHERICAL:
            return math.sin(theta)
        return math.sinh(theta)

    def theta_error(self, theta: float) -> str | None:
        """Reason ``theta`` is out of range for this family, or None."""
        if not math.isfinite(theta) or theta <= 0:
            return f"theta must be a positive finite number, got {theta!r}"
        if self.spherical and theta > math.pi / 2:
            return f"theta must lie in (0, pi/2] for {self.value}, got {theta!r}"
        return None
