"""Split quaternions and timelike constant slope surfaces in Minkowski 3-space."""
from .algebra import SplitQuaternion, classify, conjugate, inverse, multiply, norm, normalize, polar_decompose
from .cases import Ambient, SlopeCase
from .curves import ProfileCurve, builtin, registry
from .minkowski import CausalClass, MinkowskiVec3, causal_character, lorentz_cross, metric
from .rotation import LorentzMatrix3, case_rotor, closed_form_matrix, rotation_matrix
from .slope_surfaces import SurfaceSpec, VerificationReport, evaluate, verify

__version__ = "0.1.0"

__all__ = [
    "Ambient", "CausalClass", "LorentzMatrix3", "MinkowskiVec3", "ProfileCurve", "SlopeCase",
    "SplitQuaternion", "SurfaceSpec", "VerificationReport", "builtin", "case_rotor", "causal_character",
    "classify", "closed_form_matrix", "conjugate", "evaluate", "inverse", "lorentz_cross", "metric",
    "multiply", "norm", "normalize", "polar_decompose", "registry", "rotation_matrix", "verify",
]
