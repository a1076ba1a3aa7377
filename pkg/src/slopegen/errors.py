"""Exception hierarchy shared by the geometry kernel and the CLI."""


class SlopegenError(Exception):
    """Base class for every error raised by slopegen."""


class NotInvertible(SlopegenError, ArithmeticError):
    """Lightlike split quaternions have no multiplicative inverse."""


class DegenerateNorm(SlopegenError, ArithmeticError):
    """Normalization requested for a quaternion of (numerically) zero norm."""


class NotDecomposable(SlopegenError, ValueError):
    """No polar form exists for the given quaternion."""


class NotTimelike(SlopegenError, ValueError):
    """Rotations in E^3_1 require a timelike quaternion."""


class AxisCausalityMismatch(SlopegenError, ValueError):
    pass


class AxisNotUnit(SlopegenError, ValueError):
    pass


class UnknownCurve(SlopegenError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown curve"


class InvalidParam(SlopegenError, ValueError):
    pass


class NonpositiveU(SlopegenError, ValueError):
    pass


class InvalidTheta(SlopegenError, ValueError):
    pass


class InvalidSpec(SlopegenError, ValueError):
    """A surface request that is inconsistent (grid, ranges, curve/case pairing)."""


class DegenerateNormal(SlopegenError, ArithmeticError):
    """The surface is singular at the requested point."""
