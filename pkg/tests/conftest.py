import math

import numpy as np
import pytest
from hypothesis import strategies as st

from slopegen.algebra import SplitQuaternion
from slopegen.minkowski import MinkowskiVec3

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
quats = st.builds(SplitQuaternion, finite, finite, finite, finite)
vecs = st.builds(MinkowskiVec3, finite, finite, finite)


@st.composite
def unit_timelike(draw):
    """Unit timelike quaternion built from bounded hyperbolic and spherical angles."""
    a = draw(st.floats(-math.pi, math.pi))
    b = draw(st.floats(-1.5, 1.5))
    c = draw(st.floats(-math.pi, math.pi))
    # (cos a, sin a) scaled by cosh b, (j, k) part by sinh b: I = cosh^2 - sinh^2 = 1
    ch, sh = math.cosh(b), math.sinh(b)
    return SplitQuaternion(ch * math.cos(a), ch * math.sin(a), sh * math.cos(c), sh * math.sin(c))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def qclose(p, q, tol):
    return all(abs(a - b) <= tol * (1.0 + abs(b)) for a, b in zip(p, q))
