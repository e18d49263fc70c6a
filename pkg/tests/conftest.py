import math

import numpy as np
from hypothesis import strategies as st

from etaxi.group import V0Point


def relerr(a, b, scale=1.0):
    a = np.atleast_1d(np.asarray(a, dtype=complex))
    b = np.atleast_1d(np.asarray(b, dtype=complex))
    denom = max(1.0, scale, np.abs(a).max(), np.abs(b).max())
    return float(np.abs(a - b).max() / denom)


def pt_close(p, q, tol=1e-12):
    return relerr((p.eta, p.xi), (q.eta, q.xi)) <= tol


scalars = st.complex_numbers(max_magnitude=2.5, allow_nan=False, allow_infinity=False)
small = st.complex_numbers(max_magnitude=1.5, allow_nan=False, allow_infinity=False)
reals = st.floats(-2, 2, allow_nan=False)
angles = st.floats(0, 2 * math.pi, exclude_max=True)


@st.composite
def points(draw, margin=1e-3):
    eta = draw(scalars)
    xi = draw(scalars.filter(lambda x: abs((x - eta) * (x + eta)) >= margin))
    return V0Point(eta, xi)
