"""Exponential map C^2 -> V0, its principal logarithm, and the cylinder chart.

exp(z0, z1) = (e^{z1} sinh z0, e^{z1} cosh z0) is the universal covering map
of V0.  Its kernel is the lattice {(i pi m, i pi n) : m = n mod 2}, so the
cylinder map Q(u0, v0, u1, v1) = exp(u0 + i v0, u1 + i v1) with
0 <= v0, v1 < 2 pi is two-to-one: (v0, v1) and (v0 + pi, v1 + pi) agree.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import Overflow
from .group import V0Point, as_complex, to_diagonal

TWO_PI = 2.0 * math.pi
EXP_ENVELOPE = 700.0
LATTICE_TOL = 1e-10


def wrap_angle(x: float) -> float:
    """Reduce ``x`` into [0, 2 pi)."""
    r = math.fmod(x, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    # fmod of a tiny negative number plus 2 pi rounds up to 2 pi
    if r >= TWO_PI:
        r = 0.0
    return r


@dataclass(frozen=True)
class AlgebraVector:
    """An element (z0, z1) of the Lie algebra C^2, coefficients of d/d_eta-slot and d/d_xi-slot."""

    z0: complex
    z1: complex

    def __post_init__(self):
        object.__setattr__(self, "z0", as_complex(self.z0, "z0"))
        object.__setattr__(self, "z1", as_complex(self.z1, "z1"))

    def __add__(self, other: AlgebraVector) -> AlgebraVector:
        return AlgebraVector(self.z0 + other.z0, self.z1 + other.z1)

    def __sub__(self, other: AlgebraVector) -> AlgebraVector:
        return AlgebraVector(self.z0 - other.z0, self.z1 - other.z1)

    def __neg__(self) -> AlgebraVector:
        return AlgebraVector(-self.z0, -self.z1)

    def __mul__(self, s) -> AlgebraVector:
        return AlgebraVector(s * self.z0, s * self.z1)

    __rmul__ = __mul__

    def flat_form(self) -> complex:
        """The flat quadratic form -z0^2 + z1^2 that exp pulls the metric back to."""
        return -self.z0 * self.z0 + self.z1 * self.z1


@dataclass(frozen=True)
class CylinderPoint:
    """Coordinates (u0, v0, u1, v1) on (R x S^1)^2; angles are reduced into [0, 2 pi)."""

    u0: float
    v0: float
    u1: float
    v1: float

    def __post_init__(self):
        for name in ("u0", "v0", "u1", "v1"):
            val = float(getattr(self, name))
            if not math.isfinite(val):
                raise ValueError(f"{name} is not finite")
            object.__setattr__(self, name, val)
        object.__setattr__(self, "v0", wrap_angle(self.v0))
        object.__setattr__(self, "v1", wrap_angle(self.v1))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.u0, self.v0, self.u1, self.v1)


@dataclass(frozen=True)
class LatticeShift:
    """The algebra shift (i pi m, i pi n)."""

    m: int
    n: int

    @property
    def in_kernel(self) -> bool:
        """True iff exp is unchanged by this shift."""
        return (self.m - self.n) % 2 == 0

    def as_vector(self) -> AlgebraVector:
        return AlgebraVector(1j * math.pi * self.m, 1j * math.pi * self.n)


def exp_map(v: AlgebraVector) -> V0Point:
    """exp(z0, z1) = (e^{z1} sinh z0, e^{z1} cosh z0).

    :raises Overflow: if ``|Re z0| + |Re z1|`` exceeds the double-precision envelope
    """
    if abs(v.z0.real) + abs(v.z1.real) > EXP_ENVELOPE:
        raise Overflow(f"|Re z0| + |Re z1| > {EXP_ENVELOPE} for {v}")
    scale = cmath.exp(v.z1)
    return V0Point(
        scale * cmath.sinh(v.z0),
        scale * cmath.cosh(v.z0),
        cmath.exp(v.z1 - v.z0),
        cmath.exp(v.z1 + v.z0),
    )


def _log_2pi(z: complex) -> complex:
    """Complex logarithm with argument in [0, 2 pi)."""
    arg = cmath.phase(z)
    if arg < 0.0:
        arg += TWO_PI
        if arg >= TWO_PI:
            arg = 0.0
    return complex(math.log(abs(z)), arg)


def log_map(p: V0Point) -> AlgebraVector:
    """Principal logarithm, computed on the diagonal chart.

    With u = xi - eta and w = xi + eta, returns
    z0 = (Log w - Log u)/2 and z1 = (Log w + Log u)/2, where each Log takes its
    argument in [0, 2 pi).
    """
    d = to_diagonal(p)
    lu, lw = _log_2pi(d.u), _log_2pi(d.w)
    return AlgebraVector((lw - lu) / 2, (lw + lu) / 2)


def project(v: AlgebraVector) -> CylinderPoint:
    """Pi: C^2 -> (R x S^1)^2, splitting each coordinate into real part and angle."""
    return CylinderPoint(v.z0.real, v.z0.imag, v.z1.real, v.z1.imag)


def lift_Q(c: CylinderPoint) -> V0Point:
    """Q(u0, e^{i v0}, u1, e^{i v1}) = exp(u0 + i v0, u1 + i v1)."""
    return exp_map(AlgebraVector(complex(c.u0, c.v0), complex(c.u1, c.v1)))


def lattice_shift(a: AlgebraVector, b: AlgebraVector, tol: float = LATTICE_TOL) -> LatticeShift | None:
    """Return the shift (i pi m, i pi n) equal to ``a - b``, or None if there is none."""
    d = a - b
    if abs(d.z0.real) > tol or abs(d.z1.real) > tol:
        return None
    m = round(d.z0.imag / math.pi)
    n = round(d.z1.imag / math.pi)
    if abs(d.z0.imag - m * math.pi) > tol or abs(d.z1.imag - n * math.pi) > tol:
        return None
    return LatticeShift(int(m), int(n))


def lattice_equivalent(a: AlgebraVector, b: AlgebraVector, tol: float = LATTICE_TOL) -> bool:
    """True iff ``exp_map(a) == exp_map(b)``, decided from the lattice of ``a - b``."""
    shift = lattice_shift(a, b, tol)
    return shift is not None and shift.in_kernel
