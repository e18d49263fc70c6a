"""Euclidean and Minkowskian slices of V0.

Both embeddings evaluate (e^{x1} sinh(t + i tau), e^{x1} cosh(t + i tau)):
Q_{I,t} varies (tau, x1) at fixed t and carries d tau^2 + dx1^2, while
Q_{R,tau} varies (t, x1) at fixed tau and carries -dt^2 + dx1^2.  The slices
tau = 0 and tau = pi are universes I and II.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .covering import AlgebraVector, CylinderPoint, exp_map, lift_Q, wrap_angle
from .group import V0Point, multiply

REALITY_TOL = 1e-10


class Universe(str, Enum):
    I = "I"
    II = "II"


def q_imaginary(t: float, tau: float, x1: float) -> V0Point:
    return exp_map(AlgebraVector(complex(t, tau), x1))


def q_real(tau: float, t: float, x1: float) -> V0Point:
    return exp_map(AlgebraVector(complex(t, tau), x1))


def q_imaginary_via_cylinder(t: float, tau: float, x1: float) -> V0Point:
    """Q_{I,t} as the restriction of Q to {t} x S^1 x R x {1}."""
    return lift_Q(CylinderPoint(t, tau, x1, 0.0))


@dataclass(frozen=True)
class SlicePoint:
    """A point on one of the two slice families; ``tau`` is kept in [0, 2 pi)."""

    kind: str  # "imaginary" or "real"
    t: float
    tau: float
    x1: float

    def __post_init__(self):
        if self.kind not in ("imaginary", "real"):
            raise ValueError(f"unknown slice kind {self.kind!r}")
        object.__setattr__(self, "tau", wrap_angle(float(self.tau)))

    def point(self) -> V0Point:
        if self.kind == "imaginary":
            return q_imaginary(self.t, self.tau, self.x1)
        return q_real(self.tau, self.t, self.x1)


def universe_point(which: Universe | str, t: float, x1: float) -> V0Point:
    which = Universe(which)
    return q_real(0.0 if which is Universe.I else math.pi, t, x1)


def is_real_point(p: V0Point, tol: float = REALITY_TOL) -> bool:
    """Imaginary parts below ``tol`` relative to max(1, |eta|, |xi|)."""
    scale = max(1.0, abs(p.eta), abs(p.xi))
    return abs(p.eta.imag) <= tol * scale and abs(p.xi.imag) <= tol * scale


def in_universe(which: Universe | str, p: V0Point, tol: float = REALITY_TOL) -> bool:
    """Membership in universe I (real, xi > 0) or universe II (real, xi < 0)."""
    if not is_real_point(p, tol):
        return False
    return p.xi.real > 0 if Universe(which) is Universe.I else p.xi.real < 0


def slice_translator(tau_prime: float) -> V0Point:
    """(sinh i tau', cosh i tau') = (i sin tau', cos tau')."""
    return V0Point(1j * math.sin(tau_prime), math.cos(tau_prime), cmath.exp(-1j * tau_prime), cmath.exp(1j * tau_prime))


def translate_real_slice(tau_prime: float, p: V0Point) -> V0Point:
    """Left-translate ``p`` by (i sin tau', cos tau'), moving slice tau onto tau + tau'."""
    return multiply(slice_translator(tau_prime), p)
