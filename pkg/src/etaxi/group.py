"""The commutative complex Lie group V0 = C^2 minus the cone xi^2 = eta^2.

Points are pairs (eta, xi) with the product

    (eta, xi) * (eta', xi') = (xi eta' + eta xi', xi xi' + eta eta')

which is matrix multiplication under Phi(eta, xi) = [[xi, eta], [eta, xi]].
The diagonal chart (u, w) = (xi - eta, xi + eta) turns the product into
componentwise multiplication on C* x C*.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import NonFinite, OnLightCone

EPS_CONE = 1e-12
TOL_MEMBER = 1e-10

# Columns of R diagonalize every Phi(p): inv(R) @ Phi(p) @ R = diag(xi - eta, xi + eta).
CONJUGATOR = np.array([[1.0, 1.0], [-1.0, 1.0]]) / math.sqrt(2.0)


def as_complex(z, name: str = "value") -> complex:
    """Coerce ``z`` to a finite Python complex, raising :class:`NonFinite` otherwise."""
    c = complex(z)
    if not cmath.isfinite(c):
        raise NonFinite(f"{name} is not finite: {c!r}")
    return c


@dataclass(frozen=True)
class V0Point:
    """A point (eta, xi) of V0.

    Alongside (eta, xi) the point carries its diagonal coordinates
    u = xi - eta and w = xi + eta.  They are derived from (eta, xi) when not
    supplied; exp, products and inverses set them directly, so the cone form
    u * w keeps full relative precision even where xi and eta agree to every
    printed digit (e.g. far out along a boost orbit).

    Direct construction only rejects points exactly on the cone; use
    :func:`make_point` to apply the ``EPS_CONE`` admission guard.
    """

    eta: complex
    xi: complex
    u: complex = field(default=None, compare=False, repr=False)
    w: complex = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        eta = as_complex(self.eta, "eta")
        xi = as_complex(self.xi, "xi")
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "xi", xi)
        if self.u is None or self.w is None:
            object.__setattr__(self, "u", xi - eta)
            object.__setattr__(self, "w", xi + eta)
        else:
            object.__setattr__(self, "u", as_complex(self.u, "u"))
            object.__setattr__(self, "w", as_complex(self.w, "w"))
        if self.u * self.w == 0:
            raise OnLightCone(f"({eta}, {xi}) lies on xi^2 - eta^2 = 0")

    def __neg__(self) -> V0Point:
        return V0Point(-self.eta, -self.xi, -self.u, -self.w)

    def __mul__(self, other: V0Point) -> V0Point:
        if not isinstance(other, V0Point):
            return NotImplemented
        return multiply(self, other)

    def as_tuple(self) -> tuple[complex, complex]:
        return (self.eta, self.xi)


IDENTITY = V0Point(0j, 1 + 0j)


@dataclass(frozen=True)
class DiagonalPair:
    """Coordinates (u, w) = (xi - eta, xi + eta) on C* x C*."""

    u: complex
    w: complex

    def __post_init__(self):
        object.__setattr__(self, "u", as_complex(self.u, "u"))
        object.__setattr__(self, "w", as_complex(self.w, "w"))


class Membership(NamedTuple):
    in_G1: bool
    in_G2: bool


def make_point(eta, xi, eps_cone: float = EPS_CONE) -> V0Point:
    """Admit (eta, xi) as a point of V0.

    :param eps_cone: minimum admissible ``|xi^2 - eta^2|``
    :raises NonFinite: if a coordinate is NaN or infinite
    :raises OnLightCone: if the point is within ``eps_cone`` of the cone
    """
    eta = as_complex(eta, "eta")
    xi = as_complex(xi, "xi")
    p = V0Point(eta, xi)
    cone = cone_form(p)
    if abs(cone) < eps_cone:
        raise OnLightCone(f"|xi^2 - eta^2| = {abs(cone):.3g} < {eps_cone:.3g} at ({eta}, {xi})")
    return p


def multiply(p: V0Point, q: V0Point) -> V0Point:
    return V0Point(
        p.xi * q.eta + p.eta * q.xi,
        p.xi * q.xi + p.eta * q.eta,
        p.u * q.u,
        p.w * q.w,
    )


def cone_form(p: V0Point) -> complex:
    """Return xi^2 - eta^2, evaluated as u * w on the diagonal chart."""
    return p.u * p.w


def inverse(p: V0Point) -> V0Point:
    c = cone_form(p)
    return V0Point(-p.eta / c, p.xi / c, 1 / p.u, 1 / p.w)


def to_matrix(p: V0Point) -> np.ndarray:
    """Phi(eta, xi) = [[xi, eta], [eta, xi]] as a complex 2x2 array."""
    return np.array([[p.xi, p.eta], [p.eta, p.xi]], dtype=complex)


def from_matrix(m: np.ndarray) -> V0Point:
    """Inverse of :func:`to_matrix`; reads eta from the off-diagonal and xi from the diagonal."""
    return V0Point(complex(m[0, 1]), complex(m[0, 0]))


def to_diagonal(p: V0Point) -> DiagonalPair:
    return DiagonalPair(p.u, p.w)


def from_diagonal(d: DiagonalPair) -> V0Point:
    if d.u == 0 or d.w == 0:
        raise OnLightCone(f"diagonal entries must be nonzero, got ({d.u}, {d.w})")
    return V0Point((d.w - d.u) / 2, (d.w + d.u) / 2, d.u, d.w)


def subgroup_membership(p: V0Point, tol: float = TOL_MEMBER) -> Membership:
    """Test membership in G1 (cone form 1) and G2 (G1 with real coordinates)."""
    in_g1 = abs(cone_form(p) - 1) <= tol
    real = abs(p.eta.imag) <= tol and abs(p.xi.imag) <= tol
    return Membership(in_g1, in_g1 and real)


def boost(phi: float) -> V0Point:
    """The element (sinh phi, cosh phi) of G2, a Lorentz boost of rapidity ``phi``."""
    return V0Point(math.sinh(phi), math.cosh(phi), math.exp(-phi), math.exp(phi))


def boost_matrix(phi: float) -> np.ndarray:
    c, s = math.cosh(phi), math.sinh(phi)
    return np.array([[c, s], [s, c]])
