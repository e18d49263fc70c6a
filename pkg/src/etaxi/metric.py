"""The holomorphic metric of V0 (and of V = V0 x C^2) and numerical pullbacks.

ds^2 = (-d_eta^2 + d_xi^2) / (alpha^2 (xi^2 - eta^2)) + dy^2 + dz^2

The form is complex-bilinear: no conjugation is applied to tangents, so on
real slices it yields the real Euclidean or Minkowskian values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import DomainEdge, NearCone, OnLightCone
from .group import EPS_CONE, V0Point, as_complex, cone_form

H_DEFAULT = 1e-6


@dataclass(frozen=True)
class Tangent:
    d_eta: complex
    d_xi: complex

    def __post_init__(self):
        object.__setattr__(self, "d_eta", as_complex(self.d_eta, "d_eta"))
        object.__setattr__(self, "d_xi", as_complex(self.d_xi, "d_xi"))

    def __add__(self, other: Tangent) -> Tangent:
        return Tangent(self.d_eta + other.d_eta, self.d_xi + other.d_xi)

    def __sub__(self, other: Tangent) -> Tangent:
        return Tangent(self.d_eta - other.d_eta, self.d_xi - other.d_xi)

    def __neg__(self) -> Tangent:
        return Tangent(-self.d_eta, -self.d_xi)

    def __mul__(self, s) -> Tangent:
        return Tangent(s * self.d_eta, s * self.d_xi)

    __rmul__ = __mul__


@dataclass(frozen=True)
class FullPoint:
    """A point (eta, xi, y, z) of V = V0 x C^2."""

    base: V0Point
    y: complex = 0j
    z: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "y", as_complex(self.y, "y"))
        object.__setattr__(self, "z", as_complex(self.z, "z"))


@dataclass(frozen=True)
class FullTangent:
    base: Tangent
    dy: complex = 0j
    dz: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "dy", as_complex(self.dy, "dy"))
        object.__setattr__(self, "dz", as_complex(self.dz, "dz"))


@dataclass(frozen=True)
class ParamCurve:
    """A real-parameter curve into V0 (or V) defined on a closed interval."""

    func: Callable[[float], V0Point | FullPoint]
    domain: tuple[float, float] = field(default=(-math.inf, math.inf))

    def __call__(self, s: float):
        return self.func(s)


def metric_value(p: V0Point, t: Tangent, alpha: float = 1.0) -> complex:
    """Evaluate the quadratic form of g0 at ``p`` on ``t``."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    num = -t.d_eta * t.d_eta + t.d_xi * t.d_xi
    return num / (alpha * alpha * cone_form(p))


def full_metric_value(p: FullPoint, t: FullTangent, alpha: float = 1.0) -> complex:
    return metric_value(p.base, t.base, alpha) + t.dy * t.dy + t.dz * t.dz


def metric_bilinear(p: V0Point, x: Tangent, y: Tangent, alpha: float = 1.0) -> complex:
    """Symmetric bilinear form recovered by polarization, (Q(x+y) - Q(x-y)) / 4."""
    return (metric_value(p, x + y, alpha) - metric_value(p, x - y, alpha)) / 4


def _difference(a, b, h: float):
    if isinstance(a, FullPoint):
        return FullTangent(
            Tangent((a.base.eta - b.base.eta) / (2 * h), (a.base.xi - b.base.xi) / (2 * h)),
            (a.y - b.y) / (2 * h),
            (a.z - b.z) / (2 * h),
        )
    return Tangent((a.eta - b.eta) / (2 * h), (a.xi - b.xi) / (2 * h))


def curve_derivative(c: ParamCurve, s: float, h: float = H_DEFAULT):
    """Central difference (c(s+h) - c(s-h)) / 2h.

    Returns a :class:`Tangent`, or a :class:`FullTangent` for curves into V.

    :raises DomainEdge: if ``s - h`` or ``s + h`` falls outside ``c.domain``
    """
    lo, hi = c.domain
    if s - h < lo or s + h > hi:
        raise DomainEdge(f"stencil [{s - h}, {s + h}] leaves domain [{lo}, {hi}]")
    return _difference(c(s + h), c(s - h), h)


def pullback_form(
    immersion: Callable[..., V0Point],
    point: Sequence[float],
    alpha: float = 1.0,
    h: float = H_DEFAULT,
    bounds: Sequence[tuple[float, float]] | None = None,
) -> np.ndarray:
    """Numerically pull the metric back along ``immersion`` at ``point``.

    ``immersion`` takes k real arguments.  Coordinate tangents come from
    central differences; off-diagonal entries come from polarization.
    """
    x = np.asarray(point, dtype=float)
    k = x.size
    tangents = []
    for i in range(k):
        def along(s, i=i):
            y = x.copy()
            y[i] += s
            return immersion(*y)

        dom = (-math.inf, math.inf)
        if bounds is not None:
            lo, hi = bounds[i]
            dom = (lo - x[i], hi - x[i])
        tangents.append(curve_derivative(ParamCurve(along, dom), 0.0, h))

    p = immersion(*x)
    g = np.empty((k, k), dtype=complex)
    for i in range(k):
        g[i, i] = metric_value(p, tangents[i], alpha)
        for j in range(i):
            g[i, j] = g[j, i] = metric_bilinear(p, tangents[i], tangents[j], alpha)
    return g


def pullback_residual(
    immersion: Callable[..., V0Point],
    point: Sequence[float],
    expected_form,
    alpha: float = 1.0,
    h: float = H_DEFAULT,
    bounds: Sequence[tuple[float, float]] | None = None,
) -> float:
    """Max-norm difference between the numerical pullback and ``expected_form``."""
    g = pullback_form(immersion, point, alpha, h, bounds)
    return float(np.max(np.abs(g - np.asarray(expected_form, dtype=complex))))


def _guarded(transform: Callable[[V0Point], V0Point], q: V0Point, eps_cone: float) -> V0Point:
    try:
        out = transform(q)
    except OnLightCone as exc:
        raise NearCone(str(exc)) from exc
    if abs(cone_form(out)) < eps_cone:
        raise NearCone(f"transformed stencil point {out} is within {eps_cone:.3g} of the cone")
    return out


def _stencil(p: V0Point, t: Tangent, h: float) -> tuple[V0Point, V0Point]:
    try:
        plus = V0Point(p.eta + h * t.d_eta, p.xi + h * t.d_xi)
        minus = V0Point(p.eta - h * t.d_eta, p.xi - h * t.d_xi)
    except OnLightCone as exc:
        raise NearCone(str(exc)) from exc
    return plus, minus


def pushforward(
    transform: Callable[[V0Point], V0Point],
    p: V0Point,
    t: Tangent,
    h: float = H_DEFAULT,
    eps_cone: float = EPS_CONE,
) -> Tangent:
    """Differential of a holomorphic ``transform`` at ``p`` applied to ``t``, by central difference."""
    plus, minus = _stencil(p, t, h)
    return _difference(_guarded(transform, plus, eps_cone), _guarded(transform, minus, eps_cone), h)


def isometry_residual(
    transform: Callable[[V0Point], V0Point],
    p: V0Point,
    t: Tangent,
    alpha: float = 1.0,
    h: float = H_DEFAULT,
    eps_cone: float = EPS_CONE,
) -> float:
    """|g(T(p))(DT t, DT t) - g(p)(t, t)| with DT from central differences.

    The reference side uses the tangent the identity map recovers from the
    same stencil, so rounding in p +- h t cancels and the identity scores 0.

    :raises NearCone: if the transformed stencil approaches the cone
    """
    image = _guarded(transform, p, eps_cone)
    plus, minus = _stencil(p, t, h)
    pushed = _difference(_guarded(transform, plus, eps_cone), _guarded(transform, minus, eps_cone), h)
    reference = _difference(plus, minus, h)
    return abs(metric_value(image, pushed, alpha) - metric_value(p, reference, alpha))
