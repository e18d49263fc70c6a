"""One-parameter subgroups of V0 and the Killing fields they generate.

For v = (a, b) in the algebra, rho_v(mu) = exp(mu v) acts on V0 by left
multiplication.  Its generator (eta, xi) -> (b eta + a xi, b xi + a eta) is a
Killing field, and its squared norm equals -a^2 + b^2 at every point.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .covering import EXP_ENVELOPE, AlgebraVector, exp_map
from .errors import Overflow
from .group import V0Point, multiply
from .metric import H_DEFAULT, Tangent, isometry_residual, metric_value

MU_PROBE = 0.3


@dataclass(frozen=True)
class FlowSpec:
    v: AlgebraVector
    mu: float

    def __post_init__(self):
        object.__setattr__(self, "mu", float(self.mu))
        if abs(self.mu) * (abs(self.v.z0.real) + abs(self.v.z1.real)) > EXP_ENVELOPE:
            raise Overflow(f"flow {self.v} at mu={self.mu} leaves the exp envelope")

    @property
    def a(self) -> complex:
        return self.v.z0

    @property
    def b(self) -> complex:
        return self.v.z1


def one_param_point(f: FlowSpec) -> V0Point:
    return exp_map(f.v * f.mu)


def flow_apply(f: FlowSpec, p: V0Point) -> V0Point:
    """rho_v(mu) * p in closed form, e^{mu b}(eta ch + xi sh, xi ch + eta sh)."""
    ch = cmath.cosh(f.mu * f.a)
    sh = cmath.sinh(f.mu * f.a)
    scale = cmath.exp(f.mu * f.b)
    return V0Point(
        scale * (p.eta * ch + p.xi * sh),
        scale * (p.xi * ch + p.eta * sh),
        cmath.exp(f.mu * (f.b - f.a)) * p.u,
        cmath.exp(f.mu * (f.b + f.a)) * p.w,
    )


def flow_apply_product(f: FlowSpec, p: V0Point) -> V0Point:
    """Same action as :func:`flow_apply`, computed through the group product."""
    return multiply(one_param_point(f), p)


def killing_vector(v: AlgebraVector, p: V0Point) -> Tangent:
    a, b = v.z0, v.z1
    return Tangent(b * p.eta + a * p.xi, b * p.xi + a * p.eta)


def causal_mismatch(v: AlgebraVector, p: V0Point, alpha: float = 1.0) -> float:
    """|g_p(K, K) - flat_form(v)/alpha^2| for the Killing field K induced by ``v``."""
    return abs(metric_value(p, killing_vector(v, p), alpha) - v.flat_form() / (alpha * alpha))


def killing_residual(
    v: AlgebraVector,
    p: V0Point,
    t: Tangent,
    mu_probe: float = MU_PROBE,
    alpha: float = 1.0,
    h: float = H_DEFAULT,
) -> float:
    """Isometry defect of the flow at ``mu_probe``, combined with the causal-character defect.

    Returns the larger of the finite-difference isometry residual of
    q -> rho_v(mu_probe) * q at (p, t) and :func:`causal_mismatch` at ``p``.
    The second term is zero exactly when the Killing vector at ``p`` has the
    same squared norm as ``v`` in the flat algebra frame.
    """
    f = FlowSpec(v, mu_probe)
    iso = isometry_residual(lambda q: flow_apply(f, q), p, t, alpha, h)
    return max(iso, causal_mismatch(v, p, alpha))
