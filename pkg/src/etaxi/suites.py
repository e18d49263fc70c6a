"""Seeded verification suites over the whole toolkit.

Every check draws its samples from its own ``numpy.random.Generator``
(PCG64) seeded with ``[seed, crc32(check_id)]``, so a check produces the same
residual whether it runs alone, within its suite, or under ``all``.  Complex
scalars are drawn uniformly from the square [-2, 2] x [-2, 2] and points of V0
are rejected when ``|xi^2 - eta^2|`` falls under the admission guard.
Residuals are reduced by ``max``.
"""

from __future__ import annotations

import math
import time
import zlib
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np
from scipy.spatial.distance import pdist

from . import contour as ct
from .covering import (
    TWO_PI,
    AlgebraVector,
    exp_map,
    lattice_equivalent,
    lift_Q,
    log_map,
    project,
)
from .embeddings import (
    in_universe,
    q_imaginary,
    q_imaginary_via_cylinder,
    q_real,
    translate_real_slice,
    universe_point,
)
from .errors import OnLightCone
from .flows import (
    FlowSpec,
    causal_mismatch,
    flow_apply,
    flow_apply_product,
    killing_residual,
    killing_vector,
)
from .group import (
    CONJUGATOR,
    EPS_CONE,
    IDENTITY,
    TOL_MEMBER,
    V0Point,
    boost,
    boost_matrix,
    cone_form,
    from_diagonal,
    inverse,
    multiply,
    subgroup_membership,
    to_diagonal,
    to_matrix,
)
from .metric import (
    H_DEFAULT,
    ParamCurve,
    Tangent,
    curve_derivative,
    isometry_residual,
    metric_value,
    pullback_residual,
)

SUITES = ("group", "cover", "metric", "killing", "embed", "contour")
KILLING_VECTORS = {
    "1_0": AlgebraVector(1, 0),
    "0_1": AlgebraVector(0, 1),
    "i_0": AlgebraVector(1j, 0),
    "1+i_2": AlgebraVector(1 + 1j, 2),
}


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    samples: int | None = None  # overrides every check's default sample count
    tol: float | None = None  # overrides every check's default tolerance
    h: float = H_DEFAULT
    mu_probe: float = 0.3
    n_contour: int = ct.DEFAULT_SAMPLES
    # finite-difference checks keep points at least this far from the cone
    fd_cone_margin: float = 0.05


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    samples: int
    max_residual: float | None
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


# -- sampling --------------------------------------------------------------


def rand_complex(rng, half_width=2.0) -> complex:
    re, im = rng.uniform(-half_width, half_width, 2)
    return complex(re, im)


def rand_point(rng, min_cone=EPS_CONE) -> V0Point:
    while True:
        eta, xi = rand_complex(rng), rand_complex(rng)
        if abs((xi - eta) * (xi + eta)) >= min_cone:
            return V0Point(eta, xi)


def rand_algebra(rng, radius=3.0) -> AlgebraVector:
    """Algebra vector whose components lie in the closed disk of ``radius``."""
    r = radius * np.sqrt(rng.uniform(0, 1, 2))
    th = rng.uniform(0, TWO_PI, 2)
    z = r * np.exp(1j * th)
    return AlgebraVector(complex(z[0]), complex(z[1]))


def rand_unit_tangent(rng) -> Tangent:
    x = rng.normal(size=4)
    x /= np.linalg.norm(x)
    return Tangent(complex(x[0], x[1]), complex(x[2], x[3]))


def norm(p) -> float:
    if isinstance(p, V0Point):
        return max(abs(p.eta), abs(p.xi))
    return float(np.max(np.abs(np.asarray(p))))


def rel(a, b, scale: float = 1.0) -> float:
    """Max-norm difference of ``a`` and ``b``, relative to max(1, scale, |a|, |b|)."""
    if isinstance(a, V0Point):
        a = a.as_tuple()
    if isinstance(b, V0Point):
        b = b.as_tuple()
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    denom = max(1.0, scale, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    return float(np.max(np.abs(a - b))) / denom


# -- group -----------------------------------------------------------------


def _associativity(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p, q, r = rand_point(rng), rand_point(rng), rand_point(rng)
        worst = max(worst, rel(multiply(multiply(p, q), r), multiply(p, multiply(q, r)), norm(p) * norm(q) * norm(r)))
    return worst


def _commutativity(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p, q = rand_point(rng), rand_point(rng)
        worst = max(worst, rel(multiply(p, q), multiply(q, p), norm(p) * norm(q)))
    return worst


def _identity(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p = rand_point(rng)
        worst = max(worst, rel(multiply(IDENTITY, p), p), rel(multiply(p, IDENTITY), p))
    return worst


def _inverse(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p = rand_point(rng)
        pinv = inverse(p)
        scale = norm(p) * norm(pinv)
        worst = max(worst, rel(multiply(p, pinv), IDENTITY, scale), rel(multiply(pinv, p), IDENTITY, scale))
    return worst


def _representation(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p, q = rand_point(rng), rand_point(rng)
        worst = max(worst, rel(to_matrix(multiply(p, q)), to_matrix(p) @ to_matrix(q), norm(p) * norm(q)))
    return worst


def _det_cone(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p = rand_point(rng)
        worst = max(worst, rel(np.linalg.det(to_matrix(p)), cone_form(p), norm(p) ** 2))
    return worst


def _cone_multiplicative(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p, q = rand_point(rng), rand_point(rng)
        pq = multiply(p, q)
        # from the product's (eta, xi), not its carried diagonal chart
        direct = (pq.xi - pq.eta) * (pq.xi + pq.eta)
        worst = max(
            worst,
            rel(cone_form(pq), cone_form(p) * cone_form(q), (norm(p) * norm(q)) ** 2),
            rel(direct, cone_form(p) * cone_form(q), (norm(p) * norm(q)) ** 2),
        )
    return worst


def _diagonal_isomorphism(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p, q = rand_point(rng), rand_point(rng)
        dp, dq = to_diagonal(p), to_diagonal(q)
        pq = multiply(p, q)
        # re-derive the chart from (eta, xi) so the check exercises the product formula
        dpq = to_diagonal(V0Point(pq.eta, pq.xi))
        worst = max(worst, rel((dpq.u, dpq.w), (dp.u * dq.u, dp.w * dq.w), norm(p) * norm(q)))
    return worst


def _diagonal_roundtrip(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p = rand_point(rng)
        worst = max(worst, rel(from_diagonal(to_diagonal(p)), p, norm(p)))
    return worst


def _conjugation(rng, n, cfg):
    rinv = np.linalg.inv(CONJUGATOR)
    worst = 0.0
    for _ in range(n):
        p = rand_point(rng)
        d = rinv @ to_matrix(p) @ CONJUGATOR
        expected = np.diag([p.xi - p.eta, p.xi + p.eta])
        worst = max(worst, rel(d, expected, norm(p)))
    return worst


def _lorentz_boost(rng, n, cfg):
    worst = 0.0
    for phi in rng.uniform(-3, 3, n):
        worst = max(worst, rel(to_matrix(boost(phi)), boost_matrix(phi)))
    return worst


def _g2_element(rng) -> V0Point:
    b = boost(rng.uniform(-3, 3))
    return b if rng.uniform() < 0.5 else -b


def _g2_closure(rng, n, cfg):
    """Worst defect of product and inverse from G2: |cone - 1| and imaginary parts."""
    worst = 0.0
    for _ in range(n):
        g, k = _g2_element(rng), _g2_element(rng)
        for r in (multiply(g, k), inverse(g)):
            worst = max(worst, abs(cone_form(r) - 1), abs(r.eta.imag), abs(r.xi.imag))
            if not subgroup_membership(r).in_G2:
                worst = max(worst, math.inf)
    return worst


# -- covering --------------------------------------------------------------


def _exp_homomorphism(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        a, b = rand_algebra(rng), rand_algebra(rng)
        ea, eb = exp_map(a), exp_map(b)
        worst = max(worst, rel(exp_map(a + b), multiply(ea, eb), norm(ea) * norm(eb)))
    return worst


def _translation_correspondence(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        v, w = rand_algebra(rng), rand_algebra(rng)
        ev, ew = exp_map(v), exp_map(w)
        worst = max(worst, rel(exp_map(v + w), multiply(ew, ev), norm(ev) * norm(ew)))
    return worst


def _exp_log(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p = rand_point(rng)
        worst = max(worst, rel(exp_map(log_map(p)), p, norm(p)))
    return worst


def _log_exp(rng, n, cfg):
    """Number of samples where log(exp(v)) is not lattice-equivalent to v."""
    bad = 0
    for _ in range(n):
        v = rand_algebra(rng)
        bad += not lattice_equivalent(log_map(exp_map(v)), v)
    return float(bad)


def _q_pi(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        v = rand_algebra(rng)
        e = exp_map(v)
        worst = max(worst, rel(lift_Q(project(v)), e, norm(e)))
    return worst


def _exp_periodicity(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        v = rand_algebra(rng)
        k0, k1 = rng.integers(-3, 4, 2)
        e = exp_map(v)
        shifted = exp_map(v + AlgebraVector(2j * math.pi * k0, 2j * math.pi * k1))
        worst = max(worst, rel(shifted, e, norm(e)))
    return worst


def _exp_cone(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        v = rand_algebra(rng)
        e = exp_map(v)
        worst = max(worst, rel(cone_form(e), np.exp(2 * v.z1), norm(e) ** 2))
    return worst


def _lattice_kernel(rng, n, cfg):
    """Mismatches between exp-equality, m = n mod 2, and lattice_equivalent over m, n in [-3, 3]."""
    bad = 0
    bases = max(1, n // 49)
    for _ in range(bases):
        v = rand_algebra(rng)
        e = exp_map(v)
        for m in range(-3, 4):
            for k in range(-3, 4):
                w = v + AlgebraVector(1j * math.pi * m, 1j * math.pi * k)
                same = rel(exp_map(w), e, norm(e)) <= 1e-10
                parity = (m - k) % 2 == 0
                bad += (same != parity) + (lattice_equivalent(w, v) != parity)
    return float(bad)


# -- metric ----------------------------------------------------------------


def _fd_base(rng) -> AlgebraVector:
    return AlgebraVector(rand_complex(rng, 1.0), rand_complex(rng, 1.0))


def _pullback_exp_frame(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        c = _fd_base(rng)
        imm = lambda s0, s1, c=c: exp_map(c + AlgebraVector(s0, s1))
        worst = max(worst, pullback_residual(imm, (0.0, 0.0), np.diag([-1.0, 1.0]), h=cfg.h))
    return worst


def _pullback_exp_lines(rng, n, cfg):
    """Complex-direction lines s -> exp(c + s d) pull back to the flat form of d."""
    worst = 0.0
    for _ in range(n):
        c = _fd_base(rng)
        d = AlgebraVector(rand_complex(rng, 1.0), rand_complex(rng, 1.0))
        imm = lambda s, c=c, d=d: exp_map(c + d * s)
        worst = max(worst, pullback_residual(imm, (0.0,), [[d.flat_form()]], h=cfg.h))
    return worst


def _left_translation(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        g = rand_point(rng, cfg.fd_cone_margin)
        p = rand_point(rng, cfg.fd_cone_margin)
        t = rand_unit_tangent(rng)
        worst = max(worst, isometry_residual(lambda q, g=g: multiply(g, q), p, t, h=cfg.h))
    return worst


def _alpha_scaling(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p, t = rand_point(rng), rand_unit_tangent(rng)
        alpha = rng.uniform(0.1, 3.0) * rng.choice([-1.0, 1.0])
        base = metric_value(p, t)
        worst = max(worst, rel(metric_value(p, t, alpha), base / alpha**2, abs(base) / alpha**2))
    return worst


def _fd_quadratic(rng, n, cfg):
    worst = 0.0
    done = 0
    while done < n:
        co = [rand_complex(rng, 1.0) for _ in range(6)]
        s = rng.uniform(-1, 1)

        def f(x, co=co):
            return V0Point(co[0] + co[1] * x + co[2] * x * x, co[3] + co[4] * x + co[5] * x * x)

        try:
            d = curve_derivative(ParamCurve(f), s, cfg.h)
        except ValueError:
            continue
        exact = (co[1] + 2 * co[2] * s, co[4] + 2 * co[5] * s)
        worst = max(worst, rel((d.d_eta, d.d_xi), exact))
        done += 1
    return worst


def _homogeneity(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        p, t = rand_point(rng), rand_unit_tangent(rng)
        lam = rand_complex(rng)
        q = metric_value(p, t)
        worst = max(
            worst,
            rel(metric_value(p, t * lam), lam * lam * q, abs(lam * lam * q)),
            rel(metric_value(p, -t), q, abs(q)),
        )
    return worst


# -- killing ---------------------------------------------------------------


def _flow_property(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        v = rand_algebra(rng, 1.0)
        m1, m2 = rng.uniform(-1, 1, 2)
        p = rand_point(rng)
        lhs = flow_apply(FlowSpec(v, m1 + m2), p)
        rhs = flow_apply(FlowSpec(v, m1), flow_apply(FlowSpec(v, m2), p))
        worst = max(worst, rel(lhs, rhs, norm(lhs)))
    return worst


def _flow_closed_form(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        f = FlowSpec(rand_algebra(rng, 1.0), rng.uniform(-1, 1))
        p = rand_point(rng)
        a = flow_apply(f, p)
        worst = max(worst, rel(a, flow_apply_product(f, p), norm(a)))
    return worst


def _generator(rng, n, cfg):
    h = cfg.h
    worst = 0.0
    for _ in range(n):
        v = rand_algebra(rng, 1.0)
        p = rand_point(rng)
        fp, fm = flow_apply(FlowSpec(v, h), p), flow_apply(FlowSpec(v, -h), p)
        fd = ((fp.eta - fm.eta) / (2 * h), (fp.xi - fm.xi) / (2 * h))
        k = killing_vector(v, p)
        worst = max(worst, rel(fd, (k.d_eta, k.d_xi)))
    return worst


def _killing_for(v: AlgebraVector):
    def check(rng, n, cfg):
        worst = 0.0
        for _ in range(n):
            p = rand_point(rng, cfg.fd_cone_margin)
            t = rand_unit_tangent(rng)
            mu = rng.uniform(-1, 1)
            worst = max(worst, killing_residual(v, p, t, mu, h=cfg.h))
        return worst

    return check


def _killing_probe(rng, n, cfg):
    """The documented default probe: boost flow at mu_probe."""
    worst = 0.0
    v = KILLING_VECTORS["1_0"]
    for _ in range(n):
        p = rand_point(rng, cfg.fd_cone_margin)
        worst = max(worst, killing_residual(v, p, rand_unit_tangent(rng), cfg.mu_probe, h=cfg.h))
    return worst


def _killing_linearity(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        v, w = rand_algebra(rng, 2.0), rand_algebra(rng, 2.0)
        p, q = rand_point(rng), rand_point(rng)
        c1, c2 = rand_complex(rng), rand_complex(rng)
        k = killing_vector(v * c1 + w * c2, p)
        kv, kw = killing_vector(v, p), killing_vector(w, p)
        lin_v = (c1 * kv.d_eta + c2 * kw.d_eta, c1 * kv.d_xi + c2 * kw.d_xi)
        worst = max(worst, rel((k.d_eta, k.d_xi), lin_v, 16 * norm(p)))
        # linear in p under componentwise addition of coordinates, not the group product
        try:
            p_plus_q = V0Point(p.eta + q.eta, p.xi + q.xi)
        except OnLightCone:
            continue
        kpq, kp, kq = killing_vector(v, p_plus_q), killing_vector(v, p), killing_vector(v, q)
        sum_pq = (kp.d_eta + kq.d_eta, kp.d_xi + kq.d_xi)
        worst = max(worst, rel((kpq.d_eta, kpq.d_xi), sum_pq, 8 * (norm(p) + norm(q))))
    return worst


def _causal_identity(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        v = rand_algebra(rng)
        worst = max(worst, abs(metric_value(IDENTITY, killing_vector(v, IDENTITY)) - v.flat_form()))
    return worst


def _causal_orbit(rng, n, cfg):
    """Squared norm of the Killing field equals the flat norm of v at every sampled point."""
    worst = 0.0
    for _ in range(n):
        v, p = rand_algebra(rng), rand_point(rng, cfg.fd_cone_margin)
        worst = max(worst, causal_mismatch(v, p) / max(1.0, abs(v.flat_form())))
    return worst


# -- embeddings ------------------------------------------------------------


def _slice_sample(rng):
    return rng.uniform(-2, 2), rng.uniform(0, TWO_PI), rng.uniform(-2, 2)


def _slice_coherence(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        t, tau, x1 = _slice_sample(rng)
        a = q_imaginary(t, tau, x1)
        s = norm(a)
        worst = max(
            worst,
            rel(a, q_real(tau, t, x1), s),
            rel(a, exp_map(AlgebraVector(complex(t, tau), x1)), s),
            rel(a, q_imaginary_via_cylinder(t, tau, x1), s),
        )
    return worst


def _euclidean_pullback(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        t, tau, x1 = _slice_sample(rng)
        imm = lambda a, b, t=t: q_imaginary(t, a, b)
        worst = max(worst, pullback_residual(imm, (tau, x1), np.eye(2), h=cfg.h))
    return worst


def _minkowskian_pullback(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        t, tau, x1 = _slice_sample(rng)
        imm = lambda a, b, tau=tau: q_real(tau, a, b)
        worst = max(worst, pullback_residual(imm, (t, x1), np.diag([-1.0, 1.0]), h=cfg.h))
    return worst


def _negation(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        t, tau, x1 = _slice_sample(rng)
        a = q_real(tau, t, x1)
        worst = max(worst, rel(q_real(tau + math.pi, t, x1), -a, norm(a)))
    return worst


def _translation_relation(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        t, tau, x1 = _slice_sample(rng)
        tp = rng.uniform(0, TWO_PI)
        b = q_real(tau + tp, t, x1)
        worst = max(worst, rel(translate_real_slice(tp, q_real(tau, t, x1)), b, norm(b)))
    return worst


def _universes(rng, n, cfg):
    bad = 0
    for _ in range(n):
        t, x1 = rng.uniform(-2, 2, 2)
        bad += not in_universe("I", universe_point("I", t, x1))
        bad += not in_universe("II", universe_point("II", t, x1))
    return float(bad)


def _injectivity(rng, n, cfg):
    """Shortfall of the minimum pairwise image distance on a (tau, x1) grid, relative to a bound.

    The tau-derivative of Q_{I,t} has length at least e^{x1}, so grid points
    one step apart map at least about e^{-2} * step apart; the bound asks for
    half of that.
    """
    n_tau, n_x = 64, 32
    t = rng.uniform(-1, 1)
    taus = TWO_PI * np.arange(n_tau) / n_tau
    xs = np.linspace(-2, 2, n_x)
    pts = []
    for tau in taus:
        for x1 in xs:
            p = q_imaginary(t, tau, x1)
            pts.append((p.eta.real, p.eta.imag, p.xi.real, p.xi.imag))
    dmin = float(pdist(np.array(pts)).min())
    step = min(TWO_PI / n_tau, xs[1] - xs[0])
    bound = 0.5 * math.exp(-2) * step
    return max(0.0, bound - dmin) / bound


def _shared_axis(rng, n, cfg):
    worst = 0.0
    for _ in range(n):
        t, _, x1 = _slice_sample(rng)
        worst = max(worst, rel(q_imaginary(t, 0.0, x1), q_real(0.0, t, x1)))
    return worst


# -- contour ---------------------------------------------------------------

_CONTOUR_CASES = ((0.0, TWO_PI), (0.01, TWO_PI), (1.0, TWO_PI), (2.0, TWO_PI), (1.0, math.pi), (ct.LARGE_F, TWO_PI))
_CIRCLE_F = (1.0, 0.5, 0.1, 0.01)


def _arclength(rng, n, cfg):
    worst = 0.0
    for F, beta in _CONTOUR_CASES:
        path = ct.build_time_path(F, beta, cfg.n_contour)
        worst = max(worst, abs(path.arclength - (4 * F + beta)), abs(path.s[-1] - (4 * F + beta)))
    return worst


def _closure(rng, n, cfg):
    worst = 0.0
    for F, beta in _CONTOUR_CASES:
        if beta != TWO_PI:
            continue
        cyl = ct.map_to_cylinder(ct.build_time_path(F, beta, cfg.n_contour), rng.uniform(-2, 2))
        a = np.array([cyl.points[0].as_tuple()])
        b = np.array([cyl.points[-1].as_tuple()])
        worst = max(worst, float(ct.cylinder_distances(a, b)[0, 0]))
    return worst


def _circle_distances(cfg):
    return [ct.circle_distance(F, TWO_PI, 0.0, cfg.n_contour) for F in _CIRCLE_F]


def _circle_monotone(rng, n, cfg):
    d = _circle_distances(cfg)
    return max(0.0, max(b - a for a, b in zip(d, d[1:])))


def _circle_final(rng, n, cfg):
    return _circle_distances(cfg)[-1]


def _lift_consistency(rng, n, cfg):
    worst = 0.0
    for F, beta in _CONTOUR_CASES[:5]:
        x1 = rng.uniform(-2, 2)
        path = ct.build_time_path(F, beta, cfg.n_contour)
        cyl, v0 = ct.map_to_cylinder(path, x1), ct.map_to_v0(path, x1)
        for c, p in zip(cyl.points, v0.points):
            worst = max(worst, rel(lift_Q(c), p, norm(p)))
    return worst


def _landing_paths(rng, cfg):
    for F in (1.0, 2.0, ct.LARGE_F):
        x1 = rng.uniform(-2, 2)
        path = ct.build_time_path(F, TWO_PI, cfg.n_contour)
        mapped = ct.map_to_v0(path, x1)
        yield mapped


def _landing_reality(rng, n, cfg):
    """Largest imaginary part on the C1 and C2 images, relative to max(1, |eta|, |xi|)."""
    worst = 0.0
    for mapped in _landing_paths(rng, cfg):
        for seg, p in zip(mapped.segment, mapped.points):
            if seg in ("C1", "C2"):
                worst = max(worst, max(abs(p.eta.imag), abs(p.xi.imag)) / max(1.0, abs(p.eta), abs(p.xi)))
    return worst


def _landing_sign(rng, n, cfg):
    bad = 0
    for mapped in _landing_paths(rng, cfg):
        for seg, p in zip(mapped.segment, mapped.points):
            if seg == "C1":
                bad += not in_universe("I", p)
            elif seg == "C2":
                bad += not in_universe("II", p)
    return float(bad)


def _sample_field(p: V0Point) -> complex:
    return p.eta + 2 * p.xi**2 - 0.5j * p.eta * p.xi**3


def _tilde_exact(rng, n, cfg):
    phi2 = ct.restrict_field(_sample_field, "real_II")
    worst = 0.0
    for _ in range(n):
        t, x1 = rng.uniform(-2, 2, 2)
        worst = max(worst, abs(phi2(t, x1) - _sample_field(-universe_point("I", t, x1))))
    return worst


def _tilde_slice(rng, n, cfg):
    phi2 = ct.restrict_field(_sample_field, "real_II")
    worst = 0.0
    for _ in range(n):
        t, x1 = rng.uniform(-2, 2, 2)
        ref = _sample_field(q_real(math.pi, t, x1))
        worst = max(worst, rel(phi2(t, x1), ref, abs(ref)))
    return worst


def _large_f_fraction(rng, n, cfg):
    path = ct.build_time_path(ct.LARGE_F, TWO_PI, cfg.n_contour)
    return abs(ct.real_time_fraction(path) - 4 * ct.LARGE_F / (4 * ct.LARGE_F + TWO_PI))


# -- registry --------------------------------------------------------------

CheckFn = Callable[[np.random.Generator, int, VerifyConfig], float]

# (suite, check_id, default samples, default tolerance, function)
CHECKS: list[tuple[str, str, int, float, CheckFn]] = [
    ("group", "associativity", 10_000, 1e-12, _associativity),
    ("group", "commutativity", 10_000, 1e-12, _commutativity),
    ("group", "identity", 10_000, 1e-12, _identity),
    ("group", "inverse", 10_000, 1e-12, _inverse),
    ("group", "representation_homomorphism", 10_000, 1e-12, _representation),
    ("group", "det_equals_cone_form", 10_000, 1e-13, _det_cone),
    ("group", "cone_form_multiplicative", 10_000, 1e-12, _cone_multiplicative),
    ("group", "diagonal_isomorphism", 10_000, 1e-12, _diagonal_isomorphism),
    ("group", "diagonal_roundtrip", 10_000, 1e-13, _diagonal_roundtrip),
    ("group", "conjugation_identity", 10_000, 1e-12, _conjugation),
    ("group", "lorentz_boost_matrix", 100, 1e-12, _lorentz_boost),
    ("group", "g2_closure", 1_000, TOL_MEMBER, _g2_closure),
    ("cover", "exp_homomorphism", 10_000, 1e-10, _exp_homomorphism),
    ("cover", "translation_correspondence", 10_000, 1e-10, _translation_correspondence),
    ("cover", "exp_log_roundtrip", 10_000, 1e-12, _exp_log),
    ("cover", "log_exp_lattice", 10_000, 0.0, _log_exp),
    ("cover", "q_pi_factorization", 10_000, 1e-13, _q_pi),
    ("cover", "exp_periodicity", 10_000, 1e-12, _exp_periodicity),
    ("cover", "exp_cone_form", 10_000, 1e-12, _exp_cone),
    ("cover", "lattice_kernel", 4_900, 0.0, _lattice_kernel),
    ("metric", "pullback_exp_frame", 1_000, 1e-6, _pullback_exp_frame),
    ("metric", "pullback_exp_lines", 1_000, 1e-6, _pullback_exp_lines),
    ("metric", "left_translation_isometry", 1_000, 1e-6, _left_translation),
    ("metric", "alpha_scaling", 1_000, 1e-13, _alpha_scaling),
    ("metric", "fd_quadratic_exact", 1_000, 1e-9, _fd_quadratic),
    ("metric", "form_homogeneity", 1_000, 1e-13, _homogeneity),
    ("killing", "flow_property", 1_000, 1e-11, _flow_property),
    ("killing", "flow_closed_form", 1_000, 1e-12, _flow_closed_form),
    ("killing", "generator_vs_flow", 1_000, 1e-6, _generator),
    *[("killing", f"killing_isometry_{k}", 1_000, 1e-6, _killing_for(v)) for k, v in KILLING_VECTORS.items()],
    ("killing", "killing_probe_default", 1_000, 1e-6, _killing_probe),
    ("killing", "killing_linearity", 1_000, 1e-12, _killing_linearity),
    ("killing", "causal_character_identity", 1_000, 0.0, _causal_identity),
    ("killing", "causal_character_orbit", 1_000, 1e-10, _causal_orbit),
    ("embed", "slice_coherence", 1_000, 1e-13, _slice_coherence),
    ("embed", "euclidean_pullback", 1_000, 1e-6, _euclidean_pullback),
    ("embed", "minkowskian_pullback", 1_000, 1e-6, _minkowskian_pullback),
    ("embed", "negation_relation", 1_000, 1e-12, _negation),
    ("embed", "translation_relation", 1_000, 1e-12, _translation_relation),
    ("embed", "universe_membership", 1_000, 0.0, _universes),
    ("embed", "injectivity_grid", 2_048, 0.0, _injectivity),
    ("embed", "shared_axis", 1_000, 1e-13, _shared_axis),
    ("contour", "arclength", len(_CONTOUR_CASES), 1e-12, _arclength),
    ("contour", "endpoint_closure", 5, 1e-12, _closure),
    ("contour", "circle_monotone", len(_CIRCLE_F), 0.0, _circle_monotone),
    ("contour", "circle_final_value", 1, 0.02, _circle_final),
    ("contour", "cylinder_lift_consistency", 5, 1e-12, _lift_consistency),
    ("contour", "universe_landing_reality", 3, 1e-10, _landing_reality),
    ("contour", "universe_landing_sign", 3, 0.0, _landing_sign),
    ("contour", "tilde_relation_exact", 1_000, 0.0, _tilde_exact),
    ("contour", "tilde_matches_slice_pi", 1_000, 1e-12, _tilde_slice),
    ("contour", "large_F_real_time_fraction", 1, 1e-12, _large_f_fraction),
]

# checks whose sample count is a fixed case list rather than a random draw count
_FIXED_COUNT = {"arclength", "endpoint_closure", "circle_monotone", "circle_final_value",
                "cylinder_lift_consistency", "universe_landing_reality", "universe_landing_sign",
                "large_F_real_time_fraction", "injectivity_grid"}


def check_rng(seed: int, check_id: str) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(check_id.encode())])


def run_check(check_id: str, cfg: VerifyConfig) -> CheckRecord:
    for suite, cid, n_default, tol_default, fn in CHECKS:
        if cid == check_id:
            break
    else:
        raise KeyError(check_id)
    n = n_default if (cfg.samples is None or cid in _FIXED_COUNT) else cfg.samples
    tol = tol_default if cfg.tol is None else cfg.tol
    residual = float(fn(check_rng(cfg.seed, cid), n, cfg))
    if not math.isfinite(residual):
        return CheckRecord(cid, n, None, tol, False)
    return CheckRecord(cid, n, residual, tol, residual <= tol)


def check_ids(suite: str) -> list[str]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [cid for s, cid, *_ in CHECKS if suite == "all" or s == suite]


def run_suite(suite: str, cfg: VerifyConfig) -> dict:
    """Run a suite and return the report as a plain dict.

    Report layout: ``{suite, seed, config, checks: [...], pass, wall_time_ms}``.
    """
    start = time.perf_counter()
    records = [run_check(cid, cfg) for cid in check_ids(suite)]
    config = asdict(cfg)
    del config["seed"]
    return {
        "suite": suite,
        "seed": cfg.seed,
        "config": config,
        "checks": [r.to_dict() for r in records],
        "pass": all(r.passed for r in records),
        "wall_time_ms": round((time.perf_counter() - start) * 1000.0, 3),
    }
