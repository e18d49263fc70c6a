import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import points, pt_close, relerr, small
from etaxi.covering import AlgebraVector, exp_map
from etaxi.errors import Overflow
from etaxi.flows import (
    FlowSpec,
    causal_mismatch,
    flow_apply,
    flow_apply_product,
    killing_residual,
    killing_vector,
    one_param_point,
)
from etaxi.group import IDENTITY, V0Point, cone_form
from etaxi.metric import Tangent, metric_value

KILLING_VECTORS = [AlgebraVector(1, 0), AlgebraVector(0, 1), AlgebraVector(1j, 0), AlgebraVector(1 + 1j, 2)]
mus = st.floats(-1, 1)


def test_one_param_examples():
    assert one_param_point(FlowSpec(AlgebraVector(0.4, 2j), 0.0)) == IDENTITY
    p = one_param_point(FlowSpec(AlgebraVector(1, 0), 1.0))
    assert pt_close(p, V0Point(math.sinh(1), math.cosh(1)), 1e-15)
    p = one_param_point(FlowSpec(AlgebraVector(0, 1), math.log(2)))
    assert pt_close(p, V0Point(0, 2), 1e-15)


def test_flowspec_envelope():
    with pytest.raises(Overflow):
        FlowSpec(AlgebraVector(400, 400), 1.0)


def test_flow_apply_examples():
    p = V0Point(0.3 - 0.2j, 1.7)
    assert flow_apply(FlowSpec(AlgebraVector(1, 2), 0.0), p) == p
    phi = 0.8
    assert pt_close(flow_apply(FlowSpec(AlgebraVector(1, 0), phi), IDENTITY), V0Point(math.sinh(phi), math.cosh(phi)), 1e-15)
    assert pt_close(flow_apply(FlowSpec(AlgebraVector(0, 1), 1.0), p), V0Point(math.e * p.eta, math.e * p.xi), 1e-15)


def test_killing_vector_examples():
    p = V0Point(0.3 + 0.1j, -1.1)
    k = killing_vector(AlgebraVector(1, 0), p)
    assert (k.d_eta, k.d_xi) == (p.xi, p.eta)
    k = killing_vector(AlgebraVector(0.5 - 1j, 2j), IDENTITY)
    assert (k.d_eta, k.d_xi) == (0.5 - 1j, 2j)
    k = killing_vector(AlgebraVector(0, 1), V0Point(3, 5))
    assert (k.d_eta, k.d_xi) == (3, 5)


def test_killing_residual_examples():
    p, t = V0Point(0.3 + 0.4j, -1.2), Tangent(0.5, 0.1 - 0.7j)
    assert killing_residual(AlgebraVector(0, 0), p, t) == 0
    rng = np.random.default_rng(3)
    for _ in range(50):
        p = V0Point(*(rng.uniform(-2, 2, 2) + 1j * rng.uniform(-2, 2, 2)))
        t = Tangent(*(rng.normal(size=2) + 1j * rng.normal(size=2)))
        assert killing_residual(AlgebraVector(1, 0), p, t, 0.3) < 1e-6


def test_boost_generator_is_timelike_at_identity():
    k = killing_vector(AlgebraVector(1, 0), IDENTITY)
    assert metric_value(IDENTITY, k) == -1


@given(small, small, mus, mus, points())
def test_flow_group_property(a, b, m1, m2, p):
    v = AlgebraVector(a, b)
    lhs = flow_apply(FlowSpec(v, m1 + m2), p)
    rhs = flow_apply(FlowSpec(v, m1), flow_apply(FlowSpec(v, m2), p))
    assert relerr(lhs.as_tuple(), rhs.as_tuple(), abs(lhs.xi) + abs(lhs.eta)) <= 1e-11


@given(small, small, mus, points())
def test_closed_form_matches_group_product(a, b, mu, p):
    f = FlowSpec(AlgebraVector(a, b), mu)
    x, y = flow_apply(f, p), flow_apply_product(f, p)
    assert relerr(x.as_tuple(), y.as_tuple(), abs(x.xi) + abs(x.eta)) <= 1e-12
    assert relerr(one_param_point(f).as_tuple(), exp_map(f.v * mu).as_tuple()) == 0


@given(small, small, points())
def test_generator_is_flow_derivative(a, b, p):
    v, h = AlgebraVector(a, b), 1e-6
    fp, fm = flow_apply(FlowSpec(v, h), p), flow_apply(FlowSpec(v, -h), p)
    k = killing_vector(v, p)
    fd = ((fp.eta - fm.eta) / (2 * h), (fp.xi - fm.xi) / (2 * h))
    assert relerr(fd, (k.d_eta, k.d_xi)) <= 1e-6


@settings(max_examples=200)
@given(st.sampled_from(KILLING_VECTORS), points(margin=0.05), small, small, mus)
def test_killing_property(v, p, t0, t1, mu):
    t = Tangent(t0, t1)
    assert killing_residual(v, p, t, mu) <= 1e-6 * max(1.0, abs(metric_value(p, t)))


@given(small, small, small, small, points(), points(), small)
def test_killing_vector_bilinear(a, b, c, d, p, q, lam):
    v, w = AlgebraVector(a, b), AlgebraVector(c, d)
    k = killing_vector(v + w * lam, p)
    kv, kw = killing_vector(v, p), killing_vector(w, p)
    assert relerr((k.d_eta, k.d_xi), (kv.d_eta + lam * kw.d_eta, kv.d_xi + lam * kw.d_xi), 20) <= 1e-13


@given(small, small)
def test_causal_character_at_identity_exact(a, b):
    v = AlgebraVector(a, b)
    assert metric_value(IDENTITY, killing_vector(v, IDENTITY)) == v.flat_form()


@given(small, small, points())
def test_killing_norm_constant(a, b, p):
    # g_p(K, K) = (b^2 - a^2)(xi^2 - eta^2) / (xi^2 - eta^2) at every point
    v = AlgebraVector(a, b)
    assert causal_mismatch(v, p) <= 1e-10 * max(1.0, abs(v.flat_form())) * max(1.0, (abs(p.eta) + abs(p.xi)) ** 2 / abs(cone_form(p)))
