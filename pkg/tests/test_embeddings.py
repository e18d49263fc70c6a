import math

import numpy as np
import pytest
from hypothesis import given

from conftest import angles, pt_close, reals, relerr
from etaxi.covering import AlgebraVector, exp_map
from etaxi.embeddings import (
    SlicePoint,
    Universe,
    in_universe,
    q_imaginary,
    q_imaginary_via_cylinder,
    q_real,
    slice_translator,
    translate_real_slice,
    universe_point,
)
from etaxi.group import IDENTITY, V0Point, cone_form
from etaxi.metric import pullback_residual


@pytest.mark.parametrize("tau,x1", [(0.3, -0.5), (2.0, 1.0), (4.5, 0.0)])
def test_q_imaginary_at_t0(tau, x1):
    p = q_imaginary(0.0, tau, x1)
    expected = V0Point(1j * math.exp(x1) * math.sin(tau), math.exp(x1) * math.cos(tau))
    assert pt_close(p, expected, 1e-15)


def test_q_imaginary_examples():
    assert q_imaginary(0, 0, 0) == IDENTITY
    assert pt_close(q_imaginary(1, 0, 0), V0Point(math.sinh(1), math.cosh(1)), 1e-15)


def test_q_real_examples():
    t, x1 = 0.9, -0.3
    a = q_real(0.0, t, x1)
    assert pt_close(a, V0Point(math.exp(x1) * math.sinh(t), math.exp(x1) * math.cosh(t)), 1e-15)
    assert pt_close(q_real(math.pi, t, x1), -a, 1e-15)
    assert q_real(0, 0, 0) == IDENTITY


def test_universe_examples():
    assert universe_point("I", 0, 0) == IDENTITY
    assert pt_close(universe_point(Universe.II, 0, 0), V0Point(0, -1), 1e-15)
    t, x1 = -1.3, 0.6
    p = universe_point("I", t, x1)
    assert cone_form(p) == pytest.approx(math.exp(2 * x1), rel=1e-14)
    assert in_universe("I", p) and not in_universe("II", p)
    assert in_universe("II", universe_point("II", t, x1))
    assert not in_universe("I", q_real(1.0, t, x1))


def test_translate_examples():
    p = V0Point(0.2, 1.4 - 0.1j)
    assert pt_close(translate_real_slice(0.0, p), p, 0)
    t, x1 = 0.4, 0.2
    moved = translate_real_slice(math.pi, q_real(0.0, t, x1))
    assert pt_close(moved, -q_real(0.0, t, x1), 1e-15)
    assert pt_close(moved, q_real(math.pi, t, x1), 1e-15)
    assert pt_close(translate_real_slice(math.pi / 2, IDENTITY), V0Point(1j, 0), 1e-15)


def test_translator_has_unit_cone():
    for tp in np.linspace(0, 2 * math.pi, 9):
        assert cone_form(slice_translator(tp)) == pytest.approx(1, abs=1e-15)


def test_slice_point_normalizes_angle():
    sp = SlicePoint("imaginary", 0.5, -0.25, 1.0)
    assert 0 <= sp.tau < 2 * math.pi
    assert pt_close(sp.point(), q_imaginary(0.5, -0.25, 1.0), 1e-14)
    with pytest.raises(ValueError):
        SlicePoint("diagonal", 0, 0, 0)


@given(reals, angles, reals)
def test_slice_coherence(t, tau, x1):
    a = q_imaginary(t, tau, x1)
    assert a == q_real(tau, t, x1)
    assert a == exp_map(AlgebraVector(complex(t, tau), x1))
    assert pt_close(a, q_imaginary_via_cylinder(t, tau, x1), 1e-13)


@given(reals, angles, reals)
def test_line_elements(t, tau, x1):
    assert pullback_residual(lambda a, b: q_imaginary(t, a, b), (tau, x1), np.eye(2)) <= 1e-6
    assert pullback_residual(lambda a, b: q_real(tau, a, b), (t, x1), np.diag([-1.0, 1.0])) <= 1e-6


@given(reals, angles, reals, angles)
def test_translation_relation(t, tau, x1, tp):
    b = q_real(tau + tp, t, x1)
    assert relerr(translate_real_slice(tp, q_real(tau, t, x1)).as_tuple(), b.as_tuple(), abs(b.xi)) <= 1e-12
    a = q_real(tau, t, x1)
    assert relerr(q_real(tau + math.pi, t, x1).as_tuple(), (-a).as_tuple()) <= 1e-12


@given(reals, reals)
def test_shared_axis(t, x1):
    assert q_imaginary(t, 0.0, x1) == q_real(0.0, t, x1)


def test_imaginary_slice_injective_on_grid():
    from scipy.spatial.distance import pdist

    taus = 2 * math.pi * np.arange(48) / 48
    xs = np.linspace(-2, 2, 24)
    pts = [q_imaginary(0.7, tau, x1) for tau in taus for x1 in xs]
    arr = np.array([[p.eta.real, p.eta.imag, p.xi.real, p.xi.imag] for p in pts])
    assert pdist(arr).min() > 0.5 * math.exp(-2) * (xs[1] - xs[0])
