import math

import numpy as np
import pytest

from oracles import circle_distance_continuous
from etaxi.contour import (
    LARGE_F,
    SEGMENT_ORDER,
    SliceMode,
    build_time_path,
    circle_distance,
    discretization_resolution,
    map_to_cylinder,
    map_to_v0,
    real_time_fraction,
    restrict_field,
)
from etaxi.embeddings import in_universe, q_real
from etaxi.errors import InvalidParam
from etaxi.group import cone_form

# frozen from oracles.circle_distance_continuous (exact point-to-segment distances)
ORACLE_CIRCLE = {
    (1.0, 2 * math.pi): 1.0,
    (0.5, 2 * math.pi): 0.5,
    (0.1, 2 * math.pi): 0.1,
    (0.01, 2 * math.pi): 0.01,
    (1.0, math.pi): 1.729446755801181,
}


def test_degenerate_path():
    p = build_time_path(0.0, 2 * math.pi, 10)
    assert np.all(p.polyline.real == 0)
    assert p.arclength == pytest.approx(2 * math.pi, abs=1e-12)
    assert len(p.segment_samples("C1")) == 10
    assert np.all(p.segment_samples("C1") == 0)


def test_vertices_and_arclength():
    p = build_time_path(2.0, 2 * math.pi)
    assert p.vertices == (-2 + 0j, 2 + 0j, complex(2, -math.pi), complex(-2, -math.pi), complex(-2, -2 * math.pi))
    assert abs(p.arclength - (8 + 2 * math.pi)) <= 1e-12
    assert p.s[0] == 0 and abs(p.s[-1] - p.arclength) <= 1e-12
    assert np.all(np.diff(p.s) >= 0)


def test_segment_order_and_sample_count():
    p = build_time_path(1.0, 3.0, 2)
    assert len(p.polyline) == 8
    assert list(p.segment) == [lab for lab in SEGMENT_ORDER for _ in range(2)]
    assert p.polyline[0] == -1 and p.polyline[-1] == complex(-1, -3)


@pytest.mark.parametrize("F,beta,n", [(-1, 1, 10), (1, 0, 10), (1, -2, 10), (1, 1, 1), (math.nan, 1, 10), (1, math.inf, 10)])
def test_invalid_params(F, beta, n):
    with pytest.raises(InvalidParam):
        build_time_path(F, beta, n)


def test_cylinder_mapping_examples():
    p = build_time_path(1.0, 2 * math.pi, 5)
    cyl = map_to_cylinder(p, 0.3).points
    c3_end = cyl[2 * 5 - 1]  # F - i beta / 2
    assert c3_end.u0 == 1.0 and c3_end.v0 == pytest.approx(math.pi, abs=1e-15)
    assert cyl[-1].v0 == 0.0 and cyl[-1].u0 == -1.0
    assert all(c.u1 == 0.3 and c.v1 == 0 for c in cyl)


def test_endpoint_closure_beta_2pi():
    p = build_time_path(0.7, 2 * math.pi, 50)
    cyl = map_to_cylinder(p, 0.0).points
    assert abs(cyl[0].u0 - cyl[-1].u0) <= 1e-12 and cyl[0].v0 == cyl[-1].v0


def test_real_segments_land_in_universes():
    p = build_time_path(1.5, 2 * math.pi, 40)
    img = map_to_v0(p, 0.4)
    for pt, lab in zip(img.points, img.segment):
        if lab == "C1":
            assert in_universe("I", pt)
        elif lab == "C2":
            assert in_universe("II", pt)
        assert cone_form(pt) == pytest.approx(math.exp(0.8), rel=1e-12)


def test_oracle_agrees_with_frozen_values():
    for (F, beta), d in ORACLE_CIRCLE.items():
        assert circle_distance_continuous(F, beta, 4000) == pytest.approx(d, abs=1e-3)


@pytest.mark.parametrize("key", list(ORACLE_CIRCLE))
def test_circle_distance_matches_oracle(key):
    F, beta = key
    res = discretization_resolution(build_time_path(F, beta, 400))
    assert abs(circle_distance(F, beta, 0.0, 400) - ORACLE_CIRCLE[key]) <= res


def test_circle_distance_shrinks():
    ds = [circle_distance(F, 2 * math.pi, 0.0, 400) for F in (1, 0.5, 0.1, 0.01)]
    assert all(b <= a for a, b in zip(ds, ds[1:]))
    assert ds[-1] <= 0.02
    assert circle_distance(0.0) <= discretization_resolution(build_time_path(0.0))


def test_short_beta_stays_away_from_circle():
    assert circle_distance(1.0, math.pi) >= 1.72


def test_real_time_fraction():
    p = build_time_path(LARGE_F)
    assert abs(real_time_fraction(p) - 4 * LARGE_F / (4 * LARGE_F + 2 * math.pi)) <= 1e-12
    assert real_time_fraction(build_time_path(0.0)) == 0.0


def test_restrict_field_examples():
    t, x1 = 0.8, -0.4
    for mode in (SliceMode.REAL_I, "real_II"):
        assert restrict_field(cone_form, mode)(t, x1) == pytest.approx(math.exp(2 * x1), rel=1e-14)
    eta = restrict_field(lambda p: p.eta, "imaginary", 0.0)
    assert eta(1.1, x1) == pytest.approx(1j * math.exp(x1) * math.sin(1.1), abs=1e-15)


def test_tilde_field_is_negated_universe_I():
    phi = lambda p: p.eta ** 3 + 2 * p.xi
    f2 = restrict_field(phi, "real_II")
    f1 = restrict_field(phi, "real_I")
    for t, x1 in [(0.3, 0.1), (-1.0, 0.7), (2.0, -1.5)]:
        assert f2(t, x1) == phi(-q_real(0.0, t, x1))
        assert f2(t, x1) == pytest.approx(phi(q_real(math.pi, t, x1)), rel=1e-12)
        assert f2(t, x1) != f1(t, x1)
