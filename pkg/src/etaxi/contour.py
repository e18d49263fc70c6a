"""The thermal time path C' and its images on the cylinder and in V0.

C' runs through the complex time plane

    -F --C1--> F --C3--> F - i beta/2 --C2--> -F - i beta/2 --C4--> -F - i beta

and its cylinder image C'' = Pi(C') is obtained by identifying the time plane
with the first factor R_0 x i R_0 of the algebra C^2.  With beta = 2 pi the
image closes up, and as F -> 0 it shrinks onto the imaginary-time circle.
Field restrictions to the imaginary-time slice and to universes I and II are
provided by :func:`restrict_field`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .covering import TWO_PI, AlgebraVector, CylinderPoint, exp_map
from .embeddings import q_imaginary, universe_point
from .errors import InvalidParam
from .group import V0Point

SEGMENT_ORDER = ("C1", "C3", "C2", "C4")
DEFAULT_BETA = TWO_PI
DEFAULT_SAMPLES = 400
LARGE_F = 50.0


@dataclass(frozen=True)
class TimePath:
    F: float
    beta: float
    samples_per_segment: int
    vertices: tuple[complex, ...]
    polyline: np.ndarray  # complex times, 4 * samples_per_segment entries
    segment: np.ndarray  # segment label of each sample
    s: np.ndarray  # cumulative arclength at each sample

    @property
    def arclength(self) -> float:
        return math.fsum(np.abs(np.diff(self.polyline)))

    def segment_samples(self, label: str) -> np.ndarray:
        return self.polyline[self.segment == label]


@dataclass(frozen=True)
class MappedPath:
    """Images of the samples of a :class:`TimePath`, with their source times retained."""

    s: np.ndarray
    times: np.ndarray
    segment: np.ndarray
    points: tuple

    def __len__(self):
        return len(self.points)


def build_time_path(F: float, beta: float = DEFAULT_BETA, n: int = DEFAULT_SAMPLES) -> TimePath:
    """Sample C' with ``n`` points per segment, endpoints included.

    :raises InvalidParam: if ``F < 0``, ``beta <= 0``, ``n < 2`` or an input is not finite
    """
    if not (math.isfinite(F) and math.isfinite(beta)):
        raise InvalidParam("F and beta must be finite")
    if F < 0:
        raise InvalidParam(f"F must be >= 0, got {F}")
    if beta <= 0:
        raise InvalidParam(f"beta must be > 0, got {beta}")
    if int(n) != n or n < 2:
        raise InvalidParam(f"need at least 2 samples per segment, got {n}")
    n = int(n)

    half = beta / 2
    vertices = (complex(-F, 0), complex(F, 0), complex(F, -half), complex(-F, -half), complex(-F, -beta))
    # traversal C1, C3, C2, C4 visits the vertices in order
    pieces, labels = [], []
    for label, a, b in zip(SEGMENT_ORDER, vertices[:-1], vertices[1:]):
        re = np.linspace(a.real, b.real, n)
        im = np.linspace(a.imag, b.imag, n)
        pieces.append(re + 1j * im)
        labels.extend([label] * n)
    poly = np.concatenate(pieces)
    # arclength parameter: length of earlier segments plus distance from this segment's start
    offsets = np.cumsum([0.0] + [abs(b - a) for a, b in zip(vertices[:-2], vertices[1:-1])])
    s = np.concatenate([off + np.abs(z - z[0]) for off, z in zip(offsets, pieces)])
    return TimePath(float(F), float(beta), n, vertices, poly, np.array(labels), s)


def map_to_cylinder(path: TimePath, x1: float = 0.0) -> MappedPath:
    """Apply Pi to (z, x1) for each sample time z = t + i sigma."""
    pts = tuple(CylinderPoint(z.real, z.imag, x1, 0.0) for z in path.polyline)
    return MappedPath(path.s, path.polyline, path.segment, pts)


def map_to_v0(path: TimePath, x1: float = 0.0) -> MappedPath:
    """Apply exp to (z, x1) for each sample time z."""
    pts = tuple(exp_map(AlgebraVector(z, x1)) for z in path.polyline)
    return MappedPath(path.s, path.polyline, path.segment, pts)


def _angle_gap(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    d = np.abs(a - b) % TWO_PI
    return np.minimum(d, TWO_PI - d)


def cylinder_distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pairwise flat distances between rows (u0, v0, u1, v1) of ``a`` and ``b``."""
    a = a[:, None, :]
    b = b[None, :, :]
    sq = (a[..., 0] - b[..., 0]) ** 2 + _angle_gap(a[..., 1], b[..., 1]) ** 2
    sq += (a[..., 2] - b[..., 2]) ** 2 + _angle_gap(a[..., 3], b[..., 3]) ** 2
    return np.sqrt(sq)


def hausdorff(a: np.ndarray, b: np.ndarray) -> float:
    d = cylinder_distances(a, b)
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def circle_distance(F: float, beta: float = DEFAULT_BETA, x1: float = 0.0, n: int = DEFAULT_SAMPLES) -> float:
    """Hausdorff distance on the cylinder between C'' and the circle {(0, v, x1, 0)}.

    The circle is sampled at ``4 n`` equally spaced angles, matching the
    sample count of the path.
    """
    path = build_time_path(F, beta, n)
    cyl = np.array([c.as_tuple() for c in map_to_cylinder(path, x1).points])
    v = TWO_PI * np.arange(4 * path.samples_per_segment) / (4 * path.samples_per_segment)
    circle = np.column_stack([np.zeros_like(v), v, np.full_like(v, x1), np.zeros_like(v)])
    return hausdorff(cyl, circle)


def discretization_resolution(path: TimePath) -> float:
    """Half the largest gap between consecutive samples of the path or of the reference circle."""
    gaps = np.abs(np.diff(path.polyline))
    circle_gap = TWO_PI / (4 * path.samples_per_segment)
    return float(max(gaps.max(), circle_gap) / 2)


def real_time_fraction(path: TimePath) -> float:
    """Fraction of arclength on the real-time segments C1 and C2, 4F / (4F + beta)."""
    total = path.arclength
    if total == 0:
        return 0.0
    length = 0.0
    for label in ("C1", "C2"):
        length += math.fsum(np.abs(np.diff(path.segment_samples(label))))
    return length / total


class SliceMode(str, Enum):
    IMAGINARY = "imaginary"
    REAL_I = "real_I"
    REAL_II = "real_II"


def restrict_field(
    phi: Callable[[V0Point], complex],
    mode: SliceMode | str,
    t: float = 0.0,
) -> Callable[[float, float], complex]:
    """Pull a field on V0 back to a slice.

    ``IMAGINARY`` gives phi_0(tau, x1) = phi(Q_{I,t}(tau, x1)).  ``REAL_I`` gives
    phi_1(t, x1) = phi(Q_{R,0}(t, x1)), and ``REAL_II`` gives the tilde field
    phi_2(t, x1) = phi(-Q_{R,0}(t, x1)), using Q_{R,pi} = -Q_{R,0}.
    """
    mode = SliceMode(mode)
    if mode is SliceMode.IMAGINARY:
        return lambda tau, x1: phi(q_imaginary(t, tau, x1))
    if mode is SliceMode.REAL_I:
        return lambda tt, x1: phi(universe_point("I", tt, x1))
    return lambda tt, x1: phi(-universe_point("I", tt, x1))
