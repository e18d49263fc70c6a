"""Independent reference computations used to freeze expected values.

Nothing here imports from etaxi.
"""

import cmath
import math

TWO_PI = 2 * math.pi


def _point_segment(px, py, ax, ay, bx, by):
    dx, dy = bx - ax, by - ay
    L2 = dx * dx + dy * dy
    if L2 == 0:
        return math.hypot(px - ax, py - ay)
    s = max(0.0, min(1.0, ((px - ax) * dx + (py - ay) * dy) / L2))
    return math.hypot(px - ax - s * dx, py - ay - s * dy)


def contour_segments(F, beta):
    """The four segments of the continuous path in (u0, sigma) coordinates."""
    v = [(-F, 0.0), (F, 0.0), (F, -beta / 2), (-F, -beta / 2), (-F, -beta)]
    return list(zip(v[:-1], v[1:]))


def circle_distance_continuous(F, beta, n_circle=20000):
    """Hausdorff distance on the flat cylinder between the continuous path and the circle u0 = 0.

    Path to circle: every circle angle is present, so the distance from a path
    point is |u0|, maximized at a vertex.  Circle to path: exact distance to
    each segment, unrolled over angle replicas sigma + 2 pi k.
    """
    segs = contour_segments(F, beta)
    to_circle = max(abs(x) for seg in segs for (x, _) in seg)
    worst = 0.0
    for k in range(n_circle):
        v = TWO_PI * k / n_circle
        best = math.inf
        for (ax, ay), (bx, by) in segs:
            for rep in range(-3, 4):
                best = min(best, _point_segment(0.0, v + rep * TWO_PI, ax, ay, bx, by))
        worst = max(worst, best)
    return max(to_circle, worst)


def exp_pair(z0, z1):
    s = cmath.exp(z1)
    return s * cmath.sinh(z0), s * cmath.cosh(z0)


def finite_diff(f, x, h):
    return (f(x + h) - f(x - h)) / (2 * h)
