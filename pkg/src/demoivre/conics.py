"""Focal and central-force properties of the ellipse, checked numerically.

Points are parametrized by the eccentric angle: M = (a cos t, b sin t).
The focal-product identity says (distance to focus 1)*(distance to focus 2)
equals the squared half-diameter parallel to the tangent at M.  The
central-force law evaluated here is FM/(R * FP^3) with the force centre at
the focus (+c, 0): FM the focal radius, FP the perpendicular from the
focus to the tangent, R the radius of curvature ("diameter of the
evolute" read as the curvature radius).  Along one orbit, force * FM^2 is
constant -- the inverse-square consequence in its directly testable form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Ellipse:
    a: float
    b: float

    def __post_init__(self):
        if not self.b > 0:
            raise ValueError("semi-minor axis must be positive")
        if self.a < self.b:
            raise ValueError("semi-major axis must be at least the semi-minor axis")

    @property
    def focal_distance(self) -> float:
        return math.sqrt(self.a * self.a - self.b * self.b)


@dataclass(frozen=True)
class OrbitPoint:
    theta: float
    position: tuple


def orbit_point(e: Ellipse, theta: float) -> OrbitPoint:
    return OrbitPoint(theta, (e.a * math.cos(theta), e.b * math.sin(theta)))


def focal_product(e: Ellipse, theta: float):
    """(product of the two focal radii, squared parallel half-diameter).

    The half-diameter parallel to the tangent at angle t ends at the
    ellipse point with angle t + pi/2.  The two numbers agree to within
    1e-12 * a^2; a violation would mean a broken evaluation, not geometry.
    """
    c = e.focal_distance
    x, y = orbit_point(e, theta).position
    d1 = math.hypot(x - c, y)
    d2 = math.hypot(x + c, y)
    product = d1 * d2
    px, py = -e.a * math.sin(theta), e.b * math.cos(theta)
    halfdiam_sq = px * px + py * py
    if abs(product - halfdiam_sq) > 1e-12 * e.a * e.a:
        raise ArithmeticError("focal product and parallel half-diameter disagree")
    return product, halfdiam_sq


def radius_of_curvature(e: Ellipse, theta: float) -> float:
    """(a^2 sin^2 t + b^2 cos^2 t)^(3/2) / (a*b)."""
    s, c = math.sin(theta), math.cos(theta)
    return (e.a * e.a * s * s + e.b * e.b * c * c) ** 1.5 / (e.a * e.b)


def _focal_radius_and_pedal(e: Ellipse, theta: float):
    c = e.focal_distance
    fm = e.a - c * math.cos(theta)
    # tangent line at M: (x cos t)/a + (y sin t)/b = 1
    ct, st = math.cos(theta), math.sin(theta)
    fp = abs(c * ct / e.a - 1.0) / math.hypot(ct / e.a, st / e.b)
    return fm, fp


def centripetal_force(e: Ellipse, theta: float) -> float:
    """FM / (R * FP^3), force centre at the focus (+c, 0)."""
    fm, fp = _focal_radius_and_pedal(e, theta)
    r = radius_of_curvature(e, theta)
    return fm / (r * fp**3)


def inverse_square_constant(e: Ellipse, samples: int):
    """(mean of force*FM^2 on a uniform angle grid, max relative deviation)."""
    if samples < 3:
        raise ValueError("need at least three sample angles")
    values = []
    for i in range(samples):
        theta = 2 * math.pi * i / samples
        fm, _ = _focal_radius_and_pedal(e, theta)
        values.append(centripetal_force(e, theta) * fm * fm)
    mean = math.fsum(values) / samples
    deviation = max(abs(v - mean) for v in values) / abs(mean)
    return mean, deviation
