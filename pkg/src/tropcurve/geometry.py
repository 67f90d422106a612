"""Exact lattice and rational plane geometry helpers.

All functions work on pairs of ints or Fractions and never touch floats.
Lattice points are plain ``(i, j)`` tuples throughout the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Point = tuple[int, int]


def cross(u, v):
    """2D cross product u x v (works for int and Fraction pairs)."""
    return u[0] * v[1] - u[1] * v[0]


def turn(a, b, c):
    """Cross product of (b - a) and (c - b): sign of the turn at b."""
    return (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])


def convex_hull(points: list[Point]) -> list[Point]:
    """Strict convex hull, counterclockwise, starting at the lexicographic minimum.

    Collinear points in the interior of hull edges are dropped, so the result
    lists hull vertices only.  Degenerate inputs give a single point or the
    two endpoints of a segment.
    """
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts
    if len(pts) == 2:
        return pts

    def half(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) > 1 and turn(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return [hull[0]]
    if len(set(hull)) == 2:
        # all points collinear
        return [min(pts), max(pts)]
    return hull


def lattice_length(a: Point, b: Point) -> int:
    """Number of primitive steps along the segment from a to b."""
    return gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))


def primitive(v: tuple[int, int]) -> tuple[int, int]:
    """Primitive integer vector parallel to v (gcd of entries = 1)."""
    g = gcd(abs(v[0]), abs(v[1]))
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return (v[0] // g, v[1] // g)


def primitive_from_rational(v) -> tuple[int, int]:
    """Primitive integer vector parallel to a Fraction-valued vector."""
    x, y = Fraction(v[0]), Fraction(v[1])
    if x == 0 and y == 0:
        raise ValueError("zero vector has no primitive direction")
    scale = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    return primitive((int(x * scale), int(y * scale)))


def normalized_area(polygon: list[Point]) -> int:
    """Twice the Euclidean area of a lattice polygon (shoelace, CCW positive)."""
    total = 0
    n = len(polygon)
    for k in range(n):
        a = polygon[k]
        b = polygon[(k + 1) % n]
        total += a[0] * b[1] - a[1] * b[0]
    return total


def boundary_lattice_points(polygon: list[Point]) -> int:
    """Number of lattice points on the boundary of a lattice polygon."""
    n = len(polygon)
    return sum(lattice_length(polygon[k], polygon[(k + 1) % n]) for k in range(n))


def interior_lattice_points(polygon: list[Point]) -> int:
    """Interior lattice point count by Pick's theorem: i = A - b/2 + 1.

    With m = 2A the normalized area and b the boundary count this is
    (m - b + 2) / 2, which is always an integer.
    """
    m = abs(normalized_area(polygon))
    b = boundary_lattice_points(polygon)
    return (m - b + 2) // 2


def on_segment(p, a, b) -> bool:
    """Exact test: does p lie on the closed segment [a, b]?"""
    d = (b[0] - a[0], b[1] - a[1])
    w = (p[0] - a[0], p[1] - a[1])
    if cross(d, w) != 0:
        return False
    t = w[0] * d[0] + w[1] * d[1]
    return 0 <= t <= d[0] * d[0] + d[1] * d[1]


def on_ray(p, base, direction) -> bool:
    """Exact test: does p lie on the ray from base along an integer direction?"""
    w = (p[0] - base[0], p[1] - base[1])
    if cross(direction, w) != 0:
        return False
    return w[0] * direction[0] + w[1] * direction[1] >= 0
