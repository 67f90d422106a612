"""Dual subdivisions and tropical plane curves.

A tropical polynomial induces a regular subdivision of its Newton polygon:
lift each exponent (i, j) to height c(i, j) and project the upper faces of the
lifted hull back down.  The tropical curve (the non-differentiability locus of
the max) is dual to that subdivision: one curve vertex per 2-cell, one bounded
edge per interior subdivision edge, one unbounded ray per boundary edge.

The subdivision is computed over the integers: coefficients are rescaled by a
common denominator (positive rescaling does not change the face structure) and
every face test is an integer sign check.  Curve vertex coordinates are exact
Fractions solved from term equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    DegenerateSupportError,
    ImbalancedError,
    NotSimpleError,
    NotStandardFormError,
    NotTrivalentError,
)
from .geometry import (
    Point,
    convex_hull,
    interior_lattice_points,
    lattice_length,
    normalized_area,
    on_ray,
    on_segment,
    primitive,
    primitive_from_rational,
)
from .polynomial import TropicalPolynomial

Segment = tuple[Point, Point]

WEST = (-1, 0)
SOUTH = (0, -1)
NORTHEAST = (1, 1)


@dataclass(frozen=True)
class SubdivisionEdge:
    """Lattice segment of the subdivision with its incident 2-cells."""

    a: Point
    b: Point
    cells: tuple[int, ...]

    @property
    def is_boundary(self) -> bool:
        return len(self.cells) == 1


@dataclass(frozen=True)
class Subdivision:
    """Regular subdivision of a Newton polygon.

    cells hold each 2-cell's hull vertices counterclockwise from the lex
    minimum; edges are canonical segments (a < b) with incident cell indices.
    """

    cells: tuple[tuple[Point, ...], ...]
    edges: tuple[SubdivisionEdge, ...]
    newton_polygon: tuple[Point, ...]


@dataclass(frozen=True)
class CurveVertex:
    x: Fraction
    y: Fraction
    dual_cell: int


@dataclass(frozen=True)
class BoundedEdge:
    v1: int
    v2: int
    weight: int
    dual: Segment


@dataclass(frozen=True)
class Ray:
    vertex: int
    direction: tuple[int, int]
    weight: int
    dual: Segment


@dataclass(frozen=True)
class TropicalCurve:
    vertices: tuple[CurveVertex, ...]
    bounded_edges: tuple[BoundedEdge, ...]
    rays: tuple[Ray, ...]
    subdivision: Subdivision

    def dual_polygon(self, vertex_index: int) -> tuple[Point, ...]:
        return self.subdivision.cells[self.vertices[vertex_index].dual_cell]


@dataclass(frozen=True)
class CurveStats:
    """Enumerative summary; betti1 and welschinger_sign are None when the
    curve is not simple."""

    degree: int | None
    node_count: int
    trivalent_multiplicities: tuple[int, ...]
    betti1: int | None
    welschinger_sign: int | None


def _integer_lift(poly: TropicalPolynomial) -> dict[Point, int]:
    """Coefficients scaled by a common positive denominator.

    Rescaling heights by a positive constant preserves the upper faces, so the
    subdivision can be computed in pure integer arithmetic.
    """
    scale = lcm(*(c.denominator for c in poly.terms.values()))
    return {p: int(c * scale) for p, c in poly.terms.items()}


def dual_subdivision(poly: TropicalPolynomial) -> Subdivision:
    """Regular subdivision of the Newton polygon induced by the coefficients.

    Every affinely independent triple of support points spans a candidate
    facet plane of the lifted point set; the triple lies on an upper facet
    exactly when no lifted point is above that plane.  The facet's cell is
    the full set of support points on the plane.
    """
    support = poly.support
    hull = convex_hull(support)
    if len(hull) < 3:
        raise DegenerateSupportError(
            f"Newton polygon must be 2-dimensional, got hull {hull}"
        )
    lift = _integer_lift(poly)
    n = len(support)
    cell_sets: set[frozenset[Point]] = set()
    for ia in range(n):
        pa = support[ia]
        za = lift[pa]
        for ib in range(ia + 1, n):
            pb = support[ib]
            ux, uy, uz = pb[0] - pa[0], pb[1] - pa[1], lift[pb] - za
            for ic in range(ib + 1, n):
                pc = support[ic]
                vx, vy, vz = pc[0] - pa[0], pc[1] - pa[1], lift[pc] - za
                nz = ux * vy - uy * vx
                if nz == 0:
                    continue
                nx = uy * vz - uz * vy
                ny = uz * vx - ux * vz
                if nz < 0:
                    nx, ny, nz = -nx, -ny, -nz
                members = []
                upper = True
                for s in support:
                    e = nx * (s[0] - pa[0]) + ny * (s[1] - pa[1]) + nz * (lift[s] - za)
                    if e > 0:
                        upper = False
                        break
                    if e == 0:
                        members.append(s)
                if upper:
                    cell_sets.add(frozenset(members))
    ordered = sorted(cell_sets, key=sorted)
    polygons = tuple(tuple(convex_hull(sorted(s))) for s in ordered)

    edge_cells: dict[Segment, list[int]] = {}
    edge_order: list[Segment] = []
    for idx, polygon in enumerate(polygons):
        k = len(polygon)
        for t in range(k):
            a, b = polygon[t], polygon[(t + 1) % k]
            seg: Segment = (a, b) if a < b else (b, a)
            if seg not in edge_cells:
                edge_cells[seg] = []
                edge_order.append(seg)
            edge_cells[seg].append(idx)
    edges = tuple(
        SubdivisionEdge(seg[0], seg[1], tuple(edge_cells[seg])) for seg in edge_order
    )
    return Subdivision(cells=polygons, edges=edges, newton_polygon=tuple(hull))


def _cell_vertex(poly: TropicalPolynomial, cell: tuple[Point, ...]) -> tuple[Fraction, Fraction]:
    """Exact point where all the cell's terms are equal (and globally maximal).

    Solved from two independent equalities among the first three hull
    vertices; independence holds because the cell is 2-dimensional.
    """
    (a, b, c) = cell[0], cell[1], cell[2]
    ca, cb, cc = poly.terms[a], poly.terms[b], poly.terms[c]
    # (a_i - b_i) x + (a_j - b_j) y = c_b - c_a, same for c
    a11, a12, r1 = a[0] - b[0], a[1] - b[1], cb - ca
    a21, a22, r2 = a[0] - c[0], a[1] - c[1], cc - ca
    det = a11 * a22 - a12 * a21
    x = Fraction(r1 * a22 - r2 * a12, det)
    y = Fraction(a11 * r2 - a21 * r1, det)
    return x, y


def extract_curve(poly: TropicalPolynomial) -> TropicalCurve:
    """Tropical curve dual to the polynomial's regular subdivision."""
    sub = dual_subdivision(poly)
    vertices = tuple(
        CurveVertex(*_cell_vertex(poly, cell), dual_cell=idx)
        for idx, cell in enumerate(sub.cells)
    )

    # Boundary edge orientation as traversed counterclockwise inside its cell;
    # rotating that direction by -90 degrees points out of the Newton polygon.
    boundary_dir: dict[Segment, tuple[int, int]] = {}
    for polygon in sub.cells:
        k = len(polygon)
        for t in range(k):
            a, b = polygon[t], polygon[(t + 1) % k]
            seg: Segment = (a, b) if a < b else (b, a)
            boundary_dir.setdefault(seg, (b[0] - a[0], b[1] - a[1]))

    bounded = []
    rays = []
    for edge in sub.edges:
        seg: Segment = (edge.a, edge.b)
        weight = lattice_length(edge.a, edge.b)
        if edge.is_boundary:
            dx, dy = boundary_dir[seg]
            rays.append(
                Ray(
                    vertex=edge.cells[0],
                    direction=primitive((dy, -dx)),
                    weight=weight,
                    dual=seg,
                )
            )
        else:
            bounded.append(
                BoundedEdge(v1=edge.cells[0], v2=edge.cells[1], weight=weight, dual=seg)
            )
    return TropicalCurve(
        vertices=vertices,
        bounded_edges=tuple(bounded),
        rays=tuple(rays),
        subdivision=sub,
    )


def check_balancing(curve: TropicalCurve) -> list[tuple[int, tuple[int, int]]]:
    """Vertices where weighted primitive outgoing directions do not sum to zero.

    Empty on every correctly extracted curve; a nonempty result signals an
    internal inconsistency, not bad user input.
    """
    sums = [[0, 0] for _ in curve.vertices]
    for edge in curve.bounded_edges:
        p1 = curve.vertices[edge.v1]
        p2 = curve.vertices[edge.v2]
        d = primitive_from_rational((p2.x - p1.x, p2.y - p1.y))
        sums[edge.v1][0] += edge.weight * d[0]
        sums[edge.v1][1] += edge.weight * d[1]
        sums[edge.v2][0] -= edge.weight * d[0]
        sums[edge.v2][1] -= edge.weight * d[1]
    for ray in curve.rays:
        sums[ray.vertex][0] += ray.weight * ray.direction[0]
        sums[ray.vertex][1] += ray.weight * ray.direction[1]
    return [(v, (s[0], s[1])) for v, s in enumerate(sums) if s != [0, 0]]


def ray_census(curve: TropicalCurve) -> dict[tuple[int, int], int]:
    """Total ray weight per primitive direction."""
    census: dict[tuple[int, int], int] = {}
    for ray in curve.rays:
        census[ray.direction] = census.get(ray.direction, 0) + ray.weight
    return census


def degree(curve: TropicalCurve) -> int:
    """Weighted ray count in each of the West/South/North-East directions.

    The three counts must agree; anything else is reported loudly instead of
    guessing.
    """
    census = ray_census(curve)
    extra = set(census) - {WEST, SOUTH, NORTHEAST}
    if extra:
        raise NotStandardFormError(f"rays in non-standard directions: {sorted(extra)}")
    counts = {d: census.get(d, 0) for d in (WEST, SOUTH, NORTHEAST)}
    if len(set(counts.values())) != 1:
        raise ImbalancedError(f"directional ray counts differ: {counts}")
    return counts[WEST]


def vertex_multiplicity(curve: TropicalCurve, vertex_index: int) -> int:
    """Normalized area (twice Euclidean) of the vertex's dual triangle."""
    cell = curve.dual_polygon(vertex_index)
    if len(cell) != 3:
        raise NotTrivalentError(
            f"vertex {vertex_index} has a {len(cell)}-gon dual cell"
        )
    return abs(normalized_area(list(cell)))


def _is_parallelogram(cell: tuple[Point, ...]) -> bool:
    if len(cell) != 4:
        return False
    p0, p1, p2, p3 = cell
    return (p1[0] - p0[0], p1[1] - p0[1]) == (p2[0] - p3[0], p2[1] - p3[1])


def node_count(curve: TropicalCurve) -> int:
    """Number of 4-valent vertices whose dual cell is a parallelogram."""
    return sum(1 for v in curve.vertices if _is_parallelogram(curve.dual_polygon(v.dual_cell)))


def is_simple(curve: TropicalCurve) -> bool:
    """True when every dual cell is a triangle or a parallelogram."""
    return all(
        len(cell) == 3 or _is_parallelogram(cell) for cell in curve.subdivision.cells
    )


def _require_simple(curve: TropicalCurve) -> None:
    if not is_simple(curve):
        raise NotSimpleError("curve has a dual cell that is neither triangle nor parallelogram")


def curve_multiplicity(curve: TropicalCurve) -> int:
    """Product of trivalent vertex multiplicities (nodes contribute 1)."""
    _require_simple(curve)
    product = 1
    for v in range(len(curve.vertices)):
        if len(curve.dual_polygon(v)) == 3:
            product *= vertex_multiplicity(curve, v)
    return product


def welschinger_sign(curve: TropicalCurve) -> int:
    """Tropical Welschinger sign: 0 if some trivalent vertex has even
    multiplicity, else (-1) to the total interior lattice point count of the
    dual triangles."""
    _require_simple(curve)
    total_interior = 0
    for v in range(len(curve.vertices)):
        cell = curve.dual_polygon(v)
        if len(cell) != 3:
            continue
        if abs(normalized_area(list(cell))) % 2 == 0:
            return 0
        total_interior += interior_lattice_points(list(cell))
    return -1 if total_interior % 2 else 1


def _canonical_direction(v: tuple[int, int]) -> tuple[int, int]:
    p = primitive(v)
    return p if p > (-p[0], -p[1]) else (-p[0], -p[1])


def _resolution_graph(curve: TropicalCurve):
    """Graph of the curve's parameterization: nodes are split into the two
    crossing branches by pairing edges dual to parallel parallelogram sides;
    every ray ends in its own leaf."""
    split_classes: dict[int, tuple[tuple[int, int], tuple[int, int]]] = {}
    for v in range(len(curve.vertices)):
        cell = curve.dual_polygon(v)
        if _is_parallelogram(cell):
            d0 = _canonical_direction((cell[1][0] - cell[0][0], cell[1][1] - cell[0][1]))
            d1 = _canonical_direction((cell[2][0] - cell[1][0], cell[2][1] - cell[1][1]))
            split_classes[v] = (d0, d1)

    def attach(v: int, dual: Segment):
        if v not in split_classes:
            return ("v", v)
        d = _canonical_direction((dual[1][0] - dual[0][0], dual[1][1] - dual[0][1]))
        branch = 0 if d == split_classes[v][0] else 1
        return ("v", v, branch)

    graph_edges = []
    for edge in curve.bounded_edges:
        graph_edges.append((attach(edge.v1, edge.dual), attach(edge.v2, edge.dual)))
    for k, ray in enumerate(curve.rays):
        graph_edges.append((attach(ray.vertex, ray.dual), ("leaf", k)))
    return graph_edges


def first_betti(curve: TropicalCurve) -> int:
    """First Betti number of the compactified parameterization graph."""
    _require_simple(curve)
    edges = _resolution_graph(curve)
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    nodes = set()
    for a, b in edges:
        nodes.add(a)
        nodes.add(b)
    for node in nodes:
        parent[node] = node
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    components = len({find(x) for x in nodes})
    return len(edges) - len(nodes) + components


def is_rational(curve: TropicalCurve) -> bool:
    """True when the curve is the image of an immersed tree."""
    return first_betti(curve) == 0


def membership_oracle(poly: TropicalPolynomial, point) -> bool:
    """True iff the max is attained at least twice at the point."""
    return len(poly.argmax_terms(point[0], point[1])) >= 2


def point_on_curve(curve: TropicalCurve, point) -> bool:
    """Exact geometric membership test against extracted edges and rays."""
    p = (Fraction(point[0]), Fraction(point[1]))
    for edge in curve.bounded_edges:
        a = curve.vertices[edge.v1]
        b = curve.vertices[edge.v2]
        if on_segment(p, (a.x, a.y), (b.x, b.y)):
            return True
    for ray in curve.rays:
        base = curve.vertices[ray.vertex]
        if on_ray(p, (base.x, base.y), ray.direction):
            return True
    return False


def curve_stats(curve: TropicalCurve) -> CurveStats:
    """Summary of the enumerative attributes the curve supports."""
    try:
        deg: int | None = degree(curve)
    except (NotStandardFormError, ImbalancedError):
        deg = None
    multiplicities = tuple(
        vertex_multiplicity(curve, v)
        for v in range(len(curve.vertices))
        if len(curve.dual_polygon(v)) == 3
    )
    if is_simple(curve):
        b1: int | None = first_betti(curve)
        sign: int | None = welschinger_sign(curve)
    else:
        b1 = None
        sign = None
    return CurveStats(
        degree=deg,
        node_count=node_count(curve),
        trivalent_multiplicities=multiplicities,
        betti1=b1,
        welschinger_sign=sign,
    )
