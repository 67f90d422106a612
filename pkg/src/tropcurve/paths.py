"""Increasing lattice paths in the side-d triangle and their curve-counting weights.

Paths live in T_d = {(x, y): x, y >= 0, x + y <= d}, ordered by a generic
linear functional.  A top-level path visits 3d points (3d - 1 primitive-order
steps) from the minimal vertex p to the maximal vertex q.

Each path, together with the two boundary arcs of T_d, bounds two regions.
The division recursion peels a region at the first corner turning toward its
arc: either cut the corner (committing the corner triangle as a trivalent
dual cell) or reflect it across the chord (committing a parallelogram, a
node of the dual curve); a reflection falling outside T_d drops that branch.
Peeling both regions down to their arcs yields the pairs of tilings whose
glued cells are exactly the dual subdivisions of plane tropical curves
whose marked edges realize the path.

Two weights attach to a tiling: its complex weight (product of normalized
triangle areas) and its Welschinger weight (zero if any triangle has even
area, else a sign from interior lattice points).  Summing over glued pairs
that form a CONNECTED curve (after splitting each node into its two crossing
branches) gives the count of irreducible rational degree-d curves through
3d - 1 generic points, and the Welschinger invariant.  Dropping the
connectivity filter would also count reducible degenerations, such as a line
through two of the points union a rigid one-cycle cubic through the other
nine; those must not enter either total.  The first reducible configurations
appear at d = 4, where they account for exactly C(11,2) = 55 spurious units.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterator

from .errors import BadDegreeError, InvalidPathError
from .geometry import Point, cross, primitive

ORDER_XEY = "xey"  # x ascending, y descending: realizes x - eps*y
ORDER_ROWMAJOR = "rowmajor"  # (d+1)*x + y ascending

SIDE_PLUS = "plus"  # boundary arc left of the travel direction p -> q
SIDE_MINUS = "minus"

KIND_COMPLEX = "complex"
KIND_WELSCHINGER = "welschinger"

# a tiling is a tuple of cells; a cell is a tuple of 3 (triangle) or 4
# (parallelogram a, b, c, a+c-b in boundary order) lattice points
Cell = tuple[Point, ...]
Tiling = tuple[Cell, ...]


@dataclass(frozen=True)
class PathDomain:
    """Triangle T_d with a total point order and its two boundary arcs."""

    d: int
    order: str
    points: tuple[Point, ...]
    p: Point
    q: Point
    left_arc: tuple[Point, ...]
    right_arc: tuple[Point, ...]

    @property
    def rank(self) -> dict[Point, int]:
        return {pt: k for k, pt in enumerate(self.points)}

    def contains(self, pt: Point) -> bool:
        return pt[0] >= 0 and pt[1] >= 0 and pt[0] + pt[1] <= self.d

    def steps(self) -> int:
        """Step count of a top-level path."""
        return 3 * self.d - 1


def _side_lattice_points(a: Point, b: Point) -> list[Point]:
    step = primitive((b[0] - a[0], b[1] - a[1]))
    count = gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))
    return [(a[0] + k * step[0], a[1] + k * step[1]) for k in range(count + 1)]


def path_domain(d: int, order: str = ORDER_XEY) -> PathDomain:
    """Lattice points of T_d under the chosen order, with boundary arcs."""
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise BadDegreeError(f"degree must be a positive integer, got {d!r}")
    pts = [(x, y) for x in range(d + 1) for y in range(d + 1 - x)]
    if order == ORDER_XEY:
        pts.sort(key=lambda pt: (pt[0], -pt[1]))
    elif order == ORDER_ROWMAJOR:
        pts.sort(key=lambda pt: ((d + 1) * pt[0] + pt[1]))
    else:
        raise ValueError(f"unknown order preset {order!r}")
    p, q = pts[0], pts[-1]
    corners = ((0, 0), (d, 0), (0, d))
    (r,) = [c for c in corners if c not in (p, q)]
    via_corner = tuple(_side_lattice_points(p, r) + _side_lattice_points(r, q)[1:])
    direct = tuple(_side_lattice_points(p, q))
    r_is_left = cross((q[0] - p[0], q[1] - p[1]), (r[0] - p[0], r[1] - p[1])) > 0
    left_arc, right_arc = (via_corner, direct) if r_is_left else (direct, via_corner)
    return PathDomain(
        d=d,
        order=order,
        points=tuple(pts),
        p=p,
        q=q,
        left_arc=left_arc,
        right_arc=right_arc,
    )


def enumerate_paths(domain: PathDomain) -> Iterator[tuple[Point, ...]]:
    """All strictly increasing point sequences p -> q with 3d - 1 steps.

    Any selection of 3d - 2 interior-order points works, so enumeration is a
    plain combination scan; the order is deterministic.
    """
    interior = domain.points[1:-1]
    head = (domain.p,)
    tail = (domain.q,)
    for middle in combinations(interior, domain.steps() - 1):
        yield head + middle + tail


def path_census(domain: PathDomain) -> int:
    """Number of enumerated paths (counted, not formula-derived)."""
    interior = domain.points[1:-1]
    return sum(1 for _ in combinations(interior, domain.steps() - 1))


def validate_path(path, domain: PathDomain) -> tuple[Point, ...]:
    for v in path:
        if v[0] != int(v[0]) or v[1] != int(v[1]):
            raise InvalidPathError(f"path points must be lattice points, got {v!r}")
    pts = tuple((int(v[0]), int(v[1])) for v in path)
    if len(pts) < 2 or pts[0] != domain.p or pts[-1] != domain.q:
        raise InvalidPathError(f"path must run from {domain.p} to {domain.q}")
    rank = domain.rank
    for v in pts:
        if v not in rank:
            raise InvalidPathError(f"point {v} outside the triangle of side {domain.d}")
    ranks = [rank[v] for v in pts]
    if any(a >= b for a, b in zip(ranks, ranks[1:])):
        raise InvalidPathError("path is not strictly increasing in the point order")
    return pts


def _triangle_weights(a: Point, b: Point, c: Point) -> tuple[int, int]:
    """(complex, Welschinger) factors of one trivalent dual triangle."""
    m = abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
    if m % 2 == 0:
        return m, 0
    boundary = (
        gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))
        + gcd(abs(c[0] - b[0]), abs(c[1] - b[1]))
        + gcd(abs(a[0] - c[0]), abs(a[1] - c[1]))
    )
    interior = (m - boundary + 2) // 2
    return m, (-1 if interior % 2 else 1)


class _DivisionEngine:
    """Memoized corner-division machinery for one domain.

    `pair` is the bare recursion (sum over all completions, no connectivity
    filter); `tilings` materializes the completions so the glued pairs can be
    tested for connectedness.
    """

    def __init__(self, domain: PathDomain):
        self.d = domain.d
        self.arcs = {SIDE_PLUS: domain.left_arc, SIDE_MINUS: domain.right_arc}
        self.signs = {SIDE_PLUS: 1, SIDE_MINUS: -1}
        self.pair_cache: dict[tuple[tuple[Point, ...], str], tuple[int, int]] = {}
        self.tiling_cache: dict[tuple[tuple[Point, ...], str], tuple[Tiling, ...]] = {}
        self.tiling_info: dict[Tiling, tuple[int, int, dict]] = {}

    def _divisible_corner(self, pts: tuple[Point, ...], side: str):
        sign = self.signs[side]
        for k in range(1, len(pts) - 1):
            a, b, c = pts[k - 1], pts[k], pts[k + 1]
            t = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
            if sign * t > 0:
                return k
        return None

    def pair(self, pts: tuple[Point, ...], side: str) -> tuple[int, int]:
        """(complex, Welschinger) division values over all completions."""
        key = (pts, side)
        cached = self.pair_cache.get(key)
        if cached is not None:
            return cached
        if pts == self.arcs[side]:
            result = (1, 1)
        else:
            j = self._divisible_corner(pts, side)
            if j is None:
                result = (0, 0)
            else:
                a, b, c = pts[j - 1], pts[j], pts[j + 1]
                m, fw = _triangle_weights(a, b, c)
                cut = self.pair(pts[:j] + pts[j + 1 :], side)
                vx, vy = a[0] + c[0] - b[0], a[1] + c[1] - b[1]
                if vx >= 0 and vy >= 0 and vx + vy <= self.d:
                    refl = self.pair(pts[:j] + ((vx, vy),) + pts[j + 1 :], side)
                else:
                    refl = (0, 0)
                result = (m * cut[0] + refl[0], fw * cut[1] + refl[1])
        self.pair_cache[key] = result
        return result

    def tilings(self, pts: tuple[Point, ...], side: str) -> tuple[Tiling, ...]:
        """All completions of the region between pts and the side's arc."""
        key = (pts, side)
        cached = self.tiling_cache.get(key)
        if cached is not None:
            return cached
        if pts == self.arcs[side]:
            result: tuple[Tiling, ...] = ((),)
        else:
            j = self._divisible_corner(pts, side)
            if j is None:
                result = ()
            else:
                a, b, c = pts[j - 1], pts[j], pts[j + 1]
                out = [
                    ((a, b, c),) + rest
                    for rest in self.tilings(pts[:j] + pts[j + 1 :], side)
                ]
                vx, vy = a[0] + c[0] - b[0], a[1] + c[1] - b[1]
                if vx >= 0 and vy >= 0 and vx + vy <= self.d:
                    cell = (a, b, c, (vx, vy))
                    out.extend(
                        (cell,) + rest
                        for rest in self.tilings(
                            pts[:j] + ((vx, vy),) + pts[j + 1 :], side
                        )
                    )
                result = tuple(out)
        self.tiling_cache[key] = result
        return result

    def info(self, tiling: Tiling) -> tuple[int, int, dict]:
        """(complex weight, Welschinger weight, segment -> component root).

        Components are computed on the tiling's cells with every
        parallelogram split into its two crossing branches (opposite sides
        belong to the same branch), mirroring node resolution of the dual
        curve.  The returned map sends each canonical cell side to its
        component representative, so a path can look its steps up directly.
        """
        cached = self.tiling_info.get(tiling)
        if cached is not None:
            return cached
        mu = 1
        nu = 1
        side_owner: dict[tuple[Point, Point], list[int]] = {}
        node_count = 0
        node_of_side: dict[tuple[Point, Point], int] = {}
        node_ids: list[int] = []
        for cell in tiling:
            if len(cell) == 3:
                a, b, c = cell
                m, fw = _triangle_weights(a, b, c)
                mu *= m
                nu *= fw
                node = node_count
                node_count += 1
                sides = ((a, b), (b, c), (c, a))
                nodes = (node, node, node)
            else:
                a, b, c, v = cell
                branch0 = node_count
                branch1 = node_count + 1
                node_count += 2
                sides = ((a, b), (c, v), (b, c), (v, a))
                nodes = (branch0, branch0, branch1, branch1)
            for (u, w), node in zip(sides, nodes):
                seg = (u, w) if u < w else (w, u)
                node_of_side[seg] = node
                side_owner.setdefault(seg, []).append(node)
        parent = list(range(node_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for owners in side_owner.values():
            if len(owners) == 2:
                ra, rb = find(owners[0]), find(owners[1])
                if ra != rb:
                    parent[ra] = rb
        segment_root = {seg: find(node) for seg, node in node_of_side.items()}
        result = (mu, nu, segment_root)
        self.tiling_info[tiling] = result
        return result


_ENGINES: dict[tuple[int, str], _DivisionEngine] = {}


def _engine(domain: PathDomain) -> _DivisionEngine:
    key = (domain.d, domain.order)
    engine = _ENGINES.get(key)
    if engine is None:
        engine = _DivisionEngine(domain)
        _ENGINES[key] = engine
    return engine


def _glued_totals(path: tuple[Point, ...], engine: _DivisionEngine) -> tuple[int, int]:
    """(complex, Welschinger) sums over connected glued tiling pairs."""
    plus = engine.tilings(path, SIDE_PLUS)
    if not plus:
        return (0, 0)
    minus = engine.tilings(path, SIDE_MINUS)
    if not minus:
        return (0, 0)
    n_steps = len(path) - 1
    segs = []
    for k in range(n_steps):
        u, w = path[k], path[k + 1]
        segs.append((u, w) if u < w else (w, u))

    def step_blocks(tiling: Tiling):
        mu, nu, segment_root = engine.info(tiling)
        blocks: dict[int, list[int]] = {}
        for k, seg in enumerate(segs):
            root = segment_root.get(seg)
            if root is not None:
                blocks.setdefault(root, []).append(k)
        return mu, nu, tuple(tuple(b) for b in blocks.values())

    plus_data = [step_blocks(t) for t in plus]
    minus_data = [step_blocks(t) for t in minus]
    total_mu = 0
    total_nu = 0
    for mu_p, nu_p, blocks_p in plus_data:
        for mu_m, nu_m, blocks_m in minus_data:
            parent = list(range(n_steps))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            merged = n_steps
            for blocks in (blocks_p, blocks_m):
                for block in blocks:
                    first = block[0]
                    for k in block[1:]:
                        ra, rb = find(first), find(k)
                        if ra != rb:
                            parent[ra] = rb
                            merged -= 1
            if merged == 1:
                total_mu += mu_p * mu_m
                total_nu += nu_p * nu_m
    return (total_mu, total_nu)


@dataclass(frozen=True)
class PathMultiplicity:
    """Division values of one path.

    The side values are the raw recursion results; the totals sum only over
    glued completions forming an irreducible (connected) curve, so for d >= 4
    the total can be smaller than the product of the sides.
    """

    complex_plus: int
    complex_minus: int
    welschinger_plus: int
    welschinger_minus: int
    complex_total: int
    welschinger_total: int


def side_multiplicity(path, domain: PathDomain, side: str, kind: str) -> int:
    """Division value of the path toward one side, for one weight kind."""
    pts = validate_path(path, domain)
    if side not in (SIDE_PLUS, SIDE_MINUS):
        raise ValueError(f"side must be {SIDE_PLUS!r} or {SIDE_MINUS!r}")
    pair = _engine(domain).pair(pts, side)
    if kind == KIND_COMPLEX:
        return pair[0]
    if kind == KIND_WELSCHINGER:
        return pair[1]
    raise ValueError(f"kind must be {KIND_COMPLEX!r} or {KIND_WELSCHINGER!r}")


def path_multiplicity(path, domain: PathDomain) -> PathMultiplicity:
    """Side values and connected totals of one path."""
    pts = validate_path(path, domain)
    engine = _engine(domain)
    cp, wp = engine.pair(pts, SIDE_PLUS)
    cm, wm = engine.pair(pts, SIDE_MINUS)
    if cp == 0 or cm == 0:
        mu = nu = 0
    else:
        mu, nu = _glued_totals(pts, engine)
    return PathMultiplicity(
        complex_plus=cp,
        complex_minus=cm,
        welschinger_plus=wp,
        welschinger_minus=wm,
        complex_total=mu,
        welschinger_total=nu,
    )


@lru_cache(maxsize=None)
def _totals(d: int, order: str) -> tuple[int, int]:
    domain = path_domain(d, order)
    engine = _engine(domain)
    total_mu = 0
    total_nu = 0
    for path in enumerate_paths(domain):
        # cheap rejection: a path with a dead side has no completions at all
        if engine.pair(path, SIDE_PLUS)[0] == 0:
            continue
        if engine.pair(path, SIDE_MINUS)[0] == 0:
            continue
        mu, nu = _glued_totals(path, engine)
        total_mu += mu
        total_nu += nu
    return total_mu, total_nu


def count_both(d: int, order: str = ORDER_XEY) -> tuple[int, int]:
    """(curve count, Welschinger invariant) from one enumeration pass."""
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise BadDegreeError(f"degree must be a positive integer, got {d!r}")
    if order not in (ORDER_XEY, ORDER_ROWMAJOR):
        raise ValueError(f"unknown order preset {order!r}")
    return _totals(d, order)


def count_gw(d: int, order: str = ORDER_XEY) -> int:
    """Count of irreducible rational degree-d curves via weighted lattice paths."""
    return count_both(d, order)[0]


def count_welschinger(d: int, order: str = ORDER_XEY) -> int:
    """Welschinger invariant via signed lattice-path weights."""
    return count_both(d, order)[1]
