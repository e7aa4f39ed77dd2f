"""Exact 2D lattice triangulation machinery.

Three building blocks shared by every construction:

* staircase triangulation of the strip between two parallel lattice
  segments, with the diagonal selected by a parity rule;
* deterministic regular triangulations of small planar point sets via the
  lower hull of lexicographically perturbed quadratic heights;
* ``complete_primitive``: triangulate a lattice polygon so that a set of
  mandated non-crossing segments appears, by splitting the polygon along
  mandated chains and triangulating each cell.

Heights are vectors of Fractions compared lexicographically, so ties of the
quadratic term are broken exactly and reproducibly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Pt2 = tuple[int, int]
Tri2 = tuple[Pt2, Pt2, Pt2]


def orient(a: Sequence, b: Sequence, c: Sequence):
    """Twice the signed area of (a, b, c); positive = counterclockwise."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def segment_lattice_points(a, b):
    """Lattice points on [a, b] inclusive, ordered from a to b (any dim)."""
    diff = tuple(y - x for x, y in zip(a, b))
    g = 0
    for d in diff:
        g = gcd(g, abs(d))
    if g == 0:
        return [tuple(a)]
    step = tuple(d // g for d in diff)
    return [tuple(x + i * s for x, s in zip(a, step)) for i in range(g + 1)]


def unit_parity(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(c & 1 for c in p)


def triangulate_strip(bot: list, top: list, diag_parity_pair: frozenset) -> list[tuple]:
    """Staircase triangulation of a trapezoid strip between two parallel
    lattice segments, given as point lists in a consistent direction.

    The strip is cut by the diagonal whose endpoint parities form
    ``diag_parity_pair``; the two remaining big triangles are fanned from the
    diagonal endpoints (their primitive triangulation is forced).
    """
    if len(bot) == 1:
        # Degenerate strip: a triangle fanned from the single bottom point.
        return [(bot[0], top[j], top[j + 1]) for j in range(len(top) - 1)]
    if len(top) == 1:
        return [(top[0], bot[j], bot[j + 1]) for j in range(len(bot) - 1)]

    diag_a = frozenset((unit_parity(bot[0]), unit_parity(top[-1])))
    diag_b = frozenset((unit_parity(bot[-1]), unit_parity(top[0])))
    if diag_parity_pair == diag_a:
        apex_bot, apex_top = bot[0], top[-1]
    elif diag_parity_pair == diag_b:
        apex_bot, apex_top = bot[-1], top[0]
    else:
        raise ValueError(
            f"diagonal parity pair {set(diag_parity_pair)} matches neither "
            f"{set(diag_a)} nor {set(diag_b)}"
        )
    tris = [(apex_top, bot[j], bot[j + 1]) for j in range(len(bot) - 1)]
    tris += [(apex_bot, top[j], top[j + 1]) for j in range(len(top) - 1)]
    return tris


def strip_diagonal_pairs(bot: list, top: list) -> tuple[frozenset, frozenset]:
    """The two admissible endpoint-parity pairs of a strip's diagonals."""
    return (
        frozenset((unit_parity(bot[0]), unit_parity(top[-1]))),
        frozenset((unit_parity(bot[-1]), unit_parity(top[0]))),
    )


# ---------------------------------------------------------------------------
# Lower-hull (regular) triangulations with exact lexicographic perturbation.
# ---------------------------------------------------------------------------


class _Hull:
    """Incremental regular triangulation of a planar point set.

    Points carry height vectors (tuples of Fractions) compared
    lexicographically; insertion order and all predicates are deterministic.
    """

    def __init__(self, pts: list[Pt2], heights: list[tuple]):
        self.pts = list(pts)
        self.h = list(heights)
        self.tri: set[tuple[int, int, int]] = set()
        self.edge_map: dict[tuple[int, int], list] = {}

    # -- predicates --------------------------------------------------------

    def _orient(self, i: int, j: int, k: int) -> int:
        v = orient(self.pts[i], self.pts[j], self.pts[k])
        return (v > 0) - (v < 0)

    def _below(self, i: int, j: int, k: int, l: int) -> int:
        """Sign of the height of point l relative to the plane through the
        lifted points i, j, k: negative = below (plane must be CCW in xy)."""
        ax, ay = self.pts[i]
        bx, by = self.pts[j]
        cx, cy = self.pts[k]
        dx, dy = self.pts[l]
        e1 = (bx - ax, by - ay)
        e2 = (cx - ax, cy - ay)
        e3 = (dx - ax, dy - ay)
        m11 = e1[0]
        m12 = e1[1]
        m21 = e2[0]
        m22 = e2[1]
        m31 = e3[0]
        m32 = e3[1]
        width = len(self.h[i])
        for t in range(width):
            h1 = self.h[j][t] - self.h[i][t]
            h2 = self.h[k][t] - self.h[i][t]
            h3 = self.h[l][t] - self.h[i][t]
            det = (
                m11 * (m22 * h3 - m32 * h2)
                - m12 * (m21 * h3 - m31 * h2)
                + h1 * (m21 * m32 - m31 * m22)
            )
            if det != 0:
                return 1 if det > 0 else -1
        return 0

    # -- triangulation surgery ---------------------------------------------

    def _add(self, i: int, j: int, k: int) -> None:
        if self._orient(i, j, k) < 0:
            j, k = k, j
        t = (i, j, k)
        self.tri.add(t)
        for e in ((i, j), (j, k), (i, k)):
            self.edge_map.setdefault(tuple(sorted(e)), []).append(t)

    def _remove(self, t: tuple[int, int, int]) -> None:
        self.tri.discard(t)
        i, j, k = t
        for e in ((i, j), (j, k), (i, k)):
            key = tuple(sorted(e))
            lst = self.edge_map.get(key)
            if lst and t in lst:
                lst.remove(t)
                if not lst:
                    del self.edge_map[key]

    def _locate(self, p: int) -> tuple[tuple[int, int, int], tuple[int, int] | None]:
        px = self.pts[p]
        for t in sorted(self.tri):
            i, j, k = t
            o1 = orient(self.pts[i], self.pts[j], px)
            o2 = orient(self.pts[j], self.pts[k], px)
            o3 = orient(self.pts[k], self.pts[i], px)
            if o1 >= 0 and o2 >= 0 and o3 >= 0:
                zeros = [o1 == 0, o2 == 0, o3 == 0].count(True)
                if zeros == 0:
                    return t, None
                if zeros == 1:
                    if o1 == 0:
                        return t, tuple(sorted((i, j)))
                    if o2 == 0:
                        return t, tuple(sorted((j, k)))
                    return t, tuple(sorted((k, i)))
                raise ValueError(f"duplicate point during hull insertion: {px}")
        raise ValueError(f"point {px} not inside the current hull")

    def insert(self, p: int) -> None:
        t, edge = self._locate(p)
        suspects: list[tuple[int, int]] = []
        if edge is None:
            i, j, k = t
            self._remove(t)
            self._add(i, j, p)
            self._add(j, k, p)
            self._add(k, i, p)
            suspects = [tuple(sorted(e)) for e in ((i, j), (j, k), (k, i))]
        else:
            a, b = edge
            for tt in list(self.edge_map.get(edge, [])):
                other = next(v for v in tt if v not in edge)
                self._remove(tt)
                self._add(a, other, p)
                self._add(b, other, p)
                suspects.append(tuple(sorted((a, other))))
                suspects.append(tuple(sorted((b, other))))
        while suspects:
            e = suspects.pop()
            tris = self.edge_map.get(e, [])
            if len(tris) != 2:
                continue
            t1, t2 = tris
            if p in t1 and p in t2:
                continue
            if p in t2:
                t1, t2 = t2, t1
            if p not in t1:
                continue
            a, b = e
            d = next(v for v in t2 if v not in e)
            # Flip iff the lifted d lies strictly below the plane of t1.
            i, j, k = t1
            if self._orient(i, j, k) < 0:
                i, j, k = i, k, j
            if self._below(i, j, k, d) < 0:
                if self._orient(p, d, a) == self._orient(p, d, b):
                    raise ValueError("unflippable violated edge; heights not generic")
                self._remove(t1)
                self._remove(t2)
                self._add(p, d, a)
                self._add(p, d, b)
                suspects.append(tuple(sorted((a, d))))
                suspects.append(tuple(sorted((b, d))))


def lower_hull_triangulation(pts: list[Pt2], heights: list[tuple]) -> list[tuple[int, int, int]]:
    """Triangles (index triples) of the regular subdivision of ``pts`` under
    lexicographic height vectors, covering the convex hull of ``pts``."""
    n = len(pts)
    if n < 3:
        return []
    width = len(heights[0])
    bound = max(max(abs(x), abs(y)) for x, y in pts) + 1
    big = 16 * bound
    hmax = max(h[0] for h in heights)
    super_h = (Fraction((hmax + 1) * (64 * bound) ** 2),) + (Fraction(0),) * (width - 1)
    all_pts = list(pts) + [(-big, -big), (5 * big, -big), (-big, 5 * big)]
    all_h = list(heights) + [super_h, super_h, super_h]
    hull = _Hull(all_pts, all_h)
    hull._add(n, n + 1, n + 2)
    for idx in sorted(range(n), key=lambda i: pts[i]):
        hull.insert(idx)
    out = []
    for t in sorted(hull.tri):
        if any(v >= n for v in t):
            continue
        out.append(t)
    return out


def quadratic_heights(pts: list[Pt2]) -> list[tuple]:
    """Spec heights h(x) = sum 4^i x_i^2 plus a lexicographic tail that makes
    every tie-break deterministic (one infinitesimal slot per point in
    lexicographic point order)."""
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    slot = {i: r for r, i in enumerate(order)}
    n = len(pts)
    out = []
    for i, (x, y) in enumerate(pts):
        tail = [Fraction(0)] * n
        tail[slot[i]] = Fraction(1)
        out.append((Fraction(x * x + 4 * y * y),) + tuple(tail))
    return out


def triangulate_convex_cell(points: list[Pt2]) -> list[tuple[Pt2, Pt2, Pt2]]:
    """Deterministic primitive triangulation of the convex hull of a lattice
    point set (all points become vertices)."""
    idx = lower_hull_triangulation(points, quadratic_heights(points))
    return [(points[i], points[j], points[k]) for i, j, k in idx]


# ---------------------------------------------------------------------------
# Polygon utilities.
# ---------------------------------------------------------------------------


def polygon_area2(poly: list[Pt2]):
    s = 0
    for i in range(len(poly)):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % len(poly)]
        s += x1 * y2 - x2 * y1
    return s


def point_in_polygon(pt, poly: list[Pt2]) -> bool:
    """Boundary-inclusive point-in-simple-polygon test (exact)."""
    x, y = pt
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if orient(a, b, pt) == 0:
            if min(a[0], b[0]) <= x <= max(a[0], b[0]) and min(a[1], b[1]) <= y <= max(a[1], b[1]):
                return True
    inside = False
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if (a[1] > y) != (b[1] > y):
            # x coordinate of the crossing, exact comparison
            t = Fraction(y - a[1], b[1] - a[1])
            cx = a[0] + t * (b[0] - a[0])
            if cx > x:
                inside = not inside
    return inside


def polygon_lattice_points(poly: list[Pt2]) -> list[Pt2]:
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if point_in_polygon((x, y), poly):
                out.append((x, y))
    return out


def _boundary_with_lattice(poly: list[Pt2]) -> list[Pt2]:
    """Polygon boundary cycle including every lattice point on the edges."""
    cycle: list[Pt2] = []
    n = len(poly)
    for i in range(n):
        seg = segment_lattice_points(poly[i], poly[(i + 1) % n])
        cycle.extend(seg[:-1])
    return cycle


def _segments_cross(a: Pt2, b: Pt2, c: Pt2, d: Pt2) -> bool:
    """Proper interior crossing of segments [a,b] and [c,d]."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 == o2 == 0:
        return False
    return (o1 > 0) != (o2 > 0) and (o3 > 0) != (o4 > 0) and 0 not in (o1, o2, o3, o4)


class ConstraintError(ValueError):
    """Mandated edges cannot be realized ("bad-constraints")."""


def _on_boundary(pt: Pt2, poly: list[Pt2]) -> bool:
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if orient(a, b, pt) == 0 and min(a[0], b[0]) <= pt[0] <= max(a[0], b[0]) \
                and min(a[1], b[1]) <= pt[1] <= max(a[1], b[1]):
            return True
    return False


def _split_cycle(cycle: list[Pt2], path: list[Pt2]) -> tuple[list[Pt2], list[Pt2]]:
    i0 = cycle.index(path[0])
    i1 = cycle.index(path[-1])
    if i0 == i1:
        raise ConstraintError("splitting path must join two distinct boundary points")
    fwd = cycle[i0:] + cycle[:i0]
    j = fwd.index(path[-1])
    side_a = fwd[: j + 1] + list(reversed(path))[1:-1]
    side_b = fwd[j:] + [fwd[0]] + path[1:-1]
    return side_a, side_b


def _fan_nonconvex(cycle: list[Pt2]) -> list[tuple[Pt2, Pt2, Pt2]]:
    """Fan a (possibly non-convex) lattice cycle from its first reflex vertex,
    then complete each fan triangle with its interior lattice points."""
    n = len(cycle)
    a2 = polygon_area2(cycle)
    sgn = 1 if a2 > 0 else -1
    apex_idx = None
    for i in range(n):
        o = orient(cycle[i - 1], cycle[i], cycle[(i + 1) % n])
        if o * sgn < 0:
            apex_idx = i
            break
    if apex_idx is None:
        pts = sorted(set(polygon_lattice_points(cycle)))
        return triangulate_convex_cell(pts)
    apex = cycle[apex_idx]
    tris: list[tuple[Pt2, Pt2, Pt2]] = []
    ring = cycle[apex_idx + 1:] + cycle[:apex_idx]
    for i in range(len(ring) - 1):
        a, b = ring[i], ring[i + 1]
        if orient(apex, a, b) == 0:
            continue
        cell_pts = sorted(set(polygon_lattice_points([apex, a, b])))
        tris.extend(triangulate_convex_cell(cell_pts))
    return tris


def complete_primitive(
    polygon: list[Pt2],
    mandated: Iterable[tuple[Pt2, Pt2]] = (),
) -> list[tuple[Pt2, Pt2, Pt2]]:
    """Primitive triangulation of a lattice polygon containing every mandated
    segment as an edge (or union of edges).

    The polygon is split along mandated chains (paths of mandated segments
    joining two boundary points through the interior); each resulting cell is
    triangulated by the lower-hull rule under lexicographically perturbed
    quadratic heights.  Deterministic for fixed input.
    """
    mandated = [tuple(seg) for seg in mandated]
    for i, (a, b) in enumerate(mandated):
        for c, d in mandated[i + 1:]:
            if _segments_cross(a, b, c, d):
                raise ConstraintError(f"mandated segments cross: {(a, b)} x {(c, d)}")

    cells = [_boundary_with_lattice(polygon)]
    remaining = list(mandated)

    def try_split(cell: list[Pt2]) -> tuple[list[Pt2], list[Pt2], list] | None:
        interior = lambda p: point_in_polygon(p, cell) and not _on_boundary(p, cell)
        # paths of up to 3 mandated segments joining two boundary points
        adj: dict[Pt2, list[tuple[Pt2, tuple]]] = {}
        for seg in remaining:
            a, b = seg
            adj.setdefault(a, []).append((b, seg))
            adj.setdefault(b, []).append((a, seg))

        def extend(path_pts, used):
            last = path_pts[-1]
            if len(path_pts) > 1 and _on_boundary(last, cell):
                return path_pts, used
            if len(used) >= 4:
                return None
            for nxt, seg in sorted(adj.get(last, [])):
                if seg in used:
                    continue
                if len(path_pts) > 1 and not interior(last):
                    continue
                r = extend(path_pts + [nxt], used + [seg])
                if r is not None:
                    return r
            return None

        for seg in sorted(remaining):
            for start in (seg[0], seg[1]):
                if not _on_boundary(start, cell):
                    continue
                other = seg[1] if start == seg[0] else seg[0]
                r = extend([start, other], [seg])
                if r is not None:
                    path, used = r
                    # expand path to its lattice points so both sides share them
                    full: list[Pt2] = [path[0]]
                    for u, v in zip(path, path[1:]):
                        full.extend(segment_lattice_points(u, v)[1:])
                    mid_ok = all(
                        point_in_polygon(p, cell) for p in full
                    )
                    if not mid_ok:
                        continue
                    a_side, b_side = _split_cycle(cell, full)
                    return a_side, b_side, used
        return None

    done: list[list[Pt2]] = []
    while cells:
        cell = cells.pop()
        res = try_split(cell)
        if res is None:
            done.append(cell)
        else:
            a_side, b_side, used = res
            for seg in used:
                remaining.remove(seg)
            cells.append(a_side)
            cells.append(b_side)

    if remaining:
        raise ConstraintError(f"unrealizable mandated segments: {remaining}")

    tris: list[tuple[Pt2, Pt2, Pt2]] = []
    for cell in done:
        n = len(cell)
        sgn = 1 if polygon_area2(cell) > 0 else -1
        convex = all(
            orient(cell[i - 1], cell[i], cell[(i + 1) % n]) * sgn >= 0 for i in range(n)
        )
        if convex:
            pts = sorted(set(polygon_lattice_points(cell)))
            tris.extend(triangulate_convex_cell(pts))
        else:
            tris.extend(_fan_nonconvex(cell))
    return tris


def triangulation_edges(tris: Iterable[tuple]) -> set[frozenset]:
    out = set()
    for t in tris:
        for i in range(3):
            for j in range(i + 1, 3):
                out.add(frozenset((t[i], t[j])))
    return out


def contains_segment(tris: Iterable[tuple], a: Pt2, b: Pt2) -> bool:
    """True iff [a, b] is a union of edges of the triangulation."""
    edges = triangulation_edges(tris)
    pts = segment_lattice_points(a, b)
    return all(frozenset((u, v)) in edges for u, v in zip(pts, pts[1:]))
