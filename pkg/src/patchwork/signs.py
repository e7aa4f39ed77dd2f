"""Sign distributions, the orthant sign-extension rule, and GF(2) solvers.

Signs are bits: 0 is '+', 1 is '-'.  The sign of the copy of a vertex v in
the orthant with reflection mask b is sign(v) XOR parity(v).b, so everything
here is literal GF(2) arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .lattice import Point, Simplex, VertexTable, even_faces, parity
from .triangulation.core import Triangulation

PLUS, MINUS = 0, 1

Mask = tuple[int, ...]


@dataclass
class Datum:
    """A triangulation together with a sign per vertex id."""

    triangulation: Triangulation
    signs: list[int]

    def __post_init__(self):
        if len(self.signs) != len(self.triangulation.vertices):
            raise ValueError("sign map must cover exactly the triangulation vertices")

    def sign(self, vid: int) -> int:
        return self.signs[vid]


def dot2(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x & y & 1 for x, y in zip(a, b)) & 1


def extend_sign(datum: Datum, vid: int, mask: Sequence[int]) -> int:
    """Sign of the copy of vertex vid in the orthant with reflection mask."""
    pt = datum.triangulation.vertices.coords(vid)
    return datum.signs[vid] ^ dot2(parity(pt), mask)


def extend_sign_point(sign: int, point: Sequence[int], mask: Sequence[int]) -> int:
    return sign ^ dot2(parity(point), mask)


# ---------------------------------------------------------------------------
# Construction sign rules.
# ---------------------------------------------------------------------------


def signs_from_rule(t: Triangulation, rule: Callable[[Point], int]) -> Datum:
    return Datum(t, [rule(p) for p in t.vertices])


def iv3_signs(t: Triangulation, parity_sign_map: dict | None = None) -> Datum:
    """Parity-constant sign distribution on a 3D triangulation.

    Default map: parities (1,0,0) and (0,0,1) positive, the rest negative
    (the restriction of the odd 4D rule to a horizontal slice).
    """
    if parity_sign_map is None:
        parity_sign_map = {p: MINUS for p in itertools.product((0, 1), repeat=3)}
        parity_sign_map[(1, 0, 0)] = PLUS
        parity_sign_map[(0, 0, 1)] = PLUS
    return signs_from_rule(t, lambda p: parity_sign_map[parity(p)])


IV4_ODD_PLUS = {(1, 0, 0, 1), (0, 0, 1, 1)}
IV4_EVEN_PLUS = {(0, 1, 1, 0), (1, 1, 0, 0), (0, 1, 0, 0)}


def iv4_signs(t: Triangulation, flavor: str) -> Datum:
    plus = IV4_ODD_PLUS if flavor == "odd" else IV4_EVEN_PLUS
    return signs_from_rule(t, lambda p: PLUS if parity(p) in plus else MINUS)


def in_closed_triangle_2d(pt, a, b, c) -> bool:
    """Exact containment of pt in the closed triangle (a, b, c), all planar."""
    def orient(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    o1 = orient(a, b, pt)
    o2 = orient(b, c, pt)
    o3 = orient(c, a, pt)
    ref = orient(a, b, c)
    if ref < 0:
        o1, o2, o3 = -o1, -o2, -o3
    return o1 >= 0 and o2 >= 0 and o3 >= 0


def sd3_sign_rule(
    k: int,
    a: Point,
    b: Point,
    t1: int | None = None,
    t2: int | None = None,
) -> Callable[[Point], int]:
    """Sign rule of the (a, b) small-deviation datum on the side-(2k+1)
    tetrahedron.

    The two base-level thresholds are configurable; the defaults (2k-2 and
    2k+1) are the values consistent with the base-triangle geometry, and the
    second one is forced by the requirement that the distribution agree with
    the parity rule on the outer face.
    """
    if t1 is None:
        t1 = 2 * k - 2
    if t2 is None:
        t2 = 2 * k + 1

    a2, b2 = (a[0], a[1]), (b[0], b[1])

    def c1_contains(x1: int, x2: int) -> bool:
        # quadrangle (0,k+1), (k,0), (0,2k), (2k,0) at level x3=1
        if x1 < 0 or x2 < 0 or x1 + x2 > 2 * k:
            return False
        # inner edge from (k,0) to (0,k+1): (k+1)x1 + k x2 >= k(k+1)
        return (k + 1) * x1 + k * x2 >= k * (k + 1)

    def rule(p: Point) -> int:
        x1, x2, x3 = p
        if x3 >= 2:
            return PLUS if parity(p) in {(0, 0, 1), (1, 0, 0)} else MINUS
        if x3 == 1:
            if not c1_contains(x1, x2):
                return PLUS
            return PLUS if x1 % 2 == 0 and x2 % 2 == 0 else MINUS
        if in_closed_triangle_2d((x1, x2), (0, 0), a2, b2):
            return PLUS if (x1 % 2, x2 % 2) == (0, 1) else MINUS
        if x1 + x2 <= t1 and x1 % 2 == 0 and x2 % 2 == 0:
            return PLUS
        if x1 + x2 == t2 and (x1 % 2, x2 % 2) == (1, 0):
            return PLUS
        return MINUS

    return rule


def sd_signs(t: Triangulation, t1: int | None = None, t2: int | None = None) -> Datum:
    k = t.params["k"]
    a = t.params["a"]
    b = t.params["b"]
    return signs_from_rule(t, sd3_sign_rule(k, a, b, t1, t2))


def sd4_signs(t: Triangulation) -> Datum:
    """Odd 4D signs, overridden on the modified slices by the SD rules."""
    rules = {}
    for k in t.params["sd_slice_k"]:
        j = 2 * k + 1
        level = t.degree - j
        rules[level] = sd3_sign_rule(k, (2 * k - 3, 0, 0), (0, 2 * k - 5, 0))

    def rule(p: Point) -> int:
        r = rules.get(p[3])
        if r is not None:
            return r((p[0], p[1], p[2]))
        return PLUS if parity(p) in IV4_ODD_PLUS else MINUS

    return signs_from_rule(t, rule)


def ad4_signs(t: Triangulation, triples: dict | None = None) -> Datum:
    """Even 4D signs, overridden on the modified side-k triangles.

    On each modified triangle: edge parity (0,1,1,0) positive on the
    (y,z)-edge; parity (1,1,0,0) positive away from the inner triangle
    (a_k, b_k, c_k); parity (0,0,0,0) positive inside it; else negative.
    """
    m = t.degree
    if triples is None:
        triples = t.params["triples"]

    def tri_rule(k: int, abc) -> Callable[[Point], int]:
        a, b, c = abc
        a2, b2, c2 = (a[0], a[2]), (b[0], b[2]), (c[0], c[2])

        def rule(p: Point) -> int:
            x1, x2, x3, x4 = p
            par = parity(p)
            if x1 == 0 and par == (0, 1, 1, 0):
                return PLUS
            inner = in_closed_triangle_2d((x1, x3), a2, b2, c2)
            if par == (1, 1, 0, 0) and not inner and x2 > 0:
                return PLUS
            if par == (1, 1, 0, 0) and not inner and x2 == 0:
                # on the boundary edges toward the x- and z-corners
                return PLUS
            if par == (0, 0, 0, 0) and inner:
                return PLUS
            return MINUS

        return rule

    rules = {}
    for k, abc in triples.items():
        rules[m - k] = tri_rule(k, abc)

    def rule(p: Point) -> int:
        x1, x2, x3, x4 = p
        k = m - x4
        r = rules.get(x4)
        if r is not None and x1 + x2 + x3 == k:
            return r(p)
        return PLUS if parity(p) in IV4_EVEN_PLUS else MINUS

    return signs_from_rule(t, rule)


# ---------------------------------------------------------------------------
# Predicates and GF(2) solvers.
# ---------------------------------------------------------------------------


def is_harnack_on(datum: Datum, region_points: Iterable[Point]) -> bool:
    """True iff the four parity classes of the region carry signs of odd sum."""
    table = datum.triangulation.vertices
    class_signs: dict[Point, int] = {}
    for p in region_points:
        vid = table.id_of(p)
        par = parity(p)
        s = datum.signs[vid]
        if par in class_signs and class_signs[par] != s:
            raise ValueError("bad-region: parity class carries both signs")
        class_signs[par] = s
    if len(class_signs) != 4:
        raise ValueError(f"bad-region: {len(class_signs)} parity classes, expected 4")
    return sum(class_signs.values()) % 2 == 1


def solve_gf2(rows: list[Sequence[int]], rhs: list[int], n: int) -> list[Mask] | None:
    """All solutions b in GF(2)^n of rows . b = rhs, or None if inconsistent."""
    aug = [(sum((r[i] & 1) << i for i in range(n)), v & 1) for r, v in zip(rows, rhs)]
    pivots: dict[int, tuple[int, int]] = {}
    for row, v in aug:
        for p, (prow, pv) in sorted(pivots.items()):
            if row >> p & 1:
                row ^= prow
                v ^= pv
        if row == 0:
            if v:
                return None
            continue
        p = row.bit_length() - 1
        pivots[p] = (row, v)
    # back-substitute to reduced echelon
    for p in sorted(pivots, reverse=True):
        prow, pv = pivots[p]
        for q in list(pivots):
            if q == p:
                continue
            qrow, qv = pivots[q]
            if qrow >> p & 1:
                pivots[q] = (qrow ^ prow, qv ^ pv)
    free = [i for i in range(n) if i not in pivots]
    sols = []
    for bits in itertools.product((0, 1), repeat=len(free)):
        b = [0] * n
        for i, bit in zip(free, bits):
            b[i] = bit
        for p in pivots:
            prow, pv = pivots[p]
            val = pv
            for i in free:
                if prow >> i & 1:
                    val ^= b[i]
            b[p] = val
        sols.append(tuple(b))
    return sorted(sols)


class OrthantSolveError(ValueError):
    pass


def solve_orthants(
    parities: list[Point],
    signs: list[int],
    target: list[int],
) -> set[Mask]:
    """All masks b with sign_i + p_i.b = eps_i for all i, or its complement
    pattern; the collection has cardinality 2^(n-k) for a primitive k-simplex
    with interior in the open orthant."""
    n = len(parities[0])
    k = len(parities) - 1
    rhs0 = [(s ^ e) & 1 for s, e in zip(signs, target)]
    rhs1 = [v ^ 1 for v in rhs0]
    out: set[Mask] = set()
    for rhs in (rhs0, rhs1):
        sols = solve_gf2(parities, rhs, n)
        if sols:
            out.update(sols)
    if len(out) != 2 ** (n - k):
        raise OrthantSolveError(
            f"no-unique-collection: got {len(out)} masks, expected {2 ** (n - k)}"
        )
    return out


def inverting_reflection(simplex: Simplex, table: VertexTable) -> Mask:
    """A reflection mask flipping the signs of all vertices of a simplex with
    no non-empty even face."""
    if even_faces(simplex, table):
        raise ValueError("has-even-face")
    n = table.dim
    rows = [parity(table.coords(v)) for v in simplex]
    sols = solve_gf2(rows, [1] * len(rows), n)
    if not sols:
        raise ValueError("no inverting reflection; simplex must have an even face")
    return sols[0]


# ---------------------------------------------------------------------------
# Symmetric copies.
# ---------------------------------------------------------------------------


def zero_coords(points: Iterable[Point]) -> tuple[int, ...]:
    """Coordinates at which every point vanishes (reflections there act
    trivially on the copy)."""
    pts = list(points)
    n = len(pts[0])
    return tuple(i for i in range(n) if all(p[i] == 0 for p in pts))


def on_outer_facet(points: Iterable[Point], m: int) -> bool:
    return all(sum(p) == m for p in points)


def canonical_mask(mask: Sequence[int], zeros: Sequence[int]) -> Mask:
    out = list(mask)
    for i in zeros:
        out[i] = 0
    return tuple(out)


def copy_masks(points: list[Point], m: int) -> list[Mask]:
    """Distinct symmetric copies of a simplex in the boundary quotient,
    as canonical reflection masks."""
    n = len(points[0])
    zeros = zero_coords(points)
    outer = on_outer_facet(points, m)
    seen = set()
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        mask = canonical_mask(bits, zeros)
        if outer:
            comp = canonical_mask(tuple(1 - c for c in mask), zeros)
            mask = min(mask, comp)
        if mask not in seen:
            seen.add(mask)
            out.append(mask)
    return sorted(seen)


def empty_copies(simplex: Simplex, datum: Datum) -> list[Mask]:
    """Copies of a simplex whose vertices all carry one sign, in the
    boundary quotient of the symmetric extension."""
    table = datum.triangulation.vertices
    m = datum.triangulation.degree
    pts = [table.coords(v) for v in simplex]
    base_signs = [datum.signs[v] for v in simplex]
    out = []
    for mask in copy_masks(pts, m):
        signs = {s ^ dot2(parity(p), mask) for s, p in zip(base_signs, pts)}
        if len(signs) == 1:
            out.append(mask)
    return out


def facet_count(points: list[Point], m: int) -> int:
    """Number of facets of the dilated simplex containing the relative
    interior of a simplex (coordinate facets plus the outer one)."""
    return len(zero_coords(points)) + (1 if on_outer_facet(points, m) else 0)
