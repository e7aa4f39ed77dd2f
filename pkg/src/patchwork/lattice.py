"""Exact integer lattice primitives: points, simplices, parities, volumes.

Points are plain tuples of ints, simplices are sorted tuples of indices into
a :class:`VertexTable`.  Everything here is pure and exact; coordinates are
bounded by the construction degree (asserted at table insertion), so python
ints never leave the fast fixed-width path.
"""

from __future__ import annotations

import itertools
from math import gcd
from typing import Iterable, Iterator, Sequence

Point = tuple[int, ...]
Simplex = tuple[int, ...]

COORD_BOUND = 1 << 62


class DegenerateSimplexError(ValueError):
    """Raised when an operation requires affinely independent vertices."""


def parity(point: Sequence[int]) -> Point:
    """Componentwise mod-2 class of a lattice point."""
    return tuple(c & 1 for c in point)


def point_add(p: Sequence[int], q: Sequence[int]) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def point_sub(p: Sequence[int], q: Sequence[int]) -> Point:
    return tuple(a - b for a, b in zip(p, q))


class VertexTable:
    """Append-only, coordinate-deduplicated vertex store.

    Vertex identity is the table index, which stays stable across the
    lifetime of a triangulation; simplices and quotient maps share vertices
    through these ids.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._coords: list[Point] = []
        self._index: dict[Point, int] = {}

    def __len__(self) -> int:
        return len(self._coords)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._coords)

    def coords(self, vid: int) -> Point:
        return self._coords[vid]

    def id_of(self, point: Sequence[int], create: bool = False) -> int:
        pt = tuple(int(c) for c in point)
        if len(pt) != self.dim:
            raise ValueError(f"point {pt} has dimension {len(pt)}, expected {self.dim}")
        vid = self._index.get(pt)
        if vid is None:
            if not create:
                raise KeyError(f"unknown vertex {pt}")
            if any(abs(c) >= COORD_BOUND for c in pt):
                raise OverflowError(f"coordinate out of range in {pt}")
            vid = len(self._coords)
            self._coords.append(pt)
            self._index[pt] = vid
        return vid

    def __contains__(self, point: Sequence[int]) -> bool:
        return tuple(point) in self._index


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a small square integer matrix (fraction-free)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    top = rows[0]
    rest = rows[1:]
    for j in range(n):
        if top[j] == 0:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rest]
        term = top[j] * det_int(minor)
        total += term if j % 2 == 0 else -term
    return total


def edge_matrix(simplex: Simplex, table: VertexTable) -> list[Point]:
    """Rows v_i - v_0 for i >= 1."""
    base = table.coords(simplex[0])
    return [point_sub(table.coords(v), base) for v in simplex[1:]]


def is_primitive(simplex: Simplex, table: VertexTable) -> bool:
    """True iff the edge vectors form a Z-basis of the intersection lattice.

    For a full-dimensional simplex this is |det| = 1; below full dimension
    the gcd of all maximal minors of the edge matrix must be 1.
    """
    k = len(simplex) - 1
    n = table.dim
    if k > n:
        raise ValueError("simplex dimension exceeds ambient dimension")
    if k == 0:
        return True
    rows = edge_matrix(simplex, table)
    if k == n:
        d = det_int(rows)
        if d == 0:
            raise DegenerateSimplexError("degenerate")
        return abs(d) == 1
    g = 0
    for cols in itertools.combinations(range(n), k):
        sub = [[row[c] for c in cols] for row in rows]
        g = gcd(g, abs(det_int(sub)))
        if g == 1:
            return True
    if g == 0:
        raise DegenerateSimplexError("degenerate")
    return g == 1


def is_even_simplex(simplex: Simplex, table: VertexTable) -> bool:
    """True iff the vertex sum has all coordinates even."""
    n = table.dim
    acc = [0] * n
    for v in simplex:
        pt = table.coords(v)
        for i in range(n):
            acc[i] += pt[i]
    return all(a % 2 == 0 for a in acc)


def even_faces(simplex: Simplex, table: VertexTable) -> list[Simplex]:
    """All non-empty even faces of a simplex, the simplex itself included."""
    out = []
    for size in range(1, len(simplex) + 1):
        for face in itertools.combinations(simplex, size):
            if is_even_simplex(face, table):
                out.append(face)
    return out


def normalized_volume(simplex: Simplex, table: VertexTable) -> int:
    """|det| of the edge matrix of a full-dimensional simplex.

    Normalized so primitive simplices have volume 1; additive over
    triangulations of a region.
    """
    if len(simplex) - 1 != table.dim:
        raise ValueError("normalized_volume requires a full-dimensional simplex")
    return abs(det_int(edge_matrix(simplex, table)))


def simplex_points(n: int, m: int) -> Iterator[Point]:
    """Lattice points of the dilated simplex {x >= 0, sum x <= m} in Z^n."""
    def rec(prefix: tuple[int, ...], remaining: int, depth: int) -> Iterator[Point]:
        if depth == n - 1:
            for c in range(remaining + 1):
                yield prefix + (c,)
            return
        for c in range(remaining + 1):
            yield from rec(prefix + (c,), remaining - c, depth + 1)

    if n == 0:
        yield ()
        return
    yield from rec((), m, 0)


def faces_of(simplex: Simplex, dim: int) -> Iterator[Simplex]:
    """Faces of the given dimension, as sorted id tuples."""
    yield from itertools.combinations(simplex, dim + 1)
