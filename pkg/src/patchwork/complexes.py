"""Symmetric extension over all orthants, the antipodal boundary quotient,
the piecewise-linear hypersurface separating the signs, and Z2 intersection
and linking primitives.

Cells of the extended complex are pairs (simplex, reflection mask), with two
identifications: masks act trivially on coordinates where the simplex
vanishes, and cells on the outer boundary facet are glued to their
antipodes.  The hypersurface is assembled piece by piece: in every maximal
cell copy carrying both signs, the convex hull of the midpoints of the
sign-changing edges is triangulated by pulling from the globally smallest
midpoint, which restricts consistently to shared faces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import Point, Simplex
from .signs import Datum, PLUS, MINUS
from .triangulation.core import Triangulation


def _mask_int(mask_bits: int, n: int) -> tuple[int, ...]:
    return tuple((mask_bits >> i) & 1 for i in range(n))


@dataclass
class ExtendedComplex:
    """Face-indexed view of the quotient of the symmetric extension."""

    datum: Datum
    n: int = field(init=False)
    m: int = field(init=False)

    def __post_init__(self):
        t = self.datum.triangulation
        self.n = t.ambient_dim
        self.m = t.degree
        table = t.vertices
        self._par = [
            sum((p[i] & 1) << i for i in range(self.n)) for p in table
        ]
        self._sum = [sum(p) for p in table]
        self._zero = [
            sum((p[i] == 0) << i for i in range(self.n)) for p in table
        ]
        self._full = (1 << self.n) - 1

    # -- copy bookkeeping ---------------------------------------------------

    def face_zeros(self, face: Simplex) -> int:
        z = self._full
        for v in face:
            z &= self._zero[v]
        return z

    def face_outer(self, face: Simplex) -> bool:
        return all(self._sum[v] == self.m for v in face)

    def facet_count(self, face: Simplex) -> int:
        """Number of boundary facets of the region containing the face."""
        return bin(self.face_zeros(face)).count("1") + (1 if self.face_outer(face) else 0)

    def copy_masks(self, face: Simplex) -> list[int]:
        """Canonical reflection masks of the distinct quotient copies."""
        zeros = self.face_zeros(face)
        outer = self.face_outer(face)
        keep = self._full & ~zeros
        seen = set()
        for mask in range(1 << self.n):
            c = mask & keep
            if outer:
                c = min(c, ~c & keep)
            seen.add(c)
        return sorted(seen)

    def copy_sign(self, vid: int, mask: int) -> int:
        return self.datum.signs[vid] ^ ((self._par[vid] & mask).bit_count() & 1)

    def copy_is_monochrome(self, face: Simplex, mask: int, value: int | None = None) -> bool:
        signs = {self.copy_sign(v, mask) for v in face}
        if len(signs) != 1:
            return False
        return value is None or signs == {value}

    # -- face enumeration ---------------------------------------------------

    def all_faces(self) -> dict[int, list[Simplex]]:
        out: dict[int, set] = {d: set() for d in range(self.n + 1)}
        for s in self.datum.triangulation.maximal_simplices:
            for size in range(1, len(s) + 1):
                out[size - 1].update(itertools.combinations(s, size))
        return {d: sorted(faces) for d, faces in out.items()}

    def raw_maximal_count(self) -> int:
        return sum(
            1 << (self.n - bin(self.face_zeros(s)).count("1"))
            for s in self.datum.triangulation.maximal_simplices
        )

    def quotient_cell_counts(self) -> list[int]:
        """Number of quotient cells per dimension (all signs)."""
        faces = self.all_faces()
        return [sum(len(self.copy_masks(f)) for f in faces[d]) for d in range(self.n + 1)]

    def euler_characteristic(self) -> int:
        counts = self.quotient_cell_counts()
        return sum((-1) ** d * c for d, c in enumerate(counts))

    # -- sign censuses --------------------------------------------------------

    def monochrome_counts(self, value: int | None = None) -> list[int]:
        """Per-dimension counts of quotient cells all of whose vertices carry
        the given sign (both signs allowed when value is None)."""
        faces = self.all_faces()
        counts = [0] * (self.n + 1)
        for d in range(self.n + 1):
            for f in faces[d]:
                for mask in self.copy_masks(f):
                    if self.copy_is_monochrome(f, mask, value):
                        counts[d] += 1
        return counts


def count_all_plus(ext: ExtendedComplex) -> tuple[list[int], int]:
    """Quotient cells with all-plus vertices per dimension, and their
    alternating sum (the Euler characteristic of the positive region)."""
    counts = ext.monochrome_counts(PLUS)
    chi = sum((-1) ** d * c for d, c in enumerate(counts))
    return counts, chi


def euler_of_gamma_by_emptiness(ext: ExtendedComplex) -> int:
    """Euler characteristic of the separating surface from monochromatic
    cell counts (3-dimensional ambient only)."""
    if ext.n != 3:
        raise ValueError("emptiness census requires ambient dimension 3")
    counts = ext.monochrome_counts(None)
    return sum((-1) ** d * c for d, c in enumerate(counts))


def empty_copy_law_holds(ext: ExtendedComplex, face: Simplex) -> bool:
    """|empty copies| == 2^(n - p - k) for one face."""
    k = len(face) - 1
    p = ext.facet_count(face)
    empties = [
        mask
        for mask in ext.copy_masks(face)
        if ext.copy_is_monochrome(face, mask)
    ]
    return len(empties) == 2 ** (ext.n - p - k)


# ---------------------------------------------------------------------------
# The separating hypersurface.
# ---------------------------------------------------------------------------

MidKey = tuple[int, int, int]  # (vid_u, vid_w, canonical edge mask)


@dataclass
class GammaComplex:
    """Simplicial model of the PL hypersurface in the boundary quotient."""

    n: int
    vertex_keys: list[MidKey]
    vertex_coords: list[tuple[Fraction, ...]]
    cells: list[list[tuple[int, ...]]]  # per dimension 0..n-1, sorted tuples

    def cell_counts(self) -> list[int]:
        return [len(c) for c in self.cells]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(c) for d, c in enumerate(self.cells))


def _pull_triangulate(plus: tuple, minus: tuple, key) -> list[frozenset]:
    """Pulling triangulation of the product piece spanned by midpoints
    (p, q), p in plus, q in minus, ordered by the global midpoint key."""
    if len(plus) == 1 or len(minus) == 1:
        return [frozenset(key(p, q) for p in plus for q in minus)]
    best = min(((p, q) for p in plus for q in minus), key=lambda e: key(*e))
    p0, q0 = best
    v0 = key(p0, q0)
    out = []
    rest_p = tuple(p for p in plus if p != p0)
    rest_m = tuple(q for q in minus if q != q0)
    for sub in _pull_triangulate(rest_p, minus, key):
        out.append(sub | {v0})
    for sub in _pull_triangulate(plus, rest_m, key):
        out.append(sub | {v0})
    # deduplicate: both recursions can contain v0-simplices already
    seen = set()
    uniq = []
    for s in out:
        if s not in seen:
            seen.add(s)
            uniq.append(s)
    return uniq


def build_gamma(ext: ExtendedComplex) -> GammaComplex:
    """Assemble the separating hypersurface of a signed triangulation."""
    t = ext.datum.triangulation
    table = t.vertices
    n = ext.n
    full = ext._full

    def edge_key(u: int, w: int, mask: int) -> MidKey:
        if u > w:
            u, w = w, u
        zeros = ext._zero[u] & ext._zero[w]
        c = mask & ~zeros & full
        if ext._sum[u] == ext.m and ext._sum[w] == ext.m:
            c = min(c, ~c & ~zeros & full)
        return (u, w, c)

    simplex_sets: list[set[frozenset]] = [set() for _ in range(n)]
    key_ids: dict[MidKey, MidKey] = {}

    for s in t.maximal_simplices:
        zeros = ext.face_zeros(s)
        keep = full & ~zeros
        masks = sorted({mask & keep for mask in range(1 << n)})
        for mask in masks:
            signs = [ext.copy_sign(v, mask) for v in s]
            plus = tuple(v for v, sg in zip(s, signs) if sg == PLUS)
            minus = tuple(v for v, sg in zip(s, signs) if sg == MINUS)
            if not plus or not minus:
                continue
            key = lambda p, q: edge_key(p, q, mask)
            for cell in _pull_triangulate(plus, minus, key):
                simplex_sets[n - 1].add(cell)

    # close under faces
    for d in range(n - 1, 0, -1):
        for cell in simplex_sets[d]:
            for face in itertools.combinations(sorted(cell), d):
                simplex_sets[d - 1].add(frozenset(face))

    all_keys = sorted({k for cell in simplex_sets[0] for k in cell})
    key_index = {k: i for i, k in enumerate(all_keys)}

    coords = []
    for (u, w, mask) in all_keys:
        pu, pw = table.coords(u), table.coords(w)
        pt = tuple(
            Fraction(
                ((-pu[i] if (mask >> i) & 1 else pu[i]) + (-pw[i] if (mask >> i) & 1 else pw[i])),
                2,
            )
            for i in range(n)
        )
        coords.append(pt)

    cells = []
    for d in range(n):
        layer = sorted(tuple(sorted(key_index[k] for k in cell)) for cell in simplex_sets[d])
        cells.append(layer)

    return GammaComplex(n=n, vertex_keys=all_keys, vertex_coords=coords, cells=cells)


def gamma_is_closed(g: GammaComplex) -> bool:
    """Every (n-2)-cell must lie in exactly two (n-1)-cells."""
    if g.n < 2:
        return True
    count: dict[tuple, int] = {}
    for cell in g.cells[g.n - 1]:
        for face in itertools.combinations(cell, g.n - 1):
            count[face] = count.get(face, 0) + 1
    return all(v == 2 for v in count.values()) and len(count) == len(g.cells[g.n - 2])


def gamma_touches_lattice_vertex(g: GammaComplex) -> bool:
    return any(all(c.denominator == 1 for c in p) for p in g.vertex_coords)


# ---------------------------------------------------------------------------
# Chains, Z2 intersection and linking numbers.
# ---------------------------------------------------------------------------


@dataclass
class Chain:
    """A Z2 chain of geometric simplices with exact rational vertices."""

    dim: int
    simplices: list[tuple]

    def __post_init__(self):
        cleaned = []
        for s in self.simplices:
            if len(s) != self.dim + 1:
                raise ValueError("simplex arity does not match chain dimension")
            cleaned.append(tuple(tuple(Fraction(c) for c in p) for p in s))
        self.simplices = cleaned

    def boundary(self) -> set[frozenset]:
        out: set[frozenset] = set()
        for s in self.simplices:
            for i in range(len(s)):
                face = frozenset(s[:i] + s[i + 1:])
                out ^= {face}
        return out

    def support_points(self) -> set[tuple]:
        return {p for s in self.simplices for p in s}


class TransversalityError(ValueError):
    pass


def _solve_linear(mat: list[list[Fraction]], rhs: list[Fraction]):
    """Solve a square rational system; None if singular."""
    n = len(mat)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _simplex_intersection_point(s1: tuple, s2: tuple) -> tuple | None:
    """Transverse intersection point of two simplices of complementary
    dimension, or None when disjoint; raises on non-transverse contact."""
    j = len(s1) - 1
    k = len(s2) - 1
    n = len(s1[0])
    if j + k != n:
        raise ValueError("simplices must have complementary dimensions")
    mat = [[Fraction(0)] * n for _ in range(n)]
    rhs = [Fraction(0)] * n
    for row in range(n):
        for i in range(j):
            mat[row][i] = s1[i + 1][row] - s1[0][row]
        for i in range(k):
            mat[row][j + i] = -(s2[i + 1][row] - s2[0][row])
        rhs[row] = s2[0][row] - s1[0][row]
    sol = _solve_linear(mat, rhs)
    if sol is None:
        # parallel or degenerate: transverse only if disjoint
        if _affine_spans_disjoint(s1, s2):
            return None
        raise TransversalityError("not-transverse")
    c1 = sol[:j]
    c2 = sol[j:]
    b1 = [Fraction(1) - sum(c1)] + list(c1)
    b2 = [Fraction(1) - sum(c2)] + list(c2)
    inside1 = all(c > 0 for c in b1)
    inside2 = all(c > 0 for c in b2)
    outside1 = any(c < 0 for c in b1)
    outside2 = any(c < 0 for c in b2)
    if inside1 and inside2:
        pt = tuple(
            s1[0][row] + sum(c1[i] * (s1[i + 1][row] - s1[0][row]) for i in range(j))
            for row in range(n)
        )
        return pt
    if (not outside1 and not inside1) or (not outside2 and not inside2):
        # touches a boundary exactly: not transverse unless genuinely outside
        if outside1 or outside2:
            return None
        raise TransversalityError("not-transverse")
    return None


def _affine_spans_disjoint(s1, s2) -> bool:
    """Check disjointness of two parallel-span simplices, conservatively."""
    # Fall back to a bounding-box test; exactness is not required because a
    # True result only avoids raising on clearly disjoint supports.
    for axis in range(len(s1[0])):
        lo1 = min(p[axis] for p in s1)
        hi1 = max(p[axis] for p in s1)
        lo2 = min(p[axis] for p in s2)
        hi2 = max(p[axis] for p in s2)
        if hi1 < lo2 or hi2 < lo1:
            return True
    return False


def z2_intersection(x: Chain, y: Chain) -> int:
    """Parity of the number of transverse intersection points."""
    points = set()
    for s1 in x.simplices:
        for s2 in y.simplices:
            pt = _simplex_intersection_point(s1, s2)
            if pt is not None:
                points.add(pt)
    return len(points) & 1


def linking_number(cycle: Chain, disk: Chain, axis: Chain) -> int:
    """Z2 linking of a cycle (with supplied bounding disk) and an axis."""
    if disk.boundary() != {frozenset(s) for s in _chain_cells(cycle)}:
        raise ValueError("not-a-bounding-disk")
    if cycle.support_points() & axis.support_points():
        raise ValueError("axis meets the cycle")
    return z2_intersection(disk, axis)


def _chain_cells(c: Chain) -> list[tuple]:
    return [tuple(s) for s in c.simplices]


def linking_matrix(pairs: Sequence[tuple[Chain, Chain, Chain]]) -> tuple[list[list[int]], bool]:
    """Matrix lk(c_i, a_j) for (cycle, disk, axis) triples, plus a flag for
    lower-triangularity with unit diagonal."""
    size = len(pairs)
    mat = [[0] * size for _ in range(size)]
    for i, (ci, di, _) in enumerate(pairs):
        for jj, (_, _, aj) in enumerate(pairs):
            mat[i][jj] = linking_number(ci, di, aj)
    flag = all(mat[i][i] == 1 for i in range(size)) and all(
        mat[i][jj] == 0 for i in range(size) for jj in range(i + 1, size)
    )
    return mat, flag
