"""Z2 chain complexes: boundary matrices, ranks, Betti numbers, components.

Boundary matrices are stored column-wise as python ints (bitsets over row
indices); rank computation is plain sparse elimination with lowest-bit
pivoting.  Large complexes are first shrunk by coreduction pairs (removing a
cell together with its unique remaining facet is an exact algebraic Morse
cancellation and only ever deletes entries), which leaves a small critical
core to eliminate.  Connected components are counted by union-find on the
1-skeleton, independently of the matrix path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .complexes import GammaComplex


@dataclass
class Z2Matrix:
    """Sparse column-major GF(2) matrix: columns are row-index bitsets."""

    rows: int
    cols: int
    columns: list[int]

    def rank(self) -> int:
        return rank_gf2(self.columns)


def rank_gf2(columns: Sequence[int]) -> int:
    """GF(2) rank by per-column reduction with lowest-set-bit pivots."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        c = col
        while c:
            low = (c & -c).bit_length() - 1
            p = pivots.get(low)
            if p is None:
                pivots[low] = c
                rank += 1
                break
            c ^= p
    return rank


def boundary_matrices(g: GammaComplex) -> list[Z2Matrix]:
    """Boundary operators of a simplicial complex, dimensions 1..n-1."""
    out = []
    for d in range(1, g.n):
        index = {cell: i for i, cell in enumerate(g.cells[d - 1])}
        cols = []
        for cell in g.cells[d]:
            bits = 0
            for j in range(len(cell)):
                face = cell[:j] + cell[j + 1:]
                bits |= 1 << index[face]
            cols.append(bits)
        out.append(Z2Matrix(rows=len(g.cells[d - 1]), cols=len(g.cells[d]), columns=cols))
    return out


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def count(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if i == p)


def components(g: GammaComplex) -> int:
    uf = UnionFind(len(g.vertex_keys))
    for edge in g.cells[1]:
        uf.union(edge[0], edge[1])
    return uf.count()


def _coreduce(cells: list[list[tuple]]) -> tuple[list[dict[int, set]], list[list[int]]]:
    """Coreduce a simplicial complex; returns the surviving boundary maps.

    Removing a pair (cell, its unique remaining facet) keeps homology in all
    dimensions; removing a lone vertex when stuck only shifts H_0, which is
    counted elsewhere by union-find.
    """
    dims = len(cells)
    index = [{cell: i for i, cell in enumerate(layer)} for layer in cells]
    bnd: list[dict[int, set]] = [dict() for _ in range(dims)]
    cob: list[dict[int, set]] = [dict() for _ in range(dims)]
    alive = [dict.fromkeys(range(len(layer)), True) for layer in cells]
    for d in range(1, dims):
        for i, cell in enumerate(cells[d]):
            faces = set()
            for j in range(len(cell)):
                face = cell[:j] + cell[j + 1:]
                fi = index[d - 1][face]
                faces.add(fi)
                cob[d - 1].setdefault(fi, set()).add(i)
            bnd[d][i] = faces
    for d in range(dims):
        for i in range(len(cells[d])):
            bnd[d].setdefault(i, set())
            cob[d].setdefault(i, set())

    queue = deque()
    for d in range(1, dims):
        for i in range(len(cells[d])):
            if len(bnd[d][i]) == 1:
                queue.append((d, i))

    def remove_pair(d: int, i: int) -> None:
        (fi,) = bnd[d][i]
        alive[d][i] = False
        alive[d - 1][fi] = False
        if d + 1 < dims:
            for up in list(cob[d][i]):
                if alive[d + 1][up]:
                    bnd[d + 1][up].discard(i)
                    if len(bnd[d + 1][up]) == 1:
                        queue.append((d + 1, up))
        for ro in list(cob[d - 1][fi]):
            if ro != i and alive[d][ro]:
                bnd[d][ro].discard(fi)
                if len(bnd[d][ro]) == 1:
                    queue.append((d, ro))

    next_seed = 0
    n0 = len(cells[0])
    while True:
        while queue:
            d, i = queue.popleft()
            if not alive[d][i] or len(bnd[d][i]) != 1:
                continue
            (fi,) = bnd[d][i]
            if not alive[d - 1][fi]:
                continue
            remove_pair(d, i)
        while next_seed < n0 and not alive[0][next_seed]:
            next_seed += 1
        if next_seed >= n0:
            break
        seed = next_seed
        alive[0][seed] = False
        for up in list(cob[0][seed]):
            if alive[1][up]:
                bnd[1][up].discard(seed)
                if len(bnd[1][up]) == 1:
                    queue.append((1, up))

    surviving_bnd = []
    surviving_ids = []
    for d in range(dims):
        ids = [i for i in range(len(cells[d])) if alive[d][i]]
        surviving_ids.append(ids)
        surviving_bnd.append({i: bnd[d][i] for i in ids})
    return surviving_bnd, surviving_ids


def betti(g: GammaComplex, reduce_first: bool = True) -> tuple[int, ...]:
    """Z2 Betti numbers (b_0, ..., b_{n-1}) of the hypersurface complex."""
    n = g.n
    b0 = components(g)
    if not reduce_first:
        mats = boundary_matrices(g)
        ranks = [0] + [m.rank() for m in mats] + [0]
        sizes = [len(layer) for layer in g.cells]
        out = [sizes[d] - ranks[d] - ranks[d + 1] for d in range(n)]
        return tuple(out)

    surviving_bnd, surviving_ids = _coreduce(g.cells)
    ranks = [0] * (n + 1)
    sizes = [len(ids) for ids in surviving_ids]
    for d in range(1, n):
        row_index = {i: r for r, i in enumerate(surviving_ids[d - 1])}
        cols = []
        for i in surviving_ids[d]:
            bits = 0
            for fi in surviving_bnd[d][i]:
                bits |= 1 << row_index[fi]
            cols.append(bits)
        ranks[d] = rank_gf2(cols)
    out = []
    for d in range(n):
        if d == 0:
            out.append(b0)
        else:
            out.append(sizes[d] - ranks[d] - ranks[d + 1])
    return tuple(out)


def euler_from_betti(b: Sequence[int]) -> int:
    return sum((-1) ** d * v for d, v in enumerate(b))
