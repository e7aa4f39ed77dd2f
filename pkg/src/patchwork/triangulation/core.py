"""Triangulation container and the structural validator.

A triangulation is a set of full-dimensional lattice simplices inside the
dilated simplex {x >= 0, sum x <= m}.  The validator certifies, with exact
arithmetic, that the simplices tile the region: total normalized volume
equals m^n, every internal facet is shared by exactly two maximal simplices,
and every unmatched facet lies on the boundary of the region.  Primitivity
is reported per simplex but only gated for the families that promise it
(the small-deviation builders deliberately omit vertices).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..lattice import (
    Point,
    Simplex,
    VertexTable,
    det_int,
    edge_matrix,
    is_primitive,
    normalized_volume,
    simplex_points,
)


@dataclass
class Triangulation:
    ambient_dim: int
    degree: int
    vertices: VertexTable
    maximal_simplices: list[Simplex]
    construction_tag: str = "CUSTOM"
    params: dict = field(default_factory=dict)
    # Lattice points of the dilated simplex intentionally absent from the
    # vertex set (small-deviation constructions remove interior points).
    omitted_points: frozenset[Point] = frozenset()

    def simplex_count(self) -> int:
        return len(self.maximal_simplices)

    def facets(self, simplex: Simplex) -> Iterator[Simplex]:
        for i in range(len(simplex)):
            yield simplex[:i] + simplex[i + 1:]

    def all_faces(self) -> dict[int, set[Simplex]]:
        """Every face of every maximal simplex, keyed by dimension."""
        import itertools

        out: dict[int, set[Simplex]] = {k: set() for k in range(self.ambient_dim + 1)}
        for s in self.maximal_simplices:
            for size in range(1, len(s) + 1):
                dim = size - 1
                out[dim].update(itertools.combinations(s, size))
        return out

    def boundary_facet_support(self, face: Simplex) -> bool:
        """True iff the face lies on the boundary of the dilated simplex."""
        n, m = self.ambient_dim, self.degree
        pts = [self.vertices.coords(v) for v in face]
        for i in range(n):
            if all(p[i] == 0 for p in pts):
                return True
        return all(sum(p) == m for p in pts)


@dataclass
class ValidationReport:
    volume_total: int
    volume_expected: int
    degenerate: list[Simplex] = field(default_factory=list)
    facet_violations: list[tuple[Simplex, int]] = field(default_factory=list)
    vertex_violations: list[Point] = field(default_factory=list)
    missing_vertices: list[Point] = field(default_factory=list)
    non_primitive: list[Simplex] = field(default_factory=list)

    @property
    def volume_ok(self) -> bool:
        return self.volume_total == self.volume_expected

    def is_valid(self, require_primitive: bool = True) -> bool:
        ok = (
            self.volume_ok
            and not self.degenerate
            and not self.facet_violations
            and not self.vertex_violations
            and not self.missing_vertices
        )
        if require_primitive:
            ok = ok and not self.non_primitive
        return ok

    def summary(self) -> str:
        lines = [
            f"volume {self.volume_total}/{self.volume_expected}"
            f" {'ok' if self.volume_ok else 'MISMATCH'}",
            f"degenerate simplices: {len(self.degenerate)}",
            f"facet violations: {len(self.facet_violations)}",
            f"vertex violations: {len(self.vertex_violations)}",
            f"missing vertices: {len(self.missing_vertices)}",
            f"non-primitive simplices: {len(self.non_primitive)}",
        ]
        return "; ".join(lines)


def validate(t: Triangulation) -> ValidationReport:
    """Check the tiling certificate of a triangulation.

    Soundness: if every facet (as a sorted vertex tuple) occurs exactly twice,
    every once-occurring facet lies on the region boundary, every simplex is
    non-degenerate and inside the region, and the total normalized volume is
    exactly m^n, then the simplices have disjoint interiors and cover the
    region (the local covering multiplicity is constant across matched facets
    and drops to zero across the boundary).
    """
    n, m = t.ambient_dim, t.degree
    report = ValidationReport(volume_total=0, volume_expected=m ** n)

    for point in t.vertices:
        if any(c < 0 for c in point) or sum(point) > m:
            report.vertex_violations.append(point)

    present = {t.vertices.coords(v) for s in t.maximal_simplices for v in s}
    for point in simplex_points(n, m):
        if point not in present and point not in t.omitted_points:
            report.missing_vertices.append(point)

    facet_count: Counter[Simplex] = Counter()
    for s in t.maximal_simplices:
        if len(s) != n + 1 or list(s) != sorted(set(s)):
            report.degenerate.append(s)
            continue
        vol = abs(det_int(edge_matrix(s, t.vertices)))
        if vol == 0:
            report.degenerate.append(s)
            continue
        report.volume_total += vol
        if vol != 1:
            report.non_primitive.append(s)
        for f in t.facets(s):
            facet_count[f] += 1

    for facet, count in facet_count.items():
        if count == 2:
            continue
        if count == 1 and t.boundary_facet_support(facet):
            continue
        report.facet_violations.append((facet, count))

    return report


def region_points(n: int, m: int) -> list[Point]:
    return list(simplex_points(n, m))
