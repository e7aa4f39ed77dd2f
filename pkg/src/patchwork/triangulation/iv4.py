"""Layered triangulations of the 4-dimensional dilated simplex.

The simplex is sliced into 3-dimensional horizontal tetrahedra; alternating
slices carry the full 3D layered triangulation and are coned from the origin
corners of the neighbouring levels, while the slabs in between are filled by
prisms combinatorially equivalent to a product of two triangles, each cut
into six 4-simplices and refined by the slice structures.  Every slice is a
frame instance of the 3D builder, so the same machinery also accepts
modified slices (small-deviation and asymptotic-deviation variants swap in
their own slice or face triangulations).

The odd and even flavors differ only in which levels are coned and in the
frames of the slice triangulations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from ..lattice import Point, VertexTable
from .core import Triangulation
from .iv3 import IV3Build, TetraFrame, build_frame_iv3, induced_triangles
from .twod import segment_lattice_points

# The six 4-simplices of the standard triangulation of a product of two
# triangles, as two-digit labels (first digit: triangle 0/1/2; second digit:
# corner class 0/1/2).
PRODUCT_SIMPLICES = (
    ("00", "01", "02", "12", "22"),
    ("00", "01", "11", "12", "22"),
    ("00", "01", "11", "21", "22"),
    ("00", "10", "11", "12", "22"),
    ("00", "10", "11", "21", "22"),
    ("00", "10", "20", "21", "22"),
)

# Internal 3-faces shared by two of the six 4-simplices.
PRODUCT_SHARED_FACETS = (
    ("00", "01", "12", "22"),
    ("00", "01", "11", "22"),
    ("00", "11", "12", "22"),
    ("00", "11", "21", "22"),
    ("00", "10", "11", "22"),
    ("00", "10", "21", "22"),
)


def product_triangles_triangulation(labels: dict) -> list[tuple]:
    """The six 4-simplices of the product-of-triangles triangulation for a
    full labelling {"00", ..., "22"} -> point."""
    needed = {f"{i}{j}" for i in range(3) for j in range(3)}
    if set(labels) != needed:
        raise ValueError("labels must cover exactly 00..22")
    return [tuple(labels[l] for l in cell) for cell in PRODUCT_SIMPLICES]


class _TData:
    """Corner/edge/triangle data of one triangle of a slice subdivision."""

    def __init__(self, tris: list, corners: dict):
        self.tris = tris            # 2D triangulation, triples of global points
        self.corners = corners      # digit (0,1,2) -> global corner point
        self.e01 = self._edge(corners[0], corners[1])
        self.e12 = self._edge(corners[1], corners[2])

    @staticmethod
    def _edge(a: Point, b: Point) -> list[tuple[Point, Point]]:
        if a == b:
            return []
        pts = segment_lattice_points(a, b)
        return list(zip(pts, pts[1:]))


def _point_tdata(pt: Point) -> _TData:
    return _TData([], {0: pt, 1: pt, 2: pt})


def _prism_cells(a_data: _TData, t0: _TData, t2: _TData) -> list[tuple]:
    """Refined 4-simplices of one prism conv(T_A, T^l, T^{l+1}).

    ``t0`` is the triangle labelled 0, ``t2`` the one labelled 2; T_A is
    labelled 1.  Each of the six coarse product cells is the join of the
    full subdivision of one of its triangle/edge groups.
    """
    cells: list[tuple] = []
    za, ya, xa = a_data.corners[2], a_data.corners[1], a_data.corners[0]
    z2, x0 = t2.corners[2], t0.corners[0]
    # (00,01,02,12,22): triangle 0 joined with the edge [12, 22]
    for tri in t0.tris:
        cells.append(tri + (za, z2))
    # (00,01,11,12,22): edge01(0) * edge12(A) * {22}
    for e0 in t0.e01:
        for ea in a_data.e12:
            cells.append(e0 + ea + (z2,))
    # (00,01,11,21,22): edge01(0) * {11} * edge12(2)
    for e0 in t0.e01:
        for e2 in t2.e12:
            cells.append(e0 + (ya,) + e2)
    # (00,10,11,12,22): triangle A joined with the edge [00, 22]
    for tri in a_data.tris:
        cells.append(tri + (x0, z2))
    # (00,10,11,21,22): {00} * edge01(A) * edge12(2)
    for ea in a_data.e01:
        for e2 in t2.e12:
            cells.append(ea + (x0,) + e2)
    # (00,10,20,21,22): triangle 2 joined with the edge [00, 10]
    for tri in t2.tris:
        cells.append(tri + (x0, xa))
    return cells


def _slice_corners(j: int, level: int) -> dict:
    return {
        "o": (0, 0, 0, level),
        "x": (j, 0, 0, level),
        "y": (0, j, 0, level),
        "z": (0, 0, j, level),
    }


def slice_frame(j: int, level: int, zframe: bool) -> TetraFrame:
    """Frame of the slice of side j at height x4 = level.

    The o-frame (base = outer face, cone edges along the x1- and x3-axes) is
    forced on every slice whose internal triangle slicing must match the
    prisms; the z-frame (base {x3 = 0}, cone edges on the outer face) is used
    by the coned slices of the odd flavor.
    """
    c = _slice_corners(j, level)
    if zframe:
        return TetraFrame(w0=c["z"], b1=c["y"], b2=c["x"], b3=c["o"], m=j)
    return TetraFrame(w0=c["o"], b1=c["x"], b2=c["z"], b3=c["y"], m=j)


def _slice_tdata(build: IV3Build, s: int) -> _TData:
    """T^s data of an o-frame slice build (digit 0 = x corner, 1 = y, 2 = z)."""
    sl = build.slices[s]
    if s == 0:
        return _point_tdata(build.frame.w0)
    corners = {0: sl.corners[1], 1: sl.corners[3], 2: sl.corners[2]}
    return _TData(sl.triangles, corners)


def outer_face_tdata(tetras: Sequence, j: int, level: int) -> _TData:
    """Outer-face data of a coned slice, induced from its 3D triangulation."""
    c = _slice_corners(j, level)
    tris = induced_triangles(tetras, lambda p: p[0] + p[1] + p[2] == j)
    return _TData(tris, {0: c["x"], 1: c["y"], 2: c["z"]})


class SliceSpec:
    """One horizontal slice: its 3D build plus prism-facing data."""

    def __init__(self, j: int, build: IV3Build, coned: bool, omitted=frozenset()):
        self.j = j
        self.build = build
        self.coned = coned
        self.omitted = omitted
        self.extra_layers: list[dict] = []

    def tdata(self, s: int) -> _TData:
        return _slice_tdata(self.build, s)

    def adata(self, level: int) -> _TData:
        if self.coned and self.build.frame.w0[2] == self.j:
            # z-frame slice: outer face induced from the tetra list
            return outer_face_tdata(self.build.tetras, self.j, level)
        return _slice_tdata(self.build, self.j)


def _default_slices(m: int, flavor: str, diag_choice) -> dict[int, SliceSpec]:
    coned_parity = 1 if flavor == "odd" else 0
    out: dict[int, SliceSpec] = {}
    for j in range(1, m + 1):
        level = m - j
        coned = j % 2 == coned_parity
        zframe = coned and flavor == "odd"
        build = build_frame_iv3(slice_frame(j, level, zframe), diag_choice)
        out[j] = SliceSpec(j, build, coned)
    return out


def assemble_iv4(m: int, flavor: str, slices: dict[int, SliceSpec]) -> tuple[list, list]:
    """Glue slice builds into the full list of 4-simplices plus lift layers."""
    coned_parity = 1 if flavor == "odd" else 0
    cells: list[tuple] = []

    for j in range(1, m + 1):
        bottom_level = m - j
        top = slices.get(j - 1)
        bottom = slices[j]
        if bottom.coned:
            apex = (0, 0, 0, bottom_level + 1)
            for tet in bottom.build.tetras:
                cells.append(tet + (apex,))
            a_data = bottom.adata(bottom_level)
            for l in range(0, j - 1):
                t_lo = top.tdata(l) if top is not None else _point_tdata((0, 0, 0, m))
                t_hi = top.tdata(l + 1)
                cells.extend(_oriented_prism(a_data, t_lo, t_hi, flavor, l))
        else:
            apex = (0, 0, 0, bottom_level)
            if top is not None:
                for tet in top.build.tetras:
                    cells.append(tet + (apex,))
            a_data = (
                top.adata(bottom_level + 1)
                if top is not None
                else _point_tdata((0, 0, 0, m))
            )
            for l in range(0, j):
                t_lo = bottom.tdata(l)
                t_hi = bottom.tdata(l + 1)
                cells.extend(_oriented_prism(a_data, t_lo, t_hi, flavor, l))

    layers = _global_layers(m, flavor, slices)
    return cells, layers


def _oriented_prism(a_data: _TData, t_l: _TData, t_l1: _TData, flavor: str, l: int) -> list:
    # Label 0 goes to the triangle of odd side for the odd flavor, of even
    # side for the even flavor.
    if flavor == "odd":
        t0, t2 = (t_l, t_l1) if l % 2 == 1 else (t_l1, t_l)
    else:
        t0, t2 = (t_l, t_l1) if l % 2 == 0 else (t_l1, t_l)
    return _prism_cells(a_data, t0, t2)


def _global_layers(m: int, flavor: str, slices: dict[int, SliceSpec]) -> list[dict]:
    coned_parity = 1 if flavor == "odd" else 0
    g1: dict[Point, Fraction] = {}
    g2: dict[Point, Fraction] = {}
    g3: dict[Point, Fraction] = {}
    g4: dict[Point, Fraction] = {}
    ee, ff, gg = 4, 2, 1

    def touch(p: Point):
        j = m - p[3]
        sigma = p[0] + p[1] + p[2]
        theta = 2 * p[0] + p[1]
        g1[p] = Fraction(p[3] * p[3])
        if j % 2 == coned_parity:
            g2[p] = Fraction(j - sigma)
            g3[p] = Fraction(0)
            g4[p] = Fraction(ff * theta)
        else:
            g2[p] = Fraction(0)
            g3[p] = Fraction(sigma * sigma)
            g4[p] = Fraction((ee if (sigma % 2 == coned_parity) else gg) * theta)

    depth = 4
    slice_layers: list[dict] = [dict() for _ in range(depth)]
    extra: list[dict] = []
    for spec in slices.values():
        stack = spec.build.layers if spec.coned else spec.build.layers[2:]
        base = 0 if spec.coned else 2
        for i, layer in enumerate(stack):
            slice_layers[base + i].update(layer)
        for el in spec.extra_layers:
            extra.append(el)
        for layer in spec.build.layers:
            for p in layer:
                if p not in g1:
                    touch(p)
    touch((0, 0, 0, m))
    return [g1, g2, g3, g4] + slice_layers + extra


def build_iv4(
    m: int,
    flavor: str = "odd",
    diag_choice: str | Callable[[int], str] = "P",
) -> Triangulation:
    """The odd or even layered triangulation of the side-m simplex in Z^4."""
    if m % 2 != 0 or m < 2:
        raise ValueError("bad-parameters: m must be even and >= 2")
    if flavor not in ("odd", "even"):
        raise ValueError("bad-parameters: flavor must be 'odd' or 'even'")
    slices = _default_slices(m, flavor, diag_choice)
    cells, layers = assemble_iv4(m, flavor, slices)
    return _to_triangulation(m, cells, layers, f"IV4_{flavor.upper()}", {"flavor": flavor}, slices)


def _to_triangulation(
    m: int,
    cells: list,
    layers: list,
    tag: str,
    params: dict,
    slices: dict | None = None,
    omitted: frozenset = frozenset(),
) -> Triangulation:
    table = VertexTable(4)
    simplices = []
    for cell in cells:
        ids = tuple(sorted(table.id_of(p, create=True) for p in cell))
        if len(set(ids)) != 5:
            raise ValueError(f"degenerate 4-cell {cell}")
        simplices.append(ids)
    tri = Triangulation(
        ambient_dim=4,
        degree=m,
        vertices=table,
        maximal_simplices=sorted(simplices),
        construction_tag=tag,
        params=params,
        omitted_points=omitted,
    )
    tri.params["_layers"] = layers
    tri.params["_slices"] = slices
    return tri
