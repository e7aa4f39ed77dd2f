"""The layered triangulation of a lattice tetrahedron.

The tetrahedron (side m, arbitrary unimodular frame, any ambient dimension)
is sliced by triangles parallel to a chosen base face; each slice triangle is
cut into strips with parity-selected diagonals; consecutive slices are glued
by a pair of cones with apexes alternating between two chosen edges and by
the join of two opposite slice edges.  The builder also emits the exact
height layers whose lexicographic combination certifies convexity.

Frames let the same machinery triangulate the 3-dimensional slices of the
4-dimensional constructions in place.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ..lattice import Point, VertexTable, parity, point_add, point_sub
from .core import Triangulation
from .twod import segment_lattice_points, strip_diagonal_pairs, triangulate_strip


@dataclass
class TetraFrame:
    """A lattice tetrahedron with a distinguished subdivision frame.

    ``w0`` is the vertex opposite the base face; ``b1`` and ``b2`` are the
    base corners whose edges to ``w0`` carry the alternating cone apexes;
    ``b3`` is the remaining base corner.  All corners in global coordinates.
    """

    w0: Point
    b1: Point
    b2: Point
    b3: Point
    m: int

    def __post_init__(self):
        self.u = tuple(
            tuple((c - w) // self.m for c, w in zip(b, self.w0))
            for b in (self.b1, self.b2, self.b3)
        )
        for b, step in zip((self.b1, self.b2, self.b3), self.u):
            if point_add(self.w0, tuple(self.m * s for s in step)) != b:
                raise ValueError("corner not at lattice distance m from w0")

    def point(self, a1: int, a2: int, a3: int) -> Point:
        out = list(self.w0)
        for coeff, step in zip((a1, a2, a3), self.u):
            for i in range(len(out)):
                out[i] += coeff * step[i]
        return tuple(out)


def _e_index(m: int, t: int) -> int:
    """Which of the two cone edges (1 or 2) serves level t."""
    return 1 if (m - t) % 2 == 0 else 2


@dataclass
class SliceData:
    """2D data of one slice triangle at level t (distance from w0)."""

    t: int
    e: int                    # cone-edge index serving this level
    corners: dict             # frame axis index (1,2,3) -> global corner point
    lines: list               # lines[s] = lattice points at strip radius s
    triangles: list           # 2D triangulation (triples of global points)
    s_edge: tuple             # the two corner axis indices spanning S_t
    diag_base: dict = field(default_factory=dict)  # strip radius -> int slope base


@dataclass
class IV3Build:
    frame: TetraFrame
    tetras: list
    slices: list  # SliceData per level 0..m
    layers: list  # list of dict[Point, Fraction]
    diag_choice: Callable[[int], str]


def induced_triangles(tetras: Sequence, on_face: Callable[[Point], bool]) -> list:
    """Triangle faces of a tetra list whose vertices all satisfy a predicate."""
    import itertools

    seen = set()
    out = []
    for tet in tetras:
        pts = [p for p in tet if on_face(p)]
        if len(pts) < 3:
            continue
        for tri in itertools.combinations(sorted(pts), 3):
            if tri not in seen:
                seen.add(tri)
                out.append(tri)
    return out


def _slice_data(frame: TetraFrame, t: int, choice: str) -> SliceData:
    m = frame.m
    e = _e_index(m, t)
    others = [i for i in (1, 2, 3) if i != e]
    p_axis, q_axis = others
    corners = {i: frame.point(*(t if j == i else 0 for j in (1, 2, 3))) for i in (1, 2, 3)}

    def line(s: int) -> list[Point]:
        pts = []
        for j in range(s + 1):
            a = [0, 0, 0]
            a[e - 1] = t - s
            a[p_axis - 1] = s - j
            a[q_axis - 1] = j
            pts.append(frame.point(*a))
        return pts

    lines = [line(s) for s in range(t + 1)]
    data = SliceData(t=t, e=e, corners=corners, lines=lines, triangles=[], s_edge=(p_axis, q_axis))

    if t == 0:
        return data

    # Parity pair selecting the strip diagonals of this slice.
    w_par = parity(corners[e] if t > 0 else frame.w0)
    step_p = point_sub(frame.u[p_axis - 1], frame.u[e - 1])
    step_q = point_sub(frame.u[q_axis - 1], frame.u[e - 1])
    par_p = tuple((a + b) & 1 for a, b in zip(w_par, step_p))
    par_q = tuple((a + b) & 1 for a, b in zip(w_par, step_q))
    pair = frozenset((w_par, par_p if choice == "P" else par_q))

    base = 0
    data.diag_base[0] = 0
    for s in range(t):
        bot, top = lines[s], lines[s + 1]
        if s == 0:
            data.triangles.extend(triangulate_strip(bot, top, frozenset()))
            data.diag_base[1] = 0
            continue
        diag_a, diag_b = strip_diagonal_pairs(bot, top)
        data.triangles.extend(triangulate_strip(bot, top, pair))
        gap = 2 * s + 4
        base = base - gap if pair == diag_a else base + gap
        data.diag_base[s + 1] = base
    return data


def build_frame_iv3(frame: TetraFrame, diag_choice: str | Callable[[int], str] = "P") -> IV3Build:
    """Run the full subdivision over a tetra frame."""
    m = frame.m
    if callable(diag_choice):
        choice_fn = diag_choice
    else:
        choice_fn = lambda t: diag_choice

    slices = [_slice_data(frame, t, choice_fn(t)) for t in range(m + 1)]
    tetras = []

    for t in range(m):
        lo, hi = slices[t], slices[t + 1]
        # Cone over T_t with apex on the serving edge of level t+1.
        if t >= 1:
            apex_up = hi.corners[lo.e]
            for tri in lo.triangles:
                tetras.append(tri + (apex_up,))
        # Cone over T_{t+1} with apex on its serving edge at level t.
        apex_down = lo.corners[hi.e] if t >= 1 else frame.w0
        for tri in hi.triangles:
            tetras.append(tri + (apex_down,))
        # Join of S_t and S_{t+1}.
        if t >= 1:
            s_lo = lo.lines[t]       # S_t: the line at maximal radius
            s_hi = hi.lines[t + 1]
            for i in range(len(s_lo) - 1):
                for j in range(len(s_hi) - 1):
                    tetras.append((s_lo[i], s_lo[i + 1], s_hi[j], s_hi[j + 1]))

    layers = _lift_layers(frame, slices)
    return IV3Build(frame=frame, tetras=tetras, slices=slices, layers=layers, diag_choice=choice_fn)


def _lift_layers(frame: TetraFrame, slices: list[SliceData]) -> list[dict]:
    """Height layers (outermost first) whose lexicographic stack realizes the
    subdivision: slab separation, cone carving, strip separation, staircase."""
    l_level: dict[Point, Fraction] = {}
    l_cone: dict[Point, Fraction] = {}
    l_strip: dict[Point, Fraction] = {}
    l_stair: dict[Point, Fraction] = {}
    for sl in slices:
        t = sl.t
        for s, line in enumerate(sl.lines):
            for theta, pt in enumerate(line):
                l_level[pt] = Fraction(t * t)
                l_cone[pt] = Fraction(t - s)     # coordinate along the serving edge
                l_strip[pt] = Fraction(s * s)
                l_stair[pt] = Fraction(sl.diag_base.get(s, 0) * theta + theta * theta)
    return [l_level, l_cone, l_strip, l_stair]


_FACE_KEYS = {"x1=0", "x2=0", "x3=0", "sum=m"}


def _standard_corners(m: int) -> dict[str, Point]:
    return {
        "origin": (0, 0, 0),
        "x": (m, 0, 0),
        "y": (0, m, 0),
        "z": (0, 0, m),
    }


def build_iv3(
    m: int,
    base_face: str = "x3=0",
    e1: str = "y",
    e2: str = "x",
    diag_choice: str | Callable[[int], str] = "P",
) -> Triangulation:
    """Layered triangulation of the side-m lattice tetrahedron in Z^3.

    ``base_face`` names the face sliced by parallel triangles; ``e1`` and
    ``e2`` name the base corners whose edges to the opposite vertex carry the
    alternating cone apexes.  Defaults follow the slice convention of the
    4-dimensional construction: base {x3=0}, cone edges toward the y- and
    x-corners of the outer face.
    """
    if m < 1:
        raise ValueError("bad-parameters: m >= 1 required")
    corners = _standard_corners(m)
    face_corners = {
        "x1=0": ("origin", "y", "z"),
        "x2=0": ("origin", "x", "z"),
        "x3=0": ("origin", "x", "y"),
        "sum=m": ("x", "y", "z"),
    }
    if base_face not in face_corners:
        raise ValueError(f"bad-parameters: unknown face {base_face}")
    base = face_corners[base_face]
    w0_name = next(name for name in corners if name not in base)
    if e1 not in base or e2 not in base or e1 == e2:
        raise ValueError("bad-parameters: e1, e2 must be distinct base corners")
    b3_name = next(name for name in base if name not in (e1, e2))
    frame = TetraFrame(
        w0=corners[w0_name],
        b1=corners[e1],
        b2=corners[e2],
        b3=corners[b3_name],
        m=m,
    )
    build = build_frame_iv3(frame, diag_choice)
    table = VertexTable(3)
    simplices = []
    for tet in build.tetras:
        ids = tuple(sorted(table.id_of(p, create=True) for p in tet))
        simplices.append(ids)
    tri = Triangulation(
        ambient_dim=3,
        degree=m,
        vertices=table,
        maximal_simplices=sorted(simplices),
        construction_tag="IV3",
        params={
            "base_face": base_face,
            "e1": e1,
            "e2": e2,
            "diag_choice": diag_choice if isinstance(diag_choice, str) else "custom",
        },
    )
    tri.params["_build"] = build
    return tri
