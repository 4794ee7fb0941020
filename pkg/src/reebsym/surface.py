"""Oriented triangulated closed surfaces and exact scalar fields on them.

The complex is stored as darts (half-edges): dart `3*f + i` is the side of
face `f` leaving its `i`-th corner.  `next_dart` walks a face cycle, `twin`
crosses to the neighbouring face.  Faces are stored with a coherent global
orientation, chosen deterministically from the input by orienting face 0 as
given and propagating; `ccw(d)` therefore rotates the outgoing darts of a
vertex in a fixed handedness everywhere on the surface.

A scalar field is one decimal literal per vertex.  It is level-generic when
the two endpoints of every edge carry different values; all of the level-set
machinery downstream assumes this and checks it first.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BadParameter,
    Disconnected,
    InvalidVertex,
    NonManifold,
    NonOrientable,
    NotClosed,
    NotGeneric,
)
from .exact import parse_decimal


@dataclass(frozen=True, eq=False)
class SurfaceComplex:
    vertex_count: int
    faces: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[int, int], ...]
    next_dart: tuple[int, ...]
    twin: tuple[int, ...]
    origin: tuple[int, ...]
    edge_of: tuple[int, ...]
    out_dart: tuple[int, ...]
    edge_index: dict[tuple[int, int], int] = field(repr=False)
    dart_index: dict[tuple[int, int], int] = field(repr=False)

    @property
    def n_darts(self) -> int:
        return len(self.next_dart)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def face_of(self, d: int) -> int:
        return d // 3

    def target(self, d: int) -> int:
        return self.origin[self.twin[d]]

    def prev(self, d: int) -> int:
        return self.next_dart[self.next_dart[d]]

    def ccw(self, d: int) -> int:
        """Next outgoing dart of origin(d), counterclockwise."""
        return self.twin[self.prev(d)]

    def link_cycle(self, v: int) -> list[int]:
        """Neighbour vertices of v in counterclockwise cyclic order."""
        d0 = self.out_dart[v]
        cycle = []
        d = d0
        while True:
            cycle.append(self.target(d))
            d = self.ccw(d)
            if d == d0:
                break
        return cycle

    def star_faces(self, v: int) -> list[int]:
        """Faces around v, counterclockwise, aligned with link_cycle."""
        d0 = self.out_dart[v]
        out = []
        d = d0
        while True:
            out.append(self.face_of(d))
            d = self.ccw(d)
            if d == d0:
                break
        return out

    def degree(self, v: int) -> int:
        return len(self.link_cycle(v))

    def edge_faces(self, e: int) -> tuple[int, int]:
        u, w = self.edges[e]
        d = self.dart_index[(u, w)]
        return (self.face_of(d), self.face_of(self.twin[d]))

    def opposite_vertex(self, f: int, e: int) -> int:
        (x,) = set(self.faces[f]) - set(self.edges[e])
        return x


@dataclass(frozen=True)
class ScalarField:
    values: tuple[str, ...]
    fracs: tuple[Fraction, ...]

    def __getitem__(self, v: int) -> Fraction:
        return self.fracs[v]

    def text(self, v: int) -> str:
        return self.values[v]


def make_field(values: list[str] | tuple[str, ...]) -> ScalarField:
    fracs = tuple(parse_decimal(t) for t in values)
    return ScalarField(values=tuple(values), fracs=fracs)


@dataclass(frozen=True)
class VertexClass:
    kind: str  # "minimum" | "maximum" | "regular" | "saddle"
    n: int | None = None  # saddle index, sign changes / 2

    def __str__(self) -> str:
        return f"saddle({self.n})" if self.kind == "saddle" else self.kind


@dataclass(frozen=True)
class GenericityReport:
    ok: bool
    offending_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SurfaceStats:
    vertex_count: int
    edge_count: int
    face_count: int
    euler: int
    genus: int


def build_complex(triangles: list[tuple[int, int, int]], vertex_count: int) -> SurfaceComplex:
    """Assemble and validate a closed connected oriented surface.

    Input windings may be inconsistent; a coherent orientation is found by
    propagation from face 0 (NonOrientable if impossible).  Raises
    NonManifold / NotClosed / Disconnected with the first witness cell.
    """
    if vertex_count <= 0 or not triangles:
        raise BadParameter("need at least one vertex and one triangle")
    for fi, tri in enumerate(triangles):
        if len(tri) != 3:
            raise BadParameter(f"face {fi} is not a triangle: {tri!r}")
        a, b, c = tri
        for v in tri:
            if not (0 <= v < vertex_count):
                raise InvalidVertex(f"face {fi} uses unknown vertex {v}")
        if len({a, b, c}) != 3:
            raise NonManifold(fi, "degenerate face")

    # Edge incidence.  A closed manifold has every unordered edge on
    # exactly two faces.
    by_edge: dict[tuple[int, int], list[int]] = defaultdict(list)
    for fi, (a, b, c) in enumerate(triangles):
        for u, w in ((a, b), (b, c), (c, a)):
            by_edge[(min(u, w), max(u, w))].append(fi)
    for e in sorted(by_edge):
        n = len(by_edge[e])
        if n > 2:
            raise NonManifold(e, "edge on more than two faces")
        if n == 1:
            raise NotClosed(e)

    # Coherent orientation by propagation.  flip[f] records whether the
    # input winding of f is reversed in the global orientation.
    n_f = len(triangles)
    flip: list[bool | None] = [None] * n_f
    flip[0] = False
    queue = [0]
    seen = 1
    while queue:
        fi = queue.pop()
        a, b, c = triangles[fi]
        sides = [(a, b), (b, c), (c, a)]
        if flip[fi]:
            sides = [(w, u) for (u, w) in sides]
        for u, w in sides:
            # a face of three distinct vertices never repeats an edge, so
            # the other incidence is a different face
            (gi,) = (g for g in by_edge[(min(u, w), max(u, w))] if g != fi)
            ga, gb, gc = triangles[gi]
            gsides = [(ga, gb), (gb, gc), (gc, ga)]
            # coherent orientation: the shared edge must be traversed in
            # opposite directions by the two oriented faces
            want_flip = (u, w) in gsides
            if flip[gi] is None:
                flip[gi] = want_flip
                seen += 1
                queue.append(gi)
            elif flip[gi] != want_flip:
                raise NonOrientable(gi)
    if seen != n_f:
        raise Disconnected(next(f for f in range(n_f) if flip[f] is None))

    oriented = []
    for fi, (a, b, c) in enumerate(triangles):
        oriented.append((a, c, b) if flip[fi] else (a, b, c))

    # Dart arrays.
    origin = []
    next_dart = []
    dart_index: dict[tuple[int, int], int] = {}
    for fi, (a, b, c) in enumerate(oriented):
        base = 3 * fi
        for i, (u, w) in enumerate(((a, b), (b, c), (c, a))):
            d = base + i
            origin.append(u)
            next_dart.append(base + (i + 1) % 3)
            assert (u, w) not in dart_index, "coherent orientation precludes this"
            dart_index[(u, w)] = d
    twin = [0] * len(origin)
    for (u, w), d in dart_index.items():
        twin[d] = dart_index[(w, u)]

    edges = tuple(sorted(by_edge))
    edge_index = {e: i for i, e in enumerate(edges)}
    edge_of = []
    for d in range(len(origin)):
        u, w = origin[d], origin[twin[d]]
        edge_of.append(edge_index[(min(u, w), max(u, w))])

    out_dart = [-1] * vertex_count
    deg = Counter()
    for d in range(len(origin)):
        v = origin[d]
        deg[v] += 1
        if out_dart[v] < 0 or d < out_dart[v]:
            out_dart[v] = d
    for v in range(vertex_count):
        if out_dart[v] < 0:
            raise Disconnected(v)

    c = SurfaceComplex(
        vertex_count=vertex_count,
        faces=tuple(oriented),
        edges=edges,
        next_dart=tuple(next_dart),
        twin=tuple(twin),
        origin=tuple(origin),
        edge_of=tuple(edge_of),
        out_dart=tuple(out_dart),
        edge_index=edge_index,
        dart_index=dart_index,
    )

    # Vertex links must be single cycles: a pinch point passes the edge
    # checks but is not locally a disk.
    for v in range(vertex_count):
        if len(c.link_cycle(v)) != deg[v]:
            raise NonManifold(v, "vertex link is not a single cycle")
    return c


def validate_level_generic(c: SurfaceComplex, f: ScalarField) -> GenericityReport:
    if len(f.values) != c.vertex_count:
        raise BadParameter(
            f"field has {len(f.values)} values for {c.vertex_count} vertices")
    bad = [e for e in c.edges if f[e[0]] == f[e[1]]]
    return GenericityReport(ok=not bad, offending_edges=tuple(bad))


def require_generic(c: SurfaceComplex, f: ScalarField) -> None:
    rep = validate_level_generic(c, f)
    if not rep.ok:
        raise NotGeneric(rep.offending_edges)


def cyclic_sign_changes(signs: list[int]) -> int:
    n = len(signs)
    return sum(1 for i in range(n) if signs[i] != signs[(i + 1) % n])


def classify_vertex(c: SurfaceComplex, f: ScalarField, v: int) -> VertexClass:
    """Classify v by the sign changes of f - f(v) around its link.

    0 changes: extremum.  2: regular.  2n with n >= 2: saddle whose level
    set has n transverse branches through v.
    """
    if not (0 <= v < c.vertex_count):
        raise InvalidVertex(f"no vertex {v}")
    fv = f[v]
    signs = []
    for w in c.link_cycle(v):
        if f[w] == fv:
            raise NotGeneric(((min(v, w), max(v, w)),))
        signs.append(1 if f[w] > fv else -1)
    changes = cyclic_sign_changes(signs)
    assert changes % 2 == 0
    if changes == 0:
        return VertexClass("minimum" if signs[0] > 0 else "maximum")
    if changes == 2:
        return VertexClass("regular")
    return VertexClass("saddle", n=changes // 2)


def classify_all(c: SurfaceComplex, f: ScalarField) -> list[VertexClass]:
    return [classify_vertex(c, f, v) for v in range(c.vertex_count)]


def census(c: SurfaceComplex, f: ScalarField) -> dict:
    """Counts by class; saddles broken down by index."""
    counts = Counter(vc.kind for vc in classify_all(c, f))
    saddles = Counter(vc.n for vc in classify_all(c, f) if vc.kind == "saddle")
    return {
        "minimum": counts.get("minimum", 0),
        "maximum": counts.get("maximum", 0),
        "regular": counts.get("regular", 0),
        "saddles": dict(sorted(saddles.items())),
    }


def surface_stats(c: SurfaceComplex) -> SurfaceStats:
    euler = c.vertex_count - c.n_edges + c.n_faces
    assert euler % 2 == 0, "closed orientable surface has even Euler characteristic"
    return SurfaceStats(
        vertex_count=c.vertex_count,
        edge_count=c.n_edges,
        face_count=c.n_faces,
        euler=euler,
        genus=(2 - euler) // 2,
    )
