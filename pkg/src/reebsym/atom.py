"""Critical level components as ribbon graphs, and the induced partition.

A critical component is a 1-complex embedded in the surface: saddles are
its vertices, arcs its edges.  An arc is traced through triangle interiors
from one saddle branch to another, crossing mesh edges transversally and
possibly absorbing on-level regular vertices as interior points.  The
cyclic order of arc-ends around each saddle (inherited from the surface
orientation) makes the component a ribbon graph; its boundary walks are
the face cycles of that ribbon structure and correspond to the circles
obtained by pushing the component slightly off its level.

Arc direction convention: every arc is stored so that walking from end 0
to end 1 keeps the higher-value side of the surface on the left.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import NotCritical
from .reeb import ReebGraph, ReebProjection, ReebVertex, Star
from .surface import ScalarField, SurfaceComplex, classify_vertex

GermSlot = tuple[int, int]      # (mesh vertex on the level, index into its link)


@dataclass(frozen=True)
class Arc:
    id: int
    start: GermSlot
    end: GermSlot
    trace: tuple[int, ...]      # crossed mesh edges, in walking order
    through: tuple[int, ...]    # absorbed regular vertices, in walking order
    exit_darts: tuple[int, ...] # dart of the face left behind at each crossing

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.start[0], self.end[0])


@dataclass(frozen=True)
class CriticalComponent:
    reeb_vertex: int
    value: Fraction
    saddles: tuple[int, ...]
    arcs: tuple[Arc, ...]
    rotation: dict[int, tuple[tuple[int, int], ...]]  # saddle -> ccw (arc id, end) ring
    slot_ring: dict[int, tuple[GermSlot, ...]]        # saddle -> ccw germ slots
    face_segments: dict[int, tuple]  # cut face -> ("chord", e_in, e_out) | ("spoke", v, e)
    absorbed: tuple[int, ...]        # on-level regular vertices of the component

    def crossed_edges(self) -> set[int]:
        out = set()
        for a in self.arcs:
            out.update(a.trace)
        return out

    def arc_at(self, slot: GermSlot) -> tuple[int, int]:
        """(arc id, end) attached at a germ slot of a saddle or absorbed vertex."""
        for a in self.arcs:
            if a.start == slot:
                return (a.id, 0)
            if a.end == slot:
                return (a.id, 1)
        raise KeyError(slot)


@dataclass(frozen=True)
class BoundaryWalk:
    id: int
    slots: tuple[tuple[int, int], ...]  # cyclic (arc id, starting end)
    steps: tuple[tuple[int, str, str], ...]  # (arc id, side, "along"|"against")
    side: str                            # "up" | "down" ("mixed" only off-surface)
    adjacent_region: int | None


@dataclass(frozen=True)
class Atom:
    component: CriticalComponent
    walks: tuple[BoundaryWalk, ...]
    euler: int
    genus: int


@dataclass(frozen=True)
class Region:
    id: int
    pieces: tuple[tuple[int, str], ...]  # (face, "+"|"-"|"0")
    faces: tuple[int, ...]
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class PartitionXi:
    zero_elements: tuple[int, ...]
    one_elements: tuple[int, ...]
    two_elements: tuple[Region, ...]
    region_of_piece: dict[tuple[int, str], int]
    value: Fraction

    def region_of_vertex(self, v: int) -> int:
        for reg in self.two_elements:
            if v in reg.vertices:
                return reg.id
        raise KeyError(v)


@dataclass(frozen=True)
class SpecialReport:
    special: bool
    germ_to_region: dict[tuple[int, str], int]
    failure_witness: tuple[tuple[int, str], tuple[int, str]] | None


def germ_slots(c: SurfaceComplex, f: ScalarField, v: int, value: Fraction) -> list[int]:
    """Link indices i where the sign of f - value flips between link[i] and link[i+1]."""
    link = c.link_cycle(v)
    signs = [1 if f[u] > value else -1 for u in link]
    return [i for i in range(len(link)) if signs[i] != signs[(i + 1) % len(link)]]


def _opposite_edge(c: SurfaceComplex, fi: int, v: int) -> int:
    for k in range(3):
        e = c.edge_of[3 * fi + k]
        if v not in c.edges[e]:
            return e
    raise AssertionError("triangle has an edge opposite each corner")


def _dart_of_face_on_edge(c: SurfaceComplex, fi: int, e: int) -> int:
    for k in range(3):
        d = 3 * fi + k
        if c.edge_of[d] == e:
            return d
    raise AssertionError("face carries its own edges")


def extract_critical_component(c: SurfaceComplex, f: ScalarField,
                               proj: ReebProjection, rv: ReebVertex) -> CriticalComponent:
    value = rv.value
    kinds = {v: classify_vertex(c, f, v) for v in rv.level_vertices}
    saddles = tuple(sorted(v for v in rv.level_vertices if kinds[v].kind == "saddle"))
    if not saddles:
        raise NotCritical(f"component of graph vertex {rv.id} has no saddle")
    assert all(kinds[v].kind in ("saddle", "regular") for v in rv.level_vertices), \
        "extrema are isolated in their level set"
    absorbed = tuple(sorted(v for v in rv.level_vertices if kinds[v].kind == "regular"))

    slots = {v: germ_slots(c, f, v, value) for v in rv.level_vertices}
    for z in saddles:
        assert len(slots[z]) == 2 * kinds[z].n
    for v in absorbed:
        assert len(slots[v]) == 2

    star_faces = {v: c.star_faces(v) for v in rv.level_vertices}
    face_of_slot = {(v, i): star_faces[v][i] for v in rv.level_vertices for i in slots[v]}
    slot_of_face = {}
    for (v, i), fi in face_of_slot.items():
        assert (fi, v) not in slot_of_face
        slot_of_face[(fi, v)] = (v, i)

    def trace(start: GermSlot):
        """Walk the level curve from a germ until the next saddle germ."""
        v0, _ = start
        fi = face_of_slot[start]
        e = _opposite_edge(c, fi, v0)
        crossed = [e]
        exit_darts = [_dart_of_face_on_edge(c, fi, e)]
        segments = [(fi, ("spoke", v0, e))]
        through = []
        cur = c.face_of(c.twin[exit_darts[-1]])
        while True:
            at_level = [v for v in c.faces[cur] if f[v] == value]
            if at_level:
                (u,) = at_level
                assert u in rv.level_vertices
                segments.append((cur, ("spoke", u, e)))
                slot = slot_of_face[(cur, u)]
                if u in saddles:
                    return slot, tuple(crossed), tuple(through), tuple(exit_darts), segments
                through.append(u)
                i, j = slots[u]
                out = (u, j) if slot == (u, i) else (u, i)
                fi = face_of_slot[out]
                e = _opposite_edge(c, fi, u)
                segments.append((fi, ("spoke", u, e)))
            else:
                others = [c.edge_of[3 * cur + k] for k in range(3)
                          if c.edge_of[3 * cur + k] != e]
                straddling = []
                for e2 in others:
                    x, y = c.edges[e2]
                    lo, hi = sorted((f[x], f[y]))
                    if lo < value < hi:
                        straddling.append(e2)
                (e2,) = straddling
                segments.append((cur, ("chord", min(e, e2), max(e, e2))))
                e = e2
                fi = cur
            crossed.append(e)
            exit_darts.append(_dart_of_face_on_edge(c, fi, e))
            cur = c.face_of(c.twin[exit_darts[-1]])

    arcs_raw = []
    face_segments = {}
    used = set()
    for z in saddles:
        for i in slots[z]:
            if (z, i) in used:
                continue
            end, crossed, through, exit_darts, segments = trace((z, i))
            used.add((z, i))
            used.add(end)
            arcs_raw.append(((z, i), end, crossed, through, exit_darts))
            for fi, seg in segments:
                assert face_segments.setdefault(fi, seg) == seg, "one segment per cut face"
    assert len(used) == sum(len(slots[z]) for z in saddles), "every branch germ is on one arc"
    covered = set()
    for _, _, crossed, _, _ in arcs_raw:
        assert covered.isdisjoint(crossed)
        covered.update(crossed)
    assert covered == set(rv.crossing_edges), "arcs cover the component's crossings"

    arcs = []
    for start, end, crossed, through, exit_darts in sorted(arcs_raw, key=lambda a: min(a[2])):
        # orient so the higher side sits on the left: the left neighbour at
        # each crossing is the head of the dart we exit through
        left_up = {f[c.target(d)] > value for d in exit_darts}
        assert len(left_up) == 1, "one side of a level arc is uniformly higher"
        if not left_up.pop():
            start, end = end, start
            crossed = crossed[::-1]
            through = through[::-1]
            # exit darts of the reversed walk are the twins, visited backwards
            exit_darts = tuple(c.twin[d] for d in exit_darts[::-1])
        arcs.append(Arc(id=len(arcs), start=start, end=end, trace=tuple(crossed),
                        through=tuple(through), exit_darts=tuple(exit_darts)))

    by_slot = {}
    for a in arcs:
        by_slot[a.start] = (a.id, 0)
        by_slot[a.end] = (a.id, 1)
    rotation = {z: tuple(by_slot[(z, i)] for i in slots[z]) for z in saddles}
    slot_ring = {z: tuple((z, i) for i in slots[z]) for z in saddles}

    return CriticalComponent(
        reeb_vertex=rv.id, value=value, saddles=saddles, arcs=tuple(arcs),
        rotation=rotation, slot_ring=slot_ring, face_segments=face_segments,
        absorbed=absorbed)


def boundary_walks(cc: CriticalComponent) -> tuple[BoundaryWalk, ...]:
    """Face cycles of the ribbon graph.

    Slots are (arc id, end); the slot (a, e) stands for the boundary
    segment running alongside a from end e toward the other end, with the
    component on the segment's left.  The successor of (a, e) is the slot
    after (a, 1-e) in the rotation at the saddle where that end attaches.
    By the up-on-left arc convention a segment traversing an arc forward
    shadows its lower side and a reverse traversal shadows its upper side,
    so a walk's side is read off its traversal directions.
    """
    pos = {}
    for z, ring in cc.rotation.items():
        for idx, slot in enumerate(ring):
            pos[slot] = (z, idx)

    def advance(slot):
        a, e = slot
        z, idx = pos[(a, 1 - e)]
        ring = cc.rotation[z]
        return ring[(idx + 1) % len(ring)]

    all_slots = sorted(pos)
    seen = set()
    walks = []
    for s0 in all_slots:
        if s0 in seen:
            continue
        orbit = []
        s = s0
        while s not in seen:
            seen.add(s)
            orbit.append(s)
            s = advance(s)
        assert s == s0, "slot successor is a permutation"
        ends = {e for _, e in orbit}
        side = ("down" if ends == {0} else "up" if ends == {1} else "mixed")
        steps = tuple((a, side, "along" if e == 0 else "against") for a, e in orbit)
        walks.append(BoundaryWalk(id=len(walks), slots=tuple(orbit), steps=steps,
                                  side=side, adjacent_region=None))
    n_slots = sum(len(r) for r in cc.rotation.values())
    assert sum(len(w.slots) for w in walks) == n_slots
    return tuple(walks)


def atom_stats(cc: CriticalComponent) -> Atom:
    walks = boundary_walks(cc)
    euler = len(cc.saddles) - len(cc.arcs)
    genus2 = 2 - euler - len(walks)
    assert genus2 % 2 == 0 and genus2 >= 0
    return Atom(component=cc, walks=walks, euler=euler, genus=genus2 // 2)


def _side_of_uncrossed_edge(c: SurfaceComplex, f: ScalarField, e: int, value: Fraction) -> str:
    u, w = c.edges[e]
    su = (f[u] > value) - (f[u] < value)
    sw = (f[w] > value) - (f[w] < value)
    assert su != 0 or sw != 0, "an edge inside a level set would break genericity"
    s = su if su != 0 else sw
    return "+" if s > 0 else "-"


def build_partition(c: SurfaceComplex, f: ScalarField, cc: CriticalComponent) -> PartitionXi:
    """Connected components of the surface minus the critical component.

    Cut faces contribute a piece per side of their segment; every other
    face is one whole piece.  Pieces merge across any mesh edge not
    crossed by the component, and across crossed edges side by side.
    """
    value = cc.value
    crossed = cc.crossed_edges()
    cut = set(cc.face_segments)
    on_level = set(cc.saddles) | set(cc.absorbed)

    pieces = []
    for fi in range(c.n_faces):
        if fi in cut:
            pieces.append((fi, "+"))
            pieces.append((fi, "-"))
        else:
            pieces.append((fi, "0"))
    parent = {p: p for p in pieces}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    def union(p, q):
        rp, rq = find(p), find(q)
        if rp != rq:
            parent[max(rp, rq)] = min(rp, rq)

    def piece_at(fi: int, e: int) -> tuple[int, str]:
        if fi not in cut:
            return (fi, "0")
        return (fi, _side_of_uncrossed_edge(c, f, e, value))

    for e in range(c.n_edges):
        fa, fb = c.edge_faces(e)
        if e in crossed:
            union((fa, "+"), (fb, "+"))
            union((fa, "-"), (fb, "-"))
        else:
            union(piece_at(fa, e), piece_at(fb, e))

    classes: dict[tuple[int, str], list[tuple[int, str]]] = {}
    for p in pieces:
        classes.setdefault(find(p), []).append(p)

    region_of_piece = {}
    regions = []
    for root in sorted(classes):
        members = tuple(sorted(classes[root]))
        rid = len(regions)
        for p in members:
            region_of_piece[p] = rid
        faces = tuple(sorted({fi for fi, _ in members}))
        regions.append((rid, members, faces))

    vert_region: dict[int, int] = {}
    for v in range(c.vertex_count):
        if v in on_level:
            continue
        fi = min(c.star_faces(v))
        if fi not in cut:
            side = "0"
        elif f[v] > value:
            side = "+"
        elif f[v] < value:
            side = "-"
        else:
            # on the level but not on this component: its star is uncut
            raise AssertionError("level vertex off the component has uncut star")
        vert_region[v] = region_of_piece[(fi, side)]

    two = []
    for rid, members, faces in regions:
        verts = tuple(sorted(v for v, r in vert_region.items() if r == rid))
        two.append(Region(id=rid, pieces=members, faces=faces, vertices=verts))

    return PartitionXi(
        zero_elements=cc.saddles,
        one_elements=tuple(a.id for a in cc.arcs),
        two_elements=tuple(two),
        region_of_piece=region_of_piece,
        value=value)


def attach_regions(c: SurfaceComplex, cc: CriticalComponent,
                   walks: tuple[BoundaryWalk, ...], xi: PartitionXi) -> tuple[BoundaryWalk, ...]:
    """Fill each walk's adjacent region from the side of the arcs it shadows."""
    out = []
    for w in walks:
        assert w.side in ("up", "down")
        side = "+" if w.side == "up" else "-"
        regions = set()
        for a_id, _e in w.slots:
            arc = cc.arcs[a_id]
            fa, fb = c.edge_faces(arc.trace[0])
            regions.add(xi.region_of_piece[(fa, side)])
            regions.add(xi.region_of_piece[(fb, side)])
        assert len(regions) == 1, "a boundary walk shadows a single region"
        out.append(replace(w, adjacent_region=regions.pop()))
    return tuple(out)


def is_special(star: Star, xi: PartitionXi, proj: ReebProjection) -> SpecialReport:
    """Do the star germs biject with the complement regions?

    A germ's edge sweeps a connected open cylinder disjoint from every
    critical component, so the cylinder sits inside one region; the germ
    map is therefore well defined, and it is onto because every region
    contains a collar of the component.  Specialness is exactly
    injectivity, checked germ by germ in star order.
    """
    germ_to_region: dict[tuple[int, str], int] = {}
    for j, direction in star.germs:
        side_wanted = "+" if direction == "up" else "-"
        found = set()
        for fi, cells in proj.face_map.items():
            if ("edge", j) not in cells:
                continue
            if (fi, "0") in xi.region_of_piece:
                found.add(xi.region_of_piece[(fi, "0")])
            else:
                found.add(xi.region_of_piece[(fi, side_wanted)])
        assert len(found) == 1, "an open graph edge sweeps one region"
        germ_to_region[(j, direction)] = found.pop()

    assert set(germ_to_region.values()) == {r.id for r in xi.two_elements}, \
        "every region carries at least one germ"

    witness = None
    seen: dict[int, tuple[int, str]] = {}
    for germ in star.germs:
        rid = germ_to_region[germ]
        if rid in seen and witness is None:
            witness = (seen[rid], germ)
        seen.setdefault(rid, germ)
    return SpecialReport(special=witness is None, germ_to_region=germ_to_region,
                         failure_witness=witness)
