"""Level-set quotient graph of a scalar field on a closed surface.

The sweep samples every distinct vertex value and the open slab between
consecutive values.  At a sample, level-set components are union-find
classes of nodes: an edge strictly straddling the level, or a vertex lying
exactly on it; two nodes meet when one triangle carries both (a chord
between two crossed edges, or a spoke from an on-level corner to the
crossed opposite edge).  Components containing a non-regular vertex become
graph vertices; maximal chains of regular components become graph edges.
Inside an open slab nothing changes, so one midpoint sample per slab is
exact, and every regular component touches exactly one component at the
neighbouring sample on each side (asserted).  Ids are assigned by sorted
(value, smallest mesh cell) keys so output is reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoSuchVertex
from .surface import ScalarField, SurfaceComplex, classify_all, require_generic, surface_stats


@dataclass(frozen=True)
class ReebVertex:
    id: int
    value: Fraction
    critical_vertices: tuple[int, ...]  # the non-regular mesh vertices inside
    level_vertices: tuple[int, ...]     # every mesh vertex on the component
    crossing_edges: tuple[int, ...]     # mesh edges the component crosses


@dataclass(frozen=True)
class ReebEdge:
    id: int
    lower: int
    upper: int
    interval: tuple[Fraction, Fraction]
    crossing_edges: tuple[int, ...]     # union over the whole regular family
    lower_attach: tuple[int, ...]       # crossing edges of the slab beside each end
    upper_attach: tuple[int, ...]


@dataclass(frozen=True)
class ReebGraph:
    vertices: tuple[ReebVertex, ...]
    edges: tuple[ReebEdge, ...]

    def vertex_by_mesh(self, v: int) -> ReebVertex:
        for rv in self.vertices:
            if v in rv.level_vertices:
                return rv
        raise NoSuchVertex(f"mesh vertex {v} lies on no critical component")

    def incident(self, rid: int) -> list[ReebEdge]:
        return [e for e in self.edges if rid in (e.lower, e.upper)]

    @property
    def b1(self) -> int:
        return len(self.edges) - len(self.vertices) + 1


@dataclass(frozen=True)
class ReebProjection:
    vertex_map: dict[int, tuple]   # mesh vertex -> ("vertex", id) | ("edge", id, value)
    face_map: dict[int, tuple]     # mesh face -> sorted ("vertex"|"edge", id) pairs


@dataclass(frozen=True)
class Star:
    center: int
    germs: tuple[tuple[int, str], ...]  # (edge id, "down"|"up"), sorted


class _UF:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self) -> dict:
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return {root: sorted(members) for root, members in sorted(out.items())}


def level_nodes_of_face(c: SurfaceComplex, f: ScalarField, fi: int, t: Fraction) -> list:
    """Nodes of the level-t set carried by face fi (its chord or spoke)."""
    nodes = []
    for corner in c.faces[fi]:
        if f[corner] == t:
            nodes.append(("v", corner))
    for k in range(3):
        e = c.edge_of[3 * fi + k]
        u, w = c.edges[e]
        lo, hi = sorted((f[u], f[w]))
        if lo < t < hi:
            nodes.append(("e", e))
    return sorted(set(nodes))


def _level_components(c: SurfaceComplex, f: ScalarField, t: Fraction) -> dict:
    """Union-find classes of level-t nodes, keyed by smallest member node."""
    uf = _UF()
    for v in range(c.vertex_count):
        if f[v] == t:
            uf.add(("v", v))
    for ei, (u, w) in enumerate(c.edges):
        lo, hi = sorted((f[u], f[w]))
        if lo < t < hi:
            uf.add(("e", ei))
    for fi in range(c.n_faces):
        nodes = level_nodes_of_face(c, f, fi, t)
        for a, b in zip(nodes, nodes[1:]):
            uf.union(a, b)
    return uf.classes()


def compute_reeb(c: SurfaceComplex, f: ScalarField) -> tuple[ReebGraph, ReebProjection]:
    require_generic(c, f)
    classes = classify_all(c, f)
    critical = {v for v, vc in enumerate(classes) if vc.kind != "regular"}

    values = sorted({f[v] for v in range(c.vertex_count)})
    samples: list[tuple[str, Fraction]] = []
    for i, w in enumerate(values):
        samples.append(("level", w))
        if i + 1 < len(values):
            samples.append(("slab", (w + values[i + 1]) / 2))

    comps: list[dict] = []        # per sample: component key -> sorted node list
    comp_at: list[dict] = []      # per sample: node -> component key
    for _, t in samples:
        cls = _level_components(c, f, t)
        comps.append(cls)
        comp_at.append({m: key for key, members in cls.items() for m in members})

    def is_critical(i: int, key) -> bool:
        return samples[i][0] == "level" and any(
            n[0] == "v" and n[1] in critical for n in comps[i][key])

    # adjacency with the next sample up
    links_up: list[dict] = []
    for i in range(len(samples) - 1):
        kind, t = samples[i]
        up = {key: set() for key in comps[i]}
        if kind == "level":
            for key, members in comps[i].items():
                for node in members:
                    if node[0] == "e":
                        up[key].add(comp_at[i + 1][node])
                    else:
                        v = node[1]
                        for u in c.link_cycle(v):
                            if f[u] > t:
                                e = c.edge_index[(min(v, u), max(v, u))]
                                up[key].add(comp_at[i + 1][("e", e)])
        else:
            w_above = samples[i + 1][1]
            for key, members in comps[i].items():
                for _, e in members:
                    a, b = c.edges[e]
                    hi_v = a if f[a] > f[b] else b
                    node = ("v", hi_v) if f[hi_v] == w_above else ("e", e)
                    up[key].add(comp_at[i + 1][node])
        links_up.append(up)
    links_down: list[dict] = [{} for _ in samples]
    for i, up in enumerate(links_up):
        for key, tops in up.items():
            for top in tops:
                links_down[i + 1].setdefault(top, set()).add(key)
    for i in range(len(samples)):
        for key in comps[i]:
            if is_critical(i, key):
                continue
            if i + 1 < len(samples):
                assert len(links_up[i][key]) == 1, "regular component meets one component above"
            if i > 0:
                assert len(links_down[i].get(key, ())) == 1, \
                    "regular component meets one component below"

    # graph vertices: critical components, ordered by (value, smallest
    # critical mesh vertex)
    vertex_keys = []
    for i, (kind, t) in enumerate(samples):
        if kind != "level":
            continue
        for key, members in comps[i].items():
            if is_critical(i, key):
                crit = min(n[1] for n in members if n[0] == "v" and n[1] in critical)
                vertex_keys.append((t, crit, i, key))
    vertex_keys.sort(key=lambda rec: (rec[0], rec[1]))
    rv_id = {(i, key): rid for rid, (_, _, i, key) in enumerate(vertex_keys)}

    verts = []
    for rid, (t, _, i, key) in enumerate(vertex_keys):
        members = comps[i][key]
        verts.append(ReebVertex(
            id=rid,
            value=t,
            critical_vertices=tuple(sorted(n[1] for n in members
                                           if n[0] == "v" and n[1] in critical)),
            level_vertices=tuple(sorted(n[1] for n in members if n[0] == "v")),
            crossing_edges=tuple(sorted(n[1] for n in members if n[0] == "e")),
        ))

    # graph edges: chase each chain of regular components upward from its
    # lower critical component to the next critical one
    chains = []                    # (lower rid, upper rid, member sample/key list)
    chain_of: dict[tuple, int] = {}  # (sample, key) of regular comp -> chain index
    for (t, _, i, key) in vertex_keys:
        if i + 1 >= len(samples):
            continue
        for first in sorted(links_up[i][key]):
            members = [(i + 1, first)]
            j, cur = i + 1, first
            while True:
                (nxt,) = links_up[j][cur]
                j, cur = j + 1, nxt
                if is_critical(j, cur):
                    break
                members.append((j, cur))
            idx = len(chains)
            chains.append((rv_id[(i, key)], rv_id[(j, cur)], members))
            for mk in members:
                assert mk not in chain_of
                chain_of[mk] = idx
    n_regular = sum(1 for i in range(len(samples)) for key in comps[i]
                    if not is_critical(i, key))
    assert len(chain_of) == n_regular, "every regular component lies on one chain"

    def chain_edge_set(members) -> tuple[int, ...]:
        out = set()
        for j, key in members:
            out.update(e for kind, e in comps[j][key] if kind == "e")
        return tuple(sorted(out))

    order = sorted(range(len(chains)), key=lambda idx: (
        chains[idx][0], chains[idx][1], chain_edge_set(chains[idx][2])[0]))
    edge_id_of_chain = {idx: pos for pos, idx in enumerate(order)}
    edges = []
    for pos, idx in enumerate(order):
        lo_rid, hi_rid, members = chains[idx]
        assert verts[lo_rid].value < verts[hi_rid].value, "graph edges never loop"
        edges.append(ReebEdge(
            id=pos,
            lower=lo_rid,
            upper=hi_rid,
            interval=(verts[lo_rid].value, verts[hi_rid].value),
            crossing_edges=chain_edge_set(members),
            lower_attach=tuple(sorted(e for k, e in comps[members[0][0]][members[0][1]])),
            upper_attach=tuple(sorted(e for k, e in comps[members[-1][0]][members[-1][1]])),
        ))

    graph = ReebGraph(vertices=tuple(verts), edges=tuple(edges))

    # connectivity and the genus bound
    reach = {0}
    frontier = [0]
    while frontier:
        rid = frontier.pop()
        for e in graph.edges:
            for other in ((e.upper,) if e.lower == rid else
                          (e.lower,) if e.upper == rid else ()):
                if other not in reach:
                    reach.add(other)
                    frontier.append(other)
    assert len(reach) == len(verts), "KR graph of a connected surface is connected"
    assert graph.b1 <= surface_stats(c).genus, "first Betti number bounded by genus"

    # projection maps
    sample_of_value = {t: i for i, (kind, t) in enumerate(samples) if kind == "level"}
    vertex_map = {}
    for v in range(c.vertex_count):
        i = sample_of_value[f[v]]
        key = comp_at[i][("v", v)]
        if is_critical(i, key):
            vertex_map[v] = ("vertex", rv_id[(i, key)])
        else:
            vertex_map[v] = ("edge", edge_id_of_chain[chain_of[(i, key)]], f[v])

    face_map = {}
    for fi in range(c.n_faces):
        vals = [f[v] for v in c.faces[fi]]
        fmin, fmax = min(vals), max(vals)
        met = set()
        for i, (kind, t) in enumerate(samples):
            if not (fmin < t < fmax):
                continue
            nodes = level_nodes_of_face(c, f, fi, t)
            crossing = [n for n in nodes if n[0] == "e"]
            if not crossing:
                continue
            key = comp_at[i][crossing[0]]
            if is_critical(i, key):
                met.add(("vertex", rv_id[(i, key)]))
            else:
                met.add(("edge", edge_id_of_chain[chain_of[(i, key)]]))
        face_map[fi] = tuple(sorted(met))

    return graph, ReebProjection(vertex_map=vertex_map, face_map=face_map)


def star_of(g: ReebGraph, rid: int) -> Star:
    if not (0 <= rid < len(g.vertices)):
        raise NoSuchVertex(f"no graph vertex {rid}")
    germs = []
    for e in g.edges:
        if e.upper == rid:
            germs.append((e.id, "down"))
        if e.lower == rid:
            germs.append((e.id, "up"))
    return Star(center=rid, germs=tuple(sorted(germs)))
