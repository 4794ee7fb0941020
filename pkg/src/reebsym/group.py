"""Field-preserving mesh symmetries and their shadow on the graph.

The symmetry group is enumerated by dart propagation: an automorphism is
pinned by the image of a single dart plus an orientation flag, so every
candidate (image, flag) pair is propagated across the whole dart graph
and kept only if it closes up into a consistent, field-preserving
bijection.  An orientation-preserving map commutes with next and twin;
an orientation-reversing one sends the face cycle through a dart to the
reversed cycle of the image face, which on darts reads

    h(next(x)) = twin(next(next(twin(h(x))))).

Both rules reach every dart because the surface is connected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotASubgroup, SizeLimit
from .reeb import ReebGraph, ReebProjection, Star, star_of
from .surface import ScalarField, SurfaceComplex


@dataclass(frozen=True)
class SurfAutomorphism:
    vertex_perm: tuple[int, ...]
    dart_perm: tuple[int, ...]
    edge_perm: tuple[int, ...]
    face_perm: tuple[int, ...]
    orientation_preserving: bool

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.dart_perm))

    def compose(self, other: "SurfAutomorphism") -> "SurfAutomorphism":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        return SurfAutomorphism(
            vertex_perm=tuple(self.vertex_perm[v] for v in other.vertex_perm),
            dart_perm=tuple(self.dart_perm[d] for d in other.dart_perm),
            edge_perm=tuple(self.edge_perm[e] for e in other.edge_perm),
            face_perm=tuple(self.face_perm[fi] for fi in other.face_perm),
            orientation_preserving=(self.orientation_preserving
                                    == other.orientation_preserving))

    def inverse(self) -> "SurfAutomorphism":
        def inv(p):
            out = [0] * len(p)
            for i, v in enumerate(p):
                out[v] = i
            return tuple(out)
        return SurfAutomorphism(
            vertex_perm=inv(self.vertex_perm), dart_perm=inv(self.dart_perm),
            edge_perm=inv(self.edge_perm), face_perm=inv(self.face_perm),
            orientation_preserving=self.orientation_preserving)


@dataclass(frozen=True)
class PermutationGroup:
    ground: str
    generators: tuple
    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements


@dataclass(frozen=True)
class ReebAutomorphism:
    vertex_perm: tuple[int, ...]
    edge_perm: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return (all(i == v for i, v in enumerate(self.vertex_perm))
                and all(i == v for i, v in enumerate(self.edge_perm)))


@dataclass(frozen=True)
class LocalAction:
    germ_perm: tuple[int, ...]
    source: SurfAutomorphism

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.germ_perm))


def _propagate(c: SurfaceComplex, image0: int, reversing: bool) -> tuple[int, ...] | None:
    n = c.n_darts
    img = [-1] * n
    img[0] = image0
    stack = [0]
    while stack:
        x = stack.pop()
        y = img[x]
        tx, ty = c.twin[x], c.twin[y]
        if reversing:
            nx = c.next_dart[x]
            ny = c.twin[c.next_dart[c.next_dart[c.twin[y]]]]
        else:
            nx, ny = c.next_dart[x], c.next_dart[y]
        for a, b in ((tx, ty), (nx, ny)):
            if img[a] == -1:
                img[a] = b
                stack.append(a)
            elif img[a] != b:
                return None
    if sorted(img) != list(range(n)):
        return None
    return tuple(img)


def _shadows(c: SurfaceComplex, f: ScalarField, dart_perm: tuple[int, ...],
             reversing: bool) -> SurfAutomorphism | None:
    vp = [-1] * c.vertex_count
    for x, y in enumerate(dart_perm):
        u, v = c.origin[x], c.origin[y]
        if vp[u] == -1:
            vp[u] = v
        elif vp[u] != v:
            return None
    if sorted(vp) != list(range(c.vertex_count)):
        return None
    if any(f[v] != f[vp[v]] for v in range(c.vertex_count)):
        return None
    ep = [-1] * c.n_edges
    for x, y in enumerate(dart_perm):
        e, e2 = c.edge_of[x], c.edge_of[y]
        if ep[e] == -1:
            ep[e] = e2
        elif ep[e] != e2:
            return None
    fp = [-1] * c.n_faces
    for x, y in enumerate(dart_perm):
        fi = c.face_of(x)
        fj = c.face_of(c.twin[y]) if reversing else c.face_of(y)
        if fp[fi] == -1:
            fp[fi] = fj
        elif fp[fi] != fj:
            return None
    return SurfAutomorphism(
        vertex_perm=tuple(vp), dart_perm=dart_perm, edge_perm=tuple(ep),
        face_perm=tuple(fp), orientation_preserving=not reversing)


def compute_stabilizer_group(c: SurfaceComplex, f: ScalarField,
                             size_limit: int = 10_000) -> PermutationGroup:
    """Every mesh automorphism preserving the field values exactly."""
    o0, t0 = c.origin[0], c.target(0)
    found: dict[tuple[int, ...], SurfAutomorphism] = {}
    for y in range(c.n_darts):
        if f[c.origin[y]] != f[o0] or f[c.target(y)] != f[t0]:
            continue
        for reversing in (False, True):
            dp = _propagate(c, y, reversing)
            if dp is None:
                continue
            h = _shadows(c, f, dp, reversing)
            if h is None:
                continue
            prior = found.get(dp)
            assert prior is None or prior == h, "dart image pins one automorphism"
            found[dp] = h
            if len(found) > size_limit:
                raise SizeLimit(size_limit)
    elements = tuple(found[k] for k in sorted(found))
    assert elements[0].is_identity
    eset = set(elements)
    for p in elements:
        assert p.inverse() in eset, "group closed under inverse"
        for q in elements:
            assert p.compose(q) in eset, "group closed under composition"
    return PermutationGroup(ground="mesh darts", generators=elements, elements=elements)


def induce_reeb_automorphism(h: SurfAutomorphism, g: ReebGraph,
                             proj: ReebProjection) -> ReebAutomorphism:
    """The graph shadow of a field-preserving mesh symmetry."""
    by_crit = {rv.critical_vertices: rv.id for rv in g.vertices}
    vp = []
    for rv in g.vertices:
        image = tuple(sorted(h.vertex_perm[v] for v in rv.critical_vertices))
        j = by_crit[image]
        other = g.vertices[j]
        assert other.value == rv.value
        assert other.level_vertices == tuple(sorted(
            h.vertex_perm[v] for v in rv.level_vertices))
        assert other.crossing_edges == tuple(sorted(
            h.edge_perm[e] for e in rv.crossing_edges))
        vp.append(j)
    by_key = {(e.lower, e.upper, e.crossing_edges): e.id for e in g.edges}
    ep = []
    for e in g.edges:
        key = (vp[e.lower], vp[e.upper],
               tuple(sorted(h.edge_perm[x] for x in e.crossing_edges)))
        ep.append(by_key[key])
    assert sorted(vp) == list(range(len(g.vertices)))
    assert sorted(ep) == list(range(len(g.edges)))
    return ReebAutomorphism(vertex_perm=tuple(vp), edge_perm=tuple(ep))


def _germ_perm(star: Star, rho: ReebAutomorphism) -> tuple[int, ...]:
    index = {germ: i for i, germ in enumerate(star.germs)}
    out = []
    for j, direction in star.germs:
        image = (rho.edge_perm[j], direction)
        assert image in index, "graph symmetry keeps germ directions"
        out.append(index[image])
    assert sorted(out) == list(range(len(out)))
    return tuple(out)


def local_stabilizer(G: PermutationGroup, g: ReebGraph, v: int,
                     proj: ReebProjection | None = None
                     ) -> tuple[PermutationGroup, dict, PermutationGroup]:
    """Stabilizer of a graph vertex, the germ restriction map, and its image."""
    star = star_of(g, v)
    fixing = []
    restriction: dict[SurfAutomorphism, tuple[int, ...]] = {}
    for h in G.elements:
        rho = induce_reeb_automorphism(h, g, proj)
        if rho.vertex_perm[v] != v:
            continue
        fixing.append(h)
        restriction[h] = _germ_perm(star, rho)
    G_v = PermutationGroup(ground="mesh darts", generators=tuple(fixing),
                           elements=tuple(fixing))
    by_perm: dict[tuple[int, ...], SurfAutomorphism] = {}
    for h in fixing:
        p = restriction[h]
        if p not in by_perm or h.dart_perm < by_perm[p].dart_perm:
            by_perm[p] = h
    locals_ = tuple(LocalAction(germ_perm=p, source=by_perm[p])
                    for p in sorted(by_perm))
    assert locals_[0].germ_perm == tuple(range(len(star.germs)))
    G_v_loc = PermutationGroup(ground=f"germs of graph vertex {v}",
                               generators=locals_, elements=locals_)
    return G_v, restriction, G_v_loc


@dataclass(frozen=True)
class GroupContext:
    """Everything phi needs: the vertex, its star, and the three groups."""
    v: int
    star: Star
    G: PermutationGroup
    G_v: PermutationGroup
    restriction: dict
    G_v_loc: PermutationGroup


def group_context(c: SurfaceComplex, f: ScalarField, g: ReebGraph,
                  proj: ReebProjection, v: int,
                  G: PermutationGroup | None = None) -> GroupContext:
    if G is None:
        G = compute_stabilizer_group(c, f)
    G_v, restriction, G_v_loc = local_stabilizer(G, g, v, proj)
    return GroupContext(v=v, star=star_of(g, v), G=G, G_v=G_v,
                        restriction=restriction, G_v_loc=G_v_loc)


def _compose_perm(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[x] for x in q)


def close_germ_perms(gens: list[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    ident = tuple(range(n))
    closed = {ident}
    frontier = [ident]
    while frontier:
        p = frontier.pop()
        for q in gens:
            r = _compose_perm(q, p)
            if r not in closed:
                closed.add(r)
                frontier.append(r)
    return closed


def germ_subgroup(ctx: GroupContext, generators) -> PermutationGroup:
    """The subgroup of the local action group generated by germ permutations."""
    n = len(ctx.star.germs)
    available = {la.germ_perm: la for la in ctx.G_v_loc.elements}
    gens = []
    for p in generators:
        p = tuple(p)
        if sorted(p) != list(range(n)):
            raise NotASubgroup(f"{p!r} is not a permutation of {n} germs")
        if p not in available:
            raise NotASubgroup(f"{p!r} is not realized by any symmetry fixing "
                               f"graph vertex {ctx.v}")
        gens.append(p)
    h_set = close_germ_perms(gens, n)
    assert h_set <= set(available), "closure stays inside the local action group"
    return PermutationGroup(
        ground=ctx.G_v_loc.ground,
        generators=tuple(available[p] for p in sorted(set(gens))),
        elements=tuple(available[p] for p in sorted(h_set)))


def phi_and_preimage(ctx: GroupContext, H) -> tuple[dict, PermutationGroup]:
    """phi = germ restriction on the vertex stabilizer, and its preimage of H.

    H may be a PermutationGroup of local actions or a raw generator list.
    Returns (phi, preimage): phi maps each vertex-fixing mesh symmetry to
    its germ permutation; preimage is every mesh symmetry phi sends into H.
    """
    if not isinstance(H, PermutationGroup):
        H = germ_subgroup(ctx, H)
    h_set = {la.germ_perm for la in H.elements}
    pre = tuple(h for h in ctx.G_v.elements if ctx.restriction[h] in h_set)
    preimage = PermutationGroup(ground="mesh darts", generators=pre, elements=pre)
    return dict(ctx.restriction), preimage
