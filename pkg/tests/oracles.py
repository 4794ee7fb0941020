"""Independent oracles the main library must agree with.

Each oracle recomputes a quantity from first principles, sharing as
little machinery with the library as possible: plain union-find over
crossing edges for contour counts, naive backtracking over vertex
bijections for symmetry groups, face flood fill on the refined mesh for
complement regions.
"""

from __future__ import annotations

from fractions import Fraction


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def component_count(self) -> int:
        return len({self.find(x) for x in self.parent})


def level_component_count(c, f, t: Fraction) -> int:
    """Contours at a level hit by no vertex: union-find over crossed edges.

    Two crossed edges are joined when some face contains both.
    """
    assert all(f[v] != t for v in range(c.vertex_count))
    crossing = [e for e, (a, b) in enumerate(c.edges)
                if min(f[a], f[b]) < t < max(f[a], f[b])]
    uf = UnionFind(crossing)
    for tri in c.faces:
        u, v, w = tri
        es = [c.edge_index[tuple(sorted(p))] for p in ((u, v), (v, w), (w, u))]
        live = [e for e in es if e in uf.parent]
        for e in live[1:]:
            uf.union(live[0], e)
    return uf.component_count()


def automorphism_count(c, f) -> int:
    """Count field-preserving simplicial automorphisms by plain backtracking.

    A simplicial map is pinned by its vertex images, so searching vertex
    bijections that preserve values, adjacency, and the face list counts
    the whole symmetry group.
    """
    n = c.vertex_count
    adj = [set() for _ in range(n)]
    for a, b in c.edges:
        adj[a].add(b)
        adj[b].add(a)
    candidates = [[w for w in range(n) if f[w] == f[v] and len(adj[w]) == len(adj[v])]
                  for v in range(n)]
    faces = {frozenset(tri) for tri in c.faces}
    count = 0
    image = [-1] * n
    used = [False] * n

    def place(v: int) -> int:
        nonlocal count
        if v == n:
            ok = all(frozenset(image[x] for x in tri) in faces for tri in c.faces)
            return 1 if ok else 0
        total = 0
        for w in candidates[v]:
            if used[w]:
                continue
            good = True
            for u in adj[v]:
                if image[u] != -1 and image[u] not in adj[w]:
                    good = False
                    break
            if good:
                image[v] = w
                used[w] = True
                total += place(v + 1)
                used[w] = False
                image[v] = -1
        return total

    return place(0)


def region_count_via_refinement(setup, split) -> int:
    """Components of the refined mesh minus the component subcomplex.

    Flood fill over refined faces, never stepping across an edge of the
    critical component itself.
    """
    K = split.complex
    level = set(setup.graph.vertices[setup.v].level_vertices)
    cross = set(split.maps.cross_vertex.values())
    component_edges = set()
    for e, (a, b) in enumerate(K.edges):
        both_on = ((a in level or a in cross) and (b in level or b in cross))
        if both_on:
            component_edges.add(e)
    face_adj = [[] for _ in range(K.n_faces)]
    for e in range(K.n_edges):
        if e in component_edges:
            continue
        fs = K.edge_faces(e)
        face_adj[fs[0]].append(fs[1])
        face_adj[fs[1]].append(fs[0])
    seen = [False] * K.n_faces
    regions = 0
    for start in range(K.n_faces):
        if seen[start]:
            continue
        regions += 1
        stack = [start]
        seen[start] = True
        while stack:
            fi = stack.pop()
            for other in face_adj[fi]:
                if not seen[other]:
                    seen[other] = True
                    stack.append(other)
    return regions
