import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from reebsym import build_complex, compute_reeb, make_field, star_of

from oracles import level_component_count


def reeb_degree(g, rid: int) -> int:
    return len(star_of(g, rid).germs)


def test_sphere_is_a_path(fx_reeb):
    g, _ = fx_reeb("sphere_height")
    assert len(g.vertices) == 2
    assert len(g.edges) == 1
    assert g.b1 == 0


def test_torus_has_one_cycle(fx_reeb):
    g, _ = fx_reeb("torus_height")
    assert len(g.vertices) == 4
    assert len(g.edges) == 4
    assert g.b1 == 1
    # the two saddles are joined by two parallel edges
    pairs = sorted((e.lower, e.upper) for e in g.edges)
    assert pairs.count((1, 2)) == 2


def test_beachball_3_is_a_star_tree(fx_reeb):
    g, _ = fx_reeb("beachball(3)")
    assert len(g.vertices) == 7
    assert len(g.edges) == 6
    assert g.b1 == 0
    degrees = sorted(reeb_degree(g, rv.id) for rv in g.vertices)
    assert degrees == [1, 1, 1, 1, 1, 1, 6]


def test_flower_star_shape(fx_reeb):
    for k in (2, 3, 4):
        g, _ = fx_reeb(f"flower({k})")
        assert len(g.vertices) == k + 2
        assert len(g.edges) == k + 1
        assert g.b1 == 0


def test_projection_covers_every_vertex(fx, fx_reeb):
    for name in ("sphere_height", "beachball(2)", "torus_height"):
        c, f = fx(name)
        g, proj = fx_reeb(name)
        assert set(proj.vertex_map) == set(range(c.vertex_count))
        for rv in g.vertices:
            for v in rv.critical_vertices:
                assert proj.vertex_map[v] == ("vertex", rv.id)
            assert {f[v] for v in rv.level_vertices} == {rv.value}


def test_edge_intervals_match_endpoints(fx_reeb):
    for name in ("beachball(4)", "torus_height", "flower(3)"):
        g, _ = fx_reeb(name)
        for e in g.edges:
            lo, hi = e.interval
            assert lo == g.vertices[e.lower].value
            assert hi == g.vertices[e.upper].value
            assert lo < hi


def test_level_counts_match_oracle_spot(fx, fx_reeb):
    rng = random.Random("reeb-spot")
    for name in ("sphere_height", "torus_height", "beachball(3)", "flower(4)"):
        c, f = fx(name)
        g, _ = fx_reeb(name)
        values = sorted({f[v] for v in range(c.vertex_count)})
        for _ in range(25):
            t = Fraction(rng.randint(int(values[0] * 1000) + 1,
                                     int(values[-1] * 1000) - 1), 1000)
            if any(f[v] == t for v in range(c.vertex_count)):
                continue
            want = level_component_count(c, f, t)
            got = sum(1 for e in g.edges if e.interval[0] < t < e.interval[1])
            assert got == want


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_relabeling_invariance(rnd):
    from reebsym import make_fixture
    c, f = make_fixture("beachball(2)")
    perm = list(range(c.vertex_count))
    rnd.shuffle(perm)
    tris = tuple((perm[a], perm[b], perm[d]) for a, b, d in c.faces)
    vals = [None] * c.vertex_count
    for v in range(c.vertex_count):
        vals[perm[v]] = f.values[v]
    c2 = build_complex(tris, c.vertex_count)
    f2 = make_field(vals)
    g1, _ = compute_reeb(c, f)
    g2, _ = compute_reeb(c2, f2)
    assert g1.b1 == g2.b1
    inv1 = sorted((rv.value, reeb_degree(g1, rv.id)) for rv in g1.vertices)
    inv2 = sorted((rv.value, reeb_degree(g2, rv.id)) for rv in g2.vertices)
    assert inv1 == inv2
    ints1 = sorted(e.interval for e in g1.edges)
    ints2 = sorted(e.interval for e in g2.edges)
    assert ints1 == ints2
