"""Built-in test surfaces with documented symmetry.

Every generator returns a (complex, field) pair that is level-generic for
every seed.  Seed 0 gives the exact base values quoted in the docs; other
seeds jitter values per vertex class, which keeps the documented symmetry
group intact because symmetric vertices always share a class.

  sphere_height   octahedron, 1 max + 1 min + 4 regular, trivial symmetry
  beachball(k)    sphere, two k-saddles joined at one level, symmetry Z_k;
                  the shared critical component is special and satisfies
                  the lifting condition with H = Z_k
  flower(k)       sphere, one k-saddle whose level component is a rose of
                  k petals, symmetry Z_k; special but the rotation fixes
                  the outer region while moving petals, so the lifting
                  condition fails
  torus_height    8x12 torus grid, 4 critical vertices (max, min, two
                  2-saddles); the lower saddle component is a figure
                  eight whose star is not special
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import BadParameter
from .exact import decimal_str
from .surface import ScalarField, SurfaceComplex, build_complex, make_field, require_generic


def _field(c: SurfaceComplex, values: list[str]) -> ScalarField:
    f = make_field(values)
    require_generic(c, f)
    return f


def _jitter(rng: random.Random, span_thousandths: int) -> Fraction:
    return Fraction(rng.randint(-span_thousandths, span_thousandths), 1000)


def sphere_height(seed: int = 0) -> tuple[SurfaceComplex, ScalarField]:
    """Octahedron: vertex 0 on top, vertex 1 on the bottom, 4 on the equator."""
    faces = [
        (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 2),
        (1, 3, 2), (1, 4, 3), (1, 5, 4), (1, 2, 5),
    ]
    c = build_complex(faces, 6)
    base = [Fraction(1), Fraction(-1), Fraction(1, 10), Fraction(2, 10),
            Fraction(3, 10), Fraction(4, 10)]
    if seed:
        rng = random.Random(f"sphere_height:{seed}")
        # equator stays strictly inside (bottom, top) and strictly ordered
        base = [b + _jitter(rng, 40) for b in base]
        base[2:6] = sorted(base[2:6])
    return c, _field(c, [decimal_str(b) for b in base])


def beachball(k: int, seed: int = 0) -> tuple[SurfaceComplex, ScalarField]:
    """Sphere with two k-saddles A, B on one level joined by 2k arcs.

    Vertices: A=0, B=1, maxima U_i=2+i, minima D_i=2+k+i, regular
    x_i=2+2k+i.  The x_i sit inside the A-side sectors and break every
    mirror symmetry, so the field-preserving group is exactly the Z_k
    rotation U_i->U_{i+1}, D_i->D_{i+1}, x_i->x_{i+1}.
    """
    if k < 2:
        raise BadParameter(f"beachball needs k >= 2, got {k}")
    A, B = 0, 1
    U = [2 + i for i in range(k)]
    D = [2 + k + i for i in range(k)]
    x = [2 + 2 * k + i for i in range(k)]
    faces = []
    for i in range(k):
        j = (i + 1) % k
        faces += [
            (A, U[i], x[i]),
            (A, x[i], D[i]),
            (x[i], U[i], D[i]),
            (A, D[i], U[j]),
            (B, D[i], U[i]),
            (B, U[j], D[i]),
        ]
    c = build_complex(faces, 2 + 3 * k)

    u_val, d_val, x_val = Fraction(2), Fraction(-3), Fraction(1, 4)
    if seed:
        rng = random.Random(f"beachball:{k}:{seed}")
        u_val += _jitter(rng, 400)
        d_val += _jitter(rng, 400)
        x_val += _jitter(rng, 100)  # stays in (0, u_val): regular, above A
    values = [Fraction(0)] * (2 + 3 * k)
    for i in range(k):
        values[U[i]] = u_val
        values[D[i]] = d_val
        values[x[i]] = x_val
    return c, _field(c, [decimal_str(v) for v in values])


def flower(k: int, seed: int = 0) -> tuple[SurfaceComplex, ScalarField]:
    """Sphere with one k-saddle Z whose level component is a k-petal rose.

    Vertices: Z=0, minimum m=1, petal maxima P_i=2+i, regular G_i=2+k+i
    (between petal and minimum) and w_i=2+2k+i (between petals near Z).
    The unequal values of G and w break mirrors, so the symmetry group is
    exactly Z_k.  Each petal loop encloses P_i; the rotation fixes the
    outer region while permuting petals.
    """
    if k < 2:
        raise BadParameter(f"flower needs k >= 2, got {k}")
    Z, m = 0, 1
    P = [2 + i for i in range(k)]
    G = [2 + k + i for i in range(k)]
    w = [2 + 2 * k + i for i in range(k)]
    faces = []
    for i in range(k):
        j = (i + 1) % k
        faces += [
            (Z, P[i], G[i]),
            (Z, G[i], w[i]),
            (Z, w[i], P[j]),
            (w[i], G[i], P[j]),
            (P[i], G[i], m),
            (P[j], m, G[i]),
        ]
    c = build_complex(faces, 2 + 3 * k)

    p_val, g_val, w_val, m_val = Fraction(2), Fraction(-1, 2), Fraction(-1, 5), Fraction(-1)
    if seed:
        rng = random.Random(f"flower:{k}:{seed}")
        p_val += _jitter(rng, 400)
        g_val += _jitter(rng, 100)   # must stay in (m_val, w_val)
        w_val += _jitter(rng, 100)   # must stay in (g_val, 0)
        m_val += _jitter(rng, 100)
        assert m_val < g_val < w_val < 0 < p_val
    values = [Fraction(0)] * (2 + 3 * k)
    values[m] = m_val
    for i in range(k):
        values[P[i]] = p_val
        values[G[i]] = g_val
        values[w[i]] = w_val
    return c, _field(c, [decimal_str(v) for v in values])


# Row profile p (period 8) and column profile q (period 12) for the torus.
# f(i,j) = (2 + p_i) * q_j.  Both profiles are strictly unimodal and
# mirror-symmetric, so (i,j) -> (-i,-j) preserves f (and respects the
# grid diagonals); axis mirrors do not respect the diagonals.
_TORUS_P = [Fraction(t, 10) for t in (10, 6, 0, -6, -10, -6, 0, 6)]
_TORUS_Q = [Fraction(t, 10) for t in (10, 9, 5, 1, -4, -8, -10, -8, -4, 1, 5, 9)]


def torus_height(seed: int = 0) -> tuple[SurfaceComplex, ScalarField]:
    """8x12 torus grid with 4 critical vertices.

    Max at (0,0), min at (0,6), saddles at (4,0) (value 1, shared with 4
    regular vertices to exercise at-level absorption) and (4,6).
    """
    rows, cols = 8, 12

    def vid(i: int, j: int) -> int:
        return (i % rows) * cols + (j % cols)

    faces = []
    for i in range(rows):
        for j in range(cols):
            faces.append((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)))
            faces.append((vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)))
    c = build_complex(faces, rows * cols)

    p, q = list(_TORUS_P), list(_TORUS_Q)
    if seed:
        rng = random.Random(f"torus_height:{seed}")
        # jitter the free profile slots, then mirror: p_i = p_{-i}, q_j = q_{-j};
        # bands are small enough to keep both profiles strictly unimodal
        for i in (0, 1, 2, 3, 4):
            p[i] += _jitter(rng, 150)
        for j in (0, 1, 2, 3, 4, 5, 6):
            q[j] += _jitter(rng, 40)
        for i in range(1, 4):
            p[-i] = p[i]
        for j in range(1, 6):
            q[-j] = q[j]
        assert all(p[i] > p[i + 1] for i in range(4))
        assert all(q[j] > q[j + 1] for j in range(6))
    values = [(2 + p[i]) * q[j] for i in range(rows) for j in range(cols)]
    return c, _field(c, [decimal_str(v) for v in values])


def make_fixture(name: str, k: int | None = None, seed: int = 0):
    """Build a fixture from its name, accepting 'beachball(3)' style."""
    if name.endswith(")") and "(" in name:
        base, _, arg = name[:-1].partition("(")
        if k is not None:
            raise BadParameter(f"both {name!r} and k={k} given")
        try:
            k = int(arg)
        except ValueError:
            raise BadParameter(f"bad fixture parameter in {name!r}") from None
        name = base
    if name == "sphere_height":
        if k is not None:
            raise BadParameter("sphere_height takes no k")
        return sphere_height(seed)
    if name == "torus_height":
        if k is not None:
            raise BadParameter("torus_height takes no k")
        return torus_height(seed)
    if name == "beachball":
        return beachball(2 if k is None else k, seed)
    if name == "flower":
        return flower(2 if k is None else k, seed)
    raise BadParameter(f"unknown fixture {name!r}")
