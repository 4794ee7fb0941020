import pytest

from reebsym import (ConditionCViolated, NotSpecial, check_condition_C,
                     construct_section, find_section_oracle, germ_subgroup,
                     lift_automorphism, phi_and_preimage, refine_group,
                     section_phi, split_along, surface_stats, verify_section,
                     xi_action, xi_permutation)

from oracles import region_count_via_refinement


def _full(setup):
    H = setup.ctx.G_v_loc
    _, pre = phi_and_preimage(setup.ctx, H)
    return H, pre


def test_beachball2_section_end_to_end(fx_setup):
    s = fx_setup("beachball(2)", 2)
    H, pre = _full(s)
    assert check_condition_C(pre, s.xi, s).holds
    sec = construct_section(H, pre, s.xi, s.cc, s)
    assert len(sec.assignment) == 2
    stats = surface_stats(sec.refined)
    assert stats.genus == 0
    assert (stats.vertex_count, stats.face_count) == (16, 28)
    ver = verify_section(sec, H, s)
    assert ver.passed
    assert set(ver.checks) == {"homomorphism", "section_property",
                               "field_preserved", "automorphism"}
    lifted = refine_group(sec.maps, pre)
    oracle = find_section_oracle(H, lifted, s, sec.maps)
    assert oracle is not None
    assert oracle.assignment == sec.assignment


def test_split_preserves_surface_and_values(fx, fx_setup):
    for name, rid in (("beachball(2)", 2), ("flower(3)", 1),
                      ("torus_height", 1), ("torus_height", 2)):
        c, f = fx(name)
        s = fx_setup(name, rid)
        split = split_along(s)
        K, fK = split.complex, split.field
        assert surface_stats(K).genus == surface_stats(c).genus
        for v in range(c.vertex_count):
            assert fK.values[v] == f.values[v]
        for e, x in split.maps.cross_vertex.items():
            assert fK[x] == s.cc.value
        # one new vertex per crossed edge, one per chord-cut face
        assert K.vertex_count == (c.vertex_count + len(split.maps.cross_vertex)
                                  + len(split.maps.center_vertex))
        # every region's refined faces are connected away from the component
        assert region_count_via_refinement(s, split) == len(s.xi.two_elements)


def test_lifted_identity_is_identity(fx_setup):
    s = fx_setup("beachball(2)", 2)
    split = split_along(s)
    _, pre = _full(s)
    ident = next(h for h in pre.elements if h.is_identity)
    assert lift_automorphism(split, ident).is_identity


def test_xi_permutation_orientation_bookkeeping(fx_setup):
    s = fx_setup("beachball(2)", 2)
    _, pre = _full(s)
    for h in pre.elements:
        perm = xi_permutation(s, h)
        flips = {flipped for _, flipped in perm.arc_map.values()}
        # orientation-preserving symmetries never reverse an arc
        assert flips <= {not h.orientation_preserving}


def test_xi_action_well_defined_and_free(fx_setup):
    for name, rid in (("beachball(2)", 2), ("beachball(3)", 3),
                      ("beachball(4)", 4)):
        s = fx_setup(name, rid)
        H, pre = _full(s)
        act = xi_action(H, pre, s)
        ident = tuple(range(len(s.ctx.star.germs)))
        for perm, cells in act.table.items():
            if perm == ident:
                continue
            for reg in s.xi.two_elements:
                assert cells[("region", reg.id)] != ("region", reg.id)


def test_flower_condition_c_fails_with_outer_region_witness(fx_setup):
    for k in (2, 3, 4):
        s = fx_setup(f"flower({k})", 1)
        H, pre = _full(s)
        assert s.special.special
        report = check_condition_C(pre, s.xi, s)
        assert not report.holds
        h, fixed_region, violation = report.witness
        # the fixed 2-element is the outer region along all petals
        down = [w for w in s.walks if w.side == "down"]
        assert fixed_region == down[0].adjacent_region
        assert violation[0] == "region" and violation[2] == "moved"
        with pytest.raises(ConditionCViolated):
            xi_action(H, pre, s)
        with pytest.raises(ConditionCViolated):
            construct_section(H, pre, s.xi, s.cc, s)


def test_torus_saddles_not_special(fx_setup):
    for rid in (1, 2):
        s = fx_setup("torus_height", rid)
        H, pre = _full(s)
        assert not s.special.special
        with pytest.raises(NotSpecial):
            construct_section(H, pre, s.xi, s.cc, s)


def test_torus_condition_c_also_fails(fx_setup):
    # the central symmetry fixes both disk regions while swapping the loops
    s = fx_setup("torus_height", 1)
    H, pre = _full(s)
    report = check_condition_C(pre, s.xi, s)
    assert not report.holds


def test_subgroup_section(fx_setup):
    s = fx_setup("beachball(4)", 4)
    n = len(s.ctx.star.germs)
    ident = tuple(range(n))
    involutions = [la.germ_perm for la in s.ctx.G_v_loc.elements
                   if la.germ_perm != ident
                   and tuple(la.germ_perm[x] for x in la.germ_perm) == ident]
    assert len(involutions) == 1      # the cyclic group of order 4 has one
    sub = germ_subgroup(s.ctx, [involutions[0]])
    _, pre = phi_and_preimage(s.ctx, sub)
    sec = construct_section(sub, pre, s.xi, s.cc, s)
    assert len(sec.assignment) == sub.order
    assert verify_section(sec, sub, s).passed


def test_trivial_subgroup_short_circuits(fx_setup):
    s = fx_setup("flower(3)", 1)      # condition (C) fails here, irrelevant
    triv = germ_subgroup(s.ctx, [])
    _, pre = phi_and_preimage(s.ctx, triv)
    sec = construct_section(triv, pre, s.xi, s.cc, s)
    assert sec.maps is None
    assert sec.refined is s.c
    assert len(sec.assignment) == 1
    assert verify_section(sec, triv, s).passed


def test_extremum_setup_short_circuits(fx_setup):
    s = fx_setup("beachball(2)", 0)
    assert s.kind == "extremum"
    H = s.ctx.G_v_loc
    assert H.order == 1
    _, pre = phi_and_preimage(s.ctx, H)
    sec = construct_section(H, pre, None, None, s)
    assert sec.maps is None
    assert verify_section(sec, H, s).passed


def test_section_homomorphism_table_beachball4(fx_setup):
    s = fx_setup("beachball(4)", 4)
    H, pre = _full(s)
    sec = construct_section(H, pre, s.xi, s.cc, s)
    for la1 in H.elements:
        for la2 in H.elements:
            prod = tuple(la1.germ_perm[x] for x in la2.germ_perm)
            assert sec.assignment[prod] == sec.assignment[
                la1.germ_perm].compose(sec.assignment[la2.germ_perm])
    for la in H.elements:
        assert section_phi(s, sec.maps, sec.assignment[la.germ_perm]) == la.germ_perm
