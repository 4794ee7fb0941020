"""Command line front end.

Commands: fixture (emit SRF meshes), analyze (vertex census), reeb (the
contour graph as DOT or JSON), lift (the full section pipeline at one
vertex).  All output is deterministic for fixed input bytes and flags.

Exit codes: 0 success, 1 invalid input, 2 mathematically negative result
(vertex not special, condition (C) fails, or no section found).  Failed
lifting preconditions are reported as structured JSON, not errors.
"""

from __future__ import annotations

import json
import sys

import click

from .errors import NoSuchVertex, NotCritical, ReebSymError
from .fixtures import make_fixture
from .group import PermutationGroup, SurfAutomorphism, germ_subgroup, phi_and_preimage
from .io_srf import emit_srf, load_srf
from .lift import (LiftSetup, check_condition_C, construct_section,
                   find_section_oracle, prepare_lift, refine_group, verify_section,
                   xi_action)
from .reeb import compute_reeb, star_of
from .surface import census, require_generic, surface_stats, validate_level_generic

FORMAT = "reeb-sym/1"


def _echo_json(obj) -> None:
    click.echo(json.dumps(obj, indent=2, sort_keys=True))


def _fail(exc: ReebSymError) -> None:
    click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
    sys.exit(1)


def perm_cycles(perm: tuple[int, ...]) -> str:
    """One-line cycle notation; fixed points dropped, identity is ()."""
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        parts.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


def _element_json(h: SurfAutomorphism) -> dict:
    return {
        "vertices": perm_cycles(h.vertex_perm),
        "orientation_preserving": h.orientation_preserving,
    }


def _germ_json(germ: tuple[int, str]) -> list:
    return [germ[0], germ[1]]


@click.group()
def main() -> None:
    """Level-set topology and field-preserving symmetry on closed surfaces."""


@main.command("fixture")
@click.argument("spec")
@click.option("--seed", type=int, default=0, show_default=True,
              help="perturbation seed for the distinct-value jitter")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
              help="write the SRF here instead of stdout")
def cmd_fixture(spec: str, seed: int, output: str | None) -> None:
    """Emit a named fixture mesh as SRF.

    SPEC is one of sphere_height, torus_height, beachball(k), flower(k).
    """
    try:
        c, f = make_fixture(spec, seed=seed)
    except ReebSymError as exc:
        _fail(exc)
    text = emit_srf(c, f)
    if output is None:
        click.echo(text, nl=False)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


@main.command("analyze")
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
def cmd_analyze(input: str) -> None:
    """Classify every vertex and report surface invariants."""
    try:
        c, f = load_srf(input)
    except ReebSymError as exc:
        _fail(exc)
    stats = surface_stats(c)
    generic = validate_level_generic(c, f)
    report = {
        "format": FORMAT,
        "command": "analyze",
        "counts": {"vertices": stats.vertex_count, "edges": stats.edge_count,
                   "faces": stats.face_count},
        "euler": stats.euler,
        "genus": stats.genus,
        "generic": {"ok": generic.ok,
                    "offending_edges": [list(e) for e in generic.offending_edges]},
        "census": None,
    }
    if not generic.ok:
        _echo_json(report)
        sys.exit(1)
    cen = census(c, f)
    report["census"] = {
        "minimum": cen["minimum"],
        "maximum": cen["maximum"],
        "regular": cen["regular"],
        "saddles": {str(n): k for n, k in cen["saddles"].items()},
    }
    _echo_json(report)


@main.command("reeb")
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]), default="dot",
              show_default=True)
def cmd_reeb(input: str, fmt: str) -> None:
    """Emit the contour graph with critical values as labels."""
    try:
        c, f = load_srf(input)
        require_generic(c, f)
        g, _proj = compute_reeb(c, f)
    except ReebSymError as exc:
        _fail(exc)

    def vertex_kind(rid: int) -> str:
        dirs = {d for _, d in star_of(g, rid).germs}
        if dirs == {"up"}:
            return "minimum"
        if dirs == {"down"}:
            return "maximum"
        return "saddle"

    labels = [f.values[min(rv.critical_vertices)] for rv in g.vertices]
    if fmt == "dot":
        lines = ["graph reeb {"]
        for rv in g.vertices:
            lines.append(f'  v{rv.id} [label="{labels[rv.id]}"];')
        for e in g.edges:
            lines.append(f"  v{e.lower} -- v{e.upper};")
        lines.append("}")
        click.echo("\n".join(lines))
        return
    report = {
        "format": FORMAT,
        "command": "reeb",
        "vertices": [{"id": rv.id, "value": labels[rv.id], "kind": vertex_kind(rv.id),
                      "critical_vertices": list(rv.critical_vertices),
                      "level_size": len(rv.level_vertices)}
                     for rv in g.vertices],
        "edges": [{"id": e.id, "lower": e.lower, "upper": e.upper}
                  for e in g.edges],
        "b1": g.b1,
    }
    _echo_json(report)


def _lift_extremum(setup: LiftSetup, H: PermutationGroup,
                   preimage: PermutationGroup, report: dict) -> int:
    # a leaf carries one germ and one pattern element, so specialness is
    # immediate and (C) reduces to orientation preservation on the preimage
    report["atom"] = None
    report["xi"] = None
    report["special"] = {
        "special": True,
        "germ_to_region": [{"germ": _germ_json(setup.ctx.star.germs[0]), "region": 0}],
        "witness": None,
    }
    reversing = [h for h in preimage.elements if not h.orientation_preserving]
    report["conditionC"] = {
        "holds": not reversing,
        "witness": _element_json(reversing[0]) if reversing else None,
    }
    section = construct_section(H, preimage, None, None, setup)
    ver = verify_section(section, H, setup)
    report["section"] = _section_json(section)
    report["verification"] = _verification_json(ver)
    oracle = find_section_oracle(H, preimage, setup, None)
    report["oracle_agreement"] = oracle is not None
    report["oracle_identical"] = (oracle is not None
                                  and oracle.assignment == section.assignment)
    _echo_json(report)
    return 0 if ver.passed else 2


def _section_json(section) -> dict:
    stats = surface_stats(section.refined)
    rows = []
    for perm in sorted(section.assignment):
        aut = section.assignment[perm]
        rows.append({"germ_perm": list(perm), **_element_json(aut)})
    return {
        "produced": True,
        "reason": None,
        "refined": {"vertices": stats.vertex_count, "edges": stats.edge_count,
                    "faces": stats.face_count},
        "unrefined": section.maps is None,
        "assignment": rows,
    }


def _verification_json(ver) -> dict:
    return {
        "passed": ver.passed,
        "checks": {name: {"ok": ok, "witness": None if ok else repr(witness)}
                   for name, (ok, witness) in ver.checks.items()},
    }


def _no_section(reason: str) -> dict:
    return {"produced": False, "reason": reason, "refined": None,
            "unrefined": None, "assignment": None}


@main.command("lift")
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@click.option("--vertex", type=int, required=True,
              help="mesh vertex id; must lie on a critical level component")
@click.option("--subgroup", type=click.Path(exists=True, dir_okay=False),
              default=None,
              help="JSON file {\"generators\": [[...]]} of germ permutations; "
                   "defaults to the full local action group")
@click.option("--size-limit", type=int, default=10_000, show_default=True,
              help="search budget for group enumeration and the oracle")
def cmd_lift(input: str, vertex: int, subgroup: str | None,
             size_limit: int) -> None:
    """Run the full section pipeline at one vertex."""
    try:
        c, f = load_srf(input)
        require_generic(c, f)
        g, proj = compute_reeb(c, f)
        if not 0 <= vertex < c.vertex_count:
            raise NoSuchVertex(vertex)
        tag = proj.vertex_map[vertex]
        if tag[0] != "vertex":
            raise NotCritical(
                f"vertex {vertex} lies inside a regular family, not on a "
                f"critical component")
        setup = prepare_lift(c, f, tag[1], precomputed=(g, proj))
        ctx = setup.ctx
        if subgroup is None:
            H = ctx.G_v_loc
        else:
            with open(subgroup, encoding="utf-8") as fh:
                data = json.load(fh)
            gens = [tuple(int(x) for x in row) for row in data["generators"]]
            H = germ_subgroup(ctx, gens)
        _phi, preimage = phi_and_preimage(ctx, H)
    except ReebSymError as exc:
        _fail(exc)

    report = {
        "format": FORMAT,
        "command": "lift",
        "vertex": {"mesh": vertex, "graph": setup.v, "kind": setup.kind,
                   "value": f.values[vertex]},
        "germs": [_germ_json(germ) for germ in ctx.star.germs],
        "group": {"stabilizer_order": ctx.G.order,
                  "vertex_stabilizer_order": ctx.G_v.order,
                  "local_order": ctx.G_v_loc.order},
        "H": {"order": H.order,
              "generators": [list(la.germ_perm) for la in H.generators]},
    }

    if setup.kind == "extremum":
        sys.exit(_lift_extremum(setup, H, preimage, report))

    atom = setup.atom
    report["atom"] = {
        "saddles": list(setup.cc.saddles),
        "arcs": len(setup.cc.arcs),
        "euler": atom.euler,
        "genus": atom.genus,
        "walks": [{"id": w.id, "side": w.side, "length": len(w.steps),
                   "region": w.adjacent_region} for w in setup.walks],
    }
    report["xi"] = {"zero_elements": len(setup.xi.zero_elements),
                    "one_elements": len(setup.xi.one_elements),
                    "two_elements": len(setup.xi.two_elements)}

    sp = setup.special
    report["special"] = {
        "special": sp.special,
        "germ_to_region": None if not sp.special else [
            {"germ": _germ_json(germ), "region": sp.germ_to_region[germ]}
            for germ in ctx.star.germs],
        "witness": None if sp.special else {
            "germs": [_germ_json(sp.failure_witness[0]),
                      _germ_json(sp.failure_witness[1])]},
    }
    if not sp.special:
        report["conditionC"] = None
        report["section"] = _no_section("vertex is not special")
        report["verification"] = None
        report["oracle_agreement"] = None
        _echo_json(report)
        sys.exit(2)

    creport = check_condition_C(preimage, setup.xi, setup)
    if not creport.holds:
        h, fixed_region, (cell, cid, how) = creport.witness
        report["conditionC"] = {
            "holds": False,
            "witness": {"element": _element_json(h), "fixed_region": fixed_region,
                        "violation": {"cell": cell, "id": cid, "how": how}},
        }
        report["section"] = _no_section("condition (C) fails")
        report["verification"] = None
        report["oracle_agreement"] = None
        _echo_json(report)
        sys.exit(2)
    report["conditionC"] = {"holds": True, "witness": None}

    act = xi_action(H, preimage, setup)
    ident = tuple(range(len(ctx.star.germs)))
    report["xi_action"] = {
        "well_defined": True,
        "free_on_regions": all(
            act.table[p][("region", r.id)] != ("region", r.id)
            for p in act.table if p != ident for r in setup.xi.two_elements),
    }

    section = construct_section(H, preimage, setup.xi, setup.cc, setup)
    ver = verify_section(section, H, setup)
    report["section"] = _section_json(section)
    report["verification"] = _verification_json(ver)
    lifted = preimage if section.maps is None else refine_group(section.maps, preimage)
    try:
        oracle = find_section_oracle(H, lifted, setup, section.maps,
                                     size_limit=size_limit)
    except ReebSymError as exc:
        _fail(exc)
    report["oracle_agreement"] = oracle is not None
    report["oracle_identical"] = (oracle is not None
                                  and oracle.assignment == section.assignment)
    _echo_json(report)
    sys.exit(0 if ver.passed else 2)


if __name__ == "__main__":
    main()
