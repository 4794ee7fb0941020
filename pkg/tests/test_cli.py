import json

import pytest
from click.testing import CliRunner

from reebsym.cli import main, perm_cycles


@pytest.fixture()
def runner():
    return CliRunner()


def _fixture_file(runner, tmp_path, spec, name):
    path = tmp_path / name
    result = runner.invoke(main, ["fixture", spec, "-o", str(path)])
    assert result.exit_code == 0, result.output
    return str(path)


def test_perm_cycles():
    assert perm_cycles((0, 1, 2)) == "()"
    assert perm_cycles((1, 0, 2)) == "(0 1)"
    assert perm_cycles((1, 2, 0, 4, 3)) == "(0 1 2)(3 4)"


def test_fixture_stdout_matches_file(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "sphere_height", "s.srf")
    piped = runner.invoke(main, ["fixture", "sphere_height"])
    assert piped.exit_code == 0
    assert piped.output == open(path).read()
    assert piped.output.startswith("SRF 1\n6\n")


def test_fixture_rejects_bad_parameter(runner):
    result = runner.invoke(main, ["fixture", "beachball(1)"])
    assert result.exit_code == 1
    result = runner.invoke(main, ["fixture", "dodecahedron"])
    assert result.exit_code == 1


def test_analyze_octahedron(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "sphere_height", "s.srf")
    result = runner.invoke(main, ["analyze", path])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["format"] == "reeb-sym/1"
    assert report["census"] == {"maximum": 1, "minimum": 1, "regular": 4,
                                "saddles": {}}
    assert report["genus"] == 0 and report["generic"]["ok"]


def test_analyze_beachball_and_flower(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "beachball(2)", "b.srf")
    report = json.loads(runner.invoke(main, ["analyze", path]).output)
    assert report["census"]["saddles"] == {"2": 2}
    path = _fixture_file(runner, tmp_path, "flower(3)", "f.srf")
    report = json.loads(runner.invoke(main, ["analyze", path]).output)
    assert report["census"]["saddles"] == {"3": 1}


def test_analyze_rejects_non_generic(runner, tmp_path):
    bad = tmp_path / "bad.srf"
    bad.write_text("SRF 1\n4\n0\n0\n1\n2\n0 1 2\n0 2 3\n0 3 1\n1 3 2\n")
    result = runner.invoke(main, ["analyze", str(bad)])
    assert result.exit_code == 1
    report = json.loads(result.output)
    assert not report["generic"]["ok"]
    assert report["census"] is None


def test_reeb_dot_sphere(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "sphere_height", "s.srf")
    result = runner.invoke(main, ["reeb", path])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "graph reeb {",
        '  v0 [label="-1"];',
        '  v1 [label="1"];',
        "  v0 -- v1;",
        "}",
    ]


def test_reeb_json_torus(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "torus_height", "t.srf")
    result = runner.invoke(main, ["reeb", path, "--format", "json"])
    report = json.loads(result.output)
    assert report["b1"] == 1
    kinds = sorted(v["kind"] for v in report["vertices"])
    assert kinds == ["maximum", "minimum", "saddle", "saddle"]


def test_lift_positive_beachball(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "beachball(2)", "b.srf")
    result = runner.invoke(main, ["lift", path, "--vertex", "0"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["special"]["special"] is True
    assert report["conditionC"]["holds"] is True
    assert report["section"]["produced"] is True
    assert report["verification"]["passed"] is True
    assert report["oracle_agreement"] is True
    assert report["xi_action"]["free_on_regions"] is True


def test_lift_deterministic_bytes(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "beachball(3)", "b3.srf")
    one = runner.invoke(main, ["lift", path, "--vertex", "0"])
    two = runner.invoke(main, ["lift", path, "--vertex", "0"])
    assert one.exit_code == two.exit_code == 0
    assert one.output == two.output


def test_lift_flower_exits_2_with_witness(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "flower(3)", "f.srf")
    result = runner.invoke(main, ["lift", path, "--vertex", "0"])
    assert result.exit_code == 2
    report = json.loads(result.output)
    assert report["special"]["special"] is True
    assert report["conditionC"]["holds"] is False
    witness = report["conditionC"]["witness"]
    assert witness["violation"]["cell"] == "region"
    assert witness["violation"]["how"] == "moved"
    assert report["section"]["produced"] is False


def test_lift_torus_saddle_exits_2_not_special(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "torus_height", "t.srf")
    result = runner.invoke(main, ["lift", path, "--vertex", "54"])
    assert result.exit_code == 2
    report = json.loads(result.output)
    assert report["special"]["special"] is False
    assert report["special"]["witness"]["germs"] == [[1, "up"], [2, "up"]]
    assert report["conditionC"] is None


def test_lift_extremum_trivially_positive(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "beachball(2)", "b.srf")
    result = runner.invoke(main, ["lift", path, "--vertex", "4"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["vertex"]["kind"] == "extremum"
    assert report["section"]["unrefined"] is True


def test_lift_regular_vertex_is_input_error(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "beachball(2)", "b.srf")
    result = runner.invoke(main, ["lift", path, "--vertex", "6"])
    assert result.exit_code == 1
    result = runner.invoke(main, ["lift", path, "--vertex", "999"])
    assert result.exit_code == 1


def test_lift_subgroup_rejects_unrealized_permutation(runner, tmp_path):
    path = _fixture_file(runner, tmp_path, "beachball(2)", "b.srf")
    gens = tmp_path / "gens.json"
    gens.write_text(json.dumps({"generators": [[1, 0, 2, 3]]}))
    result = runner.invoke(main, ["lift", path, "--vertex", "0",
                                  "--subgroup", str(gens)])
    assert result.exit_code == 1


def test_lift_subgroup_roundtrip_via_report(runner, tmp_path):
    # discover the local group from a full run, then request a subgroup
    path = _fixture_file(runner, tmp_path, "beachball(4)", "b4.srf")
    full = json.loads(runner.invoke(main, ["lift", path, "--vertex", "0"]).output)
    assert full["H"]["order"] == 4
    perms = [tuple(r["germ_perm"]) for r in full["section"]["assignment"]]
    ident = tuple(sorted(perms[0]))
    invol = [p for p in perms
             if p != ident and tuple(p[x] for x in p) == ident]
    assert len(invol) == 1
    gens = tmp_path / "gens.json"
    gens.write_text(json.dumps({"generators": [list(invol[0])]}))
    result = runner.invoke(main, ["lift", path, "--vertex", "0",
                                  "--subgroup", str(gens)])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["H"]["order"] == 2
    assert report["verification"]["passed"] is True
