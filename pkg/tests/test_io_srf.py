import pytest
from hypothesis import given, strategies as st

from reebsym import ParseError, emit_srf, make_fixture, parse_srf

ALL_FIXTURES = ("sphere_height", "torus_height", "beachball(2)", "beachball(3)",
                "beachball(4)", "beachball(5)", "beachball(6)", "flower(2)",
                "flower(3)", "flower(4)")


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_round_trip_byte_exact(name, fx):
    c, f = fx(name)
    text = emit_srf(c, f)
    c2, f2 = parse_srf(text)
    assert emit_srf(c2, f2) == text
    assert c2.faces == c.faces
    assert f2.values == f.values


def test_comments_and_blanks_ignored():
    text = ("# a comment\nSRF 1\n\n4  # count\n0\n1\n2\n3.5\n"
            "0 1 2\n0 2 3\n0 3 1\n1 3 2\n")
    c, f = parse_srf(text)
    assert c.vertex_count == 4
    assert f.values == ("0", "1", "2", "3.5")


@pytest.mark.parametrize("text,line", [
    ("SRF 2\n4\n0\n1\n2\n3\n0 1 2\n0 2 3\n0 3 1\n1 3 2\n", 1),
    ("SRF 1\nx\n", 2),
    ("SRF 1\n4\n0\n1\noops\n3\n0 1 2\n0 2 3\n0 3 1\n1 3 2\n", 5),
    ("SRF 1\n4\n0\n1\n2\n3\n0 1 2\n0 2 9\n0 3 1\n1 3 2\n", 8),
    ("SRF 1\n4\n0\n1\n2\n3\n0 1 2\n0 2 3 4\n0 3 1\n1 3 2\n", 8),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        parse_srf(text)
    assert err.value.line == line


@given(st.lists(st.integers(min_value=-10**4, max_value=10**4), min_size=6,
                max_size=6, unique=True))
def test_round_trip_random_fields(vals):
    base, _ = make_fixture("sphere_height")
    text = ("SRF 1\n6\n" + "\n".join(str(v) for v in vals) + "\n"
            + "\n".join(f"{a} {b} {c}" for a, b, c in base.faces) + "\n")
    c, f = parse_srf(text)
    assert emit_srf(c, f) == text
