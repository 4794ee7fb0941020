"""SRF text format: a triangulated surface plus one scalar value per vertex.

    SRF 1
    <vertex count n>
    <n lines: one decimal literal each>
    <remaining lines: three 0-based vertex ids each>

Blank lines and `#` comments are skipped.  Value literals are preserved
verbatim so that emit/parse round-trips are byte-exact.
"""

from __future__ import annotations

from .errors import ParseError
from .exact import parse_decimal
from .surface import ScalarField, SurfaceComplex, build_complex, make_field

HEADER = "SRF 1"


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def parse_srf(text: str) -> tuple[SurfaceComplex, ScalarField]:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "empty file")
    ln, head = lines[0]
    if head != HEADER:
        raise ParseError(ln, f"expected {HEADER!r}, got {head!r}")
    if len(lines) < 2:
        raise ParseError(ln, "missing vertex count")
    ln, count_text = lines[1]
    try:
        n = int(count_text)
    except ValueError:
        raise ParseError(ln, f"bad vertex count {count_text!r}") from None
    if n <= 0:
        raise ParseError(ln, f"vertex count must be positive, got {n}")
    if len(lines) < 2 + n:
        raise ParseError(lines[-1][0], f"expected {n} value lines")

    values = []
    for ln, tok in lines[2:2 + n]:
        parse_decimal(tok, line=ln)
        values.append(tok)

    triangles = []
    for ln, line in lines[2 + n:]:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(ln, f"expected three vertex ids, got {line!r}")
        try:
            tri = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(ln, f"bad vertex id in {line!r}") from None
        for v in tri:
            if not (0 <= v < n):
                raise ParseError(ln, f"vertex id {v} out of range 0..{n - 1}")
        triangles.append(tri)
    if not triangles:
        raise ParseError(lines[-1][0], "no triangles")

    return build_complex(triangles, n), make_field(values)


def emit_srf(c: SurfaceComplex, f: ScalarField) -> str:
    lines = [HEADER, str(c.vertex_count)]
    lines.extend(f.values)
    lines.extend(f"{a} {b} {d}" for a, b, d in c.faces)
    return "\n".join(lines) + "\n"


def load_srf(path: str) -> tuple[SurfaceComplex, ScalarField]:
    with open(path, encoding="utf-8") as fh:
        return parse_srf(fh.read())


def save_srf(path: str, c: SurfaceComplex, f: ScalarField) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_srf(c, f))
