"""Exact decimal values.

Field values travel through the whole pipeline as the decimal literals they
were given as.  All comparisons go through `fractions.Fraction`, so two
values are equal exactly when their literals denote the same rational; no
float ever enters a comparison.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_DECIMAL_RE = re.compile(r"^[+-]?(?:\d+)(?:\.\d+)?$")


def parse_decimal(text: str, line: int = 0) -> Fraction:
    """Parse a plain decimal literal (no exponents) to an exact Fraction."""
    if not _DECIMAL_RE.match(text):
        raise ParseError(line, f"not a decimal literal: {text!r}")
    return Fraction(text)


def decimal_str(value: Fraction) -> str:
    """Render a fraction with 10-smooth denominator as a decimal literal.

    Used only for values the package synthesises itself (midpoints of input
    decimals, fixture jitter); input literals are always kept verbatim.
    """
    num, den = value.numerator, value.denominator
    k = 0
    while den % 2 == 0:
        den //= 2
        k += 1
    j = 0
    while den % 5 == 0:
        den //= 5
        j += 1
    if den != 1:
        raise ValueError(f"{value} has no finite decimal expansion")
    digits = max(k, j)
    scaled = num * 10**digits // (value.denominator)
    if digits == 0:
        return str(scaled)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{str(frac).zfill(digits)}"
