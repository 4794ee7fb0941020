"""Exception types shared across the package.

Every structural error carries the first offending cell (vertex, edge or
face) so callers can report a concrete witness instead of a bare flag.
"""

from __future__ import annotations


class ReebSymError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ReebSymError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BadParameter(ReebSymError):
    pass


class NonManifold(ReebSymError):
    def __init__(self, witness, message: str = "non-manifold cell"):
        super().__init__(f"{message}: {witness!r}")
        self.witness = witness


class NotClosed(ReebSymError):
    def __init__(self, edge):
        super().__init__(f"boundary edge {edge!r}: surface is not closed")
        self.witness = edge


class Disconnected(ReebSymError):
    def __init__(self, witness):
        super().__init__(f"complex is disconnected, witness cell {witness!r}")
        self.witness = witness


class NonOrientable(ReebSymError):
    def __init__(self, witness):
        super().__init__(f"no coherent orientation, witness face {witness!r}")
        self.witness = witness


class NotGeneric(ReebSymError):
    def __init__(self, edges):
        first = edges[0] if edges else None
        super().__init__(f"field not level-generic, equal values across edge {first!r}")
        self.offending_edges = tuple(edges)


class InvalidVertex(ReebSymError):
    pass


class NoSuchVertex(ReebSymError):
    pass


class NotCritical(ReebSymError):
    """The requested graph vertex has no saddle in its level component."""


class SizeLimit(ReebSymError):
    def __init__(self, limit: int, message: str = "enumeration exceeded size limit"):
        super().__init__(f"{message} ({limit})")
        self.limit = limit


class NotASubgroup(ReebSymError):
    pass


class NotSpecial(ReebSymError):
    def __init__(self, witness):
        super().__init__(f"vertex is not special: {witness}")
        self.witness = witness


class ConditionCViolated(ReebSymError):
    def __init__(self, witness):
        super().__init__(f"compatibility condition fails: {witness}")
        self.witness = witness


class NotWellDefined(ReebSymError):
    """Internal consistency failure: representatives of one local element
    disagree on the induced partition action.  This contradicts the theory
    and therefore always indicates a bug, never bad input."""


class OrbitMismatch(ReebSymError):
    """Transported cells inside one orbit disagree combinatorially."""


class TwistUnrealizable(ReebSymError):
    """A boundary correction could not be realised on the refinement."""
