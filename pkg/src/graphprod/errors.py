"""Exception hierarchy for the graph product toolkit.

Everything raised on bad input or exhausted resources derives from
GraphProductError so callers (and the CLI) can distinguish "your data is
wrong" from genuine bugs, which surface as ordinary Python exceptions.
"""


class GraphProductError(Exception):
    """Base class for all toolkit errors."""


# ---------------------------------------------------------------------------
# graph construction

class DuplicateVertex(GraphProductError):
    pass


class SelfLoop(GraphProductError):
    pass


class UnknownEndpoint(GraphProductError):
    pass


# ---------------------------------------------------------------------------
# vertex groups

class NotAGroup(GraphProductError):
    """Multiplication table violates a group axiom."""


class TrivialGroup(GraphProductError):
    """Vertex groups must have at least two elements."""


class GeneratorsDoNotGenerate(GraphProductError):
    pass


class ForeignElement(GraphProductError):
    """Element payload does not belong to the group it was used with."""


class UnsupportedKind(GraphProductError):
    pass


# ---------------------------------------------------------------------------
# words

class WordSyntaxError(GraphProductError):
    """Word text does not match the grammar (named to avoid the builtin)."""


class UnknownVertex(GraphProductError):
    pass


class UnknownElement(GraphProductError):
    pass


# ---------------------------------------------------------------------------
# conjugacy machinery

class NotCyclicallyReduced(GraphProductError):
    pass


class BfsLimitExceeded(GraphProductError):
    """The cyclic shuffle search hit its state limit."""


# ---------------------------------------------------------------------------
# diagrams

class BadFaceSize(GraphProductError):
    pass


class BadTriangleRelator(GraphProductError):
    pass


class BadSquareRelator(GraphProductError):
    pass


class IdentityEdgeLabel(GraphProductError):
    pass


class NotPlanar(GraphProductError):
    """Dart structure is not a connected map of Euler characteristic 2."""


class WrongBoundaryCount(GraphProductError):
    pass


class PatternMismatch(GraphProductError):
    """An elementary move was requested at a location that does not match."""


class IllegalSwap(GraphProductError):
    pass


# ---------------------------------------------------------------------------
# oracle

class CapExceeded(GraphProductError):
    """Brute-force oracle asked to exceed its configured size cap."""
