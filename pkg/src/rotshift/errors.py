"""Shared exception types.

Validation failures carry enough structure that a caller (and the CLI)
can report a concrete witness instead of a bare message.
"""

from __future__ import annotations


class RotshiftError(Exception):
    """Base class for every error raised by this package."""


class CapExceeded(RotshiftError):
    """A requested computation exceeds a documented size cap."""

    def __init__(self, what: str, requested, cap):
        self.what = what
        self.requested = requested
        self.cap = cap
        super().__init__(f"{what}: requested {requested}, cap is {cap}")


class StepCapExceeded(CapExceeded):
    """Orbit expansion asked for more steps than the hard ceiling."""


class ContextMismatch(RotshiftError):
    """Exact angles from unrelated generator contexts were combined."""


class MissingGeneratorValue(RotshiftError):
    """A float evaluation needs a numeric value for an undeclared generator."""

    def __init__(self, generator: str):
        self.generator = generator
        super().__init__(f"no numeric value supplied for generator {generator!r}")


class AngleSyntaxError(RotshiftError):
    """An angle expression does not match the accepted grammar."""


class GraphValidationError(RotshiftError):
    """Base class for structural defects of a labeled graph."""

    kind = "invalid"

    def witness(self) -> dict:
        """JSON-ready description of the defect."""
        return {"error": self.kind, "detail": str(self)}


class EmptyGraph(GraphValidationError):
    kind = "empty-graph"

    def __init__(self, message: str = "graph has no vertices"):
        super().__init__(message)


class NotLeftResolving(GraphValidationError):
    """Two edges with the same label enter the same vertex."""

    kind = "not-left-resolving"

    def __init__(self, vertex: str, symbol: str, edges):
        self.vertex = vertex
        self.symbol = symbol
        self.edges = tuple(edges)
        srcs = ", ".join(e[0] for e in self.edges)
        super().__init__(
            f"vertex {vertex!r} has {len(self.edges)} incoming edges labeled "
            f"{symbol!r} (from {srcs})"
        )

    def witness(self) -> dict:
        return {
            "error": self.kind,
            "vertex": self.vertex,
            "symbol": self.symbol,
            "edges": [list(e) for e in self.edges],
        }


class NotEssential(GraphValidationError):
    """Some vertex is missing an incoming or outgoing edge."""

    kind = "not-essential"

    def __init__(self, vertex: str, direction: str):
        assert direction in ("incoming", "outgoing")
        self.vertex = vertex
        self.direction = direction
        super().__init__(f"vertex {vertex!r} has no {direction} edge")

    def witness(self) -> dict:
        return {"error": self.kind, "vertex": self.vertex, "direction": self.direction}


class UnusedSymbol(GraphValidationError):
    kind = "unused-symbol"

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"alphabet symbol {symbol!r} labels no edge")

    def witness(self) -> dict:
        return {"error": self.kind, "symbol": self.symbol}


class DuplicateEdge(GraphValidationError):
    kind = "duplicate-edge"

    def __init__(self, edge):
        self.edge = tuple(edge)
        super().__init__(f"edge {self.edge} is declared twice")

    def witness(self) -> dict:
        return {"error": self.kind, "edge": list(self.edge)}


class UnknownVertex(GraphValidationError):
    kind = "unknown-vertex"

    def __init__(self, vertex: str, edge):
        self.vertex = vertex
        self.edge = tuple(edge)
        super().__init__(f"edge {self.edge} refers to undeclared vertex {vertex!r}")

    def witness(self) -> dict:
        return {"error": self.kind, "vertex": self.vertex, "edge": list(self.edge)}


class UnknownSymbol(GraphValidationError):
    kind = "unknown-symbol"

    def __init__(self, symbol: str, edge):
        self.symbol = symbol
        self.edge = tuple(edge)
        super().__init__(f"edge {self.edge} uses undeclared symbol {symbol!r}")

    def witness(self) -> dict:
        return {"error": self.kind, "symbol": self.symbol, "edge": list(self.edge)}


class FewerThanTwoAngles(RotshiftError):
    """Full-shift analyses need at least two angles."""

    def __init__(self, count: int):
        self.count = count
        super().__init__(f"full-shift analysis needs at least 2 angles, got {count}")


class NotInvariantSaturated(RotshiftError):
    """Quotients are only formed along invariant saturated vertex subsets."""


class ParseError(RotshiftError):
    """A system description file is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
