"""
Errors Module
Exception types raised by the graph, recognition, coloring and I/O modules.
"""

from typing import List, Optional


class StrongColorError(Exception):
    """Base class for every error raised by this package."""


class GraphArgumentError(StrongColorError, ValueError):
    """Invalid argument: unknown edge id, size limit, disconnected input, ..."""


class ClassificationError(StrongColorError):
    """A structural precondition failed on re-check."""

    def __init__(self, prop: str, message: str = ""):
        self.prop = prop
        super().__init__(message or f"classification precondition failed: {prop}")


class GraphParseError(StrongColorError, ValueError):
    """Malformed edge-list or graph6 input."""

    def __init__(self, message: str, line: Optional[int] = None, offset: Optional[int] = None):
        self.line = line
        self.offset = offset
        location = ""
        if line is not None:
            location = f"line {line}: "
        elif offset is not None:
            location = f"byte {offset}: "
        super().__init__(f"{location}{message}")


class NotClawFreeError(StrongColorError):
    """Input contains an induced K_{1,3}."""

    def __init__(self, center: int, leaves: tuple):
        self.center = center
        self.leaves = tuple(leaves)
        super().__init__(f"graph is not claw-free: center {center}, leaves {self.leaves}")


class NotSubcubicError(StrongColorError):
    """Input has a vertex of degree above 3."""

    def __init__(self, vertex: int, degree: int):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"graph is not subcubic: vertex {vertex} has degree {degree}")


class GreedyStuck(StrongColorError):
    """The greedy colorer met an edge with no available color."""

    def __init__(self, edge: int, endpoints: tuple = ()):
        self.edge = edge
        self.endpoints = endpoints
        super().__init__(f"greedy coloring stuck at edge {edge} {endpoints}")


class InternalInvariantViolation(StrongColorError):
    """A runtime assertion of the lemma cascade failed."""

    def __init__(self, message: str, trace: Optional[List] = None, frame: Optional[dict] = None,
                 graph=None, partial=None):
        self.trace = list(trace or [])
        self.frame = dict(frame or {})
        # Graph and partial coloring at the failing step, for local repair
        self.graph = graph
        self.partial = partial
        super().__init__(message)
