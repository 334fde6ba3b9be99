"""
Graph I/O Module
Edge-list text format and graph6 encoding.
"""

from typing import List, Optional, Tuple

import networkx as nx

from modules.errors import GraphArgumentError, GraphParseError
from modules.graph_core import Graph


GRAPH6_HEADER = '>>graph6<<'


# ----------------------------------------------------------------------
# Edge list
# ----------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """
    Parse "u v" lines with 0-based vertex ids.

    Blank lines and '#' comments are ignored; an optional first line
    "n <count>" fixes the vertex count, otherwise n = max id + 1.

    Raises:
        GraphParseError: malformed line, loop, duplicate or out-of-range id
    """
    n: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == 'n':
            if n is not None or edges:
                raise GraphParseError("header 'n <count>' must come first", line=lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphParseError(f"bad header {line!r}", line=lineno)
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex id in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"negative vertex id in {line!r}", line=lineno)
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", line=lineno)
        if n is not None and max(u, v) >= n:
            raise GraphParseError(f"vertex id {max(u, v)} out of range for n={n}", line=lineno)
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise GraphParseError(f"duplicate edge {pair[0]} {pair[1]} (first at line {seen[pair]})", line=lineno)
        seen[pair] = lineno
        edges.append(pair)
    return Graph.from_edges(edges, n)


def write_edge_list(g: Graph) -> str:
    """Canonical edge-list text: header line, then edges in EdgeId order."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return '\n'.join(lines) + '\n'


# ----------------------------------------------------------------------
# graph6
# ----------------------------------------------------------------------

def _graph6_size(data: bytes) -> Tuple[int, int]:
    """Decode the N(n) prefix; returns (n, prefix length)."""
    if not data:
        raise GraphParseError("empty graph6 string", offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated 8-byte size prefix", offset=len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphParseError("truncated 4-byte size prefix", offset=len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 string.

    Raises:
        GraphParseError: byte outside 63..126 or a body of the wrong length,
            with the byte offset
    """
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    try:
        data = line.encode('ascii')
    except UnicodeEncodeError as e:
        raise GraphParseError("non-ASCII character", offset=e.start) from None
    for offset, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphParseError(f"byte {b} outside 63..126", offset=offset)

    n, prefix = _graph6_size(data)
    body = len(data) - prefix
    expected = (n * (n - 1) // 2 + 5) // 6
    if body != expected:
        where = prefix + min(body, expected)
        raise GraphParseError(f"graph6 body has {body} bytes, expected {expected} for n={n}", offset=where)
    if n == 0:
        return Graph(0)
    try:
        graph = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError) as e:
        raise GraphParseError(str(e), offset=0) from None
    return Graph.from_networkx(graph)


def write_graph6(g: Graph) -> str:
    """graph6 encoding without header or trailing newline."""
    if g.n == 0:
        return '?'
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()


def parse_graph(text: str, fmt: str = 'edgelist') -> Graph:
    """
    Parse a single graph in the named format.

    Raises:
        GraphArgumentError: unknown format
        GraphParseError: malformed input
    """
    if fmt == 'edgelist':
        return parse_edge_list(text)
    if fmt == 'graph6':
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise GraphParseError(f"expected one graph6 line, got {len(lines)}", line=len(lines))
        return parse_graph6(lines[0])
    raise GraphArgumentError(f"unknown graph format {fmt!r}")


def parse_coloring(text: str, g: Graph) -> List[Optional[int]]:
    """
    Parse a coloring file: "u v color" lines (endpoint pairs) or "e color"
    lines (EdgeIds). Edges not listed stay uncolored.

    Raises:
        GraphParseError: malformed line or unknown edge
    """
    colors: List[Optional[int]] = [None] * g.m
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        try:
            parts = [int(x) for x in line.split()]
        except ValueError:
            raise GraphParseError(f"non-integer field in {line!r}", line=lineno) from None
        if len(parts) == 3:
            u, v, color = parts
            if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.has_edge(u, v):
                raise GraphParseError(f"{u} {v} is not an edge", line=lineno)
            e = g.edge_id(u, v)
        elif len(parts) == 2:
            e, color = parts
            if not 0 <= e < g.m:
                raise GraphParseError(f"EdgeId {e} out of range", line=lineno)
        else:
            raise GraphParseError(f"expected 'u v color' or 'e color', got {line!r}", line=lineno)
        colors[e] = color
    return colors
