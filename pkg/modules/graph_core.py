"""
Graph Core Module
Simple undirected graphs with stable edge ids, the "sees" relation between
edges, the conflict graph L(G)^2 and the strong edge coloring verifier.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from modules.errors import GraphArgumentError


MAX_PALETTE = 9


class Graph:
    """
    Immutable simple graph on vertices 0..n-1.

    Edges are stored as sorted (u, v) pairs with u < v; the EdgeId of an
    edge is its index in that sorted list.
    """

    __slots__ = ('n', 'adj', 'edges', '_edge_index', '_incident', '_adj_sets', '_seen')

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        """
        Build a graph.

        Args:
            n: Vertex count
            edges: Iterable of vertex pairs in any order and orientation

        Raises:
            GraphArgumentError: on loops, duplicates or out-of-range ids
        """
        if n < 0:
            raise GraphArgumentError(f"negative vertex count {n}")
        pairs = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphArgumentError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphArgumentError(f"edge ({u}, {v}) out of range for n={n}")
            pair = (u, v) if u < v else (v, u)
            if pair in pairs:
                raise GraphArgumentError(f"duplicate edge {pair}")
            pairs.add(pair)

        self.n = n
        self.edges: Tuple[Tuple[int, int], ...] = tuple(sorted(pairs))
        self._edge_index: Dict[Tuple[int, int], int] = {pair: i for i, pair in enumerate(self.edges)}

        adj: List[List[int]] = [[] for _ in range(n)]
        incident: List[List[int]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append(v)
            adj[v].append(u)
            incident[u].append(eid)
            incident[v].append(eid)
        self.adj: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._incident = tuple(tuple(sorted(i)) for i in incident)
        self._adj_sets = tuple(frozenset(a) for a in self.adj)
        self._seen: Dict[int, Tuple[int, ...]] = {}

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[int, int]], n: Optional[int] = None) -> 'Graph':
        """Build a graph whose vertex count defaults to max id + 1."""
        edges = list(edges)
        if n is None:
            n = 1 + max((max(u, v) for u, v in edges), default=-1)
        return cls(n, edges)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Graph':
        """Relabel a networkx graph to 0..n-1 in sorted node order."""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edge_id(self, u: int, v: int) -> int:
        """
        Get the EdgeId of uv.

        Raises:
            GraphArgumentError: if uv is not an edge
        """
        pair = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[pair]
        except KeyError:
            raise GraphArgumentError(f"({u}, {v}) is not an edge") from None

    def endpoints(self, e: int) -> Tuple[int, int]:
        self._check_edge(e)
        return self.edges[e]

    def incident(self, v: int) -> Tuple[int, ...]:
        """EdgeIds incident to v, ascending."""
        return self._incident[v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adj[v]

    def _check_edge(self, e: int):
        if not isinstance(e, int) or not 0 <= e < len(self.edges):
            raise GraphArgumentError(f"invalid EdgeId {e!r}")

    def seen_edges(self, e: int) -> Tuple[int, ...]:
        """
        All edges that see e, ascending; cached per edge.

        Neighbor-of-endpoint scan: O(1) per edge on bounded-degree graphs.
        """
        cached = self._seen.get(e)
        if cached is not None:
            return cached
        self._check_edge(e)
        u, v = self.edges[e]
        found = set()
        for x in (u, v):
            found.update(self._incident[x])
            for y in self.adj[x]:
                found.update(self._incident[y])
        found.discard(e)
        result = tuple(sorted(found))
        self._seen[e] = result
        return result

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def components(self) -> List[List[int]]:
        """Vertex sets of the connected components, each sorted, ordered by least vertex."""
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack = [start]
            comp = []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            result.append(sorted(comp))
        return result

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced_subgraph(self, vertices: Sequence[int]) -> Tuple['Graph', List[int]]:
        """
        Induced subgraph relabeled to 0..len-1 in ascending vertex order.

        Returns:
            (subgraph, back) where back[i] is the original id of vertex i
        """
        back = sorted(set(vertices))
        index = {v: i for i, v in enumerate(back)}
        sub_edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return Graph(len(back), sub_edges), back

    def relabeled(self, perm: Sequence[int]) -> 'Graph':
        """Graph with vertex v renamed perm[v]."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class ColorSet:
    """Immutable set of colors drawn from 1..9, stored as a bit mask."""

    __slots__ = ('bits',)

    def __init__(self, colors: Iterable[int] = (), bits: Optional[int] = None):
        if bits is None:
            bits = 0
            for c in colors:
                if not 1 <= c <= MAX_PALETTE:
                    raise GraphArgumentError(f"color {c} outside 1..{MAX_PALETTE}")
                bits |= 1 << c
        self.bits = bits

    @classmethod
    def palette(cls, k: int) -> 'ColorSet':
        """The full palette [1, k]."""
        return cls(bits=((1 << (k + 1)) - 2))

    def complement(self, k: int) -> 'ColorSet':
        return ColorSet(bits=ColorSet.palette(k).bits & ~self.bits)

    def __contains__(self, color) -> bool:
        return isinstance(color, int) and color > 0 and bool(self.bits >> color & 1)

    def __len__(self) -> int:
        return bin(self.bits).count('1')

    def __iter__(self) -> Iterator[int]:
        bits = self.bits >> 1
        c = 1
        while bits:
            if bits & 1:
                yield c
            bits >>= 1
            c += 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def __and__(self, other: 'ColorSet') -> 'ColorSet':
        return ColorSet(bits=self.bits & other.bits)

    def __or__(self, other: 'ColorSet') -> 'ColorSet':
        return ColorSet(bits=self.bits | other.bits)

    def __sub__(self, other: 'ColorSet') -> 'ColorSet':
        return ColorSet(bits=self.bits & ~other.bits)

    def __le__(self, other: 'ColorSet') -> bool:
        return self.bits & ~other.bits == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, ColorSet) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def without(self, *colors: int) -> 'ColorSet':
        return self - ColorSet(c for c in colors if c)

    def first(self) -> Optional[int]:
        """Smallest color, or None when empty."""
        if not self.bits:
            return None
        return (self.bits & -self.bits).bit_length() - 1

    def __repr__(self) -> str:
        return '{' + ','.join(str(c) for c in self) + '}'


class PartialColoring:
    """Edge -> optional color map over a graph's EdgeIds."""

    __slots__ = ('assign', 'palette_size')

    def __init__(self, m: int, palette_size: int = 7, assign: Optional[List[Optional[int]]] = None):
        if not 1 <= palette_size <= MAX_PALETTE:
            raise GraphArgumentError(f"palette size {palette_size} outside 1..{MAX_PALETTE}")
        self.palette_size = palette_size
        self.assign: List[Optional[int]] = list(assign) if assign is not None else [None] * m

    def copy(self) -> 'PartialColoring':
        return PartialColoring(len(self.assign), self.palette_size, self.assign)

    def __getitem__(self, e: int) -> Optional[int]:
        return self.assign[e]

    def __setitem__(self, e: int, color: Optional[int]):
        self.assign[e] = color

    def __len__(self) -> int:
        return len(self.assign)

    def uncolored(self) -> List[int]:
        return [e for e, c in enumerate(self.assign) if c is None]

    def is_total(self) -> bool:
        return all(c is not None for c in self.assign)

    def colors_used(self) -> int:
        return len({c for c in self.assign if c is not None})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PartialColoring)
            and self.assign == other.assign
            and self.palette_size == other.palette_size
        )

    def __repr__(self) -> str:
        return f"PartialColoring({self.assign}, k={self.palette_size})"


@dataclass(frozen=True)
class Violation:
    """One defect found by verify_strong."""

    kind: str  # SameColorConflict / Uncolored / ColorOutOfPalette
    edges: Tuple[int, ...]
    colors: Tuple[Optional[int], ...] = field(default=())

    def describe(self, g: Optional[Graph] = None) -> str:
        if g is not None:
            names = ', '.join(f"{g.edges[e][0]}-{g.edges[e][1]}" for e in self.edges)
        else:
            names = ', '.join(str(e) for e in self.edges)
        colors = ', '.join(str(c) for c in self.colors)
        return f"{self.kind}({names})" + (f" colors [{colors}]" if self.colors else "")


SAME_COLOR = 'SameColorConflict'
UNCOLORED = 'Uncolored'
OUT_OF_PALETTE = 'ColorOutOfPalette'


def sees(g: Graph, e: int, f: int) -> bool:
    """
    True iff edges e and f are at distance 1 or 2.

    Raises:
        GraphArgumentError: invalid EdgeId, or e == f
    """
    g._check_edge(e)
    g._check_edge(f)
    if e == f:
        raise GraphArgumentError(f"an edge does not see itself ({e})")
    a, b = g.edges[e]
    c, d = g.edges[f]
    for x in (a, b):
        for y in (c, d):
            if x == y or g.has_edge(x, y):
                return True
    return False


def conflict_graph(g: Graph) -> Graph:
    """L(G)^2: vertex i is EdgeId i, adjacent iff the edges see each other."""
    pairs = []
    for e in range(g.m):
        for f in g.seen_edges(e):
            if f > e:
                pairs.append((e, f))
    return Graph(g.m, pairs)


def conflict_graph_generic(g: Graph) -> Graph:
    """Quadratic construction over all edge pairs, for arbitrary-degree inputs."""
    return Graph(g.m, [(e, f) for e, f in combinations(range(g.m), 2) if sees(g, e, f)])


def verify_strong(g: Graph, c: PartialColoring, require_total: bool = True) -> List[Violation]:
    """
    Check a (partial) strong edge coloring.

    Args:
        g: Graph
        c: Coloring over g's EdgeIds
        require_total: Also report uncolored edges

    Returns:
        Every violation, in canonical order; empty iff valid
    """
    if len(c) != g.m:
        raise GraphArgumentError(f"coloring has {len(c)} entries, graph has {g.m} edges")
    violations = []
    for e in range(g.m):
        color = c[e]
        if color is None:
            if require_total:
                violations.append(Violation(UNCOLORED, (e,)))
            continue
        if not 1 <= color <= c.palette_size:
            violations.append(Violation(OUT_OF_PALETTE, (e,), (color,)))
        for f in g.seen_edges(e):
            if f > e and c[f] == color:
                violations.append(Violation(SAME_COLOR, (e, f), (color, color)))
    return violations


def is_good(g: Graph, c: PartialColoring) -> bool:
    """A good partial coloring: no conflicts and no color outside the palette."""
    return not verify_strong(g, c, require_total=False)
