"""
Corpus Module
Named catalog graphs, parametric generators, exhaustive enumeration of
small connected subcubic graphs and seeded random claw-free growth.
"""

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Set, Tuple

import networkx as nx

from modules.errors import GraphArgumentError
from modules.graph_core import Graph


ENUMERATION_MAX_VERTICES = 10

# wedges and chords need more open vertices than this
MIN_OPEN_FOR_WEDGE = 2
MIN_OPEN_FOR_CHORD = 4
MIN_CUBIC_EXPANDED = 12


@dataclass
class CatalogEntry:
    """A named graph with where it comes from and, if known, its strong chromatic index."""

    name: str
    graph: Graph
    provenance: str
    expected_chi_s: Optional[int] = None


# ----------------------------------------------------------------------
# Parametric generators
# ----------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphArgumentError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def gen_k_prism(k: int) -> Graph:
    """
    Two k-cycles joined by a perfect matching.

    Outer cycle 0..k-1, inner cycle k..2k-1, spokes i - (k + i).

    Raises:
        GraphArgumentError: k < 3
    """
    if k < 3:
        raise GraphArgumentError(f"k-prism needs k >= 3, got {k}")
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((k + i, k + (i + 1) % k))
        edges.append((i, k + i))
    return Graph(2 * k, edges)


def triangle_expand(h: Graph) -> Graph:
    """
    Replace every vertex of a cubic graph with a triangle.

    Vertex v becomes the triangle 3v, 3v+1, 3v+2; port 3v+i serves the
    i-th neighbor of v in ascending order.

    Raises:
        GraphArgumentError: h is not cubic
    """
    for v in range(h.n):
        if h.degree(v) != 3:
            raise GraphArgumentError(f"triangle_expand needs a cubic graph; vertex {v} has degree {h.degree(v)}")
    edges = []
    for v in range(h.n):
        edges.extend([(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2), (3 * v, 3 * v + 2)])
    for u, v in h.edges:
        edges.append((3 * u + h.adj[u].index(v), 3 * v + h.adj[v].index(u)))
    return Graph(3 * h.n, edges)


# ----------------------------------------------------------------------
# Catalog
# ----------------------------------------------------------------------

def _h1() -> Graph:
    # v0=0, v1=1, v2=2, u1=3, u1'=4
    return Graph(5, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def _h2() -> Graph:
    # v0, v1, v2, u1, u1', u2, u2' with both cross edges u1u2, u1'u2'
    return Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (3, 4), (2, 5), (2, 6), (5, 6), (3, 5), (4, 6)])


def _h3() -> Graph:
    # one cross edge u1u2; u1' and u2' share the neighbor w = 7
    return Graph(8, [(0, 1), (0, 2), (1, 3), (1, 4), (3, 4), (2, 5), (2, 6), (5, 6), (3, 5), (4, 7), (6, 7)])


def _h4() -> Graph:
    # chorded 4-cycle 0-1-2-3 with chord 02; u2=4, u4=5 share the adjacent pair 6, 7
    return Graph(8, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 4), (3, 5),
                     (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)])


def _diamond_cap(offset: int) -> List[Tuple[int, int]]:
    # x=offset has degree 2 with adjacent neighbors; every other vertex cubic
    x, a, b, p, q, r, s = range(offset, offset + 7)
    return [(x, a), (x, b), (a, b), (a, p), (b, q), (p, r), (p, s), (q, r), (q, s), (r, s)]


def _bridged_diamonds() -> Graph:
    """Smallest cubic claw-free graph with a cut vertex: two diamond caps joined by a bridge."""
    return Graph(14, _diamond_cap(0) + _diamond_cap(7) + [(0, 7)])


@lru_cache(maxsize=None)
def catalog() -> Dict[str, CatalogEntry]:
    """Named graphs used by tests, surveys and the classifier's reference checks."""
    petersen = Graph.from_networkx(nx.petersen_graph())
    entries = [
        CatalogEntry('prism3', gen_k_prism(3), 'two triangles joined by a perfect matching', 9),
        CatalogEntry('k4', complete_graph(4), 'complete graph', 6),
        CatalogEntry('k4_delta', triangle_expand(complete_graph(4)), 'triangle expansion of K4', None),
        CatalogEntry('h1', _h1(), 'degree-2 case with {u1,u1\'} = {u2,u2\'}', 7),
        CatalogEntry('h2', _h2(), 'degree-2 case with two cross edges', None),
        CatalogEntry('h3', _h3(), 'degree-2 case, one cross edge, u1\' and u2\' share a neighbor', None),
        CatalogEntry('h4', _h4(), 'chorded 4-cycle with N(u2) and N(u4) meeting', None),
        CatalogEntry('paw', Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]), 'triangle plus pendant edge', 4),
        CatalogEntry('diamond', Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]), 'K4 minus an edge', 5),
        CatalogEntry('claw', Graph(4, [(0, 1), (0, 2), (0, 3)]), 'K_{1,3}', 3),
        CatalogEntry('c5', cycle_graph(5), 'cycle', 5),
        CatalogEntry('c6', cycle_graph(6), 'cycle', 3),
        CatalogEntry('c7', cycle_graph(7), 'cycle', 4),
        CatalogEntry('p4', path_graph(4), 'path', 3),
        CatalogEntry('petersen', petersen, 'networkx petersen_graph, not claw-free', None),
        CatalogEntry('k4_minus_edge_chain', _bridged_diamonds(), 'cubic claw-free with a cut vertex', None),
        CatalogEntry('petersen_delta', triangle_expand(petersen), 'triangle expansion of Petersen', None),
        CatalogEntry('prism4_delta', triangle_expand(gen_k_prism(4)), 'triangle expansion of the 4-prism', None),
    ]
    return {entry.name: entry for entry in entries}


def get(name: str) -> Graph:
    """
    Catalog graph by name.

    Raises:
        GraphArgumentError: unknown name
    """
    try:
        return catalog()[name].graph
    except KeyError:
        raise GraphArgumentError(f"unknown catalog graph {name!r}") from None


# ----------------------------------------------------------------------
# Exhaustive enumeration
# ----------------------------------------------------------------------

def _wl_key(g: Graph) -> str:
    return nx.weisfeiler_lehman_graph_hash(g.to_networkx(), iterations=3)


@lru_cache(maxsize=None)
def _enumerate_level(n: int) -> Tuple[Graph, ...]:
    """
    One graph per isomorphism class of connected subcubic graphs on n vertices.

    Every such graph is a smaller one plus a non-cut vertex joined to 1..3
    vertices of degree below 3, so vertex augmentation is exhaustive.
    """
    if n == 0:
        return ()
    if n == 1:
        return (Graph(1),)
    found: List[Graph] = []
    buckets: Dict[Tuple[int, Tuple[int, ...], str], List[nx.Graph]] = {}
    for base in _enumerate_level(n - 1):
        open_vertices = [v for v in range(base.n) if base.degree(v) < 3]
        for size in (1, 2, 3):
            for attach in combinations(open_vertices, size):
                g = Graph(n, list(base.edges) + [(v, n - 1) for v in attach])
                degrees = tuple(sorted(g.degree(v) for v in range(n)))
                key = (g.m, degrees, _wl_key(g))
                candidate = g.to_networkx()
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(candidate, other) for other in bucket):
                    continue
                bucket.append(candidate)
                found.append(g)
    return tuple(found)


def enumerate_connected_subcubic(n: int) -> Iterator[Graph]:
    """
    Stream every connected graph on n vertices with max degree <= 3, one per
    isomorphism class, in a deterministic order.

    Raises:
        GraphArgumentError: n outside 0..10
    """
    if not 0 <= n <= ENUMERATION_MAX_VERTICES:
        raise GraphArgumentError(f"enumeration limited to n <= {ENUMERATION_MAX_VERTICES}, got {n}")
    yield from _enumerate_level(n)


def enumerate_claw_free(n: int) -> Iterator[Graph]:
    """Claw-free members of enumerate_connected_subcubic(n)."""
    from modules.recognition import is_claw_free

    for g in enumerate_connected_subcubic(n):
        if is_claw_free(g)[0]:
            yield g


# ----------------------------------------------------------------------
# Seeded random growth
# ----------------------------------------------------------------------

class _Grower:
    """Mutable adjacency sets grown under the claw-free and subcubic constraints."""

    def __init__(self, base: Optional[Graph] = None):
        self.adj: List[Set[int]] = []
        if base is not None:
            self.adj = [set(base.adj[v]) for v in range(base.n)]

    @property
    def n(self) -> int:
        return len(self.adj)

    def open_vertices(self) -> List[int]:
        return [v for v in range(self.n) if len(self.adj[v]) < 3]

    def _claw_at(self, v: int) -> bool:
        for a, b, c in combinations(sorted(self.adj[v]), 3):
            if b not in self.adj[a] and c not in self.adj[a] and c not in self.adj[b]:
                return True
        return False

    def add_vertex(self) -> int:
        self.adj.append(set())
        return self.n - 1

    def try_add_edges(self, pairs: List[Tuple[int, int]]) -> bool:
        """Add all pairs, or none if the result has a claw or a degree above 3."""
        added = []
        ok = True
        for x, y in pairs:
            if x == y or y in self.adj[x] or len(self.adj[x]) >= 3 or len(self.adj[y]) >= 3:
                ok = False
                break
            self.adj[x].add(y)
            self.adj[y].add(x)
            added.append((x, y))
        touched = {x for pair in added for x in pair}
        if ok and any(self._claw_at(v) for v in touched):
            ok = False
        if not ok:
            for x, y in added:
                self.adj[x].discard(y)
                self.adj[y].discard(x)
        return ok

    def drop_last_vertices(self, count: int):
        for _ in range(count):
            v = self.n - 1
            for y in self.adj[v]:
                self.adj[y].discard(v)
            self.adj.pop()

    def step(self, rng: random.Random, limit: int) -> bool:
        """
        One growth move; False when no room is left.

        Wedges and chords only run while enough vertices stay open, so the
        open set never empties before the size limit.
        """
        opened = self.open_vertices()
        if not opened:
            return False
        move = rng.choice(('triangle', 'pendant', 'wedge', 'chord'))
        anchor = rng.choice(opened)
        if move == 'triangle' and self.n + 3 <= limit:
            a, b, c = self.add_vertex(), self.add_vertex(), self.add_vertex()
            if self.try_add_edges([(a, b), (b, c), (a, c), (anchor, a)]):
                return True
            self.drop_last_vertices(3)
        elif move == 'wedge' and self.n + 1 <= limit and len(opened) > MIN_OPEN_FOR_WEDGE:
            partners = [y for y in self.adj[anchor] if len(self.adj[y]) < 3]
            if partners and len(self.adj[anchor]) < 3:
                y = rng.choice(sorted(partners))
                x = self.add_vertex()
                if self.try_add_edges([(anchor, x), (y, x)]):
                    return True
                self.drop_last_vertices(1)
        elif move == 'chord' and len(opened) > MIN_OPEN_FOR_CHORD:
            others = [v for v in opened if v != anchor and v not in self.adj[anchor]]
            if others and self.try_add_edges([(anchor, rng.choice(others))]):
                return True
        elif self.n + 1 <= limit:
            x = self.add_vertex()
            if self.try_add_edges([(anchor, x)]):
                return True
            self.drop_last_vertices(1)
        return True

    def to_graph(self) -> Graph:
        return Graph(self.n, [(x, y) for x in range(self.n) for y in self.adj[x] if x < y])


def _grow(grower: _Grower, rng: random.Random, limit: int) -> Graph:
    attempts = 0
    max_attempts = 20 * limit + 50
    while grower.n < limit and attempts < max_attempts:
        attempts += 1
        if not grower.step(rng, limit):
            break
    return grower.to_graph()


def random_triangle_expanded(cubic_vertices: int, seed: int) -> Graph:
    """
    Triangle expansion of networkx's seeded random cubic graph on cubic_vertices vertices.

    The cubic graph may be disconnected; every component of the result is
    claw-free and cubic with every vertex on a triangle.

    Raises:
        GraphArgumentError: cubic_vertices odd or below 4
    """
    if cubic_vertices < 4 or cubic_vertices % 2:
        raise GraphArgumentError(f"random cubic graphs need an even vertex count >= 4, got {cubic_vertices}")
    return triangle_expand(Graph.from_networkx(nx.random_regular_graph(3, cubic_vertices, seed=seed)))


def random_claw_free_subcubic(n: int, seed: int, mode: str = 'grow') -> Graph:
    """
    Connected claw-free subcubic graph on at most n vertices.

    mode='grow' starts from a triangle and attaches triangles, wedges,
    pendant vertices and chords, rejecting any move that creates a claw.
    mode='cubic' triangle-expands a connected random cubic graph on the
    largest even vertex count h with 3h <= n.

    Raises:
        GraphArgumentError: n < 3, n < 12 in cubic mode, or an unknown mode
    """
    if mode == 'cubic':
        if n < MIN_CUBIC_EXPANDED:
            raise GraphArgumentError(f"cubic mode needs n >= {MIN_CUBIC_EXPANDED}, got {n}")
        h = (n // 3) - (n // 3) % 2
        rng = random.Random(seed)
        while True:
            cubic = nx.random_regular_graph(3, h, seed=rng.randrange(2 ** 32))
            if nx.is_connected(cubic):
                return triangle_expand(Graph.from_networkx(cubic))
    if mode != 'grow':
        raise GraphArgumentError(f"unknown growth mode {mode!r}")
    if n < 3:
        raise GraphArgumentError(f"random growth needs n >= 3, got {n}")
    rng = random.Random(seed)
    grower = _Grower(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    return _grow(grower, rng, n)


def grow_supergraph(base: Graph, extra_vertices: int, seed: int) -> Graph:
    """
    Connected claw-free subcubic supergraph of base with up to extra_vertices new vertices.

    Raises:
        GraphArgumentError: base disconnected, not claw-free or not subcubic
    """
    from modules.recognition import is_claw_free

    if not base.is_connected() or base.max_degree() > 3 or not is_claw_free(base)[0]:
        raise GraphArgumentError("grow_supergraph needs a connected claw-free subcubic base")
    rng = random.Random(seed)
    return _grow(_Grower(base), rng, base.n + max(0, extra_vertices))
