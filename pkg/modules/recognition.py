"""
Recognition Module
Structural tests driving the case dispatch of the coloring engine:
claw-freeness, cut vertices, 4-cycles, triangle structure, minimum induced
even cycles, small-graph isomorphism and classification.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Set, Tuple

import networkx as nx

from modules.errors import ClassificationError, GraphArgumentError
from modules.graph_core import Graph


# Case tags in priority order
NOT_CLAW_FREE = 'NotClawFree'
NOT_SUBCUBIC = 'NotSubcubic'
EDGELESS = 'Edgeless'
PRISM3 = 'Prism3'
K4 = 'K4'
K4_DELTA = 'K4Delta'
HAS_DEGREE1 = 'HasDegree1'
HAS_DEGREE2 = 'HasDegree2'
CUBIC_CUT_VERTEX = 'CubicCutVertex'
CHORDED_C4 = 'ChordedC4'
INDUCED_C4 = 'InducedC4'
TRIANGLE_COVERED = 'TriangleCovered'

TAG_ORDER = (
    NOT_CLAW_FREE, NOT_SUBCUBIC, EDGELESS, PRISM3, K4, K4_DELTA, HAS_DEGREE1,
    HAS_DEGREE2, CUBIC_CUT_VERTEX, CHORDED_C4, INDUCED_C4, TRIANGLE_COVERED,
)

ISO_MAX_VERTICES = 16


@dataclass(frozen=True)
class CaseTag:
    """Classification of a connected graph plus the witness backing it."""

    tag: str
    witness: Dict = field(default_factory=dict)

    def __str__(self) -> str:
        if not self.witness:
            return self.tag
        details = ', '.join(f"{k}={v}" for k, v in self.witness.items())
        return f"{self.tag}({details})"


@dataclass
class C4Witness:
    """A 4-cycle v1 v2 v3 v4; when chorded, the chord is v1v3."""

    cycle: Tuple[int, int, int, int]
    chord: Optional[Tuple[int, int]] = None


@dataclass
class ContractedGraph:
    """Triangles of a triangle-covered graph, joined by the edges between them."""

    triangles: List[Tuple[int, int, int]]
    tri_of: List[int]
    adj: List[List[Tuple[int, int]]]  # per triangle: (other triangle, originating EdgeId)

    @property
    def n(self) -> int:
        return len(self.triangles)


@dataclass
class EvenCycleFrame:
    """
    A lifted induced even cycle v1..v2p of a triangle-covered graph.

    Index conventions: v[i] is v_{i+1}; triangle j (0-based) holds
    v_{2j+1}, v_{2j+2} and u[j] = u_{2j+2}; w[j] is the neighbor of u[j]
    outside its triangle.
    """

    v: List[int]
    u: List[int]
    w: List[int]
    triangles: List[int]

    @property
    def p(self) -> int:
        return len(self.u)


# ----------------------------------------------------------------------
# Local properties
# ----------------------------------------------------------------------

def is_claw_free(g: Graph) -> Tuple[bool, Optional[Tuple[int, Tuple[int, int, int]]]]:
    """
    Test for an induced K_{1,3}.

    Returns:
        (True, None) or (False, (center, leaves)) for the least claw
    """
    for v in range(g.n):
        if g.degree(v) < 3:
            continue
        for a, b, c in combinations(g.adj[v], 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False, (v, (a, b, c))
    return True, None


def subcubic_witness(g: Graph) -> Optional[Tuple[int, int]]:
    """Least vertex of degree above 3 with its degree, or None."""
    for v in range(g.n):
        if g.degree(v) > 3:
            return v, g.degree(v)
    return None


def is_cubic(g: Graph) -> bool:
    return g.n > 0 and all(g.degree(v) == 3 for v in range(g.n))


def cut_vertices(g: Graph) -> Set[int]:
    """
    Articulation points by the DFS lowpoint method, iteratively.

    Raises:
        GraphArgumentError: if g is disconnected
    """
    if not g.is_connected():
        raise GraphArgumentError("cut_vertices needs a connected graph")
    if g.n <= 2:
        return set()

    disc = [-1] * g.n
    low = [0] * g.n
    result = set()
    timer = 0
    root = 0
    root_children = 0

    disc[root] = low[root] = timer
    timer += 1
    # frames: (vertex, parent, neighbor cursor)
    stack = [(root, -1, 0)]
    while stack:
        v, parent, i = stack[-1]
        if i < len(g.adj[v]):
            stack[-1] = (v, parent, i + 1)
            w = g.adj[v][i]
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, 0))
            elif w != parent:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    result.add(parent)
    if root_children > 1:
        result.add(root)
    return result


def find_c4(g: Graph) -> Optional[C4Witness]:
    """
    Lexicographically least 4-cycle, preferring chorded ones.

    Cycles are enumerated as (a, b, c, d) with a the least vertex and b < d.
    """
    first_induced = None
    for a in range(g.n):
        for b, d in combinations(g.adj[a], 2):
            if b < a or d < a:
                continue
            for c in g.adj[b]:
                if c <= a or c == d or not g.has_edge(c, d):
                    continue
                if g.has_edge(a, c):
                    return C4Witness((a, b, c, d), (a, c))
                if g.has_edge(b, d):
                    return C4Witness((b, c, d, a), (b, d))
                if first_induced is None:
                    first_induced = C4Witness((a, b, c, d), None)
    return first_induced


def triangles_at(g: Graph, v: int) -> List[Tuple[int, int, int]]:
    return [
        tuple(sorted((v, a, b)))
        for a, b in combinations(g.adj[v], 2)
        if g.has_edge(a, b)
    ]


def triangle_partition(g: Graph) -> List[Tuple[int, int, int]]:
    """
    Partition V into vertex-disjoint triangles.

    Raises:
        ClassificationError: naming the failed precondition
    """
    if not g.is_connected():
        raise ClassificationError('connected')
    if not is_cubic(g):
        raise ClassificationError('cubic')
    if not is_claw_free(g)[0]:
        raise ClassificationError('claw-free')
    if find_c4(g) is not None:
        raise ClassificationError('no 4-cycle')

    result = []
    owner = [-1] * g.n
    for v in range(g.n):
        tris = triangles_at(g, v)
        if len(tris) != 1:
            raise ClassificationError('triangle-covered', f"vertex {v} lies on {len(tris)} triangles")
        if owner[v] == -1:
            tri = tris[0]
            for x in tri:
                owner[x] = len(result)
            result.append(tri)
    return result


def contract_triangles(g: Graph, triangles: List[Tuple[int, int, int]]) -> ContractedGraph:
    """Contract each triangle to a vertex, keeping the originating edges."""
    tri_of = [-1] * g.n
    for i, tri in enumerate(triangles):
        for x in tri:
            tri_of[x] = i
    adj: List[List[Tuple[int, int]]] = [[] for _ in triangles]
    for e, (x, y) in enumerate(g.edges):
        tx, ty = tri_of[x], tri_of[y]
        if tx != ty:
            adj[tx].append((ty, e))
            adj[ty].append((tx, e))
    for lst in adj:
        lst.sort()
    return ContractedGraph(triangles, tri_of, adj)


def shortest_cycle(cg: ContractedGraph) -> Tuple[List[int], List[int]]:
    """
    A shortest cycle of the contracted graph.

    BFS from every root, pruned at half the best length found so far;
    stops early on a triangle.

    Returns:
        (triangle indices T1..Tp, connecting EdgeIds c1..cp) where c_j
        joins T_j and T_{j+1 mod p}
    """
    best = None
    best_len = cg.n + 1
    for root in range(cg.n):
        dist = {root: 0}
        parent = {root: (-1, -1)}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best_len:
                break
            for y, e in cg.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = (x, e)
                    queue.append(y)
                elif parent[x][1] != e and dist[y] >= dist[x]:
                    length = dist[x] + dist[y] + 1
                    if length < best_len:
                        best_len = length
                        best = (root, x, y, e, dict(parent))
        if best_len == 3:
            break
    if best is None:
        raise ClassificationError('cycle', "contracted graph is acyclic")

    root, x, y, e, parent = best

    def path_to_root(z):
        nodes, edges = [z], []
        while parent[z][0] != -1:
            z, via = parent[z]
            edges.append(via)
            nodes.append(z)
        return nodes, edges

    xs, xe = path_to_root(x)
    ys, ye = path_to_root(y)
    # root ... x -> y ... root
    tris = list(reversed(xs)) + ys[:-1]
    conns = list(reversed(xe)) + [e] + ye
    if len(set(tris)) != len(tris):
        raise ClassificationError('shortest cycle', "lifted walk is not a simple cycle")
    return tris, conns


def lift_cycle(g: Graph, cg: ContractedGraph, tris: List[int], conns: List[int]) -> EvenCycleFrame:
    """Lift a contracted cycle to the induced even cycle of g."""
    p = len(tris)
    v, u, w = [], [], []
    for j in range(p):
        tri = cg.triangles[tris[j]]
        into = [x for x in g.edges[conns[j - 1]] if cg.tri_of[x] == tris[j]][0]
        out = [x for x in g.edges[conns[j]] if cg.tri_of[x] == tris[j]][0]
        third = [x for x in tri if x != into and x != out][0]
        outside = [y for y in g.adj[third] if cg.tri_of[y] != tris[j]][0]
        v.extend((into, out))
        u.append(third)
        w.append(outside)
    return EvenCycleFrame(v, u, w, list(tris))


def min_induced_even_cycle(g: Graph) -> EvenCycleFrame:
    """
    Minimum induced even cycle of a triangle-covered graph, labeled so
    v_{2j-1}, v_{2j} share the neighbor u_{2j}.

    Raises:
        ClassificationError: if g is not triangle-covered
    """
    triangles = triangle_partition(g)
    cg = contract_triangles(g, triangles)
    tris, conns = shortest_cycle(cg)
    frame = lift_cycle(g, cg, tris, conns)
    _check_cycle_frame(g, frame)
    return frame


def cycle_rotations(g: Graph, frame: EvenCycleFrame) -> Iterator[EvenCycleFrame]:
    """All 2p relabelings of a lifted cycle: p shifts in both orientations."""
    triangles = triangle_partition(g)
    cg = contract_triangles(g, triangles)
    p = frame.p
    tris = frame.triangles
    for order in (list(tris), [tris[0]] + list(reversed(tris[1:]))):
        for shift in range(p):
            rotated = order[shift:] + order[:shift]
            conns = []
            for j in range(p):
                a, b = rotated[j], rotated[(j + 1) % p]
                conns.append(next(e for t, e in cg.adj[a] if t == b))
            yield lift_cycle(g, cg, rotated, conns)


def _check_cycle_frame(g: Graph, frame: EvenCycleFrame):
    n2p = len(frame.v)
    if n2p < 6 or n2p % 2:
        raise ClassificationError('even cycle', f"cycle length {n2p}")
    cycle = set(frame.v)
    if len(cycle) != n2p:
        raise ClassificationError('even cycle', "repeated cycle vertex")
    for i, x in enumerate(frame.v):
        for y in g.adj[x]:
            if y in cycle and y not in (frame.v[i - 1], frame.v[(i + 1) % n2p]):
                raise ClassificationError('induced cycle', f"chord {x}-{y}")
    if len(set(frame.u)) != frame.p or len(set(frame.w)) != frame.p:
        raise ClassificationError('distinct u/w vertices')
    for a, b in combinations(frame.u, 2):
        if g.has_edge(a, b):
            raise ClassificationError('u vertices non-adjacent', f"{a}-{b}")


# ----------------------------------------------------------------------
# Isomorphism and classification
# ----------------------------------------------------------------------

def iso_small(g: Graph, h: Graph) -> bool:
    """
    Exact isomorphism test for graphs with at most 16 vertices.

    Raises:
        GraphArgumentError: size limit exceeded
    """
    if g.n > ISO_MAX_VERTICES or h.n > ISO_MAX_VERTICES:
        raise GraphArgumentError(f"iso_small limited to {ISO_MAX_VERTICES} vertices")
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


@lru_cache(maxsize=None)
def _reference_graphs() -> Dict[str, Graph]:
    from modules import corpus

    return {
        PRISM3: corpus.gen_k_prism(3),
        K4: corpus.complete_graph(4),
        K4_DELTA: corpus.triangle_expand(corpus.complete_graph(4)),
    }


def classify(g: Graph) -> CaseTag:
    """
    First matching case tag in priority order, with witness.

    Raises:
        GraphArgumentError: if g is disconnected
    """
    if not g.is_connected():
        raise GraphArgumentError("classify needs a connected graph")

    ok, claw = is_claw_free(g)
    if not ok:
        return CaseTag(NOT_CLAW_FREE, {'center': claw[0], 'leaves': claw[1]})
    heavy = subcubic_witness(g)
    if heavy is not None:
        return CaseTag(NOT_SUBCUBIC, {'vertex': heavy[0], 'degree': heavy[1]})
    if g.m == 0:
        return CaseTag(EDGELESS)

    refs = _reference_graphs()
    for tag in (PRISM3, K4, K4_DELTA):
        ref = refs[tag]
        if g.n == ref.n and g.m == ref.m and iso_small(g, ref):
            return CaseTag(tag)

    for target, tag in ((1, HAS_DEGREE1), (2, HAS_DEGREE2)):
        for v in range(g.n):
            if g.degree(v) == target:
                return CaseTag(tag, {'v0': v})

    cuts = cut_vertices(g)
    if cuts:
        return CaseTag(CUBIC_CUT_VERTEX, {'v0': min(cuts)})

    c4 = find_c4(g)
    if c4 is not None:
        if c4.chord is not None:
            return CaseTag(CHORDED_C4, {'cycle': c4.cycle})
        return CaseTag(INDUCED_C4, {'cycle': c4.cycle})

    return CaseTag(TRIANGLE_COVERED, {'triangles': len(triangle_partition(g))})
