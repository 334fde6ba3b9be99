"""
Extension Lemmas Module
Each reducible configuration of a connected claw-free subcubic graph gets
an extension recipe: seed a good partial coloring with the greedy colorer,
then finish the few uncolored edges by direct moves, recolorings and exact
list extension. Every counting claim a recipe relies on is checked at run
time; a failed check raises InternalInvariantViolation carrying the frame
and the partial coloring reached so far.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from modules.errors import GraphArgumentError, GreedyStuck, InternalInvariantViolation
from modules.graph_core import ColorSet, Graph, PartialColoring, is_good
from modules.partial_color import availability, greedy_extend, greedy_partial, sdr_extend, seen_colors
from modules.recognition import cycle_rotations, iso_small, min_induced_even_cycle


@dataclass
class LemmaFrame:
    """Role bindings of one lemma execution: named vertices, edges and color slots."""

    lemma: str
    vertices: Dict[str, int] = field(default_factory=dict)
    edges: Dict[str, int] = field(default_factory=dict)
    colors: Dict[str, int] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def summary(self) -> Dict:
        return {
            'lemma': self.lemma,
            'vertices': dict(self.vertices),
            'edges': dict(self.edges),
            'colors': dict(self.colors),
            'notes': list(self.notes),
        }


@dataclass
class LemmaOutcome:
    """Total coloring produced by a lemma plus the traces of its recursive calls."""

    coloring: PartialColoring
    frame: LemmaFrame
    children: List = field(default_factory=list)
    fallback: Optional[str] = None


class Extension:
    """Owned partial coloring of one graph, manipulated by checked moves."""

    def __init__(self, g: Graph, lemma: str, palette_size: int = 7):
        self.g = g
        self.c = PartialColoring(g.m, palette_size)
        self.frame = LemmaFrame(lemma)
        self.children: List = []

    # -- bookkeeping ---------------------------------------------------

    def fail(self, message: str):
        raise InternalInvariantViolation(
            f"{self.frame.lemma}: {message}",
            frame=self.frame.summary(),
            graph=self.g,
            partial=self.c.copy(),
        )

    def check(self, condition: bool, message: str):
        if not condition:
            self.fail(message)

    def bind_vertices(self, **roles: int):
        self.frame.vertices.update(roles)

    def bind_edges(self, **roles: int):
        self.frame.edges.update(roles)

    def bind_colors(self, **slots: Optional[int]):
        self.frame.colors.update({k: v for k, v in slots.items() if v is not None})

    def note(self, text: str):
        self.frame.notes.append(text)

    def edge(self, u: int, v: int) -> int:
        self.check(self.g.has_edge(u, v), f"expected edge {u}-{v}")
        return self.g.edge_id(u, v)

    def outcome(self) -> LemmaOutcome:
        self.check(self.c.is_total(), f"edges left uncolored: {self.c.uncolored()[:8]}")
        self.check(is_good(self.g, self.c), "final coloring has a conflict")
        return LemmaOutcome(self.c, self.frame, self.children)

    # -- coloring moves ------------------------------------------------

    def seed(self, seeds: Iterable[int], expected_uncolored: Sequence[int]):
        """Greedy partial coloring from S; checks the uncolored set."""
        try:
            self.c = greedy_partial(self.g, seeds, self.c.palette_size)
        except GreedyStuck as e:
            self.fail(str(e))
        left = set(self.c.uncolored())
        self.check(left == set(expected_uncolored),
                   f"greedy left {sorted(left)}, expected {sorted(set(expected_uncolored))}")

    def avail(self, e: int) -> ColorSet:
        if self.c[e] is not None:
            return ColorSet.palette(self.c.palette_size) - seen_colors(self.g, self.c, e)
        return availability(self.g, self.c, e)

    def assign(self, e: int, color: Optional[int]):
        self.check(self.c[e] is None, f"edge {e} is already colored")
        self.check(color is not None and color in availability(self.g, self.c, e),
                   f"color {color} not available for edge {e}")
        self.c[e] = color

    def erase(self, e: int) -> int:
        old = self.c[e]
        self.check(old is not None, f"edge {e} is not colored")
        self.c[e] = None
        return old

    def recolor(self, e: int, color: int) -> int:
        old = self.erase(e)
        self.assign(e, color)
        return old

    def greedy(self, edges: Iterable[int]):
        try:
            self.c = greedy_extend(self.g, self.c, edges)
        except GreedyStuck as e:
            self.fail(str(e))

    def sdr(self, edges: Sequence[int]):
        result = sdr_extend(self.g, self.c, edges)
        self.check(result is not None, f"no list extension over {list(edges)}")
        self.c = result

    def finish(self, greedy_order: Sequence[int] = (), sdr_targets: Sequence[int] = ()):
        """Greedy over greedy_order, then list extension over sdr_targets."""
        self.greedy(greedy_order)
        self.sdr(sdr_targets)


def permute_colors(c: PartialColoring, edge_set: Iterable[int], mapping: Dict[int, int]) -> PartialColoring:
    """
    Rename colors on edge_set by a bijection of [1, palette].

    Colors missing from mapping map to themselves.

    Raises:
        GraphArgumentError: mapping is not a bijection of the palette
    """
    palette = range(1, c.palette_size + 1)
    full = {col: mapping.get(col, col) for col in palette}
    if sorted(full.values()) != list(palette) or any(col not in full for col in mapping):
        raise GraphArgumentError(f"not a bijection of [1, {c.palette_size}]: {mapping}")
    result = c.copy()
    for e in edge_set:
        if result[e] is not None:
            result[e] = full[result[e]]
    return result


def _other_neighbors(g: Graph, v: int, *exclude: int) -> List[int]:
    return [x for x in g.adj[v] if x not in exclude]


def _terminal(engine, ext: Extension, name: str) -> LemmaOutcome:
    """Closed configuration resolved by the exact solver."""
    from modules.corpus import get as catalog_graph

    ext.note(f"{name} configuration")
    reference = catalog_graph(name.lower())
    ext.check(iso_small(ext.g, reference) if ext.g.n <= 16 else False,
              f"configuration should be {name}")
    result = engine.small_case_solve(ext.g)
    ext.c = result.coloring
    ext.children.extend(result.trace)
    return ext.outcome()


# ----------------------------------------------------------------------
# Degree 1
# ----------------------------------------------------------------------

def extend_degree1(engine, g: Graph, v0: int) -> LemmaOutcome:
    """Greedy from S = {v0}; the pendant edge e0 sees at most 5 edges and is colored last."""
    ext = Extension(g, 'degree1')
    ext.check(g.degree(v0) == 1, f"vertex {v0} has degree {g.degree(v0)}")
    (e0,) = g.incident(v0)
    ext.bind_vertices(v0=v0)
    ext.bind_edges(e0=e0)
    ext.seed([v0], [e0])
    ext.check(len(ext.avail(e0)) >= 2, "pendant edge should keep two colors")
    ext.greedy([e0])
    return ext.outcome()


# ----------------------------------------------------------------------
# Degree 2
# ----------------------------------------------------------------------

def extend_degree2(engine, g: Graph, v0: int) -> LemmaOutcome:
    """Degree-2 vertex v0 with neighbors v1, v2; dispatches the sub-configurations."""
    ext = Extension(g, 'degree2')
    ext.check(g.degree(v0) == 2, f"vertex {v0} has degree {g.degree(v0)}")
    v1, v2 = g.adj[v0]
    ext.bind_vertices(v0=v0, v1=v1, v2=v2)

    if g.has_edge(v1, v2) or g.degree(v1) == 2 or g.degree(v2) == 2:
        return _degree2_near(ext, v0)

    u1, u1p = _other_neighbors(g, v1, v0)
    u2, u2p = _other_neighbors(g, v2, v0)
    ext.check(g.has_edge(u1, u1p) and g.has_edge(u2, u2p), "neighbors of v1 and of v2 must be adjacent")
    if {u1, u1p} == {u2, u2p}:
        return _terminal(engine, ext, 'H1')
    ext.check(not ({u1, u1p} & {u2, u2p}), "v1 and v2 share exactly one neighbor")

    for x in (u1, u1p, u2, u2p):
        if g.degree(x) == 2:
            ext.note(f"restart at degree-2 vertex {x}")
            return _degree2_near(ext, x)

    cross = [(a, b) for a in (u1, u1p) for b in (u2, u2p) if g.has_edge(a, b)]
    if len(cross) == 2:
        return _terminal(engine, ext, 'H2')
    if len(cross) == 1:
        a, b = cross[0]
        if a != u1:
            u1, u1p = u1p, u1
        if b != u2:
            u2, u2p = u2p, u2
        ext.bind_vertices(u1=u1, u1p=u1p, u2=u2, u2p=u2p)
        return _degree2_one_cross(engine, ext, v0, v1, v2, u1, u1p, u2, u2p)
    ext.bind_vertices(u1=u1, u1p=u1p, u2=u2, u2p=u2p)
    return _degree2_no_cross(engine, ext, v0, (v1, u1, u1p), (v2, u2, u2p))


def _degree2_near(ext: Extension, x: int) -> LemmaOutcome:
    """S = {x}: greedy leaves the two edges at x, finished by list extension."""
    a, b = ext.g.incident(x)
    ext.bind_vertices(s=x)
    ext.bind_edges(s1=a, s2=b)
    ext.seed([x], [a, b])
    ext.sdr([a, b])
    return ext.outcome()


def _degree2_one_cross(engine, ext: Extension, v0, v1, v2, u1, u1p, u2, u2p) -> LemmaOutcome:
    g = ext.g
    (w1p,) = _other_neighbors(g, u1p, v1, u1)
    (w2p,) = _other_neighbors(g, u2p, v2, u2)
    if w1p == w2p:
        return _terminal(engine, ext, 'H3')

    e1, e2, e3 = ext.edge(v1, u1), ext.edge(v0, v1), ext.edge(u1, u2)
    e4, e5 = ext.edge(v2, u2), ext.edge(v0, v2)
    f1, f2, f3, f4 = ext.edge(v1, u1p), ext.edge(u1, u1p), ext.edge(v2, u2p), ext.edge(u2, u2p)
    ext.bind_edges(e1=e1, e2=e2, e3=e3, e4=e4, e5=e5, f1=f1, f2=f2, f3=f3, f4=f4)
    ext.seed([v0, v1, v2, u1, u2], [e1, e2, e3, e4, e5, f1, f2, f3, f4])

    alpha = (ext.avail(f1) & ext.avail(f3)).first()
    ext.check(alpha is not None, "f1 and f3 share no color")
    ext.assign(f1, alpha)
    ext.assign(f3, alpha)

    beta = (ext.avail(e5) & ext.avail(f2)).first()
    ext.check(beta is not None, "e5 and f2 share no color")
    ext.assign(e5, beta)
    ext.assign(f2, beta)
    ext.bind_colors(alpha=alpha, beta=beta)

    gamma = (ext.avail(e2) & ext.avail(f4)).first()
    if gamma is not None:
        ext.bind_colors(gamma=gamma)
        ext.assign(e2, gamma)
        ext.assign(f4, gamma)
        ext.finish(sdr_targets=[e3, e4, e1])
    else:
        ext.finish(greedy_order=[f4], sdr_targets=[e3, e4, e1, e2])
    return ext.outcome()


@dataclass
class _Side:
    """One half of the no-cross-edge configuration: e = v0vi, f-edges at vi, g = u u'."""

    e: int
    fa: int
    fb: int
    g: int

    @property
    def fs(self) -> Tuple[int, int]:
        return self.fa, self.fb


def _degree2_no_cross(engine, ext: Extension, v0: int, left: Tuple[int, int, int],
                      right: Tuple[int, int, int]) -> LemmaOutcome:
    sides = []
    for vi, a, b in (left, right):
        sides.append(_Side(ext.edge(v0, vi), ext.edge(vi, a), ext.edge(vi, b), ext.edge(a, b)))
    s1, s2 = sides
    ext.bind_edges(e1=s1.e, e2=s2.e, f1=s1.fa, f2=s1.fb, f3=s2.fa, f4=s2.fb, g1=s1.g, g2=s2.g)
    ext.seed([v0, left[0], right[0]], [s1.e, s2.e, s1.fa, s1.fb, s2.fa, s2.fb])

    cap = engine.settings.subcase_iteration_cap
    for step in range(cap):
        a1, a2 = ext.avail(s1.e), ext.avail(s2.e)
        ext.check(len(a1) == 4 and len(a2) == 4, "e1 and e2 should each keep four colors")
        common = a1 & a2
        k = len(common)
        ext.note(f"step {step}: |A(e1) & A(e2)| = {k}")
        if k == 1:
            ext.finish(greedy_order=[s1.fa, s1.fb, s2.fa, s2.fb], sdr_targets=[s1.e, s2.e])
            return ext.outcome()
        if k == 2:
            _two_common(ext, sides, common)
            return ext.outcome()
        unions = [ext.avail(s.fa) | ext.avail(s.fb) for s in sides]
        if k == 3:
            if unions[0] & unions[1]:
                _three_common_shared(ext, sides, unions[0] & unions[1])
                return ext.outcome()
            _three_common_disjoint(ext, sides, unions, common)
            continue
        if _four_common(ext, sides, common):
            return ext.outcome()
    ext.fail(f"no-cross-edge case did not settle within {cap} steps")


def _first_with(ext: Extension, edges: Sequence[int], color: int) -> int:
    for e in edges:
        if color in ext.avail(e):
            return e
    ext.fail(f"no edge of {list(edges)} can take color {color}")


def _two_common(ext: Extension, sides: List[_Side], common: ColorSet):
    unions = [ext.avail(s.fa) | ext.avail(s.fb) for s in sides]
    shared = common & unions[0] & unions[1]
    if shared:
        alpha = shared.first()
        x = _first_with(ext, sides[0].fs, alpha)
        y = _first_with(ext, sides[1].fs, alpha)
        ext.bind_colors(alpha1=alpha)
        ext.assign(x, alpha)
        ext.assign(y, alpha)
        rest = [f for f in sides[0].fs + sides[1].fs if f not in (x, y)]
        ext.finish(greedy_order=rest, sdr_targets=[sides[0].e, sides[1].e])
        return
    if not (common & unions[0]) and not (common & unions[1]):
        ext.note("common colors unused by the f-edges")
        ext.finish(greedy_order=list(sides[0].fs + sides[1].fs), sdr_targets=[sides[0].e, sides[1].e])
        return

    s = 0 if common & unions[0] else 1
    side, other = sides[s], sides[1 - s]
    alpha1 = (common & unions[s]).first()
    alpha2 = common.without(alpha1).first()
    fa, fb = side.fs
    if alpha1 not in ext.avail(fa):
        fa, fb = fb, fa
    ext.bind_colors(alpha1=alpha1, alpha2=alpha2)

    if unions[s] != common:
        if alpha1 in ext.avail(fb):
            beta = (unions[s] - common).first()
            ext.bind_colors(beta=beta)
            if beta in ext.avail(fa):
                ext.assign(fa, beta)
                ext.assign(fb, alpha1)
            else:
                ext.assign(fa, alpha1)
                ext.assign(fb, beta)
        else:
            beta = (ext.avail(fb) - common).first()
            ext.check(beta is not None, "f-edge has no color outside the common pair")
            ext.bind_colors(beta=beta)
            ext.assign(fa, alpha1)
            ext.assign(fb, beta)
        ext.finish(greedy_order=list(other.fs), sdr_targets=[other.e, side.e])
        return

    # both f-edges of this side see exactly the common pair: move alpha1 onto g
    ext.note("recolor g with alpha1")
    old = ext.recolor(side.g, alpha1)
    ext.bind_colors(g_old=old)
    ext.assign(fa, old)
    ext.assign(fb, alpha2)
    ext.finish(sdr_targets=list(other.fs) + [other.e, side.e])


def _three_common_shared(ext: Extension, sides: List[_Side], shared: ColorSet):
    alpha = shared.first()
    x = _first_with(ext, sides[0].fs, alpha)
    y = _first_with(ext, sides[1].fs, alpha)
    ext.bind_colors(alpha1=alpha)
    ext.assign(x, alpha)
    ext.assign(y, alpha)
    rest = [f for f in sides[0].fs + sides[1].fs if f not in (x, y)]
    ext.finish(greedy_order=rest, sdr_targets=[sides[0].e, sides[1].e])


def _three_common_disjoint(ext: Extension, sides: List[_Side], unions: List[ColorSet], common: ColorSet):
    candidates = [s for s in (0, 1) if len(unions[s]) == 2]
    ext.check(bool(candidates), "one side should see only two colors")
    inside = [s for s in candidates if unions[s] <= common]
    s = inside[0] if inside else candidates[0]
    alpha1 = (unions[s] & common).first()
    ext.check(alpha1 is not None, "side colors miss the common set")
    old = ext.recolor(sides[s].g, alpha1)
    ext.note(f"recolor g{s + 1}: {old} -> {alpha1}")


def _four_common(ext: Extension, sides: List[_Side], common: ColorSet) -> bool:
    """Returns True when finished, False after a recoloring that lowers the common count."""
    old1 = ext.erase(sides[0].g)
    old2 = ext.erase(sides[1].g)
    lists = [ext.avail(sides[0].g), ext.avail(sides[1].g)]
    if len(lists[0]) == 1 and len(lists[1]) == 1:
        ext.assign(sides[0].g, old1)
        ext.assign(sides[1].g, old2)
        pair = _matching_f_pairs(ext, sides)
        ext.check(pair is not None, "no equal color pair for the two sides")
        (x1, y1), (x2, y2) = pair
        ext.assign(sides[0].fa, x1)
        ext.assign(sides[0].fb, y1)
        ext.assign(sides[1].fa, x2)
        ext.assign(sides[1].fb, y2)
        ext.sdr([sides[0].e, sides[1].e])
        return True

    s = 0 if len(lists[0]) >= 2 else 1
    olds = (old1, old2)
    alpha1 = (lists[s] & common).first()
    ext.check(alpha1 is not None, "erased g sees every common color")
    ext.assign(sides[1 - s].g, olds[1 - s])
    ext.assign(sides[s].g, alpha1)
    ext.note(f"recolor g{s + 1}: {olds[s]} -> {alpha1}")
    return False


def _matching_f_pairs(ext: Extension, sides: List[_Side]):
    a = [ext.avail(f) for f in sides[0].fs + sides[1].fs]
    for x1 in a[0]:
        for y1 in a[1]:
            if x1 == y1:
                continue
            for x2, y2 in ((x1, y1), (y1, x1)):
                if x2 in a[2] and y2 in a[3]:
                    return (x1, y1), (x2, y2)
    return None


# ----------------------------------------------------------------------
# Cubic with a cut vertex
# ----------------------------------------------------------------------

def extend_cut_vertex(engine, g: Graph, v0: int) -> LemmaOutcome:
    """Color both sides of G - v0 recursively, align their colors, then color the three edges at v0."""
    ext = Extension(g, 'cut_vertex')
    nbrs = g.adj[v0]
    ext.check(len(nbrs) == 3, f"cut vertex {v0} should have degree 3")
    pairs = [(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1:] if g.has_edge(a, b)]
    ext.check(len(pairs) == 1, "exactly one edge among the neighbors of the cut vertex")
    v1, v2 = pairs[0]
    (u0,) = [x for x in nbrs if x not in (v1, v2)]
    ext.bind_vertices(v0=v0, u0=u0, v1=v1, v2=v2)

    rest, back = g.induced_subgraph([x for x in range(g.n) if x != v0])
    index = {v: i for i, v in enumerate(back)}
    comps = rest.components()
    ext.check(len(comps) == 2, f"G - v0 has {len(comps)} components")
    side1 = next(c for c in comps if index[u0] in c)
    side2 = next(c for c in comps if index[v1] in c)
    ext.check(index[v2] in side2 and side1 is not side2, "v1v2 lies on the far side of u0")

    for comp in (side1, side2):
        sub, sub_back = g.induced_subgraph([back[x] for x in comp])
        result = engine.color_component(sub, depth=engine.depth + 1)
        ext.children.extend(result.trace)
        ext.check(not result.exceptional, "a side came back exceptional")
        for e, (x, y) in enumerate(sub.edges):
            ext.c[g.edge_id(sub_back[x], sub_back[y])] = result.coloring[e]
    side1_vertices = {back[x] for x in side1}
    g1_edges = [e for e, (x, y) in enumerate(g.edges) if x in side1_vertices and y in side1_vertices]

    a, b = _other_neighbors(g, u0, v0)
    ext.check(g.has_edge(a, b), "neighbors of u0 must be adjacent")
    (p,) = _other_neighbors(g, v1, v0, v2)
    (q,) = _other_neighbors(g, v2, v0, v1)
    f1, f2, f3 = ext.edge(u0, a), ext.edge(u0, b), ext.edge(a, b)
    h1, h2, h3 = ext.edge(v1, v2), ext.edge(v1, p), ext.edge(v2, q)
    e0, e1, e2 = ext.edge(v0, u0), ext.edge(v0, v1), ext.edge(v0, v2)
    ext.bind_edges(e0=e0, e1=e1, e2=e2, f1=f1, f2=f2, f3=f3, h1=h1, h2=h2, h3=h3)

    fset = sorted(ext.c[f] for f in (f1, f2, f3))
    hset = sorted(ext.c[h] for h in (h1, h2, h3))
    mapping = dict(zip(fset, hset))
    rest_from = [col for col in range(1, 8) if col not in fset]
    rest_to = [col for col in range(1, 8) if col not in hset]
    mapping.update(zip(rest_from, rest_to))
    ext.c = permute_colors(ext.c, g1_edges, mapping)
    ext.check({ext.c[f] for f in (f1, f2, f3)} == set(hset), "side colors not aligned")
    ext.check(is_good(g, ext.c), "aligned sides conflict")
    ext.note(f"side permutation {mapping}")

    targets = [e0, e1, e2]
    extended = sdr_extend(g, ext.c, targets)
    if extended is None:
        lists = [ext.avail(e) for e in targets]
        ext.check(lists[0] == lists[1] == lists[2] and len(lists[0]) == 2,
                  "the three edges at v0 should share one color pair")
        (f4,) = [e for e in g.incident(a) if e not in (f1, f3)]
        alpha1 = lists[0].first()
        beta = ext.c[f4]
        ext.bind_edges(f4=f4)
        ext.bind_colors(alpha1=alpha1, beta=beta)
        ext.c = permute_colors(ext.c, g1_edges, {alpha1: beta, beta: alpha1})
        ext.note(f"swap {alpha1} and {beta} on the u0 side")
        ext.check(ext.avail(e0) == lists[0].without(alpha1) | ColorSet([beta]), "A(e0) after the swap")
        union = ext.avail(e0) | ext.avail(e1) | ext.avail(e2)
        ext.check(len(union) >= 3, "union of the three lists should have three colors")
        extended = sdr_extend(g, ext.c, targets)
        ext.check(extended is not None, "no list extension after the swap")
    ext.c = extended
    return ext.outcome()


# ----------------------------------------------------------------------
# 4-cycles
# ----------------------------------------------------------------------

def extend_chorded_c4(engine, g: Graph, cycle: Tuple[int, int, int, int]) -> LemmaOutcome:
    """4-cycle v1 v2 v3 v4 with chord v1v3 in a 2-connected claw-free cubic graph."""
    ext = Extension(g, 'chorded_c4')
    v1, v2, v3, v4 = cycle
    ext.bind_vertices(v1=v1, v2=v2, v3=v3, v4=v4)
    ext.check(g.has_edge(v1, v3) and not g.has_edge(v2, v4), "chord must be v1v3 only")
    (u2,) = _other_neighbors(g, v2, v1, v3)
    (u4,) = _other_neighbors(g, v4, v1, v3)
    ext.bind_vertices(u2=u2, u4=u4)
    ext.check(u2 != u4 and not g.has_edge(u2, u4), "u2 and u4 must be distinct and non-adjacent")
    if set(g.adj[u2]) & set(g.adj[u4]):
        return _terminal(engine, ext, 'H4')

    a, b = _other_neighbors(g, u2, v2)
    c, d = _other_neighbors(g, u4, v4)
    ext.check(g.has_edge(a, b) and g.has_edge(c, d), "neighbors of u2 and of u4 must be adjacent")
    e1, e2, e3, e4, e5 = ext.edge(v1, v2), ext.edge(v2, v3), ext.edge(v3, v4), ext.edge(v4, v1), ext.edge(v1, v3)
    f1, f2 = ext.edge(v2, u2), ext.edge(v4, u4)
    g1, g2, g3, g4 = ext.edge(u2, a), ext.edge(u2, b), ext.edge(u4, c), ext.edge(u4, d)
    h1 = ext.edge(a, b)
    ext.bind_edges(e1=e1, e2=e2, e3=e3, e4=e4, e5=e5, f1=f1, f2=f2, g1=g1, g2=g2, g3=g3, g4=g4, h1=h1)
    targets = [e1, e2, e3, e4, e5, f1, f2]
    ext.seed([v1, v2, v3, v4], targets)
    ext.check(all(len(ext.avail(e)) == 5 for e in (e1, e2, e3, e4)), "|A(e_i)| = 5 on the cycle")
    ext.check(len(ext.avail(e5)) == 7, "the chord sees no colors")
    ext.check(len(ext.avail(f1)) == 2 and len(ext.avail(f2)) == 2, "|A(f1)| = |A(f2)| = 2")

    if len(ext.avail(e1) | ext.avail(e3)) >= 6:
        ext.sdr(targets)
        return ext.outcome()

    ext.check(ext.avail(e1) == ext.avail(e2) and ext.avail(e3) == ext.avail(e4), "A(e1)=A(e2), A(e3)=A(e4)")
    ext.check(ext.avail(e1) == ext.avail(e3), "cycle lists coincide")
    # rename colors so the cycle lists become [1, 5]
    top = sorted((ext.c[g1], ext.c[g2]))
    low = [col for col in range(1, 8) if col not in top]
    rename = dict(zip(low, range(1, 6)))
    rename.update(zip(top, (6, 7)))
    inverse = {v: k for k, v in rename.items()}
    colored = [e for e in range(g.m) if ext.c[e] is not None]
    ext.c = permute_colors(ext.c, colored, rename)
    ext.note(f"rename {rename}")
    ext.check(ext.avail(e1) == ColorSet(range(1, 6)), "renamed lists should be [1, 5]")
    ext.check({ext.c[g3], ext.c[g4]} == {6, 7}, "g3 and g4 carry 6 and 7")

    old1 = ext.erase(g1)
    old2 = ext.erase(g2)
    high = ColorSet([6, 7])
    free1 = ext.avail(g1) - high
    free2 = ext.avail(g2) - high
    if free1:
        ext.assign(g1, free1.first())
        ext.assign(g2, old2)
    elif free2:
        ext.assign(g2, free2.first())
        ext.assign(g1, old1)
    else:
        ext.note("recolor h1")
        old_h = ext.recolor(h1, old1)
        ext.assign(g1, old_h)
        ext.assign(g2, old2)
    ext.check(len(ext.avail(e1) | ext.avail(e3)) >= 6, "|A(e1) | A(e3)| >= 6 after the recoloring")
    ext.sdr(targets)
    ext.c = permute_colors(ext.c, range(g.m), inverse)
    return ext.outcome()


def extend_induced_c4(engine, g: Graph, cycle: Tuple[int, int, int, int]) -> LemmaOutcome:
    """Induced 4-cycle whose consecutive vertex pairs share the outside neighbors u1 and u2."""
    ext = Extension(g, 'induced_c4')
    third = {}
    for i, x in enumerate(cycle):
        (t,) = _other_neighbors(g, x, cycle[i - 1], cycle[(i + 1) % 4])
        third[x] = t
    a, b, c, d = cycle
    if third[a] == third[b] and third[c] == third[d]:
        v1, v2, v3, v4 = a, b, c, d
    elif third[b] == third[c] and third[d] == third[a]:
        v1, v2, v3, v4 = b, c, d, a
    else:
        ext.fail("cycle vertices do not pair up on common neighbors")
    u1, u2 = third[v1], third[v3]
    ext.bind_vertices(v1=v1, v2=v2, v3=v3, v4=v4, u1=u1, u2=u2)
    ext.check(u1 != u2 and not g.has_edge(u1, u2), "u1 and u2 must be distinct and non-adjacent")

    e1, e2, e3, e4 = ext.edge(v1, v2), ext.edge(v2, v3), ext.edge(v3, v4), ext.edge(v4, v1)
    f1, f2, f3, f4 = ext.edge(v1, u1), ext.edge(v2, u1), ext.edge(v3, u2), ext.edge(v4, u2)
    ext.bind_edges(e1=e1, e2=e2, e3=e3, e4=e4, f1=f1, f2=f2, f3=f3, f4=f4)
    ext.seed([v1, v2, v3, v4], [e1, e2, e3, e4, f1, f2, f3, f4])
    ext.check(all(len(ext.avail(f)) == 4 for f in (f1, f2, f3, f4)), "|A(f_j)| = 4")

    alpha = (ext.avail(f1) & ext.avail(f3)).first()
    ext.check(alpha is not None, "f1 and f3 share no color")
    ext.bind_colors(alpha=alpha)
    ext.assign(f1, alpha)
    ext.assign(f3, alpha)
    ext.check(len(ext.avail(f2)) == 3 and len(ext.avail(f4)) == 3, "|A(f2)| = |A(f4)| = 3")

    beta = (ext.avail(f2) & ext.avail(f4)).first()
    if beta is not None:
        ext.bind_colors(beta=beta)
        ext.assign(f2, beta)
        ext.assign(f4, beta)
        ext.sdr([e2, e4, e1, e3])
    else:
        ext.check(len(ext.avail(f2) | ext.avail(f4)) == 6, "|A(f2) | A(f4)| = 6")
        ext.sdr([f2, f4, e1, e2, e3, e4])
    return ext.outcome()


# ----------------------------------------------------------------------
# Minimum induced even cycle
# ----------------------------------------------------------------------

class _CycleEdges:
    """EdgeIds of a lifted cycle under 1-based names e_i, f_j, g_{2j}."""

    def __init__(self, ext: Extension, frame):
        self.ext = ext
        self.frame = frame
        self.size = len(frame.v)

    def v(self, i: int) -> int:
        return self.frame.v[(i - 1) % self.size]

    def e(self, i: int) -> int:
        # e_i = v_{i-1} v_i, e_1 = v_{2p} v_1
        return self.ext.edge(self.v(i - 1), self.v(i))

    def f(self, j: int) -> int:
        # f_{2t-1} = v_{2t-1} u_{2t}, f_{2t} = v_{2t} u_{2t}
        return self.ext.edge(self.v(j), self.frame.u[(j - 1) // 2])

    def g(self, j: int) -> int:
        # g_{2t} = u_{2t} w_{2t}
        return self.ext.edge(self.frame.u[j // 2 - 1], self.frame.w[j // 2 - 1])


def extend_even_cycle(engine, g: Graph) -> LemmaOutcome:
    """
    Triangle-covered graph: color G' (the cycle and three u-vertices removed,
    w2w4 added) recursively, seed the cycle neighborhood, color the chain,
    then close the last edge e4.
    """
    ext = Extension(g, 'even_cycle')
    base = min_induced_even_cycle(g)
    frame = next((r for r in cycle_rotations(g, base) if not g.has_edge(r.w[0], r.w[1])), None)
    ext.check(frame is not None, "no rotation with w2w4 missing")
    p2 = len(frame.v)
    ext.bind_vertices(p2=p2, **{f"v{i + 1}": x for i, x in enumerate(frame.v)},
                      **{f"u{2 * (j + 1)}": x for j, x in enumerate(frame.u)},
                      **{f"w{2 * (j + 1)}": x for j, x in enumerate(frame.w)})
    names = _CycleEdges(ext, frame)
    w2, w4 = frame.w[0], frame.w[1]

    # G' and its recursive coloring
    removed = set(frame.v) | set(frame.u[:3])
    kept = [x for x in range(g.n) if x not in removed]
    sub, back = g.induced_subgraph(kept)
    index = {v: i for i, v in enumerate(back)}
    helper = (index[w2], index[w4])
    reduced = Graph(sub.n, list(sub.edges) + [helper])
    reduced_coloring = PartialColoring(reduced.m)
    for comp in reduced.components():
        ext.check(any(reduced.degree(x) < 3 for x in comp), "a component of G' is cubic")
        part, part_back = reduced.induced_subgraph(comp)
        result = engine.color_component(part, depth=engine.depth + 1)
        ext.children.extend(result.trace)
        ext.check(not result.exceptional, "a component of G' came back exceptional")
        for e, (x, y) in enumerate(part.edges):
            reduced_coloring[reduced.edge_id(part_back[x], part_back[y])] = result.coloring[e]
    alpha = reduced_coloring[reduced.edge_id(*helper)]
    for e, (x, y) in enumerate(reduced.edges):
        if (x, y) != tuple(sorted(helper)):
            ext.c[g.edge_id(back[x], back[y])] = reduced_coloring[e]
    ext.check(is_good(g, ext.c), "coloring of G' does not lift")

    g2e, g4e, g6e = names.g(2), names.g(4), names.g(6)
    h12 = [e for e in g.incident(w2) if e != g2e]
    h34 = [e for e in g.incident(w4) if e != g4e]
    ext.check(len(h12) == 2 and len(h34) == 2, "w2 and w4 must be cubic")
    c1, c2 = (ext.c[e] for e in h12)
    beta = ext.avail(g6e).without(alpha).first()
    ext.check(beta is not None, "g6 has no color besides alpha")
    if ext.c[h34[0]] == beta:
        h34.reverse()
    c3, c4 = (ext.c[e] for e in h34)
    ext.check(len({alpha, c1, c2, c3, c4}) == 5, "alpha and the h colors must be distinct")
    ext.bind_edges(h1=h12[0], h2=h12[1], h3=h34[0], h4=h34[1])

    e = {i: names.e(i) for i in range(1, p2 + 1)}
    f = {j: names.f(j) for j in range(1, p2 + 1)}
    ext.bind_edges(**{f"e{i}": x for i, x in e.items()}, **{f"f{j}": x for j, x in f.items()})

    ext.assign(g2e, alpha)
    ext.assign(g4e, alpha)
    ext.assign(e[6], alpha)
    ext.assign(g6e, beta)
    ext.assign(e[5], c3)
    gamma = ext.avail(f[5]).without(c4).first()
    ext.check(gamma is not None, "f5 has no color besides c4")
    ext.assign(f[5], gamma)
    ext.bind_colors(alpha=alpha, beta=beta, gamma=gamma, c1=c1, c2=c2, c3=c3, c4=c4)

    psi = {x: ext.avail(x) for x in (f[1], f[2], f[3], f[4], e[2], e[3], e[4])}
    ext.check(len(psi[e[2]]) == 6 and len(psi[e[3]]) == 5, "|A(e2)| = 6, |A(e3)| = 5")
    ext.check(len(psi[e[4]]) == 4 and len(psi[f[4]]) == 3, "|A(e4)| = 4, |A(f4)| = 3")
    palette = ColorSet.palette(7)
    ext.check(psi[f[1]] == psi[f[2]] == palette.without(alpha, c1, c2), "A(f1) = A(f2) = [7] - {alpha, c1, c2}")
    ext.check(psi[e[2]] == palette.without(alpha), "A(e2) = [7] - {alpha}")
    ext.check(psi[e[4]] == psi[f[4]] | ColorSet([c4]), "A(e4) = A(f4) + c4")
    ext.check(psi[f[3]] == psi[f[4]] | ColorSet([gamma]), "A(f3) = A(f4) + gamma")
    ext.check(psi[e[3]] == psi[f[4]] | ColorSet([c4, gamma]), "A(e3) = A(f4) + {c4, gamma}")

    chain = [f[6]]
    for i in range(7, p2 + 1):
        chain.extend((e[i], f[i]))
    chain.extend((e[1], f[1], e[2], f[2], e[3], f[3], f[4]))
    ext.greedy(chain)

    _close_last_edge(ext, e, f, psi, gamma, c4)
    return ext.outcome()


def _close_last_edge(ext: Extension, e: Dict[int, int], f: Dict[int, int],
                     psi: Dict[int, ColorSet], gamma: int, c4: int):
    direct = ext.avail(e[4])
    if direct:
        ext.assign(e[4], direct.first())
        return

    a2, b2, a3, b3 = ext.c[e[2]], ext.c[f[2]], ext.c[e[3]], ext.c[f[3]]
    if gamma not in (a2, b2, a3):
        ext.note("gamma placement")
        if b3 != gamma:
            # f3 saw e2, f2, e3 and f4, so the freed b3 now fits e4
            ext.recolor(f[3], gamma)
            direct = ext.avail(e[4])
            ext.check(b3 in direct, "freed b3 should be available for e4")
            ext.assign(e[4], b3)
            return
        b4 = ext.erase(f[4])
        b4_star = ext.avail(f[4]).without(b4).first()
        ext.check(b4_star is not None, "no b4* for f4")
        ext.assign(f[4], b4_star)
        ext.assign(e[4], b4)
        return

    ext.check(b3 != gamma, "b3 differs from gamma")
    b4 = ext.c[f[4]]
    if a3 not in psi[f[4]]:
        ext.note("closing case 1")
        spare = psi[f[4]].without(b3, b4)
        ext.check(len(spare) == 1, "A(f4) = {b3, b4, alpha*}")
        alpha_star = spare.first()
        ext.bind_colors(alpha_star=alpha_star)
        ext.recolor(f[4], alpha_star)
        ext.assign(e[4], b4)
        return

    ext.note("closing case 2")
    ext.check({a2, b2} == {c4, gamma}, "{a2, b2} = {c4, gamma}")
    ext.erase(f[3])
    ext.erase(f[4])
    if a2 in psi[f[2]]:
        b1 = ext.erase(f[1])
        ext.erase(e[2])
        ext.assign(f[1], a2)
        ext.assign(e[2], b1)
        if a2 == c4:
            ext.assign(e[4], c4)
            ext.sdr([f[3], f[4]])
        else:
            ext.assign(f[3], gamma)
            ext.sdr([e[4], f[4]])
        return

    if a2 == c4:
        ext.erase(f[2])
        b2_star = ext.avail(f[2]).without(b2).first()
        ext.check(b2_star is not None, "no b2* for f2")
        ext.assign(f[2], b2_star)
        ext.assign(f[3], gamma)
        ext.sdr([e[4], f[4]])
    else:
        ext.erase(e[3])
        ext.erase(f[2])
        b2_star = ext.avail(f[2]).without(b2).first()
        ext.check(b2_star is not None, "no b2* for f2")
        ext.assign(f[2], b2_star)
        ext.assign(e[3], c4)
        ext.sdr([e[4], f[3], f[4]])
