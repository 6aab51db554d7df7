"""Complement of the attack graph, chordality, induced cycle census,
and brush recognition.

A brush polyomino is simple and thin, with one maximal interval (the
handle) met by every other maximal interval (the bristles), and at most
as many bristles as handle cells. The complement of the attack graph of
a simple thin polyomino is chordal exactly for short brushes (all
bristles of length 2); among simple non-thin polyominoes only two small
exceptional shapes have a chordal complement.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import NotSimpleThinError, RankTooSmallError
from .graphs import SimpleGraph
from .polyomino import (
    CellInterval,
    Polyomino,
    canonical_cells,
    maximal_intervals,
    shape_predicates,
)
from .rook_complex import attack_graph, f_vector

SHORT_BRUSH = "short_brush"
EXCEPTIONAL_NONTHIN = "exceptional_nonthin"
OTHER = "other"

# The two simple non-thin shapes with a chordal complement, up to symmetry:
# the 2x2 square and the P-pentomino (2x2 block plus one cell beside it).
_EXCEPTIONAL_KEYS = frozenset(
    {
        canonical_cells(((0, 0), (1, 0), (0, 1), (1, 1))),
        canonical_cells(((0, 0), (1, 0), (2, 0), (0, 1), (1, 1))),
    }
)


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    elimination_order: tuple | None
    chordless_cycle: tuple | None


@dataclass(frozen=True)
class BrushDecomposition:
    handle: CellInterval
    bristles: tuple[CellInterval, ...]
    lengths: tuple[int, ...]
    short: bool
    pure_brush: bool
    d: int


@dataclass(frozen=True)
class ChordalityClassification:
    complement_chordal: bool
    category: str
    consistent: bool


def complement_graph(graph: SimpleGraph) -> SimpleGraph:
    """Same vertices; edge exactly where the input has a non-edge."""
    verts = graph.vertices
    edges = frozenset(
        frozenset((u, v))
        for u, v in combinations(verts, 2)
        if not graph.adjacent(u, v)
    )
    return SimpleGraph(verts, edges)


def _mcs_order(graph: SimpleGraph) -> list:
    """Maximum cardinality search visit order, ties broken by vertex order."""
    weight = {v: 0 for v in graph.vertices}
    unnumbered = set(graph.vertices)
    order = []
    while unnumbered:
        v = max(sorted(unnumbered), key=lambda u: weight[u])
        order.append(v)
        unnumbered.remove(v)
        for u in graph.neighbors(v):
            if u in unnumbered:
                weight[u] += 1
    return order


def _verify_elimination(graph: SimpleGraph, elim: list) -> tuple | None:
    """Return a failing triple (v, w, x) if ``elim`` is not a perfect
    elimination order: w is v's first later neighbor and x a later
    neighbor not adjacent to w."""
    pos = {v: i for i, v in enumerate(elim)}
    for v in elim:
        later = [u for u in graph.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        w = min(later, key=lambda u: pos[u])
        for x in later:
            if x != w and not graph.adjacent(w, x):
                return (v, w, x)
    return None


def _shortest_chordless_cycle(graph: SimpleGraph) -> tuple | None:
    """Shortest cycle of length >= 4 with no chord, if one exists.

    For each vertex b and non-adjacent neighbors a, c, a shortest a-c path
    avoiding the rest of b's closed neighborhood closes into a chordless
    cycle through b; scanning all triples finds a globally shortest one.
    """
    best: tuple | None = None
    for b in graph.vertices:
        nbrs = sorted(graph.neighbors(b))
        blocked = set(nbrs) | {b}
        for a, c in combinations(nbrs, 2):
            if graph.adjacent(a, c):
                continue
            if best is not None and len(best) == 4:
                return best
            allowed = (set(graph.vertices) - blocked) | {a, c}
            parent = {a: None}
            queue = deque([a])
            while queue:
                u = queue.popleft()
                if u == c:
                    break
                for w in sorted(graph.neighbors(u)):
                    if w in allowed and w not in parent:
                        parent[w] = u
                        queue.append(w)
            if c not in parent:
                continue
            path = [c]
            while path[-1] != a:
                path.append(parent[path[-1]])
            cycle = tuple([b] + path[::-1])
            if best is None or len(cycle) < len(best):
                best = cycle
    return best


def is_chordal(graph: SimpleGraph) -> ChordalityResult:
    """Maximum cardinality search with elimination-order verification.

    On success the witness is the verified perfect elimination order; on
    failure it is a shortest chordless cycle of length at least 4.
    """
    elim = _mcs_order(graph)[::-1]
    if _verify_elimination(graph, elim) is None:
        return ChordalityResult(True, tuple(elim), None)
    cycle = _shortest_chordless_cycle(graph)
    if cycle is None:
        raise RuntimeError("elimination check failed but no chordless cycle found")
    return ChordalityResult(False, None, cycle)


def induced_cycle_lengths(graph: SimpleGraph, max_len: int) -> set[int]:
    """Lengths of all induced (chordless) cycles up to ``max_len``.

    Exhaustive search over induced paths anchored at each cycle's least
    vertex; each cycle is visited in one orientation only.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    lengths: set[int] = set()
    verts = sorted(graph.vertices)

    def extend(start, path: tuple) -> None:
        last = path[-1]
        interior = path[1:-1]
        for w in sorted(graph.neighbors(last)):
            if w <= start or w in path:
                continue
            if any(graph.adjacent(w, u) for u in interior):
                continue
            # The first step is always an extension; afterwards adjacency
            # to the start closes the cycle and blocks further growth.
            if len(path) >= 2 and graph.adjacent(w, start):
                if path[1] < w:
                    lengths.add(len(path) + 1)
                continue
            if len(path) + 1 < max_len:
                extend(start, path + (w,))

    for s in verts:
        extend(s, (s,))
    return {l for l in lengths if l <= max_len}


def brush_decomposition(poly: Polyomino) -> BrushDecomposition | None:
    """Decompose a simple thin polyomino as a handle plus bristles.

    Tries every maximal interval as the handle; valid when all remaining
    intervals meet it and their number does not exceed the handle length.
    If several handles work, a decomposition flagged pure is preferred,
    then a short one. ``pure_brush`` additionally requires the bristles
    to partition the cells with handle length = bristle count = rook
    number.
    """
    preds = shape_predicates(poly)
    if not (preds.simple and preds.thin):
        raise NotSimpleThinError("brush recognition needs a simple thin polyomino")
    if poly.rank < 2:
        raise RankTooSmallError("rank 1 has no maximal intervals")
    ivs = maximal_intervals(poly)
    found: list[BrushDecomposition] = []
    for handle in ivs:
        bristles = tuple(iv for iv in ivs if iv != handle)
        if len(bristles) > handle.length:
            continue
        if any(not (iv.cell_set & handle.cell_set) for iv in bristles):
            continue
        bristles = tuple(
            sorted(bristles, key=lambda iv: min(iv.cell_set & handle.cell_set))
        )
        lengths = tuple(iv.length for iv in bristles)
        short = all(l == 2 for l in lengths)
        covered: set = set()
        disjoint = True
        for iv in bristles:
            if covered & iv.cell_set:
                disjoint = False
                break
            covered |= iv.cell_set
        d = f_vector(poly).rook_number
        pure = (
            bool(bristles)
            and disjoint
            and covered == set(poly.cells)
            and handle.length == len(bristles) == d
        )
        found.append(BrushDecomposition(handle, bristles, lengths, short, pure, d))
    if not found:
        return None
    found.sort(key=lambda b: (not b.pure_brush, not b.short, b.handle.anchor))
    return found[0]


def classify_chordality(poly: Polyomino) -> ChordalityClassification:
    """Classify a polyomino against the chordality characterization.

    ``consistent`` holds when the complement of the attack graph is
    chordal exactly for short brushes and the two exceptional non-thin
    shapes. The monomino counts as a degenerate short brush: it has no
    intervals at all and its one-vertex complement is chordal.
    """
    chordal = is_chordal(complement_graph(attack_graph(poly))).chordal
    preds = shape_predicates(poly)
    if poly.rank == 1:
        category = SHORT_BRUSH
    elif preds.simple and preds.thin:
        brush = brush_decomposition(poly)
        category = SHORT_BRUSH if brush is not None and brush.short else OTHER
    elif preds.simple and canonical_cells(poly.cells) in _EXCEPTIONAL_KEYS:
        category = EXCEPTIONAL_NONTHIN
    else:
        category = OTHER
    return ChordalityClassification(chordal, category, chordal == (category != OTHER))
