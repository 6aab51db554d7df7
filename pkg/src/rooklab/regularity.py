"""Elementary symmetric machinery, closed-form face counts for pure
brushes, exact induced matching, and combinatorial regularity.

For a pure brush with bristle lengths l_1..l_d the face counts have the
closed form f_(k-1) = e_k(l-1) + (d-k+1) e_(k-1)(l-1) and the h-entries
the same form in l-2, where e_k is the k-th elementary symmetric
polynomial. Regularity is only ever computed combinatorially, as the
degree of the h-vector, and only for pure simple thin polyominoes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .chordal import brush_decomposition
from .errors import (
    IndexOutOfRangeError,
    NotApplicableError,
    NotPureBrushError,
    RankTooSmallError,
)
from .graphs import SimpleGraph
from .polyomino import Cell, CellInterval, Polyomino, maximal_intervals, shape_predicates
from .rook_complex import attack_graph, f_vector, h_from_f, is_pure


@dataclass(frozen=True)
class SigmaTriple:
    sigma: int
    sigma_prime: int
    sigma_double: int


@dataclass(frozen=True)
class BrushVectors:
    f: tuple[int, ...]
    h: tuple[int, ...]


@dataclass(frozen=True)
class MatchingCertificate:
    edges: tuple[tuple[Cell, Cell], ...]
    size: int


@dataclass(frozen=True)
class RegularityMatchReport:
    regularity: int
    nu: int
    single_interval_count: int
    consistent: bool


def elementary_symmetric(k: int, values: Sequence[int]) -> int:
    """e_k over the values; e_0 = 1, and 0 once k exceeds the arity."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > len(values):
        return 0
    acc = [0] * (k + 1)
    acc[0] = 1
    for i, v in enumerate(values):
        for j in range(min(k, i + 1), 0, -1):
            acc[j] += acc[j - 1] * v
    return acc[k]


def _check_lengths(lengths: Sequence[int]) -> tuple[int, ...]:
    lengths = tuple(int(v) for v in lengths)
    if not lengths:
        raise ValueError("length vector is empty")
    if any(v < 2 for v in lengths):
        raise ValueError("bristle lengths are at least 2")
    return lengths


def sigma_triples(lengths: Sequence[int], k: int) -> SigmaTriple:
    """e_k of the lengths, of the lengths minus one, and minus two."""
    lengths = _check_lengths(lengths)
    if not 0 <= k <= len(lengths):
        raise IndexOutOfRangeError(f"k={k} outside 0..{len(lengths)}")
    return SigmaTriple(
        elementary_symmetric(k, lengths),
        elementary_symmetric(k, [v - 1 for v in lengths]),
        elementary_symmetric(k, [v - 2 for v in lengths]),
    )


def check_sigma_identities(lengths: Sequence[int]) -> bool:
    """Verify the three binomial relations tying the shifted symmetric
    polynomials together, exactly, for every k up to the arity."""
    lengths = _check_lengths(lengths)
    d = len(lengths)
    s = [elementary_symmetric(k, lengths) for k in range(d + 1)]
    sp = [elementary_symmetric(k, [v - 1 for v in lengths]) for k in range(d + 1)]
    spp = [elementary_symmetric(k, [v - 2 for v in lengths]) for k in range(d + 1)]
    for k in range(d + 1):
        lhs1 = sum((-1) ** (k - i) * comb(d - i, k - i) * s[i] for i in range(k + 1))
        lhs2 = sum(comb(d - i, k - i) * sp[i] for i in range(k + 1))
        lhs3 = sum((-1) ** (k - i) * comb(d - i, k - i) * sp[i] for i in range(k + 1))
        if lhs1 != sp[k] or lhs2 != s[k] or lhs3 != spp[k]:
            return False
    return True


def brush_fh(lengths: Sequence[int]) -> BrushVectors:
    """Closed-form face counts and h-vector for a pure brush with the
    given bristle lengths; accepts the degenerate single-bristle case."""
    lengths = _check_lengths(lengths)
    d = len(lengths)
    sp = [elementary_symmetric(k, [v - 1 for v in lengths]) for k in range(d + 1)]
    spp = [elementary_symmetric(k, [v - 2 for v in lengths]) for k in range(d + 1)]
    f = [1]
    for k in range(1, d + 1):
        f.append(sp[k] + (d - (k - 1)) * sp[k - 1])
    h = []
    for t in range(d + 1):
        prev = spp[t - 1] if t >= 1 else 0
        h.append(spp[t] + (d - (t - 1)) * prev)
    return BrushVectors(tuple(f), tuple(h))


def _conflict_masks(graph: SimpleGraph) -> tuple[list[tuple[Cell, Cell]], list[int]]:
    edges = graph.edge_pairs()
    masks = [0] * len(edges)
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            a, b = edges[i], edges[j]
            touching = bool(set(a) & set(b)) or any(
                graph.adjacent(u, v) for u in a for v in b
            )
            if touching:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return edges, masks


def induced_matching_number(graph: SimpleGraph) -> MatchingCertificate:
    """Exact maximum induced matching, by branch and bound over edges.

    Two edges conflict when they share an endpoint or are joined by an
    edge; an induced matching is an independent set in that conflict
    graph. The bound combines the remaining-edge count with a greedy
    matching on the conflict graph (each conflicting pair contributes at
    most one edge). The certificate is re-verified before returning.
    """
    edges, conflict = _conflict_masks(graph)
    n = len(edges)
    if n == 0:
        return MatchingCertificate((), 0)

    avail0 = (1 << n) - 1

    # Greedy seed: scan edges in order, keep whatever fits.
    m = avail0
    seed = 0
    size = 0
    while m:
        b = m & -m
        v = b.bit_length() - 1
        seed |= b
        size += 1
        m &= ~conflict[v] & ~b
    best_size, best_mask = size, seed

    def upper_bound(avail: int) -> int:
        total = avail.bit_count()
        m = avail
        pairs = 0
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            hit = m & conflict[v]
            if hit:
                m ^= hit & -hit
                pairs += 1
        return total - pairs

    def expand(avail: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        if avail == 0:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + upper_bound(avail) <= best_size:
            return
        b = avail & -avail
        v = b.bit_length() - 1
        expand(avail & ~conflict[v] & ~b, chosen | b, size + 1)
        expand(avail & ~b, chosen, size)

    expand(avail0, 0, 0)

    picked = []
    m = best_mask
    while m:
        b = m & -m
        picked.append(edges[b.bit_length() - 1])
        m ^= b
    picked.sort()
    _verify_induced_matching(graph, picked)
    return MatchingCertificate(tuple(picked), best_size)


def _verify_induced_matching(graph: SimpleGraph, edges: list[tuple[Cell, Cell]]) -> None:
    matched = [v for e in edges for v in e]
    if len(set(matched)) != len(matched):
        raise RuntimeError("matching certificate has shared endpoints")
    chosen = {frozenset(e) for e in edges}
    for u, v in combinations(matched, 2):
        if graph.adjacent(u, v) and frozenset((u, v)) not in chosen:
            raise RuntimeError("matching certificate is not induced")


def is_interval_matching(poly: Polyomino, edges: Sequence[tuple[Cell, Cell]]) -> bool:
    """Interval-level validation view of an induced matching.

    The edges must be pairwise disjoint attacking pairs, each inside its
    maximal interval, and no interval may cross two of those intervals
    inside the matched pairs. This is implied by the graph-level
    definition but is strictly weaker: a foreign matched endpoint lying
    on the same interval as a pair, beyond it, is not detected here.
    """
    ivs = maximal_intervals(poly)
    graph = attack_graph(poly)
    matched: set[Cell] = set()
    homes: list[CellInterval] = []
    pairs: list[frozenset[Cell]] = []
    for a, b in edges:
        if a in matched or b in matched or a == b:
            return False
        matched |= {a, b}
        if not graph.adjacent(a, b):
            return False
        home = [iv for iv in ivs if a in iv and b in iv]
        if len(home) != 1:
            return False
        homes.append(home[0])
        pairs.append(frozenset((a, b)))
    for j in range(len(edges)):
        for k in range(j + 1, len(edges)):
            for connector in ivs:
                meets_j = connector.cell_set & homes[j].cell_set
                meets_k = connector.cell_set & homes[k].cell_set
                if meets_j and meets_k and meets_j <= pairs[j] and meets_k <= pairs[k]:
                    return False
    return True


def single_cell_intervals(poly: Polyomino) -> list[CellInterval]:
    """Intervals owning at least two cells that belong to no other interval."""
    if poly.rank < 2:
        raise RankTooSmallError("rank 1 has no maximal intervals")
    ivs = maximal_intervals(poly)
    membership: dict[Cell, int] = {c: 0 for c in poly.cells}
    for iv in ivs:
        for c in iv.cells:
            membership[c] += 1
    out = []
    for iv in ivs:
        singles = sum(1 for c in iv.cells if membership[c] == 1)
        if singles >= 2:
            out.append(iv)
    return out


def regularity_pure_thin(poly: Polyomino) -> int:
    """Degree of the h-vector, licensed only for pure simple thin input."""
    preds = shape_predicates(poly)
    if not (preds.simple and preds.thin):
        raise NotApplicableError("regularity formula needs a simple thin polyomino")
    if not is_pure(poly).pure:
        raise NotApplicableError("regularity formula needs a pure rook complex")
    rc = f_vector(poly)
    h = h_from_f(rc.f_vector, rc.rook_number)
    return max(k for k, v in enumerate(h) if v != 0)


def check_reg_eq_nu(poly: Polyomino) -> RegularityMatchReport:
    """Compare the h-vector degree with the exact induced matching number
    on a pure brush, together with the single-cell lower bound."""
    brush = brush_decomposition(poly)
    if brush is None or not brush.pure_brush:
        raise NotPureBrushError("input is not a pure brush polyomino")
    reg = regularity_pure_thin(poly)
    nu = induced_matching_number(attack_graph(poly)).size
    singles = len(single_cell_intervals(poly))
    consistent = (reg == nu) and (nu >= singles)
    return RegularityMatchReport(reg, nu, singles, consistent)
