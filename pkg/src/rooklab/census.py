"""Exhaustive generation of fixed and free polyominoes and the census
verification harness.

Generation uses the classic untried-set growth over the half-plane
lattice, which emits every fixed polyomino exactly once; free mode keeps
the shapes that equal their own dihedral canonical form. The harness
runs named checks over the free census and aggregates violations, each
rendered as an ASCII witness.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Iterator, Sequence

from .chordal import (
    brush_decomposition,
    classify_chordality,
    complement_graph,
    induced_cycle_lengths,
    is_chordal,
)
from .errors import NotSimpleThinError, RankOutOfRangeError, UnknownCheckError
from .partition import check_purity_theorem, find_embedding, super_partitions
from .polyomino import (
    Cell,
    Polyomino,
    canonical_cells,
    maximal_intervals,
    render_ascii,
    shape_predicates,
)
from .regularity import (
    brush_fh,
    check_reg_eq_nu,
    check_sigma_identities,
    induced_matching_number,
    regularity_pure_thin,
    single_cell_intervals,
)
from .rook_complex import attack_graph, f_vector, h_from_f, is_pure

DEFAULT_MAX_RANK = 10
MAX_RANK_ENV = "ROOKLAB_MAX_RANK"

_SIGMA_SEED = 94160451
_SIGMA_SAMPLES = 500


def max_rank_limit() -> int:
    """Census ceiling; the environment variable overrides the default."""
    raw = os.environ.get(MAX_RANK_ENV)
    if raw is None:
        return DEFAULT_MAX_RANK
    return int(raw)


def _half_plane_neighbors(cell: Cell) -> Iterator[Cell]:
    # Growth region: y > 0, or y == 0 with x >= 0. Rooting the seed at the
    # origin makes every fixed polyomino reachable exactly once.
    x, y = cell
    for nx, ny in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
        if ny > 0 or (ny == 0 and nx >= 0):
            yield (nx, ny)


def _fixed_cell_sets(n: int) -> Iterator[tuple[Cell, ...]]:
    """Each fixed polyomino of rank n exactly once, as a normalized sorted tuple."""
    if n == 1:
        yield ((0, 0),)
        return
    shape: list[Cell] = []

    def grow(untried: list[Cell], seen: set[Cell]) -> Iterator[tuple[Cell, ...]]:
        untried = list(untried)
        while untried:
            cell = untried.pop()
            shape.append(cell)
            if len(shape) == n:
                dx = min(x for x, _ in shape)
                yield tuple(sorted((x - dx, y) for x, y in shape))
            else:
                fresh = [nb for nb in _half_plane_neighbors(cell) if nb not in seen]
                yield from grow(untried + fresh, seen | set(fresh))
            shape.pop()

    yield from grow([(0, 0)], {(0, 0)})


@lru_cache(maxsize=None)
def _fixed_rank(n: int) -> tuple[tuple[Cell, ...], ...]:
    return tuple(sorted(_fixed_cell_sets(n)))


@lru_cache(maxsize=None)
def _free_rank(n: int) -> tuple[tuple[Cell, ...], ...]:
    return tuple(s for s in _fixed_rank(n) if canonical_cells(s) == s)


def generate(n: int, mode: str = "free") -> Iterator[Polyomino]:
    """All polyominoes of rank n, one per canonical form, in sorted order."""
    limit = max_rank_limit()
    if not 1 <= n <= limit:
        raise RankOutOfRangeError(f"rank {n} outside 1..{limit}")
    if mode == "fixed":
        shapes = _fixed_rank(n)
    elif mode == "free":
        shapes = _free_rank(n)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for cells in shapes:
        yield Polyomino(frozenset(cells))


@lru_cache(maxsize=None)
def free_census(n_max: int) -> tuple[Polyomino, ...]:
    """All free polyominoes of rank 1..n_max, by rank then cell order."""
    out: list[Polyomino] = []
    for n in range(1, n_max + 1):
        out.extend(Polyomino(frozenset(cells)) for cells in _free_rank(n))
    return tuple(out)


@dataclass(frozen=True)
class Violation:
    cells: tuple[Cell, ...]
    ascii: str
    detail: str


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    violations: tuple[Violation, ...]
    informational: bool


@dataclass(frozen=True)
class CensusReport:
    max_rank: int
    mode: str
    count: int
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed or r.informational for r in self.results)


def _violation(poly: Polyomino, detail: str) -> Violation:
    return Violation(poly.sorted_cells, render_ascii(poly), detail)


def _check_purity_theorem(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly in census:
        if poly.rank < 2:
            continue
        rep = check_purity_theorem(poly)
        if not rep.consistent:
            out.append(
                _violation(
                    poly,
                    f"pure={rep.pure} super_exists={rep.super_exists} "
                    f"sizes_match={rep.sizes_match}",
                )
            )
    return out


def _is_square(poly: Polyomino) -> bool:
    return poly.width == poly.height and poly.rank == poly.width * poly.height


def _check_square_superpartitions(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly in census:
        if poly.rank < 2:
            continue
        two = len(super_partitions(poly)) == 2
        if two != _is_square(poly):
            out.append(_violation(poly, f"two_supers={two} square={_is_square(poly)}"))
    return out


def _check_embedded_complement(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly in census:
        if poly.rank < 2 or _is_square(poly):
            continue
        supers = super_partitions(poly)
        if len(supers) != 1:
            continue
        members = set(supers[0].intervals)
        for iv in maximal_intervals(poly):
            if iv in members:
                continue
            if find_embedding(poly, iv) is None:
                out.append(_violation(poly, f"interval {iv!r} outside the super partition is not embedded"))
    return out


def _check_cycle_lengths(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly in census:
        comp = complement_graph(attack_graph(poly))
        lengths = induced_cycle_lengths(comp, max(poly.rank, 3))
        if not lengths <= {3, 4, 6}:
            out.append(_violation(poly, f"induced complement cycles of lengths {sorted(lengths)}"))
    return out


def _check_chordal_classification(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly in census:
        if not shape_predicates(poly).simple:
            continue
        rep = classify_chordality(poly)
        if not rep.consistent:
            out.append(
                _violation(poly, f"chordal={rep.complement_chordal} class={rep.category}")
            )
    return out


def _check_nonsimple_nonchordal(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly in census:
        if shape_predicates(poly).simple:
            continue
        if is_chordal(complement_graph(attack_graph(poly))).chordal:
            out.append(_violation(poly, "non-simple polyomino with chordal complement"))
    return out


def _check_prop_geq2(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly in census:
        if not is_chordal(complement_graph(attack_graph(poly))).chordal:
            continue
        long_runs = [iv for iv in maximal_intervals(poly) if iv.length > 2]
        if len(long_runs) >= 2:
            out.append(
                _violation(poly, f"chordal complement with {len(long_runs)} intervals longer than 2")
            )
    return out


def _check_sigma_identities(census: Sequence[Polyomino]) -> list[Violation]:
    rng = random.Random(_SIGMA_SEED)
    out = []
    for _ in range(_SIGMA_SAMPLES):
        d = rng.randint(1, 8)
        lengths = tuple(rng.randint(2, 9) for _ in range(d))
        if not check_sigma_identities(lengths):
            out.append(Violation((), "", f"sigma identities fail for lengths={lengths}"))
    return out


def pure_brush_realizations(lengths: Sequence[int]) -> list[Polyomino]:
    """All pure brushes with the given bristle-length multiset, up to symmetry.

    Built with a horizontal handle and one vertical bristle per handle
    cell, sliding each bristle through every offset; candidates are
    deduplicated by canonical form and validated by the recognizer. The
    single-bristle case degenerates to a straight interval.
    """
    lengths = tuple(sorted(lengths))
    d = len(lengths)
    if d == 1:
        return [Polyomino.from_cells([(x, 0) for x in range(lengths[0])])]

    results: dict[tuple[Cell, ...], Polyomino] = {}
    remaining: list[int | None] = list(lengths)

    def place(col: int, chosen: list[tuple[int, int]]) -> None:
        if col == d:
            cells = []
            for x, (length, offset) in enumerate(chosen):
                cells.extend((x, y) for y in range(-offset, length - offset))
            poly = Polyomino.from_cells(cells)
            key = canonical_cells(poly.cells)
            if key in results:
                return
            try:
                brush = brush_decomposition(poly)
            except NotSimpleThinError:
                return
            if brush is not None and brush.pure_brush and tuple(sorted(brush.lengths)) == lengths:
                results[key] = Polyomino(frozenset(key))
            return
        seen_lengths = set()
        for idx, length in enumerate(remaining):
            if length is None or length in seen_lengths:
                continue
            seen_lengths.add(length)
            remaining[idx] = None
            for offset in range(length):
                heights = set(range(-offset, length - offset))
                if chosen:
                    prev_len, prev_off = chosen[-1]
                    prev = set(range(-prev_off, prev_len - prev_off))
                    if (heights & prev) != {0}:
                        continue
                place(col + 1, chosen + [(length, offset)])
            remaining[idx] = length

    place(0, [])
    return [results[k] for k in sorted(results)]


def _check_brush_fh(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for d in range(1, 5):
        for lengths in combinations_with_replacement(range(2, 6), d):
            realizations = pure_brush_realizations(lengths)
            if not realizations:
                out.append(Violation((), "", f"no pure brush realization for lengths={lengths}"))
                continue
            expected = brush_fh(lengths)
            for poly in realizations:
                rc = f_vector(poly)
                h = h_from_f(rc.f_vector, rc.rook_number)
                if rc.rook_number != d or rc.f_vector != expected.f or h != expected.h:
                    out.append(
                        _violation(
                            poly,
                            f"lengths={lengths}: closed form f={expected.f} h={expected.h}, "
                            f"brute force f={rc.f_vector} h={h}",
                        )
                    )
    return out


def _check_matching_bound(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly in census:
        if poly.rank < 2 or not shape_predicates(poly).simple:
            continue
        nu = induced_matching_number(attack_graph(poly)).size
        singles = len(single_cell_intervals(poly))
        if nu < singles:
            out.append(_violation(poly, f"nu={nu} below single-cell interval count {singles}"))
    return out


def _pure_brushes(census: Sequence[Polyomino]):
    for poly in census:
        if poly.rank < 2:
            continue
        preds = shape_predicates(poly)
        if not (preds.simple and preds.thin):
            continue
        brush = brush_decomposition(poly)
        if brush is not None and brush.pure_brush:
            yield poly, brush


def _check_reg_eq_nu(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly, brush in _pure_brushes(census):
        rep = check_reg_eq_nu(poly)
        if not rep.consistent:
            out.append(
                _violation(
                    poly,
                    f"reg={rep.regularity} nu={rep.nu} singles={rep.single_interval_count}",
                )
            )
        if any(l == 2 for l in brush.lengths):
            # Mixed-length case: with t bristles of length >= 3, the
            # matching number is t + 1 and the h-vector vanishes above t + 1.
            t = sum(1 for l in brush.lengths if l >= 3)
            if rep.nu != t + 1:
                out.append(_violation(poly, f"nu={rep.nu}, expected {t + 1} for lengths={brush.lengths}"))
            rc = f_vector(poly)
            h = h_from_f(rc.f_vector, rc.rook_number)
            if any(v != 0 for v in h[t + 2 :]):
                out.append(_violation(poly, f"h={h} does not vanish above degree {t + 1}"))
    return out


def _check_katzman(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly in census:
        preds = shape_predicates(poly)
        if not (preds.simple and preds.thin) or not is_pure(poly).pure:
            continue
        reg = regularity_pure_thin(poly)
        nu = induced_matching_number(attack_graph(poly)).size
        if reg < nu:
            out.append(_violation(poly, f"reg={reg} below nu={nu}"))
    return out


def _check_froberg(census: Sequence[Polyomino]) -> list[Violation]:
    out = []
    for poly in census:
        preds = shape_predicates(poly)
        if not (preds.simple and preds.thin) or not is_pure(poly).pure:
            continue
        reg = regularity_pure_thin(poly)
        chordal = is_chordal(complement_graph(attack_graph(poly))).chordal
        if (reg <= 1) != chordal:
            out.append(_violation(poly, f"reg={reg} but complement chordal={chordal}"))
    return out


def _check_brush_corollary(census: Sequence[Polyomino]) -> list[Violation]:
    """Probe: brushes (not necessarily short) whose complement fails to be
    chordal. Findings are informational and re-confirmed on the witness."""
    out = []
    for poly in census:
        if poly.rank < 2:
            continue
        preds = shape_predicates(poly)
        if not (preds.simple and preds.thin):
            continue
        brush = brush_decomposition(poly)
        if brush is None:
            continue
        res = is_chordal(complement_graph(attack_graph(poly)))
        if not res.chordal:
            confirmed = not is_chordal(complement_graph(attack_graph(poly))).chordal
            out.append(
                _violation(
                    poly,
                    f"brush lengths={brush.lengths} has non-chordal complement; "
                    f"chordless cycle of length {len(res.chordless_cycle)}; "
                    f"reconfirmed={confirmed}",
                )
            )
    return out


@dataclass(frozen=True)
class CheckSpec:
    func: Callable[[Sequence[Polyomino]], list[Violation]]
    informational: bool
    summary: str


CHECKS: dict[str, CheckSpec] = {
    "purity-theorem": CheckSpec(
        _check_purity_theorem, False, "pure rook complex iff super partition of size d"
    ),
    "square-superpartitions": CheckSpec(
        _check_square_superpartitions, False, "two super partitions iff square"
    ),
    "embedded-complement": CheckSpec(
        _check_embedded_complement,
        False,
        "outside a unique super partition every interval is embedded",
    ),
    "cycle-lengths": CheckSpec(
        _check_cycle_lengths, False, "induced complement cycles have length 3, 4 or 6"
    ),
    "chordal-classification": CheckSpec(
        _check_chordal_classification,
        False,
        "complement chordal iff short brush or exceptional non-thin",
    ),
    "nonsimple-nonchordal": CheckSpec(
        _check_nonsimple_nonchordal, False, "non-simple implies non-chordal complement"
    ),
    "prop-geq2": CheckSpec(
        _check_prop_geq2, False, "chordal complement admits at most one interval longer than 2"
    ),
    "sigma-identities": CheckSpec(
        _check_sigma_identities, False, "binomial relations among shifted symmetric polynomials"
    ),
    "brush-fh": CheckSpec(
        _check_brush_fh, False, "closed-form f and h of pure brushes match brute force"
    ),
    "matching-bound": CheckSpec(
        _check_matching_bound, False, "induced matching number at least the single-cell intervals"
    ),
    "reg-eq-nu": CheckSpec(
        _check_reg_eq_nu, False, "regularity equals induced matching number on pure brushes"
    ),
    "katzman": CheckSpec(
        _check_katzman, False, "regularity at least the induced matching number (pure simple thin)"
    ),
    "froberg-crosscheck": CheckSpec(
        _check_froberg, False, "regularity at most 1 iff chordal complement (pure simple thin)"
    ),
    "brush-corollary": CheckSpec(
        _check_brush_corollary, True, "probe: brushes with non-chordal complement"
    ),
}


def _run_check(args: tuple[str, tuple[Polyomino, ...]]) -> CheckResult:
    name, census = args
    spec = CHECKS[name]
    violations = tuple(spec.func(census))
    return CheckResult(name, not violations, violations, spec.informational)


def verify_corpus(
    n_max: int,
    checks: Iterable[str] | None = None,
    jobs: int = 1,
) -> CensusReport:
    """Run the named checks over the free census of rank 1..n_max."""
    limit = max_rank_limit()
    if not 1 <= n_max <= limit:
        raise RankOutOfRangeError(f"max rank {n_max} outside 1..{limit}")
    names = list(CHECKS) if checks is None else list(checks)
    for name in names:
        if name not in CHECKS:
            raise UnknownCheckError(f"unknown check {name!r}")
    census = free_census(n_max)
    tasks = [(name, census) for name in names]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = tuple(pool.map(_run_check, tasks))
    else:
        results = tuple(_run_check(t) for t in tasks)
    return CensusReport(n_max, "free", len(census), results)
