"""Exact and heuristic partial domination numbers.

``pd_by_target(g, m)`` is the core: the least ``k`` such that some ``k``
closed neighborhoods cover at least ``m`` vertices. Every alpha-valued entry
point reduces to it through ``coverage_target``.
"""

from __future__ import annotations

import itertools
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, as_alpha, closed_neighborhood, coverage_target

__all__ = [
    "PdResult",
    "pd_alpha",
    "pd_by_target",
    "domination_number",
    "brute_force_pd",
    "greedy_pd",
    "SolverSizeWarning",
    "EXACT_WARN_N",
    "ORACLE_MAX_N",
]

EXACT_WARN_N = 64
ORACLE_MAX_N = 20


class SolverSizeWarning(RuntimeWarning):
    pass


@dataclass(frozen=True)
class PdResult:
    """Minimum partial dominating set of a graph for a coverage target.

    ``witness`` is a sorted tuple of vertex indices with ``len == value``;
    ``covered`` is ``|N[witness]|`` and ``target`` the required coverage.
    """

    value: int
    witness: tuple[int, ...]
    covered: int
    target: int


def _check_target(g: Graph, m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= g.n:
        raise ValueError(f"coverage target must satisfy 1 <= m <= {g.n}, got {m!r}")


def _search(masks, order, start, k, m, covered, chosen):
    """Depth-first search for ``k - len(chosen)`` more picks from ``order[start:]``.

    Returns the first completed choice (in ``order`` sequence) whose union of
    closed neighborhoods reaches ``m`` vertices, or ``None``.
    """
    count = covered.bit_count()
    if count >= m:
        return chosen
    r = k - len(chosen)
    if r == 0:
        return None
    gains = []
    for pos in range(start, len(order)):
        gains.append((masks[order[pos]] & ~covered).bit_count())
    # Coverage is submodular, so the r largest marginal gains bound what any
    # r further picks can add.
    if count + sum(sorted(gains, reverse=True)[:r]) < m:
        return None
    for offset, gain in enumerate(gains):
        # A pick adding nothing new could be dropped, leaving a smaller
        # feasible set; smaller sizes are already ruled out, so skip it.
        if gain == 0:
            continue
        pos = start + offset
        v = order[pos]
        found = _search(masks, order, pos + 1, k, m, covered | masks[v], chosen + (v,))
        if found is not None:
            return found
    return None


def _branch(args):
    masks, k, m, first = args
    return _search(masks, range(len(masks)), first + 1, k, m, masks[first], (first,))


def _lex_first(masks, k, m, pool):
    n = len(masks)
    if pool is None:
        return _search(masks, range(n), 0, k, m, 0, ())
    tasks = [(masks, k, m, first) for first in range(n)]
    # map preserves task order, so the lowest feasible first vertex wins.
    for found in pool.map(_branch, tasks):
        if found is not None:
            return found
    return None


def pd_by_target(g: Graph, m: int, *, workers: int = 1) -> PdResult:
    """Smallest set whose closed neighborhood has at least ``m`` vertices.

    Sizes are tried in increasing order. For each size a degree-ordered
    search decides feasibility; once the minimum size is known a second
    search in plain index order extracts the lexicographically first optimal
    set, so the witness does not depend on search order or worker count.
    """
    _check_target(g, m)
    if g.n > EXACT_WARN_N:
        warnings.warn(
            f"exact search on n={g.n} > {EXACT_WARN_N} vertices may be very slow",
            SolverSizeWarning,
            stacklevel=2,
        )
    if workers <= 1:
        return _solve(g, m, None)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return _solve(g, m, pool)


def _solve(g: Graph, m: int, pool) -> PdResult:
    masks = g.closed_masks
    reach = g.max_degree + 1
    by_degree = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    for k in range(1, g.n + 1):
        if k * reach < m:
            continue
        if pool is None and _search(masks, by_degree, 0, k, m, 0, ()) is None:
            continue
        witness = _lex_first(masks, k, m, pool)
        if witness is None:
            continue
        covered = 0
        for v in witness:
            covered |= masks[v]
        return PdResult(k, tuple(witness), covered.bit_count(), m)
    raise AssertionError("N[V] = V, so some size <= n always succeeds")


def pd_alpha(g: Graph, alpha: Fraction | str, *, workers: int = 1) -> PdResult:
    """Alpha-partial domination number with its canonical witness."""
    return pd_by_target(g, coverage_target(g.n, as_alpha(alpha)), workers=workers)


def domination_number(g: Graph, *, workers: int = 1) -> PdResult:
    return pd_by_target(g, g.n, workers=workers)


def brute_force_pd(g: Graph, m: int, *, max_n: int = ORACLE_MAX_N) -> PdResult:
    """Reference answer by plain subset enumeration.

    Sizes ascend and each size is enumerated in lexicographic order, so the
    first hit is the same canonical witness the exact solver reports.
    """
    _check_target(g, m)
    if g.n > max_n:
        raise ValueError(f"brute-force oracle refuses n={g.n} > {max_n}")
    for k in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            covered = len(closed_neighborhood(g, s))
            if covered >= m:
                return PdResult(k, s, covered, m)
    raise AssertionError("unreachable: the whole vertex set covers everything")


def greedy_pd(g: Graph, m: int) -> PdResult:
    """Max-coverage greedy: take the largest new coverage, lowest index on ties."""
    _check_target(g, m)
    masks = g.closed_masks
    covered = 0
    picked = []
    while covered.bit_count() < m:
        best = max(g.vertices, key=lambda v: ((masks[v] & ~covered).bit_count(), -v))
        picked.append(best)
        covered |= masks[best]
    return PdResult(len(picked), tuple(sorted(picked)), covered.bit_count(), m)
