"""Executable inequalities relating ``pd_alpha`` to order, degree and ``gamma``.

Every ``check_*`` function returns ``BoundReport`` records. A report whose
hypothesis is met but which does not hold is a counterexample; the sweep
driver ``sweep_graph`` collects them for the CLI and the acceptance suite.

Values of ``pd`` come from the cached coverage profile. The profile is
cross-checked against the direct solver elsewhere, so the checks here stay
cheap enough to run over every edge and vertex deletion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Iterable, Sequence

from .graph import (
    Graph,
    as_alpha,
    closed_neighborhood,
    complement,
    components,
    coverage_target,
    delete_edge,
    delete_vertex,
    generate,
)
from .reports import BoundReport, evaluate
from .spectrum import coverage_profile, pd_from_profile, verify_spectrum_structure

__all__ = [
    "THEOREMS",
    "closed_form_pd",
    "check_degree_bounds",
    "check_gamma_bounds",
    "check_sum_bounds",
    "check_component_additivity",
    "check_removal",
    "check_vertex_critical",
    "check_nordhaus_gaddum",
    "CriticalityReport",
    "private_neighborhood",
    "sweep_alphas",
    "sweep_graph",
]

THEOREMS = (
    "pd_one_iff_degree",
    "degree_lower",
    "degree_upper",
    "gamma_upper",
    "no_isolates_upper",
    "inverse_gamma",
    "complementary_pair",
    "k_sum",
    "component_additivity",
    "edge_removal_lower",
    "edge_removal_upper",
    "vertex_removal_lower",
    "vertex_removal_upper",
    "ng_general",
    "ng_connected",
    "ng_no_isolates",
    "spectrum_critical_range",
    "spectrum_size",
    "spectrum_right_closed_at",
    "spectrum_right_closed_above",
    "spectrum_first_value",
    "spectrum_last_value",
    "pd_one_below_degree_ratio",
    "pd_gamma_near_one",
)


def _pd(g: Graph, alpha: Fraction) -> int:
    return pd_from_profile(coverage_profile(g), coverage_target(g.n, alpha))


def _gamma(g: Graph) -> int:
    return coverage_profile(g).gamma


def _floor_inverse(alpha: Fraction) -> int:
    return alpha.denominator // alpha.numerator


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def closed_form_pd(family: str, params: Sequence[int], alpha: Fraction | str) -> int:
    """``pd`` for paths, cycles, complete and complete bipartite graphs.

    ``params`` is ``(n,)`` except for ``complete_bipartite`` which takes
    ``(m, n)`` with ``m >= n >= 1``.
    """
    alpha = as_alpha(alpha)
    if family in ("path", "cycle"):
        (n,) = params
        return ceil(n * alpha / 3)
    if family == "complete":
        return 1
    if family == "complete_bipartite":
        m, n = params
        if not m >= n >= 1:
            raise ValueError("complete_bipartite needs m >= n >= 1")
        # one vertex of the small side sees the whole large side: m + 1 covered;
        # any edge covers everything
        return 1 if alpha <= Fraction(m + 1, m + n) else 2
    raise ValueError(f"no closed form for family {family!r}")


def check_degree_bounds(g: Graph, alpha: Fraction | str) -> list[BoundReport]:
    alpha = as_alpha(alpha)
    n, delta = g.n, g.max_degree
    m = coverage_target(n, alpha)
    pd = _pd(g, alpha)
    ctx = {"n": n, "alpha": alpha, "max_degree": delta}
    out = [evaluate("pd_one_iff_degree", True, pd == 1, "iff", delta >= m - 1, pd=pd, **ctx)]
    hyp = delta < m - 1
    raw = n * alpha / (delta + 1)
    out.append(evaluate("degree_lower", hyp, ceil(raw), "<=", pd, raw_lower=raw, **ctx))
    out.append(evaluate("degree_upper", hyp, pd, "<=", m - delta, **ctx))
    return out


def check_gamma_bounds(g: Graph, alpha: Fraction | str) -> list[BoundReport]:
    alpha = as_alpha(alpha)
    n = g.n
    pd, gamma, t = _pd(g, alpha), _gamma(g), _floor_inverse(alpha)
    ctx = {"n": n, "alpha": alpha, "gamma": gamma}
    return [
        evaluate("gamma_upper", True, pd, "<=", _ceil_div(gamma, t), **ctx),
        evaluate("no_isolates_upper", not g.has_isolated_vertex(), pd, "<=", _ceil_div(n, 2 * t), **ctx),
        evaluate("inverse_gamma", alpha <= Fraction(1, gamma), pd, "==", 1, **ctx),
    ]


def check_sum_bounds(g: Graph, alphas: Iterable[Fraction | str]) -> list[BoundReport]:
    """Complementary-pair bound for each alpha, plus the k-term bound for the tuple."""
    alphas = [as_alpha(a) for a in alphas]
    gamma = _gamma(g)
    out = []
    for a in alphas:
        if a < 1:
            lhs = _pd(g, a) + _pd(g, 1 - a)
            out.append(evaluate("complementary_pair", True, lhs, "<=", gamma + 1, alpha=a, gamma=gamma))
        else:
            out.append(evaluate("complementary_pair", False, None, "<=", gamma + 1, alpha=a, gamma=gamma))
    k = len(alphas)
    hyp = k >= 2 and sum(alphas, Fraction(0)) <= 1 and all(a < 1 for a in alphas)
    lhs = 2 * sum(_pd(g, a) for a in alphas) if hyp else None
    out.append(evaluate("k_sum", hyp, lhs, "<=", k * (gamma + 1), alphas=tuple(alphas), gamma=gamma))
    return out


def sweep_alphas(n: int) -> list[Fraction]:
    """Every multiple of ``1/n`` plus the midpoints between consecutive ones."""
    grid = {Fraction(m, n) for m in range(1, n + 1)}
    grid |= {Fraction(2 * m - 1, 2 * n) for m in range(1, n + 1)}
    return sorted(grid)


def _grid(g: Graph, alphas) -> list[Fraction]:
    if alphas is None:
        return [Fraction(m, g.n) for m in range(1, g.n + 1)]
    return [as_alpha(a) for a in alphas]


def check_component_additivity(g: Graph, alphas=None) -> list[BoundReport]:
    """One report per alpha (default: every ``m/n``)."""
    parts = [c for c, _ in components(g)]
    out = []
    for a in _grid(g, alphas):
        rhs = sum(_pd(c, a) for c in parts)
        out.append(evaluate("component_additivity", True, _pd(g, a), "<=", rhs,
                            alpha=a, components=len(parts)))
    return out


def check_removal(g: Graph, alpha: Fraction | str) -> list[BoundReport]:
    """Sandwich bounds for every single-edge and single-vertex deletion."""
    alpha = as_alpha(alpha)
    pd = _pd(g, alpha)
    out = []
    for u, v in g.edges:
        after = _pd(delete_edge(g, u, v), alpha)
        ctx = {"alpha": alpha, "edge": (u, v), "pd": pd}
        out.append(evaluate("edge_removal_lower", True, pd, "<=", after, **ctx))
        out.append(evaluate("edge_removal_upper", True, after, "<=", pd + 1, **ctx))
    if g.n >= 2:
        for v in g.vertices:
            after = _pd(delete_vertex(g, v)[0], alpha)
            deg = g.degree(v)
            ctx = {"alpha": alpha, "vertex": v, "degree": deg, "pd": pd}
            out.append(evaluate("vertex_removal_lower", True, pd - 1, "<=", after, **ctx))
            out.append(evaluate("vertex_removal_upper", True, after, "<=", pd + deg - 1, **ctx))
    return out


def private_neighborhood(g: Graph, v: int, s: Iterable[int]) -> frozenset[int]:
    """Vertices of ``N[v]`` not dominated by ``s`` without ``v``."""
    others = [u for u in s if u != v]
    return closed_neighborhood(g, [v]) - closed_neighborhood(g, others)


@dataclass(frozen=True)
class CriticalityReport:
    alpha: Fraction
    pd: int
    deleted_pd: dict = field(default_factory=dict)
    is_critical: bool = False
    #: vertex -> minimum set containing it whose private part at that vertex is itself
    certificates: dict = field(default_factory=dict)
    drops_by_one: bool | None = None
    holds: bool | None = None


def check_vertex_critical(g: Graph, alpha: Fraction | str) -> CriticalityReport:
    """Decide vertex-criticality; for critical graphs, find a certificate per vertex.

    A certificate for ``v`` is a minimum alpha-partial dominating set ``S``
    containing ``v`` with ``pn[v, S] = {v}``. All minimum sets containing
    ``v`` are enumerated, in lexicographic order, with coverage recomputed
    directly from the adjacency sets.
    """
    alpha = as_alpha(alpha)
    if g.n < 2:
        raise ValueError("vertex criticality needs n >= 2")
    pd = _pd(g, alpha)
    deleted = {v: _pd(delete_vertex(g, v)[0], alpha) for v in g.vertices}
    critical = all(d < pd for d in deleted.values())
    if not critical:
        return CriticalityReport(alpha, pd, deleted, False)
    m = coverage_target(g.n, alpha)
    certs = {}
    for v in g.vertices:
        certs[v] = None
        rest = [u for u in g.vertices if u != v]
        for others in itertools.combinations(rest, pd - 1):
            s = tuple(sorted(others + (v,)))
            if len(closed_neighborhood(g, s)) < m:
                continue
            if private_neighborhood(g, v, s) == {v}:
                certs[v] = s
                break
    drops = all(d == pd - 1 for d in deleted.values())
    holds = drops and all(c is not None for c in certs.values())
    return CriticalityReport(alpha, pd, deleted, True, certs, drops, holds)


def check_nordhaus_gaddum(g: Graph, alphas=None) -> list[BoundReport]:
    """The three complement-sum bounds at each alpha (default: every ``m/n``).

    The connected form is only evaluated for ``n >= 2``: on ``K_1`` both the
    graph and its complement are connected, yet ``1 + 1 > ceil(0) + 1``.
    """
    h = complement(g)
    n = g.n
    connected = n >= 2 and g.is_connected() and h.is_connected()
    no_isolates = not g.has_isolated_vertex() and not h.has_isolated_vertex()
    out = []
    for a in _grid(g, alphas):
        t = _floor_inverse(a)
        total = _pd(g, a) + _pd(h, a)
        ctx = {"n": n, "alpha": a}
        out.append(evaluate("ng_general", True, total, "<=", _ceil_div(n, t) + 1, **ctx))
        out.append(evaluate("ng_connected", connected, total, "<=", _ceil_div(n - 1, t) + 1, **ctx))
        out.append(evaluate("ng_no_isolates", no_isolates, total, "<=",
                            _ceil_div(n // 2 + 2, t) + 1, **ctx))
    return out


def sweep_graph(g: Graph, alphas=None, exclude: Iterable[str] = ()) -> list[BoundReport]:
    """Every bound and structural check on ``g`` over the alpha grid.

    The default grid is ``sweep_alphas(n)``. Sum bounds are run on each
    alpha below one and on equal-part tuples ``(a,) * k`` for ``k = 2, 3, 4``
    whenever ``k * a <= 1``.
    """
    grid = sweep_alphas(g.n) if alphas is None else [as_alpha(a) for a in alphas]
    out: list[BoundReport] = []
    for a in grid:
        out += check_degree_bounds(g, a)
        out += check_gamma_bounds(g, a)
        out += check_removal(g, a)
        if a < 1:
            out += check_sum_bounds(g, [a])[:1]
        for k in (2, 3, 4):
            if k * a <= 1:
                out += check_sum_bounds(g, [a] * k)[-1:]
    out += check_component_additivity(g, grid)
    out += check_nordhaus_gaddum(g, grid)
    out += verify_spectrum_structure(g)
    skip = set(exclude)
    return [r for r in out if r.theorem not in skip]


def family_graphs(max_n: int = 10) -> list[tuple[str, Graph]]:
    """Named members of every deterministic generator family up to ``max_n`` vertices."""
    out = []
    for n in range(1, max_n + 1):
        out.append((f"path:{n}", generate("path", n)))
        out.append((f"complete:{n}", generate("complete", n)))
        out.append((f"empty:{n}", generate("empty", n)))
        if n >= 3:
            out.append((f"cycle:{n}", generate("cycle", n)))
        if n >= 2:
            out.append((f"star:{n - 1}", generate("star", n - 1)))
    for m in range(1, max_n):
        for k in range(1, m + 1):
            if m + k <= max_n:
                out.append((f"complete_bipartite:{m},{k}", generate("complete_bipartite", m, k)))
    for c in range(1, max_n):
        for i in range(1, max_n - c + 1):
            out.append((f"clique_plus_isolates:{c},{i}", generate("clique_plus_isolates", c, i)))
    return out
