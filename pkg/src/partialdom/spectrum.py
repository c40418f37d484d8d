"""Coverage profiles and the partial domination spectrum.

Because ``pd`` depends on alpha only through ``m = ceil(n * alpha)``, the
profile ``g(k) = max_{|S| = k} |N[S]|`` answers every alpha at once:
``pd`` for target ``m`` is the least ``k`` with ``g(k) >= m``. The spectrum
and its critical values are read straight off ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graph import Graph, as_alpha
from .reports import BoundReport, evaluate
from .solver import domination_number, pd_alpha

__all__ = [
    "CoverageProfile",
    "SpectrumResult",
    "coverage_profile",
    "spectrum",
    "verify_spectrum_structure",
    "pd_from_profile",
    "probe_above",
]


@dataclass(frozen=True)
class CoverageProfile:
    """``g[k]`` for ``k = 0..gamma`` with a lexicographically first witness per ``k``."""

    g: tuple[int, ...]
    witnesses: tuple[tuple[int, ...], ...]

    @property
    def gamma(self) -> int:
        return len(self.g) - 1

    @property
    def n(self) -> int:
        return self.g[-1]


@dataclass(frozen=True)
class SpectrumResult:
    values: tuple[int, ...]
    criticals: tuple[Fraction, ...]
    #: ``certificates[i]`` has size ``values[i]`` and covers exactly ``criticals[i] * n``.
    certificates: tuple[tuple[int, ...], ...]

    def pd_at(self, alpha: Fraction | str) -> int:
        """Evaluate the step function: left-open, right-closed pieces."""
        alpha = as_alpha(alpha)
        for value, crit in zip(self.values, self.criticals):
            if alpha <= crit:
                return value
        return self.values[-1]


def _max_cover(masks: tuple[int, ...], k: int, full: int):
    """Largest ``|N[S]|`` over ``|S| = k``; ties go to the first set in index order.

    Only valid for ``k <= gamma``: there an optimal set never contains a pick
    with zero marginal gain (dropping it would leave ``k - 1`` vertices
    covering ``g(k) > g(k - 1)``), so such picks are skipped.
    """
    n = len(masks)
    target = full.bit_count()
    best_count = -1
    best: tuple[int, ...] = ()

    def dfs(start: int, covered: int, chosen: tuple[int, ...]) -> bool:
        nonlocal best_count, best
        count = covered.bit_count()
        r = k - len(chosen)
        if r == 0:
            if count > best_count:
                best_count, best = count, chosen
            return best_count == target
        gains = [(masks[v] & ~covered).bit_count() for v in range(start, n)]
        if count + sum(sorted(gains, reverse=True)[:r]) <= best_count:
            return False
        for offset, gain in enumerate(gains):
            if gain == 0:
                continue
            v = start + offset
            if dfs(v + 1, covered | masks[v], chosen + (v,)):
                return True
        return False

    dfs(0, 0, ())
    return best_count, best


@lru_cache(maxsize=8192)
def coverage_profile(g: Graph) -> CoverageProfile:
    """Exact maximum coverage for every budget ``k = 0..gamma``."""
    dom = domination_number(g)
    values = [0]
    witnesses: list[tuple[int, ...]] = [()]
    for k in range(1, dom.value):
        count, witness = _max_cover(g.closed_masks, k, g.full_mask)
        values.append(count)
        witnesses.append(witness)
    values.append(g.n)
    witnesses.append(dom.witness)
    return CoverageProfile(tuple(values), tuple(witnesses))


def pd_from_profile(profile: CoverageProfile, m: int) -> int:
    for k, covered in enumerate(profile.g):
        if covered >= m:
            return k
    raise ValueError(f"target {m} exceeds n={profile.n}")


def spectrum(g: Graph) -> SpectrumResult:
    """Distinct values of ``pd`` over ``(0, 1]`` and the alphas where it steps up."""
    prof = coverage_profile(g)
    values = tuple(k for k in range(1, prof.gamma + 1) if prof.g[k] > prof.g[k - 1])
    criticals = tuple(Fraction(prof.g[a], g.n) for a in values[:-1])
    certificates = tuple(prof.witnesses[a] for a in values[:-1])
    return SpectrumResult(values, criticals, certificates)


def probe_above(alpha: Fraction, n: int) -> Fraction:
    """A rational strictly above ``alpha`` but below the next multiple of ``1/n``."""
    return alpha + Fraction(1, n * (n + 1))


def verify_spectrum_structure(g: Graph) -> list[BoundReport]:
    """Check the step structure of the spectrum against direct solver calls.

    Probes use ``pd_alpha`` rather than the profile, so a disagreement between
    the two code paths shows up as a failed report.
    """
    n, delta = g.n, g.max_degree
    sp = spectrum(g)
    gamma = domination_number(g).value
    ctx = {"n": n, "max_degree": delta}
    out = []
    for i, crit in enumerate(sp.criticals):
        k = crit * n
        out.append(evaluate(
            "spectrum_critical_range", True, k, "in", (delta + 1, n - 1),
            critical=crit, index=i + 1, **ctx,
        ))
    out.append(evaluate(
        "spectrum_size", not g.has_isolated_vertex(), len(sp.values), "<=", n - delta,
        values=sp.values, **ctx,
    ))
    for i, crit in enumerate(sp.criticals):
        out.append(evaluate(
            "spectrum_right_closed_at", True, pd_alpha(g, crit).value, "==", sp.values[i],
            alpha=crit, **ctx,
        ))
        above = probe_above(crit, n)
        out.append(evaluate(
            "spectrum_right_closed_above", True, pd_alpha(g, above).value, "==", sp.values[i + 1],
            alpha=above, **ctx,
        ))
    out.append(evaluate("spectrum_first_value", True, sp.values[0], "==", 1, **ctx))
    out.append(evaluate("spectrum_last_value", True, sp.values[-1], "==", gamma, **ctx))
    low = Fraction(min(delta + 1, n), n)
    out.append(evaluate(
        "pd_one_below_degree_ratio", True, pd_alpha(g, low).value, "==", 1, alpha=low, **ctx,
    ))
    high = probe_above(Fraction(n - 1, n), n)
    out.append(evaluate(
        "pd_gamma_near_one", True, pd_alpha(g, high).value, "==", gamma, alpha=high, **ctx,
    ))
    return out

