from fractions import Fraction

import pytest
from hypothesis import given, settings

from helpers import all_labeled_graphs, enumerate_profile, graphs
from partialdom.graph import Graph, closed_neighborhood, generate
from partialdom.solver import domination_number, pd_alpha, pd_by_target
from partialdom.spectrum import (
    coverage_profile,
    pd_from_profile,
    probe_above,
    spectrum,
    verify_spectrum_structure,
)


@pytest.mark.parametrize("g, expected", [
    (generate("cycle", 6), [0, 3, 6]),
    (generate("clique_plus_isolates", 3, 2), [0, 3, 4, 5]),
    (generate("star", 4), [0, 5]),
    (generate("path", 4), [0, 3, 4]),
])
def test_profile_examples(g, expected):
    assert list(coverage_profile(g).g) == expected


def test_profile_matches_enumeration():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            assert list(coverage_profile(g).g) == enumerate_profile(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_profile_invariants(g):
    prof = coverage_profile(g)
    vals = prof.g
    assert vals[0] == 0 and vals[-1] == g.n
    assert vals[1] == g.max_degree + 1
    assert prof.gamma == domination_number(g).value
    for k in range(1, len(vals)):
        assert vals[k - 1] < vals[k] <= vals[k - 1] + g.max_degree + 1
    for k, w in enumerate(prof.witnesses):
        assert len(w) == k and len(closed_neighborhood(g, w)) == vals[k]
    for m in range(1, g.n + 1):
        assert pd_from_profile(prof, m) == pd_by_target(g, m).value


def test_spectrum_examples():
    k5 = spectrum(generate("complete", 5))
    assert (k5.values, k5.criticals) == ((1,), ())
    c6 = spectrum(generate("cycle", 6))
    assert (c6.values, c6.criticals) == ((1, 2), (Fraction(1, 2),))
    g = generate("clique_plus_isolates", 3, 2)
    sp = spectrum(g)
    assert sp.values == (1, 2, 3)
    assert sp.criticals == (Fraction(3, 5), Fraction(4, 5))
    assert len(sp.values) == g.n - g.max_degree
    for crit, cert in zip(sp.criticals, sp.certificates):
        assert Fraction(len(closed_neighborhood(g, cert)), g.n) == crit


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_spectrum_step_function(g):
    sp = spectrum(g)
    n = g.n
    assert len(sp.criticals) == len(sp.values) - 1
    assert list(sp.criticals) == sorted(set(sp.criticals))
    assert all(0 < c < 1 and n % c.denominator == 0 for c in sp.criticals)
    for i, crit in enumerate(sp.criticals):
        assert pd_alpha(g, crit).value == sp.values[i]
        assert pd_alpha(g, probe_above(crit, n)).value == sp.values[i + 1]
        nxt = sp.criticals[i + 1] if i + 1 < len(sp.criticals) else Fraction(1)
        assert pd_alpha(g, (crit + nxt) / 2).value == sp.values[i + 1]
    for m in range(1, n + 1):
        alpha = Fraction(m, n)
        assert pd_alpha(g, alpha).value == sp.pd_at(alpha)


def _clauses(reports):
    return {r.theorem: r for r in reports}


def test_verify_structure_c6():
    reps = verify_spectrum_structure(generate("cycle", 6))
    assert all(r.holds for r in reps)
    (crit,) = [r for r in reps if r.theorem == "spectrum_critical_range"]
    assert crit.lhs == 3 and crit.rhs == (3, 5)


def test_verify_structure_p4():
    reps = verify_spectrum_structure(generate("path", 4))
    assert all(r.holds for r in reps)
    (crit,) = [r for r in reps if r.theorem == "spectrum_critical_range"]
    assert crit.context["critical"] == Fraction(3, 4)
    size = _clauses(reps)["spectrum_size"]
    assert (size.lhs, size.rhs) == (2, 2)


def test_verify_structure_clique_with_isolates_skips_size_clause():
    reps = verify_spectrum_structure(generate("clique_plus_isolates", 3, 2))
    size = _clauses(reps)["spectrum_size"]
    assert not size.hypothesis_met and size.holds is None
    assert all(r.holds for r in reps if r.hypothesis_met)


def test_single_vertex():
    g = Graph(1)
    assert coverage_profile(g).g == (0, 1)
    assert spectrum(g).values == (1,)
    assert all(r.holds for r in verify_spectrum_structure(g) if r.hypothesis_met)
