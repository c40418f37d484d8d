"""Exit criteria: exact agreement with closed forms and the brute-force oracle,
zero counterexamples in the bound sweep, spectrum structure, and speed."""

import time
from collections import Counter
from fractions import Fraction

import pytest

from helpers import all_labeled_graphs
from partialdom.bounds import (
    check_nordhaus_gaddum,
    check_vertex_critical,
    closed_form_pd,
    family_graphs,
    sweep_graph,
)
from partialdom.graph import generate
from partialdom.solver import brute_force_pd, pd_alpha, pd_by_target
from partialdom.spectrum import spectrum, verify_spectrum_structure


@pytest.fixture(scope="module")
def sweep_graphs(random_graphs):
    return list(random_graphs) + [g for _, g in family_graphs(10)]


@pytest.fixture(scope="module")
def sweep_reports(sweep_graphs):
    return [(g, sweep_graph(g)) for g in sweep_graphs]


def test_c01_paths_and_cycles_closed_form(criterion):
    with criterion("C1 pd(P_n) = pd(C_n) = ceil(n*alpha/3), n <= 15, alpha = m/n"):
        for n in range(1, 16):
            for family in ("path", "cycle"):
                if family == "cycle" and n < 3:
                    continue
                g = generate(family, n)
                for m in range(1, n + 1):
                    alpha = Fraction(m, n)
                    assert pd_by_target(g, m).value == closed_form_pd(family, (n,), alpha), (family, n, m)


def test_c02_complete_and_bipartite_closed_form(criterion):
    with criterion("C2 K_n (n <= 10) and K_{m,n} (m + n <= 12) match closed form"):
        for n in range(1, 11):
            g = generate("complete", n)
            for j in range(1, n + 1):
                assert pd_alpha(g, Fraction(j, n)).value == closed_form_pd("complete", (n,), Fraction(j, n))
        cases = 0
        for big in range(1, 12):
            for small in range(1, big + 1):
                if big + small > 12:
                    continue
                g = generate("complete_bipartite", big, small)
                for j in range(1, big + small + 1):
                    alpha = Fraction(j, big + small)
                    expected = closed_form_pd("complete_bipartite", (big, small), alpha)
                    assert pd_alpha(g, alpha).value == expected == brute_force_pd(g, j).value
                    cases += 1
        assert cases > 0


def test_c03_oracle_equivalence(criterion, random_graphs):
    with criterion("C3 exact solver == brute force (value and witness): all labeled n <= 6, 500 G(n,p)"):
        count = 0
        for n in range(1, 7):
            for g in all_labeled_graphs(n):
                count += 1
                for m in range(1, n + 1):
                    assert pd_by_target(g, m) == brute_force_pd(g, m), (g, m)
        assert count == 1 + 2 + 8 + 64 + 1024 + 32768
        for g in random_graphs:
            for m in range(1, g.n + 1):
                assert pd_by_target(g, m) == brute_force_pd(g, m), (g, m)
        assert len(random_graphs) == 500
        assert {g.n for g in random_graphs} == set(range(6, 13))


SPECTRUM_CLAUSES = frozenset({
    "spectrum_critical_range", "spectrum_size", "spectrum_right_closed_at", "spectrum_right_closed_above",
    "spectrum_first_value", "spectrum_last_value", "pd_one_below_degree_ratio", "pd_gamma_near_one",
})


def _violations(sweep_reports, exclude=()):
    bad = Counter()
    first = {}
    for g, reps in sweep_reports:
        for r in reps:
            if r.theorem in SPECTRUM_CLAUSES:
                continue  # checked under C5
            if r.violated and r.theorem not in exclude:
                bad[r.theorem] += 1
                first.setdefault(r.theorem, (g, r))
    return bad, first


def test_c04_bound_sweep(criterion, sweep_reports):
    with criterion("C4 zero hypothesis-met violations in the full bound sweep"):
        bad, first = _violations(sweep_reports)
        assert not bad, f"violations {dict(bad)}; first: {first}"


def test_c04_bound_sweep_other_statements(criterion, sweep_reports):
    with criterion("C4' zero violations for every statement except the vertex-deletion upper bound"):
        bad, first = _violations(sweep_reports, exclude={"vertex_removal_upper"})
        assert not bad, f"violations {dict(bad)}; first: {first}"
        evaluated = Counter(r.theorem for _, reps in sweep_reports for r in reps if r.hypothesis_met)
        for theorem in ("ng_connected", "ng_no_isolates", "degree_lower", "inverse_gamma", "k_sum",
                        "no_isolates_upper", "edge_removal_upper", "spectrum_size"):
            assert evaluated[theorem] > 0, theorem


def test_c05_spectrum_structure(criterion, sweep_graphs):
    with criterion("C5 spectrum structure: critical range, right-closed steps, |Sp| <= n - Delta"):
        for g in sweep_graphs:
            reps = verify_spectrum_structure(g)
            assert all(r.holds for r in reps if r.hypothesis_met), (g, [r for r in reps if r.violated])
            sp = spectrum(g)
            delta = g.max_degree
            assert all(delta + 1 <= c * g.n <= g.n - 1 for c in sp.criticals)
            if not g.has_isolated_vertex():
                assert len(sp.values) <= g.n - delta


def test_c06_tightness(criterion):
    with criterion("C6 clique_plus_isolates(c, i): |Sp| = n - Delta"):
        for c in range(2, 7):
            for i in range(1, 5):
                g = generate("clique_plus_isolates", c, i)
                assert len(spectrum(g).values) == g.n - g.max_degree, (c, i)


def test_c07_monotone_and_quotient(criterion, sweep_graphs):
    with criterion("C7 pd non-decreasing over m/n and constant up to the next multiple"):
        for g in sweep_graphs:
            n = g.n
            prev = 0
            for m in range(1, n + 1):
                value = pd_alpha(g, Fraction(m, n)).value
                assert value >= prev
                assert pd_alpha(g, Fraction(2 * m - 1, 2 * n)).value == value
                prev = value


def test_c08_criticality(criterion):
    with criterion("C8 C_4 vertex-critical with certificates; K_n not critical"):
        rep = check_vertex_critical(generate("cycle", 4), 1)
        assert rep.is_critical and rep.holds
        assert sorted(rep.certificates) == [0, 1, 2, 3]
        assert all(s is not None and v in s for v, s in rep.certificates.items())
        for n in range(2, 9):
            assert not check_vertex_critical(generate("complete", n), 1).is_critical


def test_c09_nordhaus_gaddum_equality(criterion):
    with criterion("C9 NG equality: P_4 at 1 gives 4 = 3 + 1; K_n at 1 gives n + 1"):
        reps = {r.theorem: r for r in check_nordhaus_gaddum(generate("path", 4), [1])}
        assert reps["ng_connected"].hypothesis_met
        assert reps["ng_connected"].lhs == reps["ng_connected"].rhs == 4
        for n in range(1, 11):
            (gen,) = [r for r in check_nordhaus_gaddum(generate("complete", n), [1]) if r.theorem == "ng_general"]
            assert gen.lhs == gen.rhs == n + 1


def test_c10_performance_and_determinism(criterion):
    with criterion("C10 G(20, 0.3) all targets < 60 s; identical with 1 and 4 workers"):
        graphs = [generate("gnp", 20, Fraction(3, 10), seed) for seed in range(5)]
        start = time.perf_counter()
        serial = [[pd_by_target(g, m) for m in range(1, 21)] for g in graphs]
        elapsed = time.perf_counter() - start
        assert elapsed < 60, f"{elapsed:.1f}s"
        parallel = [[pd_by_target(g, m, workers=4) for m in range(1, 21)] for g in graphs[:2]]
        assert parallel == serial[:2]
