import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from partialdom.graph import Graph, closed_neighborhood, generate


def all_labeled_graphs(n):
    """Every simple graph on vertices 0..n-1 (labeled, not up to isomorphism)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def random_sample(count=500, seed=2024, n_range=(6, 12), ps=(Fraction(1, 5), Fraction(1, 2), Fraction(4, 5))):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(*n_range)
        p = ps[i % len(ps)]
        out.append(generate("gnp", n, p, rng.randrange(2**32)))
    return out


def enumerate_profile(g):
    """Max coverage per budget by exhaustive enumeration, until everything is covered."""
    out = [0]
    k = 1
    while out[-1] < g.n:
        out.append(max(len(closed_neighborhood(g, s)) for s in itertools.combinations(range(g.n), k)))
        k += 1
    return out


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def graph_and_set(draw):
    g = draw(graphs())
    s = draw(st.sets(st.integers(0, g.n - 1)))
    return g, s
