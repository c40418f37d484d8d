"""Simple undirected graphs on dense vertex labels ``0..n-1``.

Adjacency is held twice: as frozensets (for readable, first-principles code
such as the brute-force oracle) and as integer bitmasks (for the search
code, where union and popcount are single big-int operations).
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "GraphParseError",
    "GraphValidationError",
    "InvalidVertexError",
    "InvalidAlphaError",
    "MissingEdgeError",
    "as_alpha",
    "parse_alpha",
    "format_rational",
    "coverage_target",
    "closed_neighborhood",
    "complement",
    "delete_vertex",
    "delete_edge",
    "components",
    "induced_subgraph",
    "disjoint_union",
    "generate",
    "parse_graph",
    "serialize_graph",
    "FAMILIES",
]


class GraphError(ValueError):
    """Base class for graph construction and ingestion errors."""


class GraphValidationError(GraphError):
    pass


class InvalidVertexError(GraphError, IndexError):
    pass


class MissingEdgeError(GraphError, KeyError):
    pass


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidAlphaError(ValueError):
    pass


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.degree(1), g.max_degree, g.m
    (2, 2, 2)
    """

    __slots__ = ("_n", "_nbrs", "_adj", "_closed", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or isinstance(n, bool):
            raise GraphValidationError(f"vertex count must be an int, got {n!r}")
        if n < 1:
            raise GraphValidationError("graphs must have at least one vertex")
        adj = [0] * n
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < n:
                    raise InvalidVertexError(f"vertex {x} out of range for n={n}")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphValidationError(f"duplicate edge {key}")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._closed = tuple(a | (1 << v) for v, a in enumerate(adj))
        self._nbrs = tuple(frozenset(_members(a)) for a in adj)
        self._edges = tuple(sorted(seen))
        self._hash = hash((n, self._adj))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return self._edges

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._nbrs

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    @property
    def closed_masks(self) -> tuple[int, ...]:
        """Bitmask of ``N[v]`` for every vertex ``v``."""
        return self._closed

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    @property
    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._nbrs[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._nbrs)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._nbrs[u]

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices if not self._nbrs[v]]

    def has_isolated_vertex(self) -> bool:
        return any(not s for s in self._nbrs)

    def is_connected(self) -> bool:
        return len(_component_masks(self)) == 1

    def _check(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise InvalidVertexError(f"vertex {v!r} out of range for n={self._n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)!r})"


# ---------------------------------------------------------------------------
# Exact rational thresholds


def as_alpha(value: object) -> Fraction:
    """Coerce ``value`` to an exact rational in ``(0, 1]``.

    Accepts a ``Fraction``, an ``int`` (only ``1``), a ``"p/q"`` string or a
    ``(p, q)`` pair. Floats are refused: thresholds must be exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidAlphaError(f"alpha must be exact, got {value!r}")
    if isinstance(value, str):
        return parse_alpha(value)
    if isinstance(value, tuple) and len(value) == 2:
        p, q = value
        if not (isinstance(p, int) and isinstance(q, int)) or q == 0:
            raise InvalidAlphaError(f"bad alpha pair {value!r}")
        value = Fraction(p, q)
    if isinstance(value, int):
        value = Fraction(value)
    if not isinstance(value, Fraction):
        raise InvalidAlphaError(f"cannot interpret {value!r} as alpha")
    if not 0 < value <= 1:
        raise InvalidAlphaError(f"alpha must lie in (0, 1], got {value}")
    return value


def parse_alpha(text: str) -> Fraction:
    """Parse an alpha literal such as ``"2/3"`` or ``"1"``."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise InvalidAlphaError(f"alpha literal must look like p/q, got {text!r}") from None
    if q <= 0:
        raise InvalidAlphaError(f"alpha denominator must be positive, got {text!r}")
    return as_alpha(Fraction(p, q))


def format_rational(x: Fraction | int) -> str:
    """Render a rational as reduced ``p/q`` (integers as plain digits)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def coverage_target(n: int, alpha: Fraction) -> int:
    """Least integer ``m`` with ``m >= n * alpha``.

    >>> coverage_target(7, Fraction(2, 3))
    5
    """
    if n < 1:
        raise GraphValidationError("coverage target needs n >= 1")
    alpha = as_alpha(alpha)
    p, q = alpha.numerator, alpha.denominator
    return (n * p + q - 1) // q


# ---------------------------------------------------------------------------
# Neighborhoods and derived graphs


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """``N[S]``: the members of ``s`` together with all their neighbors."""
    out: set[int] = set()
    for v in s:
        out.add(v)
        out |= g.neighbors(v)
    return frozenset(out)


def complement(g: Graph) -> Graph:
    n = g.n
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if v not in g.adjacency[u]]
    return Graph(n, edges)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove ``v`` and relabel the survivors in order.

    Returns the new graph and the old-to-new index map.
    """
    g._check(v)
    if g.n == 1:
        raise GraphValidationError("cannot delete the only vertex")
    index = {u: (u if u < v else u - 1) for u in g.vertices if u != v}
    edges = [(index[a], index[b]) for a, b in g.edges if v not in (a, b)]
    return Graph(g.n - 1, edges), index


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"edge ({u}, {v}) not in graph")
    key = (min(u, v), max(u, v))
    return Graph(g.n, [e for e in g.edges if e != key])


def _component_masks(g: Graph) -> list[int]:
    remaining = g.full_mask
    comps = []
    adj = g.adjacency_masks
    while remaining:
        low = remaining & -remaining
        comp = frontier = low
        while frontier:
            nxt = 0
            for u in _members(frontier):
                nxt |= adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = sorted(set(vertices))
    index = {old: new for new, old in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
    return Graph(len(keep), edges), index


def components(g: Graph) -> list[tuple[Graph, dict[int, int]]]:
    """Connected components, ordered by smallest member, each relabeled."""
    return [induced_subgraph(g, _members(c)) for c in _component_masks(g)]


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((a + offset, b + offset) for a, b in h.edges)
        offset += h.n
    return Graph(offset, edges)


# ---------------------------------------------------------------------------
# Generators


def _path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise GraphValidationError("a simple cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _complete_bipartite(m: int, n: int) -> Graph:
    # part A = 0..m-1, part B = m..m+n-1
    if not m >= n >= 1:
        raise GraphValidationError("complete_bipartite needs m >= n >= 1")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def _star(leaves: int) -> Graph:
    if leaves < 1:
        raise GraphValidationError("star needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _empty(n: int) -> Graph:
    return Graph(n)


def _clique_plus_isolates(clique: int, isolates: int) -> Graph:
    if clique < 1 or isolates < 0:
        raise GraphValidationError("clique_plus_isolates needs clique >= 1, isolates >= 0")
    if isolates == 0:
        return _complete(clique)
    return disjoint_union(_complete(clique), Graph(isolates))


def _gnp(n: int, p: float | Fraction | str, seed: int = 0) -> Graph:
    if isinstance(p, str):
        p = Fraction(p)
    if not 0 <= p <= 1:
        raise GraphValidationError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, edges)


#: family name -> (builder, parameter names)
FAMILIES = {
    "path": (_path, ("n",)),
    "cycle": (_cycle, ("n",)),
    "complete": (_complete, ("n",)),
    "complete_bipartite": (_complete_bipartite, ("m", "n")),
    "star": (_star, ("leaves",)),
    "empty": (_empty, ("n",)),
    "clique_plus_isolates": (_clique_plus_isolates, ("clique", "isolates")),
    "gnp": (_gnp, ("n", "p", "seed")),
}


def generate(family: str, *args, **kwargs) -> Graph:
    """Build a named graph.

    Labeling: path and cycle are consecutive ``0-1-2-...``; the larger part
    of ``complete_bipartite(m, n)`` is ``0..m-1``; the star center is ``0``;
    the clique of ``clique_plus_isolates`` is ``0..clique-1``. ``gnp`` draws
    each pair ``i < j`` in lexicographic order from ``random.Random(seed)``.
    """
    try:
        builder, _ = FAMILIES[family]
    except KeyError:
        raise GraphValidationError(f"unknown family {family!r}") from None
    try:
        return builder(*args, **kwargs)
    except TypeError as exc:
        raise GraphValidationError(f"bad parameters for {family}: {exc}") from None


# ---------------------------------------------------------------------------
# Text formats


def _split_comment(line: str, marker: str) -> str:
    return line.split(marker, 1)[0].strip()


def _parse_ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _build(n: int, edges: list[tuple[int, int, int]]) -> Graph:
    seen: set[tuple[int, int]] = set()
    for u, v, lineno in edges:
        if u == v:
            raise GraphValidationError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint out of range for n={n}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphValidationError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
    return Graph(n, [(u, v) for u, v, _ in edges])


def _parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _split_comment(raw, "#")
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise GraphParseError("first line must be the vertex count", lineno)
            (n,) = _parse_ints(tokens, lineno)
            if n < 1:
                raise GraphParseError("vertex count must be positive", lineno)
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _parse_ints(tokens, lineno)
        edges.append((u, v, lineno))
    if n is None:
        raise GraphParseError("missing vertex count")
    return _build(n, edges)


def _parse_dimacs(text: str) -> Graph:
    n = declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphParseError(f"expected 'p edge n m', got {line!r}", lineno)
            n, declared = _parse_ints(tokens[2:], lineno)
            if n < 1:
                raise GraphParseError("vertex count must be positive", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise GraphParseError("edge before problem line", lineno)
            if len(tokens) != 3:
                raise GraphParseError(f"expected 'e u v', got {line!r}", lineno)
            u, v = _parse_ints(tokens[1:], lineno)
            edges.append((u - 1, v - 1, lineno))
        else:
            raise GraphParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise GraphParseError("missing problem line")
    if declared != len(edges):
        raise GraphParseError(f"problem line declares {declared} edges, found {len(edges)}")
    return _build(n, edges)


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    """Parse ``edgelist`` (0-based, count header) or ``dimacs`` (1-based) text."""
    if format == "edgelist":
        return _parse_edgelist(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    elif format == "dimacs":
        lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges]
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return "\n".join(lines) + "\n"
