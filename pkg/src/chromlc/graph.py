"""Simple undirected graphs, the Seymour-type constructions, and edge-list I/O.

Vertices are the dense integers ``0..n-1``. A :class:`Graph` is immutable and
stores its edges as a sorted tuple of ``(u, v)`` pairs with ``u < v``, so two
graphs built from the same edge set compare equal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphParseError, InvalidParameterError, InvalidVertexError, SelfLoopError

# Class pairs (1-based) joined in Seymour's six-class construction.
SEYMOUR_PAIRS: tuple[tuple[int, int], ...] = (
    (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (1, 5), (3, 5), (1, 6), (2, 6),
)

RNG_NAME = "python-mt19937/lex-pairs/v1"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeSummary:
    max_degree: int
    degree_multiset: tuple[int, ...]


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a canonical graph; duplicate and reversed pairs collapse."""
    if n < 0:
        raise InvalidParameterError(f"vertex count must be nonnegative, got {n}")
    canon = set()
    for u, v in edges:
        u, v = int(u), int(v)
        for x in (u, v):
            if not 0 <= x < n:
                raise InvalidVertexError(f"vertex {x} out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(canon)))


def degree_summary(g: Graph) -> DegreeSummary:
    degs = tuple(sorted(g.degree(v) for v in range(g.n)))
    return DegreeSummary(max(degs, default=0), degs)


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


# -- families ---------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return new_graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return new_graph(n)


def path_graph(n: int) -> Graph:
    return new_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("a simple cycle needs at least 3 vertices")
    return new_graph(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices (center 0)."""
    return new_graph(n, ((0, i) for i in range(1, n)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = ((u + g.n, v + g.n) for u, v in h.edges)
    return new_graph(g.n + h.n, list(g.edges) + list(shifted))


def seymour_base() -> Graph:
    """The six-vertex pattern graph underlying :func:`seymour_H`."""
    return new_graph(6, ((i - 1, j - 1) for i, j in SEYMOUR_PAIRS))


def seymour_H(n: int) -> Graph:
    """Seymour's graph on ``6n`` vertices; class ``A_i`` is ``range((i-1)n, i n)``."""
    if n < 1:
        raise InvalidParameterError(f"class size must be >= 1, got {n}")
    edges = []
    for i, j in SEYMOUR_PAIRS:
        a = range((i - 1) * n, i * n)
        b = range((j - 1) * n, j * n)
        edges.extend((u, v) for u in a for v in b)
    return new_graph(6 * n, edges)


def seymour_labels(n: int, extra: int = 0) -> list[int]:
    """Class index (1..6) per vertex of H(n); ``extra`` trailing universal vertices get 0."""
    return [v // n + 1 for v in range(6 * n)] + [0] * extra


def modified_S(n: int) -> Graph:
    """H(n) plus ``n^2 - 6n`` universal vertices (``n^2`` vertices in total)."""
    if n < 6:
        raise InvalidParameterError(f"modified example needs n >= 6, got {n}")
    return add_universal_vertices(seymour_H(n), n * n - 6 * n)


def blow_up(base: Graph, sizes: Sequence[int]) -> Graph:
    """Replace base vertex ``i`` by an independent class of ``sizes[i]`` vertices.

    Classes are laid out consecutively in base-vertex order and two classes are
    completely joined exactly when their base vertices are adjacent.
    """
    if len(sizes) != base.n:
        raise InvalidParameterError(f"need {base.n} class sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise InvalidParameterError("class sizes must be positive")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    edges = []
    for i, j in base.edges:
        edges.extend(
            (u, v)
            for u in range(starts[i], starts[i + 1])
            for v in range(starts[j], starts[j + 1])
        )
    return new_graph(starts[-1], edges)


def add_universal_vertices(g: Graph, m: int) -> Graph:
    if m < 0:
        raise InvalidParameterError(f"cannot add {m} vertices")
    total = g.n + m
    extra = [(u, w) for w in range(g.n, total) for u in range(w)]
    return new_graph(total, list(g.edges) + extra)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p).

    Pairs ``(u, v)``, ``u < v``, are visited in lexicographic order and kept when
    ``random.Random(seed).random() < p``. This is the ``RNG_NAME`` scheme.
    """
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return new_graph(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def random_ensemble(count: int, seed: int, max_n: int, min_n: int = 1) -> list[Graph]:
    """Reproducible list of random graphs with ``min_n <= n <= max_n`` and mixed densities."""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.choice((0.15, 0.3, 0.5, 0.7, 0.85))
        graphs.append(random_graph(n, p, rng.getrandbits(32)))
    return graphs


# -- structure ----------------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    return new_graph(
        len(vertices),
        ((index[u], index[v]) for u, v in g.edges if u in index and v in index),
    )


def _greedy_clique(g: Graph) -> int:
    best = 0
    for s in range(g.n):
        clique = [s]
        cand = set(g.neighbors(s))
        while cand:
            v = max(cand, key=lambda x: (len(g.neighbors(x) & cand), -x))
            clique.append(v)
            cand &= g.neighbors(v)
        best = max(best, len(clique))
    return best


def _greedy_colors(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    color: dict[int, int] = {}
    for v in order:
        used = {color[w] for w in g.neighbors(v) if w in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return max(color.values(), default=-1) + 1


def is_colorable(g: Graph, k: int) -> bool:
    """Exact k-colorability by backtracking (DSatur order, symmetry-broken)."""
    if g.n == 0:
        return True
    if k <= 0:
        return False
    color = [-1] * g.n

    def pick() -> int:
        best, key = -1, None
        for v in range(g.n):
            if color[v] >= 0:
                continue
            sat = len({color[w] for w in g.neighbors(v) if color[w] >= 0})
            kv = (sat, g.degree(v))
            if key is None or kv > key:
                best, key = v, kv
        return best

    def solve(colored: int, used: int) -> bool:
        if colored == g.n:
            return True
        v = pick()
        banned = {color[w] for w in g.neighbors(v)}
        # a fresh color is interchangeable with any other fresh one
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            color[v] = c
            if solve(colored + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return solve(0, 0)


def chromatic_number(g: Graph) -> int:
    """Least k admitting a proper k-coloring; 0 for the graph on no vertices."""
    if g.n == 0:
        return 0
    lo, hi = _greedy_clique(g), _greedy_colors(g)
    k = lo
    while k < hi and not is_colorable(g, k):
        k += 1
    return k


# -- edge-list format -----------------------------------------------------------

def parse_graph(text: bytes | str) -> Graph:
    """Parse the edge-list format.

    An optional header ``p <n> <m>`` fixes the vertex count (``m`` is advisory);
    every other non-blank line not starting with ``#`` is ``u v``. Without a
    header the vertex count is one more than the largest endpoint.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphParseError("input is not ASCII", 1) from exc
    n: int | None = None
    pairs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or pairs:
                raise GraphParseError("header must precede edges and appear once", lineno)
            if len(parts) != 3 or not all(p.isdigit() for p in parts[1:]):
                raise GraphParseError(f"bad header {line!r}", lineno)
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if n is not None and (u >= n or v >= n):
            raise GraphParseError(f"vertex out of range in {line!r} (n={n})", lineno)
        if u == v:
            raise GraphParseError(f"self-loop in {line!r}", lineno)
        pairs.append((u, v, lineno))
    if n is None:
        n = max((max(u, v) + 1 for u, v, _ in pairs), default=0)
    return new_graph(n, ((u, v) for u, v, _ in pairs))


def serialize_graph(g: Graph) -> bytes:
    lines = [f"p {g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return ("\n".join(lines) + "\n").encode("ascii")
