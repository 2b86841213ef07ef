"""Exact chromatic polynomials and coloring counts.

Three independent routes to the same numbers:

* :func:`chromatic_polynomial` - deletion-contraction (the production path),
* :func:`inclusion_exclusion_poly` - the sum over all spanning edge subsets,
* :func:`count_colorings_bruteforce` - explicit enumeration of proper colorings.

:func:`blowup_eval` counts colorings of blow-up graphs at sizes far beyond the
reach of all three, which is what the Seymour family needs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import BudgetExceededError, InvalidParameterError
from .graph import Graph, components, induced_subgraph
from .polynomial import Polynomial

DEFAULT_MAX_VERTICES = 24
DEFAULT_MAX_EDGES = 20
DEFAULT_ENUM_LIMIT = 10**9
BLOWUP_MAX_BASE = 10
BLOWUP_MAX_Q = 12

_Q_MINUS_1 = Polynomial([-1, 1])


# -- deletion-contraction -------------------------------------------------------

def chromatic_polynomial(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Polynomial:
    """Chromatic polynomial of ``g`` by deletion-contraction.

    Raises :class:`BudgetExceededError` when ``g.n > max_vertices``.
    """
    if g.n > max_vertices:
        raise BudgetExceededError(
            f"graph has {g.n} vertices, budget is {max_vertices}; raise max_vertices to proceed"
        )
    adj = {v: frozenset(g.neighbors(v)) for v in range(g.n)}
    return _chrom(adj)


def _canonical(adj: dict[int, frozenset[int]]) -> tuple[int, tuple[tuple[int, int], ...]]:
    # Relabelling only has to be deterministic: equal keys mean identical
    # labelled graphs, hence equal polynomials.
    order = sorted(adj, key=lambda v: (len(adj[v]), sorted(len(adj[w]) for w in adj[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    edges = sorted(
        (min(pos[u], pos[w]), max(pos[u], pos[w])) for u in adj for w in adj[u] if u < w
    )
    return len(order), tuple(edges)


def _chrom(adj: dict[int, frozenset[int]]) -> Polynomial:
    n = len(adj)
    m = sum(len(a) for a in adj.values()) // 2
    if m == 0:
        return Polynomial.monomial(n)
    if m == n * (n - 1) // 2:
        return Polynomial.falling_factorial(n)
    return _chrom_cached(*_canonical(adj))


@lru_cache(maxsize=200_000)
def _chrom_cached(n: int, edges: tuple[tuple[int, int], ...]) -> Polynomial:
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    isolated = [v for v in adj if not adj[v]]
    if isolated:
        rest = {v: frozenset(a) for v, a in adj.items() if a}
        return Polynomial.monomial(len(isolated)) * _chrom(rest)

    leaf = next((v for v in adj if len(adj[v]) == 1), None)
    if leaf is not None:
        # P(G) = (q - 1) P(G - leaf)
        rest = {v: frozenset(a - {leaf}) for v, a in adj.items() if v != leaf}
        return _Q_MINUS_1 * _chrom(rest)

    comps = _adj_components(adj)
    if len(comps) > 1:
        out = Polynomial([1])
        for comp in comps:
            out = out * _chrom({v: frozenset(adj[v]) for v in comp})
        return out

    u, v = max(edges, key=lambda e: (len(adj[e[0]]) + len(adj[e[1]]), e))
    deleted = {w: frozenset(a - {u} if w == v else a - {v} if w == u else a) for w, a in adj.items()}
    contracted: dict[int, frozenset[int]] = {}
    for w, a in adj.items():
        if w == v:
            continue
        if w == u:
            contracted[w] = frozenset((a | adj[v]) - {u, v})
        elif v in a:
            contracted[w] = frozenset((a - {v}) | {u})
        else:
            contracted[w] = frozenset(a)
    return _chrom(deleted) - _chrom(contracted)


def _adj_components(adj: dict[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in adj:
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


# -- oracles --------------------------------------------------------------------

def inclusion_exclusion_poly(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> Polynomial:
    """Sum of ``(-1)^|E'| q^c(E')`` over every subset ``E'`` of the edges.

    ``c(E')`` is the number of connected components of the spanning subgraph
    ``(V, E')``. All ``2^m`` subsets are enumerated; component labels for the
    subsets containing edge ``k`` are derived from those that do not.
    """
    m = g.m
    if m > max_edges:
        raise BudgetExceededError(f"{m} edges means 2^{m} subsets; edge budget is {max_edges}")
    if g.n == 0:
        return Polynomial([1])
    labels = np.zeros((1 << m, g.n), dtype=np.int8)
    labels[0] = np.arange(g.n)
    ncomp = np.empty(1 << m, dtype=np.int64)
    ncomp[0] = g.n
    parity = np.zeros(1 << m, dtype=np.int8)
    for k, (u, v) in enumerate(g.edges):
        lo, hi = 0, 1 << k
        block = labels[lo:hi].copy()
        lu = block[:, u].copy()
        lv = block[:, v].copy()
        merge = lu != lv
        block = np.where(block == lv[:, None], lu[:, None], block)
        labels[hi:2 * hi] = block
        ncomp[hi:2 * hi] = ncomp[lo:hi] - merge
        parity[hi:2 * hi] = parity[lo:hi] ^ 1
    signs = 1 - 2 * parity.astype(np.int64)
    coeffs = np.zeros(g.n + 1, dtype=np.int64)
    np.add.at(coeffs, ncomp, signs)
    return Polynomial(int(c) for c in coeffs)


def count_colorings_bruteforce(g: Graph, q: int, limit: int = DEFAULT_ENUM_LIMIT) -> int:
    """Count proper ``q``-colorings by enumerating them one by one.

    The search assigns colors vertex by vertex and abandons a partial
    assignment as soon as an edge is monochromatic, so only proper partial
    colorings are visited. Guarded by ``q**n <= limit``.
    """
    if q < 0:
        raise InvalidParameterError("q must be nonnegative")
    if q ** g.n > limit:
        raise BudgetExceededError(f"{q}^{g.n} assignments exceeds enumeration limit {limit}")
    if g.n == 0:
        return 1
    # earlier neighbours only, in a BFS-ish order so constraints bite early
    order: list[int] = []
    for comp in components(g):
        seen = {comp[0]}
        frontier = [comp[0]]
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            for w in sorted(g.neighbors(v)):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[w] for w in g.neighbors(v) if pos[w] < i] for i, v in enumerate(order)]
    color = [0] * g.n
    n = g.n

    def extend(i: int) -> int:
        if i == n:
            return 1
        total = 0
        prior = [color[j] for j in back[i]]
        for c in range(q):
            if c not in prior:
                color[i] = c
                total += extend(i + 1)
        return total

    return extend(0)


# -- blow-ups -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _binomial_row(t: int) -> tuple[int, ...]:
    row = [1]
    for _ in range(t):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return tuple(row)


@lru_cache(maxsize=100_000)
def surjections(n: int, t: int) -> int:
    """Number of maps from an n-set onto a t-set."""
    row = _binomial_row(t)
    return sum((-1) ** k * row[k] * (t - k) ** n for k in range(t + 1))


def _independent_sets(base: Graph) -> list[tuple[int, ...]]:
    out = []
    for mask in range(1 << base.n):
        verts = [i for i in range(base.n) if mask >> i & 1]
        if all(not base.has_edge(a, b) for k, a in enumerate(verts) for b in verts[k + 1:]):
            out.append(tuple(verts))
    return out


@lru_cache(maxsize=256)
def _palette_profiles(base: Graph, q: int, caps: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Multiplicities of palette-size profiles.

    Each of the ``q`` colors is given to an independent set of base vertices
    (possibly empty). Profile entry ``i`` is how many colors landed on base
    vertex ``i``. Returns ``{profile: number of color -> set assignments}``;
    profiles exceeding ``caps`` are dropped since their surjection count is 0.
    """
    indep = [
        tuple(1 if i in s else 0 for i in range(base.n)) for s in _independent_sets(base)
    ]
    states: dict[tuple[int, ...], int] = {tuple([0] * base.n): 1}
    for _ in range(q):
        nxt: dict[tuple[int, ...], int] = {}
        for prof, mult in states.items():
            for inc in indep:
                new = tuple(a + b for a, b in zip(prof, inc))
                if any(x > c for x, c in zip(new, caps)):
                    continue
                nxt[new] = nxt.get(new, 0) + mult
        states = nxt
    return states


def blowup_eval(base: Graph, class_size: int | Sequence[int], q: int) -> int:
    """Number of proper ``q``-colorings of ``blow_up(base, sizes)``.

    A coloring of the blow-up gives each class ``i`` its set ``T_i`` of used
    colors; adjacent classes need disjoint sets and the class itself can be
    colored onto ``T_i`` in ``Surj(size_i, |T_i|)`` ways. Summing over color
    assignments is organized as a dynamic program over colors whose state is
    the vector of palette sizes, so the work does not grow with the class size.
    """
    sizes = [class_size] * base.n if isinstance(class_size, int) else list(class_size)
    if len(sizes) != base.n:
        raise InvalidParameterError(f"need {base.n} class sizes, got {len(sizes)}")
    if any(s < 0 for s in sizes) or q < 0:
        raise InvalidParameterError("class sizes and q must be nonnegative")
    if base.n > BLOWUP_MAX_BASE or q > BLOWUP_MAX_Q:
        raise BudgetExceededError(
            f"blow-up evaluation is limited to {BLOWUP_MAX_BASE} base vertices and q <= {BLOWUP_MAX_Q}"
        )
    caps = tuple(min(q, s) for s in sizes)
    grouped: dict[tuple[tuple[int, int], ...], int] = {}
    for prof, mult in _palette_profiles(base, q, caps).items():
        key = tuple(sorted(zip(sizes, prof)))
        grouped[key] = grouped.get(key, 0) + mult
    total = 0
    for key, mult in grouped.items():
        term = mult
        for s, t in key:
            term *= surjections(s, t)
            if not term:
                break
        total += term
    return total


# -- universal vertices -----------------------------------------------------------

def falling_factorial(k: int, m: int) -> int:
    out = 1
    for j in range(m):
        out *= k - j
    return out


def twin_classes(g: Graph) -> list[list[int]]:
    """Partition vertices into classes of pairwise non-adjacent twins (equal neighbourhoods)."""
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.neighbors(v), []).append(v)
    return sorted(groups.values())


def count_colorings_universal(g: Graph, q: int) -> int:
    """Count proper ``q``-colorings of a graph whose non-universal part is a blow-up.

    Universal vertices each need a color no other vertex uses, giving a falling
    factorial; the remaining graph is collapsed to its twin quotient and
    counted with :func:`blowup_eval`.
    """
    universal = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    rest = [v for v in range(g.n) if g.degree(v) != g.n - 1]
    k = len(universal)
    if k > q:
        return 0
    core = induced_subgraph(g, rest)
    classes = twin_classes(core)
    rep = [c[0] for c in classes]
    quotient = induced_subgraph(core, rep)
    return falling_factorial(q, k) * blowup_eval(quotient, [len(c) for c in classes], q - k)
