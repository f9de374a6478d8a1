"""Shared test oracles.

Everything here re-derives its answer from first principles with code
paths disjoint from the library: set comprehensions instead of
incremental bookkeeping, exact Fraction sums instead of log-space
floats, and permutation canonical forms instead of graph6 strings.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from avdtotal import Graph, TotalColoring


def naive_is_proper(g: Graph, phi: TotalColoring) -> bool:
    for u, v in g.edges:
        if phi.vertex_colors[u] == phi.vertex_colors[v]:
            return False
        c = phi.edge_colors[(u, v)]
        if c == phi.vertex_colors[u] or c == phi.vertex_colors[v]:
            return False
    for v in range(g.n):
        cols = [phi.edge_colors[e] for e in g.incident_edges(v)]
        if len(cols) != len(set(cols)):
            return False
    return True


def naive_color_set(g: Graph, phi: TotalColoring, v: int) -> frozenset[int]:
    return frozenset({phi.vertex_colors[v]}
                     | {phi.edge_colors[e] for e in g.incident_edges(v)})


def naive_is_avd(g: Graph, phi: TotalColoring) -> bool:
    if not naive_is_proper(g, phi):
        return False
    for u, v in g.edges:
        if g.degree(u) == g.degree(v):
            if naive_color_set(g, phi, u) == naive_color_set(g, phi, v):
                return False
    return True


def exact_upper_tail(n: int, p: Fraction, m: int) -> Fraction:
    """Pr[Bin(n, p) >= m] by direct summation."""
    q = 1 - p
    total = Fraction(0)
    for j in range(m, n + 1):
        total += Fraction(_binom(n, j)) * p**j * q**(n - j)
    return total


def exact_lower_tail(n: int, p: Fraction, m: int) -> Fraction:
    """Pr[Bin(n, p) <= m] by direct summation."""
    q = 1 - p
    total = Fraction(0)
    for j in range(0, m + 1):
        total += Fraction(_binom(n, j)) * p**j * q**(n - j)
    return total


def _binom(n: int, k: int) -> int:
    return math.comb(n, k)


def canonical_form(n: int, edges: frozenset[tuple[int, int]]) -> int:
    """Smallest adjacency bitmask over all vertex relabelings."""
    best = None
    for perm in itertools.permutations(range(n)):
        mask = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            mask |= 1 << (a * n + b)
        if best is None or mask < best:
            best = mask
    return best


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n labelled vertices, one per isomorphism class."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        edges = frozenset(pairs[i] for i in range(len(pairs)) if bits >> i & 1)
        g = Graph.build(n, edges)
        if not _connected(g):
            continue
        key = canonical_form(n, edges)
        if key in seen:
            continue
        seen.add(key)
        out.append(g)
    return out


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == g.n


def elements_clash(g: Graph, a, b) -> bool:
    """Whether two total-colouring elements must receive distinct colours."""
    if isinstance(a, int) and isinstance(b, int):
        return g.has_edge(a, b)
    ta = {a} if isinstance(a, int) else set(a)
    tb = {b} if isinstance(b, int) else set(b)
    return bool(ta & tb)


def enumerate_total_colorings(g: Graph, k: int):
    """Yield every proper total colouring of g with colours in 1..k."""
    elements = list(range(g.n)) + list(g.edges)
    conflicts = []
    for i, a in enumerate(elements):
        conflicts.append([j for j in range(i) if elements_clash(g, a, elements[j])])

    assignment = [0] * len(elements)

    def rec(i: int):
        if i == len(elements):
            vertex_colors = tuple(assignment[:g.n])
            edge_colors = {e: assignment[g.n + j] for j, e in enumerate(g.edges)}
            yield TotalColoring(vertex_colors, edge_colors, k)
            return
        banned = {assignment[j] for j in conflicts[i]}
        for c in range(1, k + 1):
            if c not in banned:
                assignment[i] = c
                yield from rec(i + 1)
        assignment[i] = 0

    yield from rec(0)
