"""Exhaustive solvers for small graphs.

Backtracking with two standard accelerations: elements are coloured in
descending conflict-degree order, and colour classes are canonicalized by
allowing a brand-new colour index only once per level (first-use symmetry
breaking). The distinguishing search additionally prunes as soon as any
vertex whose closed star is fully coloured matches a completed same-degree
neighbour.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .coloring import TotalColoring
from .graphs import CapacityError, Graph, Graph6Error, parse_graph6
from .vizing import EdgeColoring

EDGE_GUARD = 40
ELEMENT_GUARD = 40


def _backtrack(t: int, conflict: list[list[int]], order: list[int], k: int,
               on_assign: Callable[[int, int], bool] | None = None,
               on_unassign: Callable[[int, int], None] | None = None,
               color: list[int] | None = None) -> list[int] | None:
    """First assignment of colours 1..k to all t elements, or None.

    on_assign may reject an assignment (returning False) after recording it;
    on_unassign must reverse whatever on_assign recorded. Hooks that need to
    inspect partial assignments should supply (and capture) the colour
    buffer, which uses 0 for not-yet-coloured.
    """
    if color is None:
        color = [0] * t

    def rec(i: int, max_used: int) -> bool:
        if i == t:
            return True
        e = order[i]
        banned = 0
        for f in conflict[e]:
            banned |= 1 << color[f]
        limit = min(k, max_used + 1)
        for c in range(1, limit + 1):
            if banned >> c & 1:
                continue
            color[e] = c
            ok = on_assign(e, c) if on_assign else True
            if ok and rec(i + 1, max_used if c <= max_used else c):
                return True
            if on_unassign:
                on_unassign(e, c)
            color[e] = 0
        return False

    return color if rec(0, 0) else None


def _order_by_conflicts(conflict: list[list[int]], rank: list[int]) -> list[int]:
    return sorted(range(len(conflict)), key=lambda e: (-len(conflict[e]), rank[e]))


# ---------------------------------------------------------------------------
# edge colouring

def _edge_conflicts(g: Graph) -> list[list[int]]:
    idx = {e: j for j, e in enumerate(g.edges)}
    conflict: list[list[int]] = [[] for _ in g.edges]
    for j, (u, v) in enumerate(g.edges):
        for x in (u, v):
            for w in g.adjacency[x]:
                other = idx[(x, w) if x < w else (w, x)]
                if other != j:
                    conflict[j].append(other)
    return [sorted(set(c)) for c in conflict]


def find_edge_coloring(g: Graph, k: int) -> EdgeColoring | None:
    """Proper edge colouring with at most k colours by exhaustive search."""
    if len(g.edges) > EDGE_GUARD:
        raise CapacityError(f"{len(g.edges)} edges exceed the search guard {EDGE_GUARD}")
    if k < 0:
        raise ValueError("k must be non-negative")
    conflict = _edge_conflicts(g)
    order = _order_by_conflicts(conflict, list(range(len(conflict))))
    result = _backtrack(len(g.edges), conflict, order, k)
    if result is None:
        return None
    return EdgeColoring(colors={e: result[j] for j, e in enumerate(g.edges)}, k=k)


def chi_prime_exact(g: Graph) -> int:
    """Edge chromatic number; the answer is max_degree or max_degree + 1."""
    if len(g.edges) > EDGE_GUARD:
        raise CapacityError(f"{len(g.edges)} edges exceed the search guard {EDGE_GUARD}")
    if not g.edges:
        return 0
    if find_edge_coloring(g, g.max_degree) is not None:
        return g.max_degree
    return g.max_degree + 1


# ---------------------------------------------------------------------------
# vertex colouring

def chi_vertex_exact(g: Graph) -> int:
    """Vertex chromatic number by exhaustive search."""
    if g.n > ELEMENT_GUARD:
        raise CapacityError(f"{g.n} vertices exceed the search guard {ELEMENT_GUARD}")
    if g.n == 0:
        return 0
    conflict = [sorted(g.adjacency[v]) for v in range(g.n)]
    order = _order_by_conflicts(conflict, list(range(g.n)))
    for k in range(1, g.n + 1):
        if _backtrack(g.n, conflict, order, k) is not None:
            return k
    raise AssertionError("n colours always suffice")


# ---------------------------------------------------------------------------
# total colouring

def _total_structure(g: Graph) -> tuple[list[list[int]], list[int]]:
    """Conflict lists and search order over vertices then edges.

    Element ids: vertex v is v; edge j (in sorted edge order) is n + j.
    """
    n, edges = g.n, g.edges
    idx = {e: n + j for j, e in enumerate(edges)}
    conflict: list[list[int]] = [[] for _ in range(n + len(edges))]
    for v in range(n):
        for w in g.adjacency[v]:
            conflict[v].append(w)
            conflict[v].append(idx[(v, w) if v < w else (w, v)])
    for j, (u, v) in enumerate(edges):
        e = n + j
        conflict[e].append(u)
        conflict[e].append(v)
        for x in (u, v):
            for w in g.adjacency[x]:
                other = idx[(x, w) if x < w else (w, x)]
                if other != e:
                    conflict[e].append(other)
    conflict = [sorted(set(c)) for c in conflict]
    # tie-break rank: each vertex followed by its backward edges, so closed
    # stars tend to complete early for the distinguishing prune
    rank = [0] * (n + len(edges))
    counter = 0
    for v in range(n):
        rank[v] = counter
        counter += 1
        for u in sorted(g.adjacency[v]):
            if u < v:
                rank[idx[(u, v)]] = counter
                counter += 1
    order = _order_by_conflicts(conflict, rank)
    return conflict, order


def find_total_coloring(g: Graph, k: int,
                        distinguishing: bool = False) -> TotalColoring | None:
    """Proper total colouring with at most k colours, or None.

    With distinguishing=True the colouring must also give adjacent vertices
    distinct colour sets.
    """
    t = g.n + len(g.edges)
    if t > ELEMENT_GUARD:
        raise CapacityError(f"{t} elements exceed the search guard {ELEMENT_GUARD}")
    if k < 0:
        raise ValueError("k must be non-negative")
    conflict, order = _total_structure(g)
    t_colors = [0] * t
    on_assign = on_unassign = None
    if distinguishing:
        n = g.n
        star: list[list[int]] = [[v] for v in range(n)]
        touches: list[list[int]] = [[v] for v in range(n)] + [[] for _ in g.edges]
        for j, (u, v) in enumerate(g.edges):
            star[u].append(n + j)
            star[v].append(n + j)
            touches[n + j] = [u, v]
        remaining = [len(star[v]) for v in range(n)]

        def star_set(v: int) -> frozenset[int]:
            return frozenset(t_colors[e] for e in star[v])

        def on_assign(e: int, c: int) -> bool:
            ok = True
            for v in touches[e]:
                remaining[v] -= 1
            for v in touches[e]:
                if remaining[v] != 0:
                    continue
                mine = None
                for w in g.adjacency[v]:
                    if remaining[w] == 0 and len(star[w]) == len(star[v]):
                        if mine is None:
                            mine = star_set(v)
                        if mine == star_set(w):
                            ok = False
                            break
                if not ok:
                    break
            return ok

        def on_unassign(e: int, c: int) -> None:
            for v in touches[e]:
                remaining[v] += 1

    result = _backtrack(t, conflict, order, k, on_assign, on_unassign, t_colors)
    if result is None:
        return None
    return TotalColoring(
        vertex_colors=tuple(result[: g.n]),
        edge_colors={e: result[g.n + j] for j, e in enumerate(g.edges)},
        k=k,
    )


def chi_total_exact(g: Graph) -> int:
    """Total chromatic number; at least max_degree + 1 on non-empty graphs."""
    t = g.n + len(g.edges)
    if t > ELEMENT_GUARD:
        raise CapacityError(f"{t} elements exceed the search guard {ELEMENT_GUARD}")
    if t == 0:
        return 0
    for k in range(g.max_degree + 1, 2 * g.max_degree + 2):
        if find_total_coloring(g, k) is not None:
            return k
    raise AssertionError("2*max_degree + 1 colours always suffice")


def chi_at_exact(g: Graph) -> int:
    """Distinguishing total chromatic number by exhaustive search.

    Bounded above by the element count: all-distinct colours give every
    vertex a colour set containing its private vertex colour.
    """
    t = g.n + len(g.edges)
    if t > ELEMENT_GUARD:
        raise CapacityError(f"{t} elements exceed the search guard {ELEMENT_GUARD}")
    if t == 0:
        return 0
    for k in range(chi_total_exact(g), t + 1):
        if find_total_coloring(g, k, distinguishing=True) is not None:
            return k
    raise AssertionError("all-distinct colours are always distinguishing")


# ---------------------------------------------------------------------------
# corpus scanning

@dataclass(frozen=True)
class GraphRecord:
    """Exact result for one corpus graph; slack = max_degree + 3 - chi_at."""

    graph6: str
    n: int
    delta: int
    chi_at: int
    slack: int


@dataclass(frozen=True)
class ConjectureReport:
    records: tuple[GraphRecord, ...]
    violations: tuple[GraphRecord, ...]
    tight: tuple[GraphRecord, ...]


def check_conjecture(lines: Iterable[str]) -> ConjectureReport:
    """Evaluate chi_at <= max_degree + 3 on a stream of graph6 lines.

    Blank lines are skipped. Capacity and parse failures name the offending
    line number.
    """
    records: list[GraphRecord] = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
            value = chi_at_exact(g)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from None
        except CapacityError as exc:
            raise CapacityError(f"line {lineno}: {exc}") from None
        records.append(GraphRecord(graph6=text, n=g.n, delta=g.max_degree,
                                   chi_at=value,
                                   slack=g.max_degree + 3 - value))
    recs = tuple(records)
    return ConjectureReport(
        records=recs,
        violations=tuple(r for r in recs if r.slack < 0),
        tight=tuple(r for r in recs if r.slack == 0),
    )
