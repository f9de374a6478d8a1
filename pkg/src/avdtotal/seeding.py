"""Starting colourings: a greedy proper total colouring and document import.

The greedy seeder never needs more than 2*max_degree + 1 colours, because
each element (vertex or edge) conflicts with at most 2*max_degree already
coloured neighbours in the total sense.
"""

from __future__ import annotations

from .coloring import TotalColoring, verdict
from .graphs import Edge, Graph, normalize_edge

Element = int | Edge


def default_order(g: Graph) -> list[Element]:
    """Vertices ascending, then edges in lexicographic endpoint order."""
    return list(range(g.n)) + list(g.edges)


def _validate_order(g: Graph, order: list[Element]) -> None:
    seen_v: set[int] = set()
    seen_e: set[Edge] = set()
    for item in order:
        if isinstance(item, int) and not isinstance(item, bool):
            if not 0 <= item < g.n:
                raise ValueError(f"order contains unknown vertex {item}")
            if item in seen_v:
                raise ValueError(f"order repeats vertex {item}")
            seen_v.add(item)
        elif isinstance(item, tuple) and len(item) == 2:
            e = normalize_edge(*item)
            if e not in g.edge_set:
                raise ValueError(f"order contains non-edge {item}")
            if e in seen_e:
                raise ValueError(f"order repeats edge {item}")
            seen_e.add(e)
        else:
            raise ValueError(f"order contains unrecognized element {item!r}")
    if len(seen_v) != g.n or len(seen_e) != len(g.edges):
        raise ValueError("order must cover every vertex and edge exactly once")


def greedy_total(g: Graph, order: list[Element] | None = None) -> TotalColoring:
    """Proper total colouring by smallest-available colour along ``order``.

    Uses at most 2*max_degree + 1 colours. Not adjacent-vertex-
    distinguishing in general; it seeds the recolouring pipeline.
    """
    if order is None:
        order = default_order(g)
    else:
        _validate_order(g, order)
    vcol: dict[int, int] = {}
    ecol: dict[Edge, int] = {}

    def forbidden(item: Element) -> set[int]:
        if isinstance(item, int):
            out = set()
            for w in g.adjacency[item]:
                if w in vcol:
                    out.add(vcol[w])
                e = normalize_edge(item, w)
                if e in ecol:
                    out.add(ecol[e])
            return out
        u, v = item
        out = set()
        for x in (u, v):
            if x in vcol:
                out.add(vcol[x])
            for w in g.adjacency[x]:
                e = normalize_edge(x, w)
                if e in ecol:
                    out.add(ecol[e])
        return out

    for item in order:
        bad = forbidden(item)
        c = 1
        while c in bad:
            c += 1
        if isinstance(item, int):
            vcol[item] = c
        else:
            ecol[normalize_edge(*item)] = c

    used = max(list(vcol.values()) + list(ecol.values()), default=1)
    assert used <= 2 * g.max_degree + 1
    return TotalColoring(
        vertex_colors=tuple(vcol[v] for v in range(g.n)),
        edge_colors=ecol,
        k=used,
    )


def import_total(g: Graph, doc_phi: TotalColoring) -> tuple[TotalColoring, dict[str, bool]]:
    """Adopt an externally supplied colouring, reporting recomputed flags."""
    return doc_phi, verdict(g, doc_phi)
