"""Named graph families.

Vertex labels are fixed so traces and witness sets are reproducible:
paths and cycles run ``0..n-1`` in order, stars and spiders put the center at
0, and lollipops put the clique first with the bridge from ``s-1`` to ``s``.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, GraphError, build


def _need(ok: bool, what: str) -> None:
    if not ok:
        raise GraphError(f"illegal family parameter: {what}")


def empty(n: int) -> Graph:
    _need(n >= 0, f"empty({n})")
    return build(n, [])


def path(n: int) -> Graph:
    _need(n >= 1, f"path({n})")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle({n})")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete({n})")
    return build(n, combinations(range(n), 2))


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge 01 removed."""
    _need(n >= 2, f"complete_minus_edge({n})")
    return build(n, [e for e in combinations(range(n), 2) if e != (0, 1)])


def complete_bipartite(s: int, t: int) -> Graph:
    _need(s >= 1 and t >= 1, f"complete_bipartite({s},{t})")
    return build(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0, leaves 1..n."""
    _need(n >= 1, f"star({n})")
    return complete_bipartite(1, n)


def lollipop(s: int, t: int) -> Graph:
    _need(s >= 3 and t >= 1, f"lollipop({s},{t})")
    edges = list(combinations(range(s), 2))
    edges.append((s - 1, s))
    edges += [(s + i, s + i + 1) for i in range(t - 1)]
    return build(s + t, edges)


def spider(*arms: int) -> Graph:
    """K_{1,m} with arm j subdivided ``arms[j] - 1`` times.

    Arm j occupies a consecutive block of indices, the vertex next to the
    center first.
    """
    _need(len(arms) >= 1 and all(a >= 1 for a in arms), f"spider{arms}")
    edges = []
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build(nxt, edges)


def join_K2_empty(k: int) -> Graph:
    """K_2 joined with k independent vertices; the K_2 is on vertices 0, 1."""
    _need(k >= 0, f"join_K2_empty({k})")
    edges = [(0, 1)] + [(c, 2 + i) for c in (0, 1) for i in range(k)]
    return build(k + 2, edges)
