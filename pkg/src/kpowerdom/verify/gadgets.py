"""Bespoke constructions: the NG-extremal family and the subdivision gadgets.

Vertex ``v_i`` of each construction is index ``i - 1``; extra leaves follow
the numbered vertices.
"""

from __future__ import annotations

from kpowerdom.graphcore import Graph, GraphError, build

# G_9, one edge per line of its drawing (v_8 v_9 is drawn twice)
NG_BASE_EDGES = [
    (1, 3), (1, 2), (2, 5), (3, 4), (3, 5), (5, 7), (7, 9),
    (2, 4), (4, 6), (6, 8), (8, 9), (5, 6), (6, 7), (7, 8),
]


def build_ng_family(n: int) -> Graph:
    """G_n: G_9 extended by v_n adjacent to v_{n-2} and v_{n-1}."""
    if n < 9:
        raise GraphError(f"ng family starts at n=9, got {n}")
    edges = [(u - 1, v - 1) for u, v in NG_BASE_EDGES]
    for m in range(10, n + 1):
        edges += [(m - 3, m - 1), (m - 2, m - 1)]
    return build(n, edges)


def build_subdiv_decrease(length: int) -> tuple[Graph, tuple[int, int]]:
    """Path v_1..v_l with two leaves on each end and one on v_{l-1}, v_{l-2}.

    Returns the graph and the edge v_{l-2} v_{l-1}.
    """
    if length < 7:
        raise GraphError(f"subdivision-decrease gadget needs l >= 7, got {length}")
    edges = [(i, i + 1) for i in range(length - 1)]
    first, last = 0, length - 1
    leaf = length
    for anchor in (first, first, last, last, length - 2, length - 3):
        edges.append((anchor, leaf))
        leaf += 1
    return build(length + 6, edges), (length - 3, length - 2)


def build_subdiv_increase(n: int) -> tuple[Graph, tuple[int, int]]:
    """Cycle v_1..v_{n-4} with v_{n-3}, v_{n-2}, v_{n-1} on v_1, v_{n-1} also on v_2, v_n on v_{n-1}.

    Returns the graph and the edge v_2 v_{n-1}.
    """
    if n < 8:
        raise GraphError(f"subdivision-increase gadget needs n >= 8, got {n}")
    c = n - 4
    edges = [(i, (i + 1) % c) for i in range(c)]
    edges += [(0, n - 4), (0, n - 3), (0, n - 2), (1, n - 2), (n - 1, n - 2)]
    return build(n, edges), (1, n - 2)


def build_deg3_example(n: int) -> Graph:
    """Path v_1..v_n with one leaf on v_2 and one on v_3 (n + 2 vertices)."""
    if n < 5:
        raise GraphError(f"degree-3 example needs n >= 5, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(1, n), (2, n + 1)]
    return build(n + 2, edges)
