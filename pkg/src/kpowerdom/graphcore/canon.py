"""Canonical labeling by partition refinement plus exhaustive individualization.

The canonical form of a graph is the lexicographically smallest tuple of
relabeled adjacency rows over every leaf of the refinement search tree.  The
tree is built from label-invariant choices only, so isomorphic graphs produce
the same set of leaves and hence the same minimum.  Exact for every graph;
fast enough for the small orders this package works at.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import Graph, induced_subgraph, members

CanonicalForm = tuple  # (n, row_0, ..., row_{n-1}) under the canonical labeling


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    # Split every cell by its vertices' neighbor counts into every cell until stable.
    while True:
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in members(cell):
                row = adj[v]
                sig = tuple((row & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | 1 << v
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_form(adj: tuple[int, ...], cells: list[int]) -> tuple[int, ...]:
    order = [c.bit_length() - 1 for c in cells]
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in members(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    mask = ~((1 << u) | (1 << v))
    return adj[u] & mask == adj[v] & mask


def _search(adj: tuple[int, ...], cells: list[int], best: list) -> None:
    target = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
    if target is None:
        form = _leaf_form(adj, cells)
        if best[0] is None or form < best[0]:
            best[0] = form
        return
    cell = cells[target]
    tried: list[int] = []
    for v in members(cell):
        # swapping twins is an automorphism fixing the current partition
        if any(_twins(adj, u, v) for u in tried):
            continue
        tried.append(v)
        split = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1 :]
        _search(adj, _refine(adj, split), best)


@lru_cache(maxsize=1 << 18)
def canonical_form(G: Graph) -> CanonicalForm:
    if G.n == 0:
        return (0,)
    # degree-sorted initial partition; refinement takes it from there
    by_degree: dict[int, int] = {}
    for v, row in enumerate(G.adj):
        d = row.bit_count()
        by_degree[d] = by_degree.get(d, 0) | 1 << v
    cells = [by_degree[d] for d in sorted(by_degree)]
    best: list = [None]
    _search(G.adj, _refine(G.adj, cells), best)
    return (G.n,) + best[0]


def canonical_graph(G: Graph) -> Graph:
    form = canonical_form(G)
    return Graph(form[0], form[1:])


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.num_edges() != H.num_edges():
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G) == canonical_form(H)


def contains_induced(G: Graph, H: Graph) -> bool:
    """True if some vertex subset of ``G`` induces a copy of ``H``."""
    if H.n > G.n:
        return False
    if H.n == 0:
        return True
    m = H.num_edges()
    h_degs = sorted(H.degrees())
    target = canonical_form(H)
    for combo in combinations(range(G.n), H.n):
        mask = 0
        for v in combo:
            mask |= 1 << v
        degs = sorted((G.adj[v] & mask).bit_count() for v in combo)
        if sum(degs) != 2 * m or degs != h_degs:
            continue
        if canonical_form(induced_subgraph(G, combo)) == target:
            return True
    return False
