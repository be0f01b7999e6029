"""Isomorph-free graph and tree enumeration, and graph6 corpus files.

Graphs on n vertices are grown from those on n - 1 by adding one vertex with
every possible neighborhood, keeping one graph per canonical form.  A
connected graph always has a vertex whose removal leaves it connected, so the
connected classes come from connected parents alone.  Trees are grown by
leaf augmentation and deduplicated with a rooted-at-center tree code.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .graphcore import Graph, Graph6Error, canonical_form, canonical_graph, graph6_decode

MAX_GRAPH_ORDER = 8
MAX_TREE_ORDER = 12


class CorpusError(ValueError):
    def __init__(self, message: str, lineno: Optional[int] = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


@lru_cache(maxsize=None)
def _graph_classes(n: int, connected_only: bool) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[tuple, Graph] = {}
    new_bit = 1 << (n - 1)
    first = 1 if connected_only else 0
    for parent in _graph_classes(n - 1, connected_only):
        base = parent.adj
        for nbrs in range(first, 1 << (n - 1)):
            adj = list(base)
            m = nbrs
            while m:
                low = m & -m
                adj[low.bit_length() - 1] |= new_bit
                m ^= low
            adj.append(nbrs)
            G = Graph(n, tuple(adj))
            form = canonical_form(G)
            if form not in seen:
                seen[form] = G
    return tuple(canonical_graph(seen[f]) for f in sorted(seen))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices, in canonical-form order."""
    if not 0 <= n <= MAX_GRAPH_ORDER:
        raise CorpusError(
            f"built-in graph enumeration supports 0 <= n <= {MAX_GRAPH_ORDER}, got {n}"
        )
    return iter(_graph_classes(n, connected_only))


# --- trees ----------------------------------------------------------------


def _centers(T: Graph) -> list[int]:
    degree = T.degrees()
    alive = T.full
    layer = [v for v in range(T.n) if degree[v] <= 1]
    remaining = T.n
    while remaining > 2:
        nxt = []
        for v in layer:
            alive &= ~(1 << v)
            remaining -= 1
            for u in range(T.n):
                if alive >> u & 1 and T.adj[v] >> u & 1:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    return [v for v in range(T.n) if alive >> v & 1]


def _rooted_code(T: Graph, root: int, parent: int) -> str:
    kids = sorted(
        _rooted_code(T, c, root) for c in range(T.n) if T.adj[root] >> c & 1 and c != parent
    )
    return "(" + "".join(kids) + ")"


def tree_code(T: Graph) -> str:
    """Isomorphism-complete code for a tree (nested parentheses from a center)."""
    if T.n == 0:
        return ""
    return min(_rooted_code(T, c, -1) for c in _centers(T))


@lru_cache(maxsize=None)
def _tree_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[str, Graph] = {}
    for parent in _tree_classes(n - 1):
        for v in range(n - 1):
            adj = list(parent.adj)
            adj[v] |= 1 << (n - 1)
            adj.append(1 << v)
            T = Graph(n, tuple(adj))
            code = tree_code(T)
            if code not in seen:
                seen[code] = T
    return tuple(sorted((canonical_graph(T) for T in seen.values()), key=canonical_form))


def enumerate_trees(n: int) -> Iterator[Graph]:
    if not 1 <= n <= MAX_TREE_ORDER:
        raise CorpusError(f"tree enumeration supports 1 <= n <= {MAX_TREE_ORDER}, got {n}")
    return iter(_tree_classes(n))


# --- graph6 files -----------------------------------------------------------


def read_graph6_lines(lines, skip_invalid: bool = False) -> Iterator[tuple[int, Graph]]:
    """Decode graph6 lines, yielding ``(line number, graph)``; blank lines are skipped."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line == ">>graph6<<":
            continue
        try:
            yield lineno, graph6_decode(line)
        except Graph6Error as exc:
            if skip_invalid:
                continue
            raise CorpusError(str(exc), lineno) from None


def read_graph6_stream(path, skip_invalid: bool = False) -> Iterator[Graph]:
    """Graphs from a graph6 file in file order; ``"-"`` reads standard input."""
    if str(path) == "-":
        for _, G in read_graph6_lines(sys.stdin, skip_invalid):
            yield G
        return
    with open(path, encoding="ascii", errors="surrogateescape") as fh:
        for _, G in read_graph6_lines(fh, skip_invalid):
            yield G


# --- corpus specs -------------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    """Where graphs come from and which of them to keep.

    ``source`` is ``"graphs"``, ``"trees"`` or ``"file"``.  ``orders`` applies to
    generated sources and also filters file input when given.
    """

    source: str = "graphs"
    orders: Sequence[int] = (1, 2, 3, 4, 5, 6)
    connected_only: bool = False
    path: Optional[str] = None
    min_max_degree: Optional[int] = None
    has_leaf: Optional[bool] = None

    def __post_init__(self):
        if self.source not in ("graphs", "trees", "file"):
            raise CorpusError(f"unknown corpus source {self.source!r}")
        if self.source == "file" and self.path is None:
            raise CorpusError("file corpus needs a path")
        limit = {"graphs": MAX_GRAPH_ORDER, "trees": MAX_TREE_ORDER}.get(self.source)
        if limit is not None:
            bad = [n for n in self.orders if not 0 <= n <= limit]
            if bad:
                raise CorpusError(
                    f"{self.source} corpus supports orders up to {limit}; got {bad}"
                )

    def describe(self) -> str:
        if self.source == "file":
            head = f"file:{self.path}"
        else:
            lo, hi = min(self.orders), max(self.orders)
            head = f"{self.source}:n={lo}..{hi}" if lo != hi else f"{self.source}:n={lo}"
        tags = []
        if self.connected_only and self.source != "trees":
            tags.append("connected")
        if self.min_max_degree is not None:
            tags.append(f"maxdeg>={self.min_max_degree}")
        if self.has_leaf is not None:
            tags.append("leaf" if self.has_leaf else "leafless")
        return ",".join([head] + tags)

    def keep(self, G: Graph) -> bool:
        if self.connected_only and not G.is_connected():
            return False
        if self.min_max_degree is not None and G.max_degree() < self.min_max_degree:
            return False
        if self.has_leaf is not None and bool(G.leaves()) != self.has_leaf:
            return False
        return True

    def graphs(self) -> Iterator[Graph]:
        if self.source == "file":
            orders = set(self.orders) if self.orders else None
            for G in read_graph6_stream(self.path):
                if (orders is None or G.n in orders) and self.keep(G):
                    yield G
            return
        for n in sorted(set(self.orders)):
            if self.source == "trees":
                stream = enumerate_trees(n)
            else:
                stream = enumerate_graphs(n, self.connected_only)
            for G in stream:
                if self.keep(G):
                    yield G


def graph_corpus(n_max: int, connected_only: bool = False, n_min: int = 1, **filters) -> CorpusSpec:
    return CorpusSpec("graphs", tuple(range(n_min, n_max + 1)), connected_only, **filters)


def tree_corpus(n_max: int, n_min: int = 1) -> CorpusSpec:
    return CorpusSpec("trees", tuple(range(n_min, n_max + 1)))


def file_corpus(path: str | Path, connected_only: bool = False, **filters) -> CorpusSpec:
    return CorpusSpec("file", (), connected_only, str(path), **filters)
