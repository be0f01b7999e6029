"""Immutable simple graphs on at most 64 vertices.

Vertex sets are plain ``int`` bitmasks: bit ``v`` set means vertex ``v`` is a
member.  Every adjacency row ``adj[v]`` is the open neighborhood ``N(v)`` as
such a mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph construction or edge operations."""


# --- vertex set helpers ----------------------------------------------------


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield the vertices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def format_set(mask: int) -> str:
    return "{" + ",".join(str(v) for v in members(mask)) + "}"


def parse_set(text: str) -> int:
    body = text.strip().strip("{}").strip()
    if not body:
        return 0
    return vset(int(tok) for tok in body.split(","))


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# --- the graph type --------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = self.full
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full(self) -> int:
        """The vertex set V as a mask."""
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as normalized ``(u, v)`` pairs with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.adj):
            for v in members(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def leaves(self) -> int:
        return vset(v for v, row in enumerate(self.adj) if row.bit_count() == 1)

    def isolated(self) -> int:
        return vset(v for v, row in enumerate(self.adj) if row == 0)

    def is_connected(self) -> bool:
        return self.n <= 1 or _reach(self, 0) == self.full

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on vertices ``0..n-1`` from an edge list."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        e = normalize_edge(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency(adj: Sequence[int]) -> Graph:
    return Graph(len(adj), tuple(adj))


# --- operations -----------------------------------------------------------


def complement(G: Graph) -> Graph:
    full = G.full
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)))


def subdivide(G: Graph, e: Sequence[int]) -> Graph:
    """Replace edge ``uv`` by the path ``u-w-v``; ``w`` gets index ``n``."""
    u, v = normalize_edge(*e)
    if not G.has_edge(u, v):
        raise GraphError(f"{(u, v)} is not an edge")
    w = G.n
    adj = list(G.adj) + [(1 << u) | (1 << v)]
    adj[u] = adj[u] & ~(1 << v) | 1 << w
    adj[v] = adj[v] & ~(1 << u) | 1 << w
    return Graph(G.n + 1, tuple(adj))


def contract(G: Graph, e: Sequence[int]) -> Graph:
    """Merge the endpoints of ``e`` into one vertex.

    The merged vertex keeps index ``min(u, v)``; indices above ``max(u, v)``
    shift down by one.
    """
    u, v = normalize_edge(*e)
    if not G.has_edge(u, v):
        raise GraphError(f"{(u, v)} is not an edge")
    merged = (G.adj[u] | G.adj[v]) & ~((1 << u) | (1 << v))
    rows = list(G.adj)
    rows[u] = merged
    for x in members(merged):
        rows[x] = rows[x] & ~(1 << v) | 1 << u
    return Graph(G.n - 1, _relabel(rows, [x for x in range(G.n) if x != v]))


def induced_subgraph(G: Graph, vertices: Sequence[int] | int) -> Graph:
    """Subgraph induced by ``vertices``, relabeled ``0..m-1`` in the given order.

    A mask argument is taken in ascending vertex order.
    """
    order = list(members(vertices)) if isinstance(vertices, int) else list(vertices)
    return Graph(len(order), _relabel(G.adj, order))


def _relabel(rows: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        row = 0
        for u in members(rows[v]):
            i = pos.get(u)
            if i is not None:
                row |= 1 << i
        adj.append(row)
    return tuple(adj)


def delete_vertices(G: Graph, S: int) -> Graph:
    """``G - S`` with surviving vertices relabeled in ascending order."""
    return induced_subgraph(G, G.full & ~S)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for H in graphs:
        adj.extend(row << offset for row in H.adj)
        offset += H.n
    return Graph(offset, tuple(adj))


def _reach(G: Graph, start: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= G.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def components(G: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by smallest vertex."""
    out = []
    left = G.full
    while left:
        start = (left & -left).bit_length() - 1
        comp = _reach(G, start)
        out.append(comp)
        left &= ~comp
    return out
