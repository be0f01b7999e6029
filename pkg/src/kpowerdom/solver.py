"""Exhaustive optimizers over starting sets.

Searches run in increasing cardinality, and results are returned in
ascending bitmask order so witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Optional

from .graphcore import Graph, contains_induced, families, graph6_encode
from .process import closed_neighborhood, propagation_time


def _min_sets(G: Graph, accept: Callable[[int], bool]) -> tuple[int, ...]:
    """All minimum-size sets accepted by ``accept``; isolated vertices forced in."""
    forced = G.isolated()
    free = [v for v in range(G.n) if not forced >> v & 1]
    for size in range(len(free) + 1):
        found = []
        for combo in combinations(free, size):
            S = forced
            for v in combo:
                S |= 1 << v
            if accept(S):
                found.append(S)
        if found:
            return tuple(sorted(found))
    return ()


def min_dominating_sets(G: Graph) -> tuple[int, ...]:
    full = G.full
    return _min_sets(G, lambda S: closed_neighborhood(G, S) == full)


def domination_number(G: Graph) -> int:
    sets = min_dominating_sets(G)
    return sets[0].bit_count()


@dataclass(frozen=True)
class PowerProfile:
    """Every minimum k-power dominating set with its propagation time."""

    k: int
    min_sets: tuple[int, ...]
    times: tuple[int, ...]

    @property
    def gamma(self) -> int:
        return self.min_sets[0].bit_count()

    @property
    def ppt(self) -> int:
        return min(self.times)

    @property
    def PPT(self) -> int:
        return max(self.times)

    @property
    def achieved(self) -> frozenset[int]:
        return frozenset(self.times)

    @property
    def interval_full(self) -> bool:
        return self.achieved == frozenset(range(self.ppt, self.PPT + 1))


@lru_cache(maxsize=1 << 16)
def power_profile(G: Graph, k: int = 1) -> PowerProfile:
    if k < 1:
        raise ValueError(f"capacity k must be >= 1, got {k}")
    times: dict[int, int] = {}

    def accept(S: int) -> bool:
        t = propagation_time(G, S, k)[0]
        if t is None:
            return False
        times[S] = t
        return True

    sets = _min_sets(G, accept)
    return PowerProfile(k, sets, tuple(times[S] for S in sets))


def gamma_pk(G: Graph, k: int = 1) -> int:
    return power_profile(G, k).gamma


def all_min_kpds(G: Graph, k: int = 1) -> list[int]:
    return list(power_profile(G, k).min_sets)


def ppt_k(G: Graph, k: int = 1) -> int:
    return power_profile(G, k).ppt


def PPT_k(G: Graph, k: int = 1) -> int:
    return power_profile(G, k).PPT


def interval_is_full(G: Graph, k: int = 1) -> bool:
    return power_profile(G, k).interval_full


def efficient_sets(G: Graph, k: int = 1) -> list[int]:
    prof = power_profile(G, k)
    return [S for S, t in zip(prof.min_sets, prof.times) if t == prof.ppt]


def slowest_sets(G: Graph, k: int = 1) -> list[int]:
    prof = power_profile(G, k)
    return [S for S, t in zip(prof.min_sets, prof.times) if t == prof.PPT]


# --- structural helpers ---------------------------------------------------


def k_strong_supports(G: Graph, k: int = 1) -> int:
    """Vertices adjacent to at least k + 1 leaves."""
    if k < 1:
        raise ValueError(f"capacity k must be >= 1, got {k}")
    leaves = G.leaves()
    out = 0
    for v, row in enumerate(G.adj):
        if (row & leaves).bit_count() >= k + 1:
            out |= 1 << v
    return out


def strong_support_dominating_set(G: Graph, k: int = 1) -> Optional[int]:
    """The set of all k-strong supports if it dominates ``G``, else None."""
    W = k_strong_supports(G, k)
    if G.n and closed_neighborhood(G, W) == G.full:
        return W
    return None


def private_neighborhood(G: Graph, S: int, v: int) -> int:
    """``pn[v, S] = N[v] - N[S - {v}]``."""
    if not S >> v & 1:
        raise ValueError(f"vertex {v} is not in S")
    return G.closed_neighbors(v) & ~closed_neighborhood(G, S & ~(1 << v))


def outside_private(G: Graph, S: int, v: int) -> int:
    """``A_v = V - (S ∪ pn[v, S])``."""
    return G.full & ~(S | private_neighborhood(G, S, v))


@lru_cache(maxsize=None)
def forbidden_family(k: int) -> tuple[Graph, ...]:
    """C_3, K_{2,k+1} and K_2 joined with k independent vertices."""
    return (
        families.cycle(3),
        families.complete_bipartite(2, k + 1),
        families.join_K2_empty(k),
    )


def is_Fk_free(G: Graph, k: int = 1) -> bool:
    return not any(contains_induced(G, H) for H in forbidden_family(k))


# --- reports --------------------------------------------------------------


@dataclass
class InvariantReport:
    graph6: str
    n: int
    k: int
    gamma: int
    gamma_pk: int
    ppt: int
    PPT: int
    interval_full: bool
    num_min_sets: int
    efficient_witness: int
    slowest_witness: int
    achieved: list[int] = field(default_factory=list)

    @property
    def interval(self) -> tuple[int, int]:
        return (self.ppt, self.PPT)


def invariant_report(G: Graph, k: int = 1) -> InvariantReport:
    prof = power_profile(G, k)
    return InvariantReport(
        graph6=graph6_encode(G),
        n=G.n,
        k=k,
        gamma=domination_number(G),
        gamma_pk=prof.gamma,
        ppt=prof.ppt,
        PPT=prof.PPT,
        interval_full=prof.interval_full,
        num_min_sets=len(prof.min_sets),
        efficient_witness=efficient_sets(G, k)[0],
        slowest_witness=slowest_sets(G, k)[0],
        achieved=sorted(prof.achieved),
    )
