"""k-power domination and zero forcing propagation for a fixed starting set.

Both processes are synchronous: every vertex that can be observed (or colored)
from the current set at step t is added at step t + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graphcore import Graph, delete_vertices


def closed_neighborhood(G: Graph, S: int) -> int:
    adj = G.adj
    out = S
    m = S
    while m:
        low = m & -m
        out |= adj[low.bit_length() - 1]
        m ^= low
    return out


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"capacity k must be >= 1, got {k}")


def _propagate(adj: tuple[int, ...], obs: int, k: int) -> int:
    """One propagation step: the set of newly observed vertices."""
    new = 0
    m = obs
    while m:
        low = m & -m
        white = adj[low.bit_length() - 1] & ~obs
        if white and white.bit_count() <= k:
            new |= white
        m ^= low
    return new


def propagation_time(G: Graph, S: int, k: int = 1) -> tuple[Optional[int], int]:
    """Return ``(ppt, closure)``; ``ppt`` is None when the process stalls."""
    full = G.full
    if S == full:
        return 0, S
    adj = G.adj
    obs = closed_neighborhood(G, S)
    t = 1
    while obs != full:
        new = _propagate(adj, obs, k)
        if not new:
            return None, obs
        obs |= new
        t += 1
    return t, obs


@dataclass(frozen=True)
class PropagationTrace:
    """Observed sets ``steps[t] = S^[t]`` and who observed what at each step.

    ``forces[t]`` lists ``(forcer, newly observed set)`` pairs for the move
    from ``steps[t]`` to ``steps[t + 1]``; ``forces[0]`` is the domination
    step.  Different forcers may cover overlapping sets.  A stalled trace
    ends at the largest set the process reaches.
    """

    k: int
    steps: tuple[int, ...]
    forces: tuple[tuple[tuple[int, int], ...], ...]
    complete: bool

    @property
    def ppt(self) -> Optional[int]:
        return len(self.steps) - 1 if self.complete else None

    @property
    def closure(self) -> int:
        return self.steps[-1]


def run_process(G: Graph, S: int, k: int = 1) -> PropagationTrace:
    _check_k(k)
    full = G.full
    if S == full:
        return PropagationTrace(k, (S,), (), True)
    adj = G.adj
    dom = tuple(
        (s, adj[s] & ~S) for s in range(G.n) if S >> s & 1 and adj[s] & ~S
    )
    obs = closed_neighborhood(G, S)
    steps = [S, obs]
    forces = [dom]
    while obs != full:
        step = []
        for v in range(G.n):
            if obs >> v & 1:
                white = adj[v] & ~obs
                if white and white.bit_count() <= k:
                    step.append((v, white))
        if not step:
            break
        for _, white in step:
            obs |= white
        steps.append(obs)
        forces.append(tuple(step))
    return PropagationTrace(k, tuple(steps), tuple(forces), obs == full)


def is_kpds(G: Graph, S: int, k: int = 1) -> bool:
    _check_k(k)
    return propagation_time(G, S, k)[0] is not None


def ppt_of_set(G: Graph, S: int, k: int = 1) -> Optional[int]:
    """Smallest l with S^[l] = V, or None if ``S`` is not k-power dominating."""
    _check_k(k)
    return propagation_time(G, S, k)[0]


# --- zero forcing -------------------------------------------------------


@dataclass(frozen=True)
class ZfTrace:
    """``rounds[t]`` is the set of vertices turned blue in round t (round 0 = B)."""

    rounds: tuple[int, ...]
    complete: bool

    @property
    def pt(self) -> Optional[int]:
        return len(self.rounds) - 1 if self.complete else None

    @property
    def closure(self) -> int:
        out = 0
        for r in self.rounds:
            out |= r
        return out


def _zf_round(adj: tuple[int, ...], blue: int) -> int:
    new = 0
    m = blue
    while m:
        low = m & -m
        white = adj[low.bit_length() - 1] & ~blue
        if white and white & (white - 1) == 0:
            new |= white
        m ^= low
    return new


def zf_closure(G: Graph, B: int) -> ZfTrace:
    full = G.full
    rounds = [B]
    blue = B
    while blue != full:
        new = _zf_round(G.adj, blue)
        if not new:
            break
        rounds.append(new)
        blue |= new
    return ZfTrace(tuple(rounds), blue == full)


def is_zero_forcing_set(G: Graph, B: int) -> bool:
    full = G.full
    blue = B
    while blue != full:
        new = _zf_round(G.adj, blue)
        if not new:
            return False
        blue |= new
    return True


def zero_forcing_number(G: Graph) -> int:
    for size in range(G.n + 1):
        for combo in combinations(range(G.n), size):
            B = 0
            for v in combo:
                B |= 1 << v
            if is_zero_forcing_set(G, B):
                return size
    return G.n


def neighborhood_zfs_condition(G: Graph, S: int) -> bool:
    """Zero forcing side of the neighborhood characterization of power domination.

    True iff ``N[S]`` forces ``G`` and ``N(S) \\ S`` forces ``G - S``.
    """
    closed = closed_neighborhood(G, S)
    if not is_zero_forcing_set(G, closed):
        return False
    # G - S relabels survivors in ascending order; map N(S)\S accordingly
    rest = G.full & ~S
    B = 0
    i = 0
    for v in range(G.n):
        if rest >> v & 1:
            if closed >> v & 1:
                B |= 1 << i
            i += 1
    return is_zero_forcing_set(delete_vertices(G, S), B)
