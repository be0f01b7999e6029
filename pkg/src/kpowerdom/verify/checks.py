"""Computational checks of the characterization theorems, bounds and gadgets.

Every check returns a :class:`VerificationResult`.  Corpus checks evaluate one
graph at a time through a top-level function so they can fan out to worker
processes; results are merged in corpus order.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Optional, Sequence

from kpowerdom.corpus import CorpusError, CorpusSpec, enumerate_graphs, graph_corpus, tree_corpus
from kpowerdom.graphcore import (
    Graph,
    canonical_form,
    complement,
    contract,
    disjoint_union,
    families,
    format_set,
    graph6_encode,
    is_isomorphic,
    subdivide,
    vset,
)
from kpowerdom.process import (
    closed_neighborhood,
    is_kpds,
    neighborhood_zfs_condition,
    propagation_time,
)
from kpowerdom.solver import (
    all_min_kpds,
    domination_number,
    efficient_sets,
    gamma_pk,
    is_Fk_free,
    power_profile,
    ppt_k,
    strong_support_dominating_set,
)

from .gadgets import (
    build_deg3_example,
    build_ng_family,
    build_subdiv_decrease,
    build_subdiv_increase,
)


@dataclass
class Counterexample:
    graph6: str
    observed: str
    expected: str


@dataclass
class VerificationResult:
    theorem_id: str
    corpus: str
    checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    attaining: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, G: Graph | str, observed, expected) -> None:
        g6 = G if isinstance(G, str) else graph6_encode(G)
        self.counterexamples.append(Counterexample(g6, str(observed), str(expected)))

    def to_record(self) -> str:
        bad = ",".join(c.graph6 for c in self.counterexamples)
        status = "pass" if self.passed else "fail"
        return f"{self.theorem_id}\t{self.corpus}\t{self.checked}\t{status}\t{bad}"

    def to_json(self) -> str:
        return json.dumps(
            {
                "theorem_id": self.theorem_id,
                "corpus": self.corpus,
                "checked": self.checked,
                "passed": self.passed,
                "counterexamples": [vars(c) for c in self.counterexamples],
                "attaining": self.attaining,
                "notes": self.notes,
            },
            sort_keys=True,
        )


def parallel_map(fn: Callable, graphs: Iterable[Graph], workers: int = 1) -> list:
    graphs = list(graphs)
    if workers <= 1 or len(graphs) < 2:
        return [fn(G) for G in graphs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, graphs, chunksize=max(1, len(graphs) // (8 * workers))))


def _g6(G: Graph) -> str:
    return graph6_encode(G)


# --- reference graph lists ----------------------------------------------------

F = families


def extremal_n_minus_1() -> list[Graph]:
    return [F.complete(1), F.complete(2)]


def extremal_n_minus_2() -> list[Graph]:
    K1, K2 = F.complete(1), F.complete(2)
    return [F.empty(2), disjoint_union(K1, K2), F.path(3), F.path(4), F.cycle(3), F.cycle(4)]


def gamma5_family() -> list[Graph]:
    """Connected graphs on 5 vertices with maximum degree 3."""
    return [G for G in enumerate_graphs(5, connected_only=True) if G.max_degree() == 3]


def extremal_n_minus_3_kge2() -> list[Graph]:
    K1, K2 = F.complete(1), F.complete(2)
    listed = [
        F.path(5), F.path(6), F.cycle(5), F.cycle(6),
        F.spider(1, 1, 1), F.lollipop(3, 1), F.complete_minus_edge(4), F.complete(4),
        disjoint_union(K1, F.path(3)), disjoint_union(K1, F.path(4)),
        disjoint_union(K1, F.cycle(3)), disjoint_union(K1, F.cycle(4)),
        disjoint_union(K2, K2), F.empty(3), disjoint_union(F.empty(2), K2),
    ]
    return listed + gamma5_family()


def gammaP23_family() -> list[Graph]:
    K1, K2 = F.complete(1), F.complete(2)
    return [
        F.empty(3), disjoint_union(F.empty(2), K2),
        disjoint_union(K1, F.cycle(3)), disjoint_union(K1, F.path(3)),
        disjoint_union(K1, F.path(4)), disjoint_union(K1, F.cycle(4)),
        disjoint_union(K2, K2),
    ]


def trees_n_minus_3(n: int) -> list[Graph]:
    out = []
    if n in (5, 6):
        out.append(F.path(n))
    if n >= 4:
        out.append(F.spider(1, 1, n - 3))
    return out


def _dedup(graphs: Iterable[Graph]) -> list[Graph]:
    seen, out = set(), []
    for G in graphs:
        f = canonical_form(G)
        if f not in seen:
            seen.add(f)
            out.append(G)
    return out


# --- per-graph evaluators (top level so worker processes can pickle them) --


def _ppt_values(G: Graph, ks: Sequence[int]) -> tuple[int, ...]:
    return tuple(ppt_k(G, k) for k in ks)


def _ng_values(G: Graph) -> tuple[int, int, int, int]:
    H = complement(G)
    pg, ph = power_profile(G, 1), power_profile(H, 1)
    return pg.ppt, ph.ppt, pg.gamma, ph.gamma


# --- the checks ------------------------------------------------------------


def _attaining_check(
    tag: str,
    corpus: CorpusSpec,
    ks: Sequence[int],
    offset: int,
    reference: Callable[[], list[Graph]],
    workers: int,
    forward_only_filter: Optional[Callable[[Graph, int], bool]] = None,
) -> VerificationResult:
    """Attaining set of ``ppt_k(G) = |G| - offset`` must equal the reference list."""
    graphs = list(corpus.graphs())
    res = VerificationResult(tag, corpus.describe() + f";k={','.join(map(str, ks))}", len(graphs))
    values = parallel_map(partial(_ppt_values, ks=tuple(ks)), graphs, workers)
    orders = {G.n for G in graphs}
    ref = [H for H in _dedup(reference()) if H.n in orders]
    ref_forms = {canonical_form(H) for H in ref}
    attaining = []
    for i, k in enumerate(ks):
        hit = []
        for G, vals in zip(graphs, values):
            if vals[i] != G.n - offset:
                continue
            if forward_only_filter and not forward_only_filter(G, k):
                continue
            hit.append(G)
            if canonical_form(G) not in ref_forms:
                res.fail(G, f"k={k}: ppt={vals[i]}", f"not listed (ppt != {G.n - offset})")
        hit_forms = {canonical_form(G) for G in hit}
        for H in ref:
            if canonical_form(H) not in hit_forms:
                res.fail(H, f"k={k}: ppt={ppt_k(H, k)}", f"ppt={H.n - offset}")
        res.notes[f"attaining_k{k}"] = len(hit)
        attaining.extend(hit)
    res.attaining = [_g6(G) for G in _dedup(attaining)]
    return res


def check_path_cycle(orders: Sequence[int], ks: Sequence[int]) -> VerificationResult:
    res = VerificationResult(
        "path-cycle-ppt", f"families:n={min(orders)}..{max(orders)};k={','.join(map(str, ks))}"
    )
    for n in orders:
        graphs = [F.path(n)] + ([F.cycle(n)] if n >= 3 else [])
        for G in graphs:
            for k in ks:
                res.checked += 1
                got = ppt_k(G, k)
                if got != n // 2 or gamma_pk(G, k) != 1:
                    res.fail(G, f"k={k}: ppt={got}", f"ppt={n // 2}")
    return res


def check_trees(corpus: CorpusSpec, workers: int) -> VerificationResult:
    graphs = list(corpus.graphs())
    res = VerificationResult("trees-n-minus-3", corpus.describe() + ";k=1", len(graphs))
    values = parallel_map(partial(_ppt_values, ks=(1,)), graphs, workers)
    for n in sorted({T.n for T in graphs}):
        ref = {canonical_form(T): T for T in trees_n_minus_3(n)}
        hit = {canonical_form(T): T for T, (p,) in zip(graphs, values) if T.n == n and p == n - 3}
        for form, T in hit.items():
            if form not in ref:
                res.fail(T, f"ppt={n - 3}", "not P5, P6 or sp(1,1,t)")
        for form, T in ref.items():
            if form not in hit:
                res.fail(T, f"ppt={ppt_k(T)}", f"ppt={n - 3}")
        res.attaining.extend(_g6(T) for T in hit.values())
    return res


def _ppt1_row(G: Graph, ks: Sequence[int]) -> tuple:
    out = []
    for k in ks:
        if G.n < k + 2 or not G.is_connected() or not is_Fk_free(G, k):
            out.append(None)
            continue
        out.append((ppt_k(G, k), strong_support_dominating_set(G, k)))
    return tuple(out)


def check_ppt1(corpus: CorpusSpec, ks: Sequence[int], workers: int) -> VerificationResult:
    graphs = list(corpus.graphs())
    res = VerificationResult("ppt1-characterization", corpus.describe() + f";k={','.join(map(str, ks))}")
    rows = parallel_map(partial(_ppt1_row, ks=tuple(ks)), graphs, workers)
    for G, row in zip(graphs, rows):
        for k, entry in zip(ks, row):
            if entry is None:
                continue
            res.checked += 1
            ppt, W = entry
            if (ppt == 1) != (W is not None):
                res.fail(
                    G,
                    f"k={k}: ppt={ppt}, strong-support dominating set={'yes' if W is not None else 'no'}",
                    "ppt=1 iff strong-support dominating set",
                )
            elif ppt == 1:
                res.attaining.append(_g6(G))
    return res


def _ng_table(corpus: CorpusSpec, workers: int) -> tuple[list[Graph], list[tuple]]:
    graphs = list(corpus.graphs())
    return graphs, parallel_map(_ng_values, graphs, workers)


def check_ng_upper(corpus: CorpusSpec, workers: int) -> VerificationResult:
    graphs, table = _ng_table(corpus, workers)
    res = VerificationResult("ng-upper", corpus.describe(), len(graphs))
    best: dict[int, int] = {}
    above_n = 0
    for G, (pg, ph, _, _) in zip(graphs, table):
        s = pg + ph
        best[G.n] = max(best.get(G.n, s), s)
        if s > G.n + 2:
            res.fail(G, f"sum={s}", f"sum<={G.n + 2}")
        if s > G.n:
            above_n += 1
        if s == G.n:
            res.attaining.append(_g6(G))
    res.notes["max_sum_by_n"] = {str(n): best[n] for n in sorted(best)}
    res.notes["sum_above_n"] = above_n
    return res


def check_ng_leaf(corpus: CorpusSpec, workers: int) -> VerificationResult:
    graphs, table = _ng_table(corpus, workers)
    res = VerificationResult("ng-leaf", corpus.describe())
    P4 = F.path(4)
    for G, (pg, ph, _, _) in zip(graphs, table):
        if not G.is_connected() or not G.leaves():
            continue
        res.checked += 1
        s = pg + ph
        if is_isomorphic(G, P4):
            if s != 4:
                res.fail(G, f"sum={s}", "sum=4")
        elif s > G.n - 1:
            res.fail(G, f"sum={s}", f"sum<={G.n - 1}")
        elif s == G.n - 1:
            res.attaining.append(_g6(G))
    for t in range(2, 7):
        S = F.spider(1, 1, t)
        s = ppt_k(S) + ppt_k(complement(S))
        res.checked += 1
        if s != S.n - 1:
            res.fail(S, f"sum={s}", f"sum={S.n - 1}")
    return res


def check_ng_gammap(corpus: CorpusSpec, workers: int) -> VerificationResult:
    graphs, table = _ng_table(corpus, workers)
    res = VerificationResult("ng-gammap", corpus.describe())
    for G, (pg, ph, gg, gh) in zip(graphs, table):
        if G.max_degree() < 3 or complement(G).max_degree() < 3:
            continue
        res.checked += 1
        bound = G.n - (gg + gh) + 4
        if pg + ph > bound:
            res.fail(G, f"sum={pg + ph}, gammaP={gg}+{gh}", f"sum<={bound}")
        elif pg + ph == bound:
            res.attaining.append(_g6(G))
    return res


def check_ng_family(orders: Sequence[int]) -> VerificationResult:
    res = VerificationResult("ng-family", f"ng:n={min(orders)}..{max(orders)}")
    for n in orders:
        G = build_ng_family(n)
        H = complement(G)
        res.checked += 1
        got = (gamma_pk(G), ppt_k(G), ppt_k(H))
        want = (1, n - 3, 3)
        if got != want:
            res.fail(G, f"gammaP,ppt,ppt(complement)={got}", f"{want}")
        else:
            res.attaining.append(_g6(G))
    return res


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def check_subdiv_decrease(orders: Sequence[int], t_max: int = 5) -> VerificationResult:
    res = VerificationResult("subdiv-decrease", f"subdiv-decrease:l={min(orders)}..{max(orders)}")
    lengths = sorted(set(orders) | {max(7, 2 * t + 1) for t in range(t_max + 1)})
    drop: dict[int, int] = {}
    for ell in lengths:
        G, e = build_subdiv_decrease(ell)
        Ge = subdivide(G, e)
        res.checked += 1
        ends = vset([0, ell - 1])
        S = vset([0, ell - 3, ell - 1])
        target = _ceil_half(ell - 4)
        observed = {
            "ppt(G)": ppt_k(G),
            "min sets of G": [format_set(s) for s in all_min_kpds(G)],
            "gammaP(G_e)": gamma_pk(Ge),
            "ppt(G_e,S)": propagation_time(Ge, S, 1)[0],
        }
        expected = {
            "ppt(G)": ell - 2,
            "min sets of G": [format_set(ends)],
            "gammaP(G_e)": 3,
            "ppt(G_e,S)": target,
        }
        ppt_e = ppt_k(Ge)
        if observed != expected or ppt_e > target:
            res.fail(G, observed | {"ppt(G_e)": ppt_e}, expected | {"ppt(G_e)": f"<={target}"})
        # contracting either new edge gives G back
        w = Ge.n - 1
        for edge in ((e[0], w), (e[1], w)):
            if not is_isomorphic(contract(Ge, edge), G):
                res.fail(Ge, f"contract {edge} not isomorphic to G", "G_e/e = G")
        drop[ell] = observed["ppt(G)"] - ppt_e
    for t in range(t_max + 1):
        ell = max(7, 2 * t + 1)
        if drop[ell] < t:
            res.fail(f"l={ell}", f"ppt(G)-ppt(G_e)={drop[ell]}", f">={t}")
    res.notes["ppt_drop_by_l"] = {str(k): v for k, v in sorted(drop.items())}
    return res


def check_subdiv_increase(orders: Sequence[int], t_max: int = 5) -> VerificationResult:
    res = VerificationResult("subdiv-increase", f"subdiv-increase:n={min(orders)}..{max(orders)}")
    sizes = sorted(set(orders) | {max(8, 2 * t + 4) for t in range(t_max + 1)})
    rise: dict[int, int] = {}
    for n in sizes:
        G, e = build_subdiv_increase(n)
        Ge = subdivide(G, e)
        res.checked += 1
        observed = (all_min_kpds(G), ppt_k(G), all_min_kpds(Ge), ppt_k(Ge))
        expected = ([1], (n - 4) // 2, [1], n - 4)
        if observed != expected:
            res.fail(G, f"minsets,ppt,minsets(G_e),ppt(G_e)={observed}", str(expected))
        w = Ge.n - 1
        for edge in ((e[0], w), (e[1], w)):
            if not is_isomorphic(contract(Ge, edge), G):
                res.fail(Ge, f"contract {edge} not isomorphic to G", "G_e/e = G")
        rise[n] = observed[3] - observed[1]
    for t in range(t_max + 1):
        n = max(8, 2 * t + 4)
        if rise[n] < t:
            res.fail(f"n={n}", f"ppt(G_e)-ppt(G)={rise[n]}", f">={t}")
    res.notes["ppt_rise_by_n"] = {str(k): v for k, v in sorted(rise.items())}
    return res


def _private_outside(G: Graph, S: int, s: int) -> int:
    return G.adj[s] & ~closed_neighborhood(G, S & ~(1 << s))


def _sizedecrease_ok(G: Graph) -> bool:
    for S in all_min_kpds(G, 1):
        if all(_private_outside(G, S, s).bit_count() >= 2 for s in range(G.n) if S >> s & 1):
            return True
    return False


def _sizedecrease_row(G: Graph) -> Optional[bool]:
    if G.max_degree() < 3:
        return None
    return _sizedecrease_ok(G)


def check_sizedecrease(corpus: CorpusSpec, workers: int) -> VerificationResult:
    graphs = list(corpus.graphs())
    res = VerificationResult("sizedecrease-lemma", corpus.describe())
    for G, ok in zip(graphs, parallel_map(_sizedecrease_row, graphs, workers)):
        if ok is None:
            continue
        res.checked += 1
        if not ok:
            res.fail(G, "no minimum PDS with two outside neighbors per member", "exists")
    return res


# --- structural property suites -----------------------------------------------


def _obs1_row(G: Graph) -> list[int]:
    bad = []
    for S in range(1 << G.n):
        if is_kpds(G, S, 1) != neighborhood_zfs_condition(G, S):
            bad.append(S)
    return bad


def check_obs1(corpus: CorpusSpec, workers: int) -> VerificationResult:
    graphs = list(corpus.graphs())
    res = VerificationResult("obs1-neighborhood-zfs", corpus.describe(), len(graphs))
    for G, bad in zip(graphs, parallel_map(_obs1_row, graphs, workers)):
        if bad:
            res.fail(G, f"mismatch for S={format_set(bad[0])}", "PDS iff N[S] forces G and N(S)-S forces G-S")
    return res


def _inequality_row(G: Graph, ks: Sequence[int]) -> list[str]:
    bad = []
    full = G.full
    for S in range(1 << G.n):
        prev = None
        closed = closed_neighborhood(G, S)
        for k in sorted(ks):
            t = propagation_time(G, S, k)[0]
            if prev is not None and (t is None or t > prev):
                bad.append(f"S={format_set(S)}: not monotone in k at k={k}")
            prev = t
            if t is None:
                continue
            if t > G.n - S.bit_count():
                bad.append(f"S={format_set(S)},k={k}: ppt={t} > |G|-|S|")
            if S != full and t - 1 > G.n - closed.bit_count():
                bad.append(f"S={format_set(S)},k={k}: ppt-1={t - 1} > |G|-|N[S]|")
    return bad


def check_inequalities(corpus: CorpusSpec, ks: Sequence[int], workers: int) -> VerificationResult:
    graphs = list(corpus.graphs())
    res = VerificationResult("ppt-inequalities", corpus.describe() + f";k={','.join(map(str, ks))}", len(graphs))
    for G, bad in zip(graphs, parallel_map(partial(_inequality_row, ks=tuple(ks)), graphs, workers)):
        if bad:
            res.fail(G, bad[0], "ppt <= |G|-|S|, ppt-1 <= |G|-|N[S]|, monotone in k")
    return res


def _gamma_row(G: Graph, ks: Sequence[int]) -> tuple[int, int, tuple[int, ...]]:
    return domination_number(G), gamma_pk(G, 1), tuple(gamma_pk(G, k) for k in ks)


def check_gamma_chain(corpus: CorpusSpec, ks: Sequence[int], workers: int) -> VerificationResult:
    graphs = list(corpus.graphs())
    res = VerificationResult("gamma-chain", corpus.describe() + f";k={','.join(map(str, ks))}", len(graphs))
    for G, (g, gp, gks) in zip(graphs, parallel_map(partial(_gamma_row, ks=tuple(ks)), graphs, workers)):
        if gp > g or any(x > gp for x in gks):
            res.fail(G, f"gamma={g}, gammaP={gp}, gammaP,k={gks}", "gammaP,k <= gammaP <= gamma")
    return res


def _leaf_free_row(G: Graph, ks: Sequence[int]) -> list[int]:
    degrees = G.degrees()
    bad = []
    for k in ks:
        sets = efficient_sets(G, k)
        if not any(all(degrees[v] >= 2 for v in range(G.n) if S >> v & 1) for S in sets):
            bad.append(k)
    return bad


def check_leaf_free_efficient(corpus: CorpusSpec, ks: Sequence[int], workers: int) -> VerificationResult:
    graphs = [G for G in corpus.graphs() if G.n >= 3 and G.is_connected()]
    res = VerificationResult("remark-leaf-free-efficient", corpus.describe() + f";n>=3;k={','.join(map(str, ks))}", len(graphs))
    for G, bad in zip(graphs, parallel_map(partial(_leaf_free_row, ks=tuple(ks)), graphs, workers)):
        if bad:
            res.fail(G, f"k={bad[0]}: every efficient set has a leaf", "efficient set with min degree >= 2")
    return res


def _high_degree_row(G: Graph, ks: Sequence[int], threshold: Callable[[int], Iterable[int]]) -> list[str]:
    degrees = G.degrees()
    top = max(degrees, default=0)
    bad = []
    for k in ks:
        for t in threshold(k):
            if top < t:
                continue
            sets = all_min_kpds(G, k)
            if not any(all(degrees[v] >= t for v in range(G.n) if S >> v & 1) for S in sets):
                bad.append(f"k={k},t={t}")
    return bad


def _lemma_thresholds(k: int) -> list[int]:
    return [k + 2]


def _deltat_thresholds(k: int) -> list[int]:
    return list(range(3, k + 3))


def check_high_degree(
    tag: str, corpus: CorpusSpec, ks: Sequence[int], workers: int
) -> VerificationResult:
    graphs = [G for G in corpus.graphs() if G.is_connected()]
    thresholds = _lemma_thresholds if tag == "lemma-high-degree-min-set" else _deltat_thresholds
    res = VerificationResult(tag, corpus.describe() + f";k={','.join(map(str, ks))}", len(graphs))
    rows = parallel_map(partial(_high_degree_row, ks=tuple(ks), threshold=thresholds), graphs, workers)
    for G, bad in zip(graphs, rows):
        if bad:
            res.fail(G, f"{bad[0]}: no minimum set with all degrees >= t", "exists")
    return res


def _support_row(G: Graph, ks: Sequence[int]) -> list[str]:
    bad = []
    for k in ks:
        W = strong_support_dominating_set(G, k)
        if W is None:
            continue
        prof = power_profile(G, k)
        if prof.ppt != 1 or prof.gamma != domination_number(G) or W not in prof.min_sets:
            bad.append(f"k={k}: ppt={prof.ppt}, gammaP,k={prof.gamma}, gamma={domination_number(G)}")
    return bad


def check_strong_support(corpus: CorpusSpec, ks: Sequence[int], workers: int) -> VerificationResult:
    graphs = list(corpus.graphs())
    res = VerificationResult("remark-strong-support", corpus.describe() + f";k={','.join(map(str, ks))}", len(graphs))
    for G, bad in zip(graphs, parallel_map(partial(_support_row, ks=tuple(ks)), graphs, workers)):
        if bad:
            res.fail(G, bad[0], "ppt=1 and gammaP,k=gamma")
    return res


def check_deg3_example(orders: Sequence[int]) -> VerificationResult:
    """Path plus leaves on v_2, v_3: the high-degree minimum set is not efficient.

    Propagation times are stated in terms of the order |G| = n + 2.
    """
    res = VerificationResult("deg3-example", f"deg3-example:n={min(orders)}..{max(orders)}")
    for n in orders:
        G = build_deg3_example(n)
        order = G.n
        res.checked += 1
        S, S2 = vset([1, 2]), vset([1, 3])
        degrees = G.degrees()
        high = [T for T in all_min_kpds(G) if all(degrees[v] >= 3 for v in range(order) if T >> v & 1)]
        observed = (high, ppt_of(G, S2), ppt_of(G, S), ppt_k(G) < ppt_of(G, S))
        expected = ([S], order - 6, order - 5, True)
        if observed != expected:
            res.fail(G, f"high-degree min sets, ppt(S'), ppt(S), S inefficient={observed}", str(expected))
    return res


def ppt_of(G: Graph, S: int, k: int = 1) -> Optional[int]:
    return propagation_time(G, S, k)[0]


# --- dispatcher -----------------------------------------------------------


@dataclass(frozen=True)
class CheckInfo:
    summary: str
    kind: str  # "corpus" or "orders"
    default_orders: tuple[int, ...]
    default_ks: tuple[int, ...] = (1,)
    corpus_source: str = "graphs"
    connected_only: bool = False


def _r(a: int, b: int) -> tuple[int, ...]:
    return tuple(range(a, b + 1))


CHECKS: dict[str, CheckInfo] = {
    "path-cycle-ppt": CheckInfo("ppt_k(P_n) = ppt_k(C_n) = floor(n/2)", "orders", _r(1, 20), (1, 2, 3)),
    "extreme-n-minus-1": CheckInfo("ppt_k(G) = |G|-1 iff G in {K1, K2}", "corpus", _r(1, 6), (1, 2)),
    "extreme-n-minus-2": CheckInfo("ppt_k(G) = |G|-2 iff G in the six-graph list", "corpus", _r(1, 6), (1, 2)),
    "extreme-n-minus-3-kge2": CheckInfo(
        "k >= 2: ppt_k(G) = |G|-3 iff G in the 15-graph list or connected 5-vertex max-degree-3",
        "corpus", _r(1, 6), (2,),
    ),
    "trees-n-minus-3": CheckInfo("trees with ppt = |T|-3 are P5, P6, sp(1,1,t)", "corpus", _r(1, 12), (1,), "trees"),
    "gammaP23-n-minus-3": CheckInfo("ppt = |G|-3 and gammaP in {2,3} implies G in the seven-graph list", "corpus", _r(1, 6)),
    "ppt1-characterization": CheckInfo(
        "connected F_k-free, n >= k+2: ppt_k = 1 iff strong supports dominate", "corpus", _r(1, 7), (1, 2), connected_only=True
    ),
    "ng-upper": CheckInfo("ppt(G) + ppt(complement) <= n + 2", "corpus", _r(1, 7)),
    "ng-leaf": CheckInfo("connected with a leaf, not P4: sum <= n - 1", "corpus", _r(1, 8), connected_only=True),
    "ng-gammap": CheckInfo(
        "both max degrees >= 3: sum <= n - (gammaP(G) + gammaP(complement)) + 4", "corpus", _r(1, 8), connected_only=True
    ),
    "ng-family": CheckInfo("ppt(G_n) = n-3, ppt(complement) = 3", "orders", _r(9, 15)),
    "subdiv-decrease": CheckInfo("subdividing can lower ppt by any amount", "orders", _r(7, 15)),
    "subdiv-increase": CheckInfo("subdividing can raise ppt by any amount", "orders", _r(8, 16)),
    "sizedecrease-lemma": CheckInfo(
        "max degree >= 3: some minimum PDS gives every member two outside neighbors", "corpus", _r(1, 7), connected_only=True
    ),
    "obs1-neighborhood-zfs": CheckInfo("S is a PDS iff N[S] and N(S)-S are zero forcing", "corpus", _r(1, 6)),
    "ppt-inequalities": CheckInfo("ppt_k(G,S) <= |G|-|S| and ppt_k(G,S)-1 <= |G|-|N[S]|", "corpus", _r(1, 6), (1, 2, 3)),
    "gamma-chain": CheckInfo("gammaP,k <= gammaP <= gamma", "corpus", _r(1, 7), (1, 2, 3)),
    "remark-leaf-free-efficient": CheckInfo(
        "connected, n >= 3: some efficient set has no leaves", "corpus", _r(1, 7), (1, 2, 3), connected_only=True
    ),
    "lemma-high-degree-min-set": CheckInfo(
        "connected, max degree >= k+2: some minimum set has all degrees >= k+2", "corpus", _r(1, 7), (1, 2), connected_only=True
    ),
    "remark-deltat": CheckInfo(
        "connected, max degree >= t, 3 <= t <= k+2: some minimum set has all degrees >= t", "corpus", _r(1, 7), (1, 2, 3), connected_only=True
    ),
    "remark-strong-support": CheckInfo(
        "strong supports dominate implies ppt_k = 1 and gammaP,k = gamma", "corpus", _r(1, 7), (1, 2, 3)
    ),
    "deg3-example": CheckInfo("path with leaves on v2, v3: high-degree minimum set not efficient", "orders", _r(6, 12)),
}


def default_corpus(tag: str, orders: Optional[Sequence[int]] = None) -> CorpusSpec:
    info = CHECKS[tag]
    orders = tuple(orders) if orders is not None else info.default_orders
    if info.corpus_source == "trees":
        return tree_corpus(max(orders), max(1, min(orders)))
    return graph_corpus(max(orders), info.connected_only, n_min=min(orders))


def verify_theorem(
    tag: str,
    corpus: Optional[CorpusSpec] = None,
    ks: Optional[Sequence[int]] = None,
    orders: Optional[Sequence[int]] = None,
    workers: int = 1,
) -> VerificationResult:
    """Run the check named ``tag``.

    Corpus checks use ``corpus`` (default: the tag's built-in corpus, or one
    built from ``orders``); construction checks use ``orders`` directly.
    """
    if tag not in CHECKS:
        raise KeyError(f"unknown theorem tag {tag!r}")
    info = CHECKS[tag]
    ks = tuple(ks) if ks else info.default_ks
    if any(k < 1 for k in ks):
        raise ValueError("capacities must be >= 1")
    if info.kind == "orders":
        orders = tuple(orders) if orders else info.default_orders
        if tag == "path-cycle-ppt":
            return check_path_cycle(orders, ks)
        if tag == "ng-family":
            return check_ng_family(orders)
        if tag == "subdiv-decrease":
            return check_subdiv_decrease(orders)
        if tag == "subdiv-increase":
            return check_subdiv_increase(orders)
        return check_deg3_example(orders)

    if corpus is None:
        corpus = default_corpus(tag, orders)
    if tag == "extreme-n-minus-1":
        return _attaining_check(tag, corpus, ks, 1, extremal_n_minus_1, workers)
    if tag == "extreme-n-minus-2":
        return _attaining_check(tag, corpus, ks, 2, extremal_n_minus_2, workers)
    if tag == "extreme-n-minus-3-kge2":
        ks = tuple(k for k in ks if k >= 2)
        if not ks:
            raise ValueError("extreme-n-minus-3-kge2 needs some k >= 2")
        return _attaining_check(tag, corpus, ks, 3, extremal_n_minus_3_kge2, workers)
    if tag == "gammaP23-n-minus-3":
        return _attaining_check(
            tag, corpus, (1,), 3, gammaP23_family, workers,
            forward_only_filter=lambda G, k: gamma_pk(G, 1) in (2, 3),
        )
    if tag == "trees-n-minus-3":
        return check_trees(corpus, workers)
    if tag == "ppt1-characterization":
        return check_ppt1(corpus, ks, workers)
    if tag == "ng-upper":
        return check_ng_upper(corpus, workers)
    if tag == "ng-leaf":
        return check_ng_leaf(corpus, workers)
    if tag == "ng-gammap":
        return check_ng_gammap(corpus, workers)
    if tag == "sizedecrease-lemma":
        return check_sizedecrease(corpus, workers)
    if tag == "obs1-neighborhood-zfs":
        return check_obs1(corpus, workers)
    if tag == "ppt-inequalities":
        return check_inequalities(corpus, ks, workers)
    if tag == "gamma-chain":
        return check_gamma_chain(corpus, ks, workers)
    if tag == "remark-leaf-free-efficient":
        return check_leaf_free_efficient(corpus, ks, workers)
    if tag in ("lemma-high-degree-min-set", "remark-deltat"):
        return check_high_degree(tag, corpus, ks, workers)
    if tag == "remark-strong-support":
        return check_strong_support(corpus, ks, workers)
    raise CorpusError(f"no corpus check wired for {tag!r}")


# --- Nordhaus-Gaddum scan ---------------------------------------------------


@dataclass
class NgScanRow:
    n: int
    graphs: int = 0
    max_sum: int = -1
    above_n: list[str] = field(default_factory=list)
    at_n: list[str] = field(default_factory=list)


def ng_scan(graphs: Iterable[Graph], workers: int = 1) -> list[NgScanRow]:
    """Per-order summary of ppt(G) + ppt(complement of G)."""
    graphs = list(graphs)
    table = parallel_map(_ng_values, graphs, workers)
    rows: dict[int, NgScanRow] = {}
    for G, (pg, ph, _, _) in zip(graphs, table):
        row = rows.setdefault(G.n, NgScanRow(G.n))
        s = pg + ph
        row.graphs += 1
        row.max_sum = max(row.max_sum, s)
        if s > G.n:
            row.above_n.append(_g6(G))
        elif s == G.n:
            row.at_n.append(_g6(G))
    return [rows[n] for n in sorted(rows)]
