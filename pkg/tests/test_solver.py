import random

import pytest
from hypothesis import given, settings

from kpowerdom.graphcore import build, complement, families as fam, vset
from kpowerdom.solver import (
    PPT_k,
    all_min_kpds,
    domination_number,
    efficient_sets,
    forbidden_family,
    gamma_pk,
    interval_is_full,
    invariant_report,
    is_Fk_free,
    k_strong_supports,
    min_dominating_sets,
    outside_private,
    power_profile,
    ppt_k,
    private_neighborhood,
    strong_support_dominating_set,
)
from kpowerdom.verify import build_ng_family, build_subdiv_decrease

import oracles
from strategies import graphs


def double_star():
    return build(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def test_domination_number_examples():
    assert domination_number(fam.star(4)) == 1
    assert domination_number(fam.cycle(6)) == 2 == oracles.gamma(oracles.to_sets(fam.cycle(6)))
    assert domination_number(fam.empty(5)) == 5
    assert min_dominating_sets(fam.star(4)) == (1,)


def test_gamma_p_examples():
    for n in range(1, 12):
        assert gamma_pk(fam.path(n)) == 1
        if n >= 3:
            assert gamma_pk(fam.cycle(n)) == 1
    assert gamma_pk(fam.empty(3)) == 3
    assert gamma_pk(build_ng_family(9)) == 1


def test_min_sets_examples():
    assert all_min_kpds(fam.path(3)) == [1, 2, 4]
    assert all_min_kpds(fam.star(4), 1) == [1]
    for n in (9, 10, 11):
        sets = all_min_kpds(build_ng_family(n))
        assert sets and all(S in (vset([1]), vset([2])) for S in sets)


def test_ppt_examples():
    for k in (1, 2, 3):
        assert ppt_k(fam.path(6), k) == 3
    assert ppt_k(fam.path(4)) == 2 and PPT_k(fam.path(4)) == 3
    assert ppt_k(build_ng_family(9)) == 6
    prof = power_profile(fam.path(7))
    assert prof.times == (6, 5, 4, 3, 4, 5, 6)
    assert prof.interval_full


def test_interval_fullness_examples():
    assert interval_is_full(fam.cycle(4))
    assert interval_is_full(fam.path(4))
    assert interval_is_full(fam.path(7))


def test_efficient_sets_examples():
    assert efficient_sets(fam.path(5)) == [vset([2])]
    assert efficient_sets(fam.path(6)) == [vset([2]), vset([3])]
    for n in range(3, 9):
        assert len(efficient_sets(fam.cycle(n))) == n


def test_edgeless_graphs():
    for n in range(1, 6):
        prof = power_profile(fam.empty(n))
        assert prof.min_sets == (fam.empty(n).full,)
        assert prof.ppt == prof.PPT == 0 and prof.interval_full


def test_strong_supports():
    K13 = fam.star(3)
    assert k_strong_supports(K13, 1) == 1
    assert k_strong_supports(K13, 3) == 0
    G, _ = build_subdiv_decrease(7)
    assert strong_support_dominating_set(G, 1) is None  # supports power-dominate but do not dominate
    assert k_strong_supports(G, 1) == vset([0, 6])
    assert strong_support_dominating_set(fam.path(5)) is None
    assert strong_support_dominating_set(double_star()) == vset([0, 1])


def test_strong_support_implies_ppt_one():
    G = double_star()
    assert ppt_k(G) == 1 and gamma_pk(G) == domination_number(G)


def test_private_neighborhoods():
    C4 = fam.cycle(4)  # a=0, b=1, c=2, d=3
    S = vset([0, 1])
    assert private_neighborhood(C4, S, 0) == vset([3])
    assert outside_private(C4, S, 0) == vset([2])
    assert private_neighborhood(fam.path(4), vset([1]), 1) == vset([0, 1, 2])
    K5 = fam.complete(5)
    assert private_neighborhood(K5, vset([0, 3]), 0) == 0
    with pytest.raises(ValueError):
        private_neighborhood(C4, S, 2)


def test_forbidden_family():
    assert is_Fk_free(fam.cycle(5), 1)
    assert not is_Fk_free(fam.complete(4), 2)
    assert not is_Fk_free(fam.complete_bipartite(2, 3), 2)
    assert is_Fk_free(fam.complete_bipartite(2, 3), 3)
    assert [H.n for H in forbidden_family(2)] == [3, 5, 4]


def test_invariant_report():
    rep = invariant_report(fam.path(6))
    assert (rep.gamma_pk, rep.ppt, rep.PPT, rep.interval) == (1, 3, 5, (3, 5))
    assert rep.graph6 and rep.achieved == [3, 4, 5]


# --- naive unpruned search ----------------------------------------------------------


def test_solver_matches_naive_search():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 7)
        G = build(n, oracles.random_edges(rng, n, rng.uniform(0.2, 0.8)))
        adj = oracles.to_sets(G)
        assert domination_number(G) == oracles.gamma(adj)
        for k in (1, 2):
            assert gamma_pk(G, k) == oracles.gamma_pk(adj, k)
            assert all_min_kpds(G, k) == sorted(oracles.bits(S) for S in oracles.min_kpds(adj, k))
            assert (ppt_k(G, k), PPT_k(G, k)) == oracles.ppt_profile(adj, k)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_gamma_chain(G):
    g = domination_number(G)
    gp = gamma_pk(G, 1)
    assert gamma_pk(G, 3) <= gamma_pk(G, 2) <= gp <= g


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_ppt_bounds(G):
    for k in (1, 2):
        prof = power_profile(G, k)
        assert 0 <= prof.ppt <= prof.PPT <= max(G.n - 1, 0)
        assert prof.ppt == 0 or prof.gamma < G.n


def test_complement_pair():
    G = build_ng_family(12)
    assert ppt_k(G) == 9 and ppt_k(complement(G)) == 3
