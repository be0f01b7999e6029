import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kpowerdom.graphcore import (
    Graph,
    Graph6Error,
    GraphError,
    build,
    canonical_form,
    canonical_graph,
    complement,
    components,
    contains_induced,
    contract,
    delete_vertices,
    disjoint_union,
    families as fam,
    format_set,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_isomorphic,
    parse_set,
    subdivide,
    vset,
)

from oracles import brute_canon, brute_isomorphic, edge_set, random_edges
from strategies import graphs


def shuffled(G, rng):
    p = list(range(G.n))
    rng.shuffle(p)
    return build(G.n, [(p[u], p[v]) for u, v in G.edges()])


# --- construction -----------------------------------------------------------


def test_build_small():
    P3 = build(3, [(0, 1), (1, 2)])
    assert P3.edges() == [(0, 1), (1, 2)]
    assert P3.degrees() == [1, 2, 1]
    assert build(1, []).n == 1 and build(1, []).num_edges() == 0
    assert build(3, [(0, 1), (1, 2), (0, 2)]) == fam.complete(3)


@pytest.mark.parametrize(
    "n, edges",
    [(2, [(0, 0)]), (2, [(0, 1), (1, 0)]), (2, [(0, 2)]), (-1, []), (65, [])],
)
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build(n, edges)


def test_graph_invariants_checked():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))


def test_vertex_set_helpers():
    assert vset([0, 2]) == 0b101
    assert format_set(0b101) == "{0,2}"
    assert parse_set("{0,2}") == 0b101
    assert parse_set("{}") == 0


def test_families():
    assert fam.spider(1, 1, 1) == fam.star(3)
    assert fam.spider(1, 1, 4).n == 7
    L = fam.lollipop(3, 1)
    assert L.n == 4 and L.num_edges() == 4 and sorted(L.degrees()) == [1, 2, 2, 3]
    assert is_isomorphic(fam.join_K2_empty(1), fam.complete(3))
    assert fam.join_K2_empty(2).num_edges() == 5
    assert fam.complete_minus_edge(4).num_edges() == 5
    assert fam.complete_bipartite(2, 3).num_edges() == 6
    assert fam.cycle(5).degrees() == [2] * 5
    assert fam.empty(4).num_edges() == 0
    with pytest.raises(GraphError):
        fam.cycle(2)


def test_complement_examples():
    assert complement(fam.complete(4)) == fam.empty(4)
    assert is_isomorphic(complement(fam.path(3)), disjoint_union(fam.complete(2), fam.complete(1)))
    assert is_isomorphic(complement(fam.path(4)), fam.path(4))


def test_subdivide_examples():
    assert is_isomorphic(subdivide(fam.complete(3), (0, 1)), fam.cycle(4))
    assert is_isomorphic(subdivide(fam.path(2), (0, 1)), fam.path(3))
    assert is_isomorphic(subdivide(fam.cycle(5), (2, 3)), fam.cycle(6))
    with pytest.raises(GraphError):
        subdivide(fam.path(3), (0, 2))


def test_contract_examples():
    assert is_isomorphic(contract(fam.cycle(4), (0, 1)), fam.cycle(3))
    assert is_isomorphic(contract(fam.path(3), (0, 1)), fam.path(2))
    C5 = fam.cycle(5)
    Ge = subdivide(C5, (1, 2))
    assert is_isomorphic(contract(Ge, (1, 5)), C5)
    assert is_isomorphic(contract(Ge, (2, 5)), C5)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_subdivide_contract_duality(G):
    for u, v in G.edges():
        H = subdivide(G, (u, v))
        assert H.num_edges() == G.num_edges() + 1
        assert is_isomorphic(contract(H, (u, G.n)), G)


def test_components_examples():
    G = disjoint_union(fam.complete(1), fam.complete(2))
    assert sorted(bin(c).count("1") for c in components(G)) == [1, 2]
    assert components(fam.cycle(5)) == [0b11111]
    assert components(fam.empty(3)) == [1, 2, 4]


def test_induced_and_delete():
    C5 = fam.cycle(5)
    assert induced_subgraph(C5, [0, 1, 2]) == fam.path(3)
    assert is_isomorphic(delete_vertices(C5, 1), fam.path(4))


# --- isomorphism ----------------------------------------------------------------


def test_isomorphism_examples():
    assert is_isomorphic(fam.path(4), complement(fam.path(4)))
    assert not is_isomorphic(fam.cycle(4), fam.complete_minus_edge(4))
    other = build(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    assert sorted(other.degrees(), reverse=True) == [3, 2, 1, 1, 1]
    assert is_isomorphic(fam.spider(1, 1, 2), other)
    assert brute_isomorphic(fam.spider(1, 1, 2), other)


def test_canonical_form_matches_permutation_oracle():
    rng = random.Random(7)
    for n in range(1, 7):
        samples = [build(n, random_edges(rng, n, p)) for p in (0.3, 0.5, 0.7) for _ in range(8)]
        for G in samples:
            for H in samples:
                same = brute_canon(G.n, edge_set(G)) == brute_canon(H.n, edge_set(H))
                assert (canonical_form(G) == canonical_form(H)) == same


def test_isomorphism_matches_brute_force_n7():
    rng = random.Random(11)
    for _ in range(40):
        G = build(7, random_edges(rng, 7))
        H = shuffled(G, rng)
        assert is_isomorphic(G, H)
        # flip one pair: same n, usually a different class
        u, v = rng.sample(range(7), 2)
        edges = edge_set(G) ^ {frozenset((u, v))}
        K = build(7, [tuple(e) for e in edges])
        assert is_isomorphic(G, K) == brute_isomorphic(G, K)


def test_regular_graphs_are_hard_cases():
    # 3-regular on 6 vertices: K_{3,3} and the prism are not isomorphic
    prism = build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert not is_isomorphic(prism, fam.complete_bipartite(3, 3))
    rng = random.Random(3)
    assert is_isomorphic(prism, shuffled(prism, rng))


@settings(max_examples=80, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_form_is_relabeling_invariant(G, rng):
    H = shuffled(G, rng)
    assert canonical_form(G) == canonical_form(H)
    C = canonical_graph(G)
    assert brute_isomorphic(C, G) if G.n <= 6 else is_isomorphic(C, G)


def test_contains_induced_examples():
    assert contains_induced(fam.complete(4), fam.complete(3))
    assert not contains_induced(fam.cycle(5), fam.complete(3))
    assert contains_induced(fam.complete_bipartite(2, 3), fam.complete_bipartite(2, 2))
    assert not contains_induced(fam.complete(4), fam.cycle(4))


def test_contains_induced_matches_subset_oracle():
    rng = random.Random(5)
    C4 = fam.cycle(4)
    for _ in range(40):
        G = build(6, random_edges(rng, 6))
        expected = any(
            brute_isomorphic(induced_subgraph(G, list(sub)), C4) for sub in combinations(range(6), 4)
        )
        assert contains_induced(G, C4) == expected


# --- graph6 ----------------------------------------------------------------------


def test_graph6_hand_encoded():
    assert graph6_decode("A_") == fam.complete(2)
    assert graph6_decode("A?") == fam.empty(2)
    assert graph6_encode(fam.complete(1)) == "@"
    assert graph6_encode(fam.complete(2)) == "A_"
    assert graph6_decode("?") == Graph(0, ())
    C6 = fam.cycle(6)
    assert graph6_decode(graph6_encode(C6)) == C6


def test_graph6_against_networkx():
    rng = random.Random(1)
    for n in list(range(1, 13)) + [40, 62, 63, 64]:
        G = build(n, random_edges(rng, n, 0.4))
        text = graph6_encode(G)
        ours = nx.to_graph6_bytes(_to_nx(G), header=False).decode().strip()
        assert text == ours
        back = nx.from_graph6_bytes(text.encode())
        assert {frozenset(e) for e in back.edges()} == edge_set(G)


def _to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def test_graph6_round_trip_random():
    rng = random.Random(2024)
    for n in range(1, 13):
        for _ in range(1000):
            G = build(n, random_edges(rng, n, rng.random()))
            assert graph6_decode(graph6_encode(G)) == G


@pytest.mark.parametrize("bad", ["", "A", "A__", "B~~", "A\x7f", "~??"])
def test_graph6_rejects(bad):
    with pytest.raises(Graph6Error):
        graph6_decode(bad)


def test_graph6_header_ok():
    assert graph6_decode(">>graph6<<A_") == fam.complete(2)
