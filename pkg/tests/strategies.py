"""Hypothesis strategies shared by the test modules."""

from itertools import combinations

from hypothesis import strategies as st

from kpowerdom.graphcore import build


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [e for e, c in zip(pairs, chosen) if c])
