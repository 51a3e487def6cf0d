"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from polydeza import fixtures as fx
from polydeza.generate import gen_quartic_polyhedra, gen_triangulations
from polydeza.graph import AbstractGraph

_SMALL = [fx.fixture(n) for n in fx.FIXTURE_NAMES if fx.fixture(n).n <= 30]
_SMALL += list(gen_quartic_polyhedra(11)) + list(gen_triangulations(8))

polyhedra = st.sampled_from(_SMALL)


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


@st.composite
def relabelled(draw, graphs=polyhedra):
    g = draw(graphs)
    perm = draw(permutations_of(g.n))
    return g, g.relabel(perm)


@st.composite
def abstract_graphs(draw, max_n=70):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    if not pairs:
        return AbstractGraph(n, [()] * n)
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=min(len(pairs), 120), unique=True))
    return AbstractGraph.from_edges(n, chosen)
