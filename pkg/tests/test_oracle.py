import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polydeza import fixtures as fx
from polydeza.errors import PolydezaError, TooLarge
from polydeza.oracle import certificate, oracle_regular_planar

from .strategies import abstract_graphs


def adj_of(g):
    return {v: set(g.adj[v]) for v in range(g.n)}


def test_small_cases():
    (octa,) = oracle_regular_planar(4, 6)
    assert nx.is_isomorphic(octa.to_networkx(), fx.octahedron().to_abstract().to_networkx())
    (k4,) = oracle_regular_planar(3, 4)
    assert k4.q == 6
    assert oracle_regular_planar(4, 7) == []
    assert oracle_regular_planar(3, 7) == []  # odd degree sum


@pytest.mark.parametrize("r, n, expected", [(4, 8, 1), (4, 9, 1), (4, 10, 3), (3, 8, 2), (3, 10, 5)])
def test_counts(r, n, expected):
    graphs = oracle_regular_planar(r, n)
    assert len(graphs) == expected
    for g in graphs:
        G = g.to_networkx()
        assert nx.is_planar(G) and nx.node_connectivity(G) >= 3
        assert all(d == r for _, d in G.degree())


def test_limits():
    with pytest.raises(PolydezaError):
        oracle_regular_planar(5, 12)
    with pytest.raises(TooLarge):
        oracle_regular_planar(4, 20)


@given(abstract_graphs(max_n=10), st.data())
def test_certificate_is_relabel_invariant(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    h = g.relabel(perm)
    colour = data.draw(st.lists(st.integers(0, 1), min_size=g.n, max_size=g.n))
    c1 = certificate(adj_of(g), dict(enumerate(colour)))
    c2 = certificate(adj_of(h), {perm[v]: colour[v] for v in range(g.n)})
    assert c1 == c2


@given(abstract_graphs(max_n=8), abstract_graphs(max_n=8))
def test_certificate_is_complete(g, h):
    same = certificate(adj_of(g), {v: 0 for v in range(g.n)}) == certificate(
        adj_of(h), {v: 0 for v in range(h.n)}
    )
    assert same == nx.is_isomorphic(g.to_networkx(), h.to_networkx())
