import networkx as nx
import pytest
from hypothesis import given

from polydeza import fixtures as fx
from polydeza.analysis import common_neighbors, face_stats, type_profile
from polydeza.errors import Not4Regular, NotQuartic, SiteNotOnFace, TypeMismatch
from polydeza.generate import gen_quartic_polyhedra
from polydeza.graph import AbstractGraph, canonical_code, dual
from polydeza.transforms import (
    SquarePyramid,
    TDecomposition,
    TSite,
    face_sites,
    line_graph,
    medial,
    medial_preimage,
    radial,
    t_construct,
    t_construct_roles,
    t_decompose,
)

from .strategies import polyhedra


def code(g):
    return canonical_code(g)


def iso(a, b):
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_medial_examples():
    assert code(medial(fx.tetrahedron())) == code(fx.octahedron())
    m = medial(fx.dodecahedron())
    assert (m.n, m.q, m.f) == (30, 60, 32)
    assert code(medial(fx.cube())) == code(medial(fx.octahedron()))


def test_radial_examples():
    assert code(radial(fx.tetrahedron())) == code(fx.cube())
    d = fx.dodecahedron()
    assert code(radial(d)) == code(radial(dual(d)))
    assert set(radial(fx.octahedron()).face_lengths()) == {4}


def test_line_graph_examples():
    k4 = fx.tetrahedron()
    assert iso(line_graph(k4.to_abstract()), fx.octahedron().to_abstract())
    c5 = AbstractGraph.from_networkx(nx.cycle_graph(5))
    assert iso(line_graph(c5), c5)
    d = fx.dodecahedron()
    assert line_graph(d) == medial(d).to_abstract()


def test_line_graph_of_plane_graph_uses_medial_numbering():
    for g in (fx.cube(), fx.dodecahedron(), fx.fixture("pentagonal-prism")):
        assert line_graph(g) == medial(g).to_abstract()


def test_medial_preimage_examples():
    t1, t2 = medial_preimage(fx.octahedron())
    assert code(t1) == code(t2) == code(fx.tetrahedron())
    h1, h2 = medial_preimage(medial(fx.dodecahedron()))
    assert {code(h1), code(h2)} == {code(fx.dodecahedron()), code(fx.icosahedron())}
    # antiprisms are medial graphs of pyramids
    p1, p2 = medial_preimage(fx.fixture("square-antiprism"))
    assert code(p1) == code(p2) and p1.n == 5 and sorted(p1.face_lengths()) == [3, 3, 3, 3, 4]
    with pytest.raises(Not4Regular):
        medial_preimage(fx.cube())


@given(polyhedra)
def test_medial_invariants(g):
    m = medial(g)
    assert m.n == g.q
    assert m.to_abstract().regularity() == 4
    assert m.f == g.f + g.n
    assert m.is_polyhedral()
    assert code(m) == code(medial(dual(g)))


@given(polyhedra)
def test_radial_invariants(g):
    r = radial(g)
    assert set(r.face_lengths()) == {4}
    assert nx.is_bipartite(r.to_abstract().to_networkx())
    assert code(r) == code(radial(dual(g)))
    assert code(dual(r)) == code(medial(g))


@given(polyhedra)
def test_medial_preimage_round_trip(g):
    pair = medial_preimage(medial(g))
    assert pair is not None
    assert {code(pair[0]), code(pair[1])} == {code(g), code(dual(g))}


# T-construction ------------------------------------------------------------

@pytest.fixture(scope="module")
def hosts():
    return fx.fixture("nine-vertex-quartic"), fx.fixture("square-antiprism")


def test_t_construct_fig_instance(hosts):
    g1, g2 = hosts
    s1, s2 = face_sites(g1)[0], face_sites(g2)[0]
    tc = t_construct_roles(s1, s2)
    G = tc.graph
    assert G.n == 20
    assert G.to_abstract().regularity() == 4 and G.is_polyhedral()
    assert type_profile(G).a_set == {0, 1, 2, 3}
    r = tc.roles
    # N(x(G1), x(G2)) contains y, u(G1), u(G2)
    assert {r["y"], r["u1"], r["u2"]} <= common_neighbors(G, r["x1"], r["x2"])
    assert medial_preimage(G) is None


def test_t_construct_size_over_sites(hosts):
    g1, g2 = hosts
    for s1 in face_sites(g1)[:6]:
        for s2 in face_sites(g2)[::7]:
            G = t_construct(s1, s2)
            assert G.n == g1.n + g2.n + 3
            assert 3 in type_profile(G).a_set


def test_t_decompose_round_trip(hosts):
    g1, g2 = hosts
    G = t_construct(face_sites(g1)[0], face_sites(g2)[0])
    res = t_decompose(G)
    assert isinstance(res, TDecomposition)
    assert {code(res.g1), code(res.g2)} == {code(g1), code(g2)}
    assert code(t_construct(res.site1, res.site2)) == code(G)


def test_t_decompose_square_pyramid():
    found = None
    for g in gen_quartic_polyhedra(12):
        if type_profile(g).a_set == {0, 1, 2, 3}:
            found = g
            break
    assert found is not None
    res = t_decompose(found)
    assert isinstance(res, SquarePyramid)
    G = found.to_abstract()
    assert all(c in G.adj[res.apex] for c in res.cycle)


def test_t_decompose_errors():
    with pytest.raises(TypeMismatch):
        t_decompose(fx.octahedron())
    with pytest.raises(NotQuartic):
        t_decompose(fx.cube())


def test_tsite_validation(hosts):
    g1, _ = hosts
    with pytest.raises(SiteNotOnFace):
        TSite(g1, 0, 0, 0).validate()
    with pytest.raises(NotQuartic):
        TSite(fx.cube(), 0, 1, 3).validate()
