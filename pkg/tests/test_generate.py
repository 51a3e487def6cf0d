from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polydeza import fixtures as fx
from polydeza.analysis import has_separating_4cycle, girth
from polydeza.errors import IllegalSite, KTooSmall, PolydezaError
from polydeza.generate import (
    a_sites,
    b_sites,
    expand_A,
    expand_B,
    gen_cubic_polyhedra,
    gen_quadrangulations,
    gen_quartic_polyhedra,
    gen_triangulations,
    k4,
    pseudo_double_wheel,
    split_sites,
    split_vertex,
)
from polydeza.graph import canonical_code, dual

# per-order counts, frozen after agreeing with the brute-force oracle
# (quartic n <= 13, cubic n <= 14); beyond that the generator is the reference
QUARTIC = {6: 1, 8: 1, 9: 1, 10: 3, 11: 3, 12: 11, 13: 18, 14: 58, 15: 139}
TRIANGULATIONS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233}
CUBIC = {4: 1, 6: 1, 8: 2, 10: 5, 12: 14, 14: 50}


def counts(stream):
    return dict(sorted(Counter(g.n for g in stream).items()))


def is_quadrangulation(g):
    return set(g.face_lengths()) == {4} and g.n - g.q + g.f == 2 and g.is_polyhedral()


def test_pseudo_double_wheels():
    assert canonical_code(pseudo_double_wheel(3)) == canonical_code(fx.cube())
    q4 = pseudo_double_wheel(4)
    assert q4.n == 10
    assert canonical_code(dual(q4)) == canonical_code(fx.fixture("square-antiprism"))
    for k in range(3, 9):
        assert is_quadrangulation(pseudo_double_wheel(k))
    with pytest.raises(KTooSmall):
        pseudo_double_wheel(2)


def test_expand_a_sites():
    # every cube vertex has degree 3, so A has nowhere to split
    assert a_sites(pseudo_double_wheel(3)) == []
    g = pseudo_double_wheel(4)
    sites = a_sites(g)
    assert sites
    for site in sites:
        h = expand_A(g, site)
        assert h.n == 11
        assert set(h.face_lengths()) == {4}
    with pytest.raises(IllegalSite):
        expand_A(g, (0, 0, 1))


def test_expand_b_creates_cubic_face():
    g = pseudo_double_wheel(4)
    for face in b_sites(g):
        h = expand_B(g, face)
        assert h.n == g.n + 4 and is_quadrangulation(h)
        assert any(all(h.degree(v) == 3 for v in fc) for fc in h.faces)
    with pytest.raises(IllegalSite):
        expand_B(g, 10_000)


@given(st.integers(4, 7), st.data())
def test_a_closure_stays_in_class(k, data):
    g = pseudo_double_wheel(k)
    for _ in range(3):
        sites = a_sites(g)
        h = expand_A(g, data.draw(st.sampled_from(sites)))
        assert set(h.face_lengths()) == {4}
        assert h.n == g.n + 1
        if h.is_polyhedral():
            g = h


def test_quadrangulations_without_b():
    graphs = list(gen_quadrangulations(8, use_b=False))
    assert [canonical_code(g) for g in graphs] == [canonical_code(fx.cube())]
    a_only = []
    for g in gen_quadrangulations(14, use_b=False):
        assert is_quadrangulation(g)
        assert not has_separating_4cycle(g)
        a_only.append(canonical_code(g))
    filtered = [canonical_code(g) for g in gen_quadrangulations(14) if not has_separating_4cycle(g)]
    assert sorted(a_only) == sorted(filtered)


def test_quadrangulations_with_b():
    graphs = list(gen_quadrangulations(14))
    codes = [canonical_code(g) for g in graphs]
    assert len(set(codes)) == len(codes)
    assert all(is_quadrangulation(g) for g in graphs)
    assert counts(graphs) == {n + 2: c for n, c in QUARTIC.items() if n + 2 <= 14}


def test_quartic_counts():
    assert counts(gen_quartic_polyhedra(15)) == QUARTIC


def test_quartic_small_orders():
    (octa,) = [g for g in gen_quartic_polyhedra(6)]
    assert canonical_code(octa) == canonical_code(fx.octahedron())
    names = {fx.exceptional_name(g) for g in gen_quartic_polyhedra(9)}
    assert names == {"octahedron", "square-antiprism", "nine-vertex-quartic"}


def test_generation_is_deterministic():
    a = [canonical_code(g) for g in gen_quartic_polyhedra(13, deterministic=True)]
    b = [canonical_code(g) for g in gen_quartic_polyhedra(13, threads=1)]
    assert a == b


def test_parallel_matches_serial():
    a = [g.rot for g in gen_quartic_polyhedra(13, threads=1)]
    b = [g.rot for g in gen_quartic_polyhedra(13, threads=2)]
    assert a == b


def test_split_vertex_from_k4():
    t = k4()
    codes = {canonical_code(split_vertex(t, s)) for s in split_sites(t)}
    assert len(codes) == 1
    (g,) = [split_vertex(t, split_sites(t)[0])]
    assert g.n == 5 and set(g.face_lengths()) == {3}
    with pytest.raises(IllegalSite):
        split_vertex(t, (0, 2, 1))


def test_triangulation_counts():
    assert counts(gen_triangulations(10)) == TRIANGULATIONS


def test_min_degree_streams_are_filters():
    for m in (4, 5):
        full = {canonical_code(g) for g in gen_triangulations(11) if min(map(len, g.rot)) >= m}
        pruned = [canonical_code(g) for g in gen_triangulations(11, min_degree=m)]
        assert len(pruned) == len(set(pruned))
        assert set(pruned) == full
    (ico,) = gen_triangulations(12, min_degree=5)
    assert canonical_code(ico) == canonical_code(fx.icosahedron())


def test_cubic_counts():
    assert counts(gen_cubic_polyhedra(14)) == CUBIC
    (tet,) = gen_cubic_polyhedra(4)
    assert canonical_code(tet) == canonical_code(fx.tetrahedron())


def test_girth5_cubic_order_20():
    order20 = [g for g in gen_cubic_polyhedra(20) if g.n == 20]
    dodeca = canonical_code(fx.dodecahedron())
    assert dodeca in {canonical_code(g) for g in order20}
    g5 = [g for g in order20 if girth(g) == 5]
    assert [canonical_code(g) for g in g5] == [dodeca]
    assert [canonical_code(g) for g in gen_cubic_polyhedra(20, min_face=5)] == [dodeca]


def test_order_bounds():
    with pytest.raises(PolydezaError):
        list(gen_quadrangulations(300))
    with pytest.raises(PolydezaError):
        list(gen_triangulations(10, min_degree=6))
