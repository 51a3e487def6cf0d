import networkx as nx
import pytest
from hypothesis import given

from polydeza import fixtures as fx
from polydeza.codecs import (
    G6_HEADER,
    PC_HEADER,
    decode_graph6,
    decode_planar_code,
    encode_graph6,
    encode_planar_code,
    read_graph6,
    write_graph6,
)
from polydeza.errors import MalformedGraph6, MalformedPlanarCode, OrderOverflow
from polydeza.graph import AbstractGraph, PlaneGraph

from .strategies import abstract_graphs, polyhedra


def test_graph6_cube_round_trip():
    cube = fx.cube().to_abstract()
    assert decode_graph6(encode_graph6(cube)) == cube


def test_graph6_empty_graph():
    empty = AbstractGraph(0, [])
    assert encode_graph6(empty) == "?"
    assert decode_graph6("?") == empty


def test_graph6_matches_networkx():
    # networkx's own writer is an independent reference
    G = nx.petersen_graph()
    g = AbstractGraph.from_networkx(G)
    assert encode_graph6(g) == nx.to_graph6_bytes(G, header=False).decode().strip()


def test_graph6_large_order_size_field():
    g = AbstractGraph.from_networkx(nx.path_graph(100))
    line = encode_graph6(g)
    assert line[0] == "~"
    assert decode_graph6(line) == g


@pytest.mark.parametrize("bad", ["", "C", "D?", "D???", "C~~", "Cx\x01"])
def test_graph6_malformed(bad):
    with pytest.raises(MalformedGraph6):
        decode_graph6(bad)


def test_graph6_header_and_multiline():
    gs = [fx.cube().to_abstract(), fx.tetrahedron().to_abstract()]
    text = write_graph6(gs)
    assert read_graph6(text) == gs
    assert decode_graph6(G6_HEADER + encode_graph6(gs[0]).encode()) == gs[0]


@given(abstract_graphs())
def test_graph6_round_trip_byte_exact(g):
    line = encode_graph6(g)
    h = decode_graph6(line)
    assert h == g
    assert encode_graph6(h) == line


def test_planar_code_tetrahedron_size():
    data = encode_planar_code([fx.tetrahedron()])
    assert data.startswith(PC_HEADER)
    assert len(data) - len(PC_HEADER) == 17


def test_planar_code_dodecahedron_rotations():
    d = fx.dodecahedron()
    (back,) = decode_planar_code(encode_planar_code([d]))
    assert back.rot == d.rot


def test_planar_code_truncated():
    data = encode_planar_code([fx.cube()])
    with pytest.raises(MalformedPlanarCode):
        decode_planar_code(data[:-3])


@pytest.mark.parametrize(
    "payload",
    [
        bytes([2, 3, 0, 1, 0]),  # neighbour 3 exceeds order 2
        bytes([2, 2, 0, 0]),  # asymmetric dart
        bytes([0]),  # two-byte entries
    ],
)
def test_planar_code_malformed(payload):
    with pytest.raises(MalformedPlanarCode):
        decode_planar_code(payload)


def test_planar_code_order_cap():
    big = PlaneGraph([[(v - 1) % 300, (v + 1) % 300] for v in range(300)])
    with pytest.raises(OrderOverflow):
        encode_planar_code([big])


def test_planar_code_without_header():
    data = encode_planar_code([fx.cube(), fx.octahedron()], header=False)
    assert [g.n for g in decode_planar_code(data)] == [8, 6]


@given(polyhedra)
def test_planar_code_round_trip_byte_exact(g):
    data = encode_planar_code([g])
    (h,) = decode_planar_code(data)
    assert h.rot == g.rot
    assert encode_planar_code([h]) == data
