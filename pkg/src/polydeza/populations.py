"""Named graph populations for the verification suites.

A population spec is ``kind[:arg]``:

``quartic:N`` ``cubic:N`` ``cubic-girth5:N`` ``tri:N`` ``quad:N``
    generated streams up to order ``N``;
``tri5:N``
    triangulations of minimum degree 5 up to order ``N``;
``streams:N``
    the four generated streams together;
``hosts:N``
    quartic and quadrangulation streams plus the girth-5 cubic and
    minimum-degree-5 triangulation streams, i.e. every candidate host with
    no degree-4 vertex, no quadrangle and no degree-3 vertex on a triangle
    among the cubic and triangulated graphs;
``polyhedra:N``
    ``streams:N`` plus every fixture;
``fixtures`` / ``fixtures:5regular`` / ``fixtures:NAME``
    the shipped fixture corpus;
``table2``
    constructed regular planar graphs of connectivity at most 2;
``n:N``
    order bound for the generator/oracle gate (no graphs).
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import networkx as nx

from . import fixtures as fx
from .codecs import encode_planar_code, iter_planar_code
from .errors import BadConfig
from .generate import (
    gen_cubic_polyhedra,
    gen_quadrangulations,
    gen_quartic_polyhedra,
    gen_triangulations,
)
from .graph import AbstractGraph
from .transforms import medial


_STREAMS = ("quartic", "cubic", "cubic-girth5", "tri", "tri5", "quad")
_BOUNDED = _STREAMS + ("streams", "hosts", "polyhedra", "n")


@dataclass(frozen=True)
class Population:
    spec: str
    kind: str
    bound: int | None
    threads: int | None = None

    def __iter__(self) -> Iterator[tuple[str, object]]:
        return iter_population(self)


def parse_population(spec: str, threads: int | None = None) -> Population:
    kind, _, arg = spec.partition(":")
    if kind in _BOUNDED:
        try:
            bound = int(arg)
        except ValueError:
            raise BadConfig(f"population {spec!r} needs an integer order bound") from None
        if not 0 < bound <= 255:
            raise BadConfig(f"order bound must be in 1..255, got {bound}")
        return Population(spec, kind, bound, threads)
    if kind == "fixtures":
        if arg and arg not in ("all", "5regular") and arg not in fx.FIXTURE_NAMES:
            raise BadConfig(f"unknown fixture selector {arg!r}")
        return Population(spec, kind, None, threads)
    if kind == "table2" and not arg:
        return Population(spec, kind, None, threads)
    raise BadConfig(f"unknown population {spec!r}")


_STREAM_CACHE: dict[tuple[str, int], bytes] = {}


def _stream(kind: str, bound: int, threads):
    """Graphs of one generated stream, memoised as planar_code bytes."""
    key = (kind, bound)
    data = _STREAM_CACHE.get(key)
    if data is None:
        data = encode_planar_code((g for _, g in _generate(kind, bound, threads)), header=False)
        _STREAM_CACHE[key] = data
    return ((kind, g) for g in iter_planar_code(data))


def clear_cache() -> None:
    _STREAM_CACHE.clear()


def _generate(kind: str, bound: int, threads):
    if kind == "quartic":
        return (("quartic", g) for g in gen_quartic_polyhedra(bound, threads))
    if kind == "cubic":
        return (("cubic", g) for g in gen_cubic_polyhedra(bound, 3, threads))
    if kind == "cubic-girth5":
        return (("cubic-girth5", g) for g in gen_cubic_polyhedra(bound, 5, threads))
    if kind == "tri":
        return (("tri", g) for g in gen_triangulations(bound, 3, threads))
    if kind == "tri5":
        return (("tri5", g) for g in gen_triangulations(bound, 5, threads))
    if kind == "quad":
        return (("quad", g) for g in gen_quadrangulations(bound, True, threads))
    raise BadConfig(kind)


def iter_population(pop: Population) -> Iterator[tuple[str, object]]:
    if pop.kind == "n":
        return
    if pop.kind in _STREAMS:
        yield from _stream(pop.kind, pop.bound, pop.threads)
    elif pop.kind == "hosts":
        for kind in ("quartic", "quad", "cubic-girth5", "tri5"):
            yield from _stream(kind, pop.bound, pop.threads)
    elif pop.kind in ("streams", "polyhedra"):
        for kind in ("quartic", "cubic", "tri", "quad"):
            yield from _stream(kind, pop.bound, pop.threads)
        if pop.kind == "polyhedra":
            yield from iter_population(Population("fixtures", "fixtures", None))
    elif pop.kind == "fixtures":
        sel = pop.spec.partition(":")[2]
        if sel == "5regular":
            names = fx.FIVE_REGULAR
        elif sel and sel != "all":
            names = (sel,)
        else:
            names = fx.FIXTURE_NAMES
        for name in names:
            yield name, fx.fixture(name)
    elif pop.kind == "table2":
        yield from table2_family()


# connectivity <= 2 families ---------------------------------------------------

def disjoint_union(*graphs) -> AbstractGraph:
    edges = []
    off = 0
    for g in graphs:
        g = g.to_abstract() if hasattr(g, "to_abstract") else g
        edges += [(u + off, v + off) for u, v in g.edges()]
        off += g.n
    return AbstractGraph.from_edges(off, edges)


def cycle(k: int) -> AbstractGraph:
    return AbstractGraph.from_networkx(nx.cycle_graph(k))


def empty(k: int) -> AbstractGraph:
    return AbstractGraph(k, [()] * k)


def matching(k: int) -> AbstractGraph:
    return AbstractGraph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def edge_swap_join(g1, g2, e1: tuple[int, int], e2: tuple[int, int]) -> AbstractGraph:
    """Delete ``uv`` from g1 and ``xy`` from g2, then add ``ux`` and ``vy``."""
    a, b = g1.to_abstract(), g2.to_abstract()
    (u, v), (x, y) = e1, e2
    edges = [e for e in a.edges() if set(e) != {u, v}]
    edges += [(s + a.n, t + a.n) for s, t in b.edges() if {s, t} != {x, y}]
    edges += [(u, x + a.n), (v, y + a.n)]
    return AbstractGraph.from_edges(a.n + b.n, edges)


def subdivided_bridge(g1, g2, e1: tuple[int, int], e2: tuple[int, int]) -> AbstractGraph:
    """Subdivide an edge of each cubic graph and join the two new vertices."""
    a, b = g1.to_abstract(), g2.to_abstract()
    n = a.n + b.n
    s1, s2 = n, n + 1
    (u, v), (x, y) = e1, e2
    edges = [e for e in a.edges() if set(e) != {u, v}]
    edges += [(s + a.n, t + a.n) for s, t in b.edges() if {s, t} != {x, y}]
    edges += [(u, s1), (v, s1), (x + a.n, s2), (y + a.n, s2), (s1, s2)]
    return AbstractGraph.from_edges(n + 2, edges)


def table2_family() -> list[tuple[str, AbstractGraph]]:
    """Constructed members of every connectivity <= 2 row, plus non-Deza controls."""
    tet, cub, ico, dod = fx.tetrahedron(), fx.cube(), fx.icosahedron(), fx.dodecahedron()
    ido = medial(dod)
    de, ie = dod.edges()[0], ido.edges()[0]
    return [
        ("K1", empty(1)),
        ("K1+K1+K1", empty(3)),
        ("K2", matching(1)),
        ("K2+K2+K2", matching(3)),
        ("K3", cycle(3)),
        ("C5", cycle(5)),
        ("C3+C3", disjoint_union(cycle(3), cycle(3))),
        ("C3+C5+C7", disjoint_union(cycle(3), cycle(5), cycle(7))),
        ("C4", cycle(4)),
        ("C4+C4+C4", disjoint_union(cycle(4), cycle(4), cycle(4))),
        ("tetrahedron+tetrahedron", disjoint_union(tet, tet)),
        ("tetrahedron+cube", disjoint_union(tet, cub)),
        ("cube+cube", disjoint_union(cub, cub)),
        ("icosahedron+icosahedron", disjoint_union(ico, ico)),
        ("dodecahedron+dodecahedron", disjoint_union(dod, dod)),
        ("dodecahedra-edge-swap", edge_swap_join(dod, dod, de, de)),
        ("dodecahedra-bridge", subdivided_bridge(dod, dod, de, de)),
        ("icosidodecahedron+icosidodecahedron", disjoint_union(ido, ido)),
        ("icosidodecahedra-edge-swap", edge_swap_join(ido, ido, ie, ie)),
        # controls that are regular and planar but not Deza
        ("C4+C5", disjoint_union(cycle(4), cycle(5))),
        ("tetrahedron+dodecahedron", disjoint_union(tet, dod)),
        ("cube+pentagonal-prism", disjoint_union(cub, fx.prism(5))),
    ]
