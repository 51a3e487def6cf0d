"""Named polyhedra used as test corpus and for exceptional-graph lookup."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

import networkx as nx

from .graph import AbstractGraph, PlaneGraph, canonical_code, embed


def _from_nx(G: nx.Graph) -> PlaneGraph:
    pg = embed(AbstractGraph.from_networkx(G), max_n=max(24, G.number_of_nodes()))
    assert pg is not None and pg.is_polyhedral()
    return pg


def tetrahedron() -> PlaneGraph:
    return _from_nx(nx.tetrahedral_graph())


def cube() -> PlaneGraph:
    return _from_nx(nx.cubical_graph())


def octahedron() -> PlaneGraph:
    return _from_nx(nx.octahedral_graph())


def dodecahedron() -> PlaneGraph:
    return _from_nx(nx.dodecahedral_graph())


def icosahedron() -> PlaneGraph:
    return _from_nx(nx.icosahedral_graph())


def prism(k: int) -> PlaneGraph:
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, j), (k + i, k + j), (i, k + i)]
    return _from_nx(nx.Graph(edges))


def antiprism(k: int) -> PlaneGraph:
    """Two k-cycles ``a_i``, ``b_i`` with ``a_i b_i`` and ``a_i b_{i+1}``."""
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, j), (k + i, k + j), (i, k + i), (i, k + j)]
    return _from_nx(nx.Graph(edges))


def snub(g: PlaneGraph) -> PlaneGraph:
    """Combinatorial snub of a polyhedron.

    One vertex per dart ``(v, w)`` (the corner at ``v`` of the face traced
    through that dart).  Corners are joined around each face, around each
    vertex, and each dart's corner to its reverse dart's corner.
    """
    darts = g.darts()
    index = {d: i for i, d in enumerate(darts)}
    edges = set()
    for (v, w), i in index.items():
        # next corner around the face: at w, through dart (w, succ_w(v))
        x = g.succ(w, v)
        edges.add(frozenset((i, index[(w, x)])))
        # next corner around the vertex v
        edges.add(frozenset((i, index[(v, g.succ(v, w))])))
        edges.add(frozenset((i, index[(w, v)])))
    G = nx.Graph([tuple(e) for e in edges])
    return _from_nx(G)


def snub_cube() -> PlaneGraph:
    return snub(cube())


def snub_dodecahedron() -> PlaneGraph:
    return snub(dodecahedron())


@lru_cache(maxsize=None)
def nine_vertex_quartic() -> PlaneGraph:
    """The unique quartic polyhedron on nine vertices, found by generation."""
    from .generate import gen_quartic_polyhedra

    found = [g for g in gen_quartic_polyhedra(9) if g.n == 9]
    if len(found) != 1:
        raise RuntimeError(f"expected one quartic polyhedron of order 9, found {len(found)}")
    return found[0]


def _named() -> dict:
    from .transforms import medial

    return {
        "tetrahedron": tetrahedron,
        "cube": cube,
        "octahedron": octahedron,
        "dodecahedron": dodecahedron,
        "icosahedron": icosahedron,
        "triangular-prism": lambda: prism(3),
        "pentagonal-prism": lambda: prism(5),
        "hexagonal-prism": lambda: prism(6),
        "square-antiprism": lambda: antiprism(4),
        "pentagonal-antiprism": lambda: antiprism(5),
        "hexagonal-antiprism": lambda: antiprism(6),
        "nine-vertex-quartic": nine_vertex_quartic,
        "cuboctahedron": lambda: medial(cube()),
        "icosidodecahedron": lambda: medial(dodecahedron()),
        "snub-cube": snub_cube,
        "snub-dodecahedron": snub_dodecahedron,
    }


FIXTURE_NAMES = tuple(
    [
        "tetrahedron",
        "cube",
        "octahedron",
        "dodecahedron",
        "icosahedron",
        "triangular-prism",
        "pentagonal-prism",
        "hexagonal-prism",
        "square-antiprism",
        "pentagonal-antiprism",
        "hexagonal-antiprism",
        "nine-vertex-quartic",
        "cuboctahedron",
        "icosidodecahedron",
        "snub-cube",
        "snub-dodecahedron",
    ]
)

FIVE_REGULAR = ("icosahedron", "snub-cube", "snub-dodecahedron")

EXCEPTIONAL = ("cube", "octahedron", "square-antiprism", "nine-vertex-quartic", "icosahedron")


@lru_cache(maxsize=None)
def fixture(name: str) -> PlaneGraph:
    try:
        return _named()[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}") from None


def all_fixtures() -> dict[str, PlaneGraph]:
    return {name: fixture(name) for name in FIXTURE_NAMES}


@lru_cache(maxsize=None)
def _exceptional_codes() -> dict[bytes, str]:
    return {canonical_code(fixture(name)): name for name in EXCEPTIONAL}


def exceptional_name(g) -> str | None:
    """Name of the exceptional polyhedral Deza graph isomorphic to ``g``."""
    if not isinstance(g, PlaneGraph):
        if g.n not in (6, 8, 9, 12) or not g.is_connected():
            return None
        g = embed(g)
        if g is None:
            return None
    if g.n not in (6, 8, 9, 12) or not g.is_polyhedral():
        return None
    return _exceptional_codes().get(canonical_code(g))


def is_tetrahedron(g) -> bool:
    if isinstance(g, PlaneGraph):
        g = g.to_abstract()
    return g.n == 4 and all(len(a) == 3 for a in g.adj)


# shipped corpus ---------------------------------------------------------

DATA_PACKAGE = "polydeza.data"


def manifest_entry(name: str, g: PlaneGraph) -> dict:
    return {
        "file": f"{name}.pc",
        "graph6_file": f"{name}.g6",
        "n": g.n,
        "q": g.q,
        "f": g.f,
        "canonical_code": canonical_code(g).hex(),
    }


def write_corpus(directory: str | Path) -> dict:
    """Write every fixture as planar_code and graph6 plus ``manifest.json``."""
    from .codecs import encode_planar_code, write_graph6

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    man = {}
    for name in FIXTURE_NAMES:
        g = fixture(name)
        (out / f"{name}.pc").write_bytes(encode_planar_code([g]))
        (out / f"{name}.g6").write_text(write_graph6([g.to_abstract()]))
        man[name] = manifest_entry(name, g)
    (out / "manifest.json").write_text(json.dumps(man, indent=2, sort_keys=True) + "\n")
    return man


def shipped_manifest() -> dict:
    return json.loads(resources.files(DATA_PACKAGE).joinpath("manifest.json").read_text())


def shipped_bytes(name: str, key: str = "file") -> bytes:
    """Raw shipped file; ``key="graph6_file"`` selects the graph6 copy."""
    entry = shipped_manifest()[name]
    return resources.files(DATA_PACKAGE).joinpath(entry[key]).read_bytes()


def shipped_fixture(name: str) -> PlaneGraph:
    from .codecs import decode_planar_code

    (g,) = decode_planar_code(shipped_bytes(name))
    return g


def check_corpus() -> list[str]:
    """Names whose shipped file or manifest code disagrees with the construction."""
    man = shipped_manifest()
    bad = []
    for name in FIXTURE_NAMES:
        entry = man.get(name)
        if entry is None:
            bad.append(name)
            continue
        g = shipped_fixture(name)
        code = canonical_code(g).hex()
        if code != entry["canonical_code"] or code != canonical_code(fixture(name)).hex():
            bad.append(name)
    return bad
