"""Medial, radial and line graphs; medial-preimage recovery; the T-construction.

The T-construction glues two quartic polyhedra G1, G2 along three new
vertices.  Each host contributes a site ``(u, v, w)`` where ``v, u, w`` are
consecutive on a face; ``G' = G + x + y + z + xu + yz + zu + xy + xv + yw
- uv - uw`` and the primed hosts are glued with x1=z2, y1=y2, z1=x2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import common_neighbors, type_profile
from .errors import (
    NotQuartic,
    Not4Regular,
    PolydezaError,
    SiteNotOnFace,
    TypeMismatch,
)
from .graph import AbstractGraph, PlaneGraph, canonical_code, dual, embed


def _edge_index(g: PlaneGraph) -> dict[tuple[int, int], int]:
    index = {}
    for k, (u, v) in enumerate(g.edges()):
        index[(u, v)] = index[(v, u)] = k
    return index


def medial(g: PlaneGraph) -> PlaneGraph:
    """Medial graph: one vertex per edge, joined when consecutive on a face."""
    g.require_polyhedral()
    eid = _edge_index(g)
    rot = []
    for u, v in g.edges():
        rot.append(
            [
                eid[(v, g.succ(v, u))],
                eid[(v, g.pred(v, u))],
                eid[(u, g.succ(u, v))],
                eid[(u, g.pred(u, v))],
            ]
        )
    return PlaneGraph(rot)


def radial(g: PlaneGraph) -> PlaneGraph:
    """Vertex-face incidence graph; vertices first, then one vertex per face."""
    g.require_polyhedral()
    n = g.n
    rot = [[n + g.face_of(v, w) for w in g.rot[v]] for v in range(n)]
    for fc in g.faces:
        rot.append(list(fc[::-1]))
    return PlaneGraph(rot)


def line_graph(g: AbstractGraph | PlaneGraph) -> AbstractGraph:
    """Line graph; vertex ``k`` is the ``k``-th edge of ``g.edges()``.

    Passing a plane graph gives the same numbering as :func:`medial`.
    """
    edges = g.edges()
    at = [[] for _ in range(g.n)]
    for k, (u, v) in enumerate(edges):
        at[u].append(k)
        at[v].append(k)
    adj = [set() for _ in edges]
    for inc in at:
        for a in inc:
            adj[a].update(b for b in inc if b != a)
    return AbstractGraph(len(edges), adj)


def medial_preimage(g: PlaneGraph) -> tuple[PlaneGraph, PlaneGraph] | None:
    """Recover ``(H, H*)`` with ``medial(H) = g``, or ``None``.

    Faces of ``g`` are joined when they share a vertex but not an edge; for a
    medial graph this splits into the dual pair.  The larger of the two is
    returned first (ties broken by canonical code).
    """
    if g.to_abstract().regularity() != 4:
        raise Not4Regular("medial preimage needs a 4-regular plane graph")
    rot = []
    for i, fc in enumerate(g.faces):
        k = len(fc)
        row = []
        for t in range(k):
            v = fc[t]
            r = g.rot[v]
            j = g._pos[v][fc[(t + 1) % k]]
            row.append(g.face_of(v, r[(j + 2) % 4]))
        if i in row or len(set(row)) != len(row):
            return None
        rot.append(row)
    comps = AbstractGraph(len(rot), rot).components()
    if len(comps) != 2:
        return None
    parts = []
    for comp in comps:
        index = {c: i for i, c in enumerate(comp)}
        try:
            h = PlaneGraph([[index[w] for w in rot[c]] for c in comp])
        except PolydezaError:
            return None
        if not h.is_polyhedral():
            return None
        parts.append(h)
    h1, h2 = parts
    if canonical_code(dual(h1)) != canonical_code(h2):
        return None
    if canonical_code(medial(h1)) != canonical_code(g):
        return None
    parts.sort(key=lambda h: (-h.n, canonical_code(h)))
    return parts[0], parts[1]


# T-construction ---------------------------------------------------------

@dataclass(frozen=True)
class TSite:
    """Host graph plus vertices with ``v, u, w`` consecutive on a face."""

    graph: PlaneGraph
    u: int
    v: int
    w: int

    def validate(self):
        g = self.graph
        if g.to_abstract().regularity() != 4 or not g.is_polyhedral():
            raise NotQuartic("T-construction hosts must be 4-regular polyhedra")
        for fc in g.faces:
            k = len(fc)
            for t in range(k):
                a, b, c = fc[t], fc[(t + 1) % k], fc[(t + 2) % k]
                if b == self.u and {a, c} == {self.v, self.w}:
                    return
        raise SiteNotOnFace(f"{self.v},{self.u},{self.w} are not consecutive on a face")


def face_sites(g: PlaneGraph) -> list[TSite]:
    """Every site of ``g``: one per face corner and orientation."""
    sites = []
    for fc in g.faces:
        k = len(fc)
        for t in range(k):
            a, b, c = fc[t], fc[(t + 1) % k], fc[(t + 2) % k]
            sites.append(TSite(g, b, a, c))
            sites.append(TSite(g, b, c, a))
    return sites


@dataclass(frozen=True)
class TConstruction:
    graph: PlaneGraph
    roles: dict  # x1, y, z1, u1, v1, w1, u2, v2, w2 in the glued graph


def t_construct_roles(s1: TSite, s2: TSite) -> TConstruction:
    s1.validate()
    s2.validate()
    g1, g2 = s1.graph, s2.graph
    n1 = g1.n
    X, Y, Z = n1, n1 + 1, n1 + 2
    off = n1 + 3
    edges = set()

    def add(a, b):
        edges.add((min(a, b), max(a, b)))

    cut1 = {frozenset((s1.u, s1.v)), frozenset((s1.u, s1.w))}
    for a, b in g1.edges():
        if frozenset((a, b)) not in cut1:
            add(a, b)
    cut2 = {frozenset((s2.u, s2.v)), frozenset((s2.u, s2.w))}
    for a, b in g2.edges():
        if frozenset((a, b)) not in cut2:
            add(a + off, b + off)
    u1, v1, w1 = s1.u, s1.v, s1.w
    u2, v2, w2 = s2.u + off, s2.v + off, s2.w + off
    # G1' with x=X, y=Y, z=Z
    for a, b in ((X, u1), (Y, Z), (Z, u1), (X, Y), (X, v1), (Y, w1)):
        add(a, b)
    # G2' with x=Z, y=Y, z=X; coincident edges collapse in the set
    for a, b in ((Z, u2), (Y, X), (X, u2), (Z, Y), (Z, v2), (Y, w2)):
        add(a, b)
    total = off + g2.n
    G = AbstractGraph.from_edges(total, edges)
    pg = embed(G, max_n=max(total, 24))
    if pg is None or G.regularity() != 4 or not pg.is_polyhedral():
        raise PolydezaError("T-construction did not produce a quartic polyhedron")
    roles = dict(x1=X, y=Y, z1=Z, x2=Z, z2=X, u1=u1, v1=v1, w1=w1, u2=u2, v2=v2, w2=w2)
    return TConstruction(pg, roles)


def t_construct(s1: TSite, s2: TSite) -> PlaneGraph:
    return t_construct_roles(s1, s2).graph


@dataclass(frozen=True)
class SquarePyramid:
    apex: int
    cycle: tuple[int, int, int, int]


@dataclass(frozen=True)
class TDecomposition:
    g1: PlaneGraph
    g2: PlaneGraph
    site1: TSite
    site2: TSite
    pair: tuple[int, int]


def _host(G: AbstractGraph, interior: list[int], u: int, v: int, w: int) -> TSite:
    if v == w or v in G.adj[u] or w in G.adj[u]:
        raise PolydezaError("restoring uv, uw would create a multi-edge")
    verts = interior + [u]
    index = {x: i for i, x in enumerate(verts)}
    edges = [(index[a], index[b]) for a in verts for b in G.adj[a] if b in index and a < b]
    edges += [(index[u], index[v]), (index[u], index[w])]
    H = AbstractGraph.from_edges(len(verts), edges)
    pg = embed(H, max_n=max(H.n, 24))
    if pg is None or H.regularity() != 4 or not pg.is_polyhedral():
        raise PolydezaError("recovered host is not a quartic polyhedron")
    site = TSite(pg, index[u], index[v], index[w])
    site.validate()
    return site


def t_decompose(g: PlaneGraph) -> SquarePyramid | TDecomposition:
    """Undo the T-construction, following the case split on ``N(a, b)``.

    Takes the lexicographically first pair ``(a, b)`` with three common
    neighbours.  If two of them are adjacent the configuration is a square
    pyramid and its witness is returned; otherwise the two hosts are cut out
    and the deleted edges ``uv, uw`` restored.
    """
    G = g.to_abstract()
    if G.regularity() != 4:
        raise NotQuartic("t_decompose needs a 4-regular polyhedron")
    prof = type_profile(G)
    if 3 not in prof.a_set:
        raise TypeMismatch(f"type {sorted(prof.a_set)} does not contain 3")
    a, b = prof.witnesses[3]
    cde = sorted(common_neighbors(G, a, b))
    adj = G.adj
    for t in cde:
        others = [s for s in cde if s != t]
        if all(s in adj[t] for s in others):
            return SquarePyramid(t, (a, others[0], b, others[1]))
    if any(s in adj[t] for t in cde for s in cde):
        raise PolydezaError(f"pair {a},{b}: a single edge among N(a,b) in a quartic polyhedron")
    core = {a, b, *cde}
    (a1,) = adj[a] - core
    (b1,) = adj[b] - core

    def reach(s):
        seen, stack = {s}, [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in core and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    side1, side2 = reach(a1), reach(b1)
    if side1 & side2 or len(side1) + len(side2) + 5 != G.n:
        raise PolydezaError(f"pair {a},{b} does not split g into two hosts")
    roles = {}
    for t in cde:
        k1, k2 = len(adj[t] & side1), len(adj[t] & side2)
        roles[(k1, k2)] = t
    try:
        c, d, e = roles[(2, 0)], roles[(1, 1)], roles[(0, 2)]
    except KeyError:
        raise PolydezaError(f"pair {a},{b}: common neighbours do not play the u/y/u roles")
    (w1,) = adj[d] & side1
    (w2,) = adj[d] & side2
    s1 = _host(G, sorted(side1), c, a1, w1)
    s2 = _host(G, sorted(side2), e, b1, w2)
    return TDecomposition(s1.graph, s2.graph, s1, s2, (a, b))
