"""Abstract and embedded (rotation-system) graphs.

A :class:`PlaneGraph` stores, for every vertex, its neighbours in cyclic
order.  A dart is an ordered pair ``(u, v)`` of adjacent vertices.  Faces are
traced with the rule *next dart = rotation successor of the reversed dart*:
after ``(u, v)`` comes ``(v, w)`` where ``w`` follows ``u`` in the rotation
of ``v``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import networkx as nx

from .errors import (
    AsymmetricDart,
    Disconnected,
    DuplicateNeighbour,
    Loop,
    NonSpherical,
    NotPolyhedral,
    TooLarge,
    UnknownVertex,
)

EMBED_CAP = 24


class AbstractGraph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if len(adjacency) != n:
            raise ValueError("adjacency must have one entry per vertex")
        adj = tuple(frozenset(a) for a in adjacency)
        for v, nb in enumerate(adj):
            for w in nb:
                if not 0 <= w < n:
                    raise UnknownVertex(f"vertex {v} lists unknown neighbour {w}")
                if w == v:
                    raise Loop(f"loop at vertex {v}")
                if v not in adj[w]:
                    raise AsymmetricDart(f"edge {v}-{w} is not symmetric")
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> AbstractGraph:
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise Loop(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> AbstractGraph:
        nodes = sorted(G.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in G.edges()))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    @property
    def q(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def regularity(self) -> int | None:
        """Common degree when the graph is regular, else ``None``."""
        if self.n == 0:
            return 0
        d = len(self.adj[0])
        return d if all(len(a) == d for a in self.adj) else None

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                v = stack.pop()
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> AbstractGraph:
        """Induced subgraph, relabelled densely in the given vertex order."""
        index = {v: i for i, v in enumerate(vertices)}
        return AbstractGraph(
            len(vertices), [[index[w] for w in self.adj[v] if w in index] for v in vertices]
        )

    def relabel(self, perm: Sequence[int]) -> AbstractGraph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [None] * self.n
        for v in range(self.n):
            adj[perm[v]] = [perm[w] for w in self.adj[v]]
        return AbstractGraph(self.n, adj)

    def __eq__(self, other):
        return isinstance(other, AbstractGraph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"AbstractGraph(n={self.n}, q={self.q})"


class PlaneGraph:
    """Simple connected graph with a genus-0 rotation system.

    Immutable once built; faces are traced on first use.  ``faces[i]`` is the
    vertex sequence ``(v0, v1, ...)`` of the closed walk whose darts are
    ``(v0, v1), (v1, v2), ...``.
    """

    __slots__ = ("n", "rot", "_pos", "_faces", "_df", "_code", "_poly", "_abstract")

    def __init__(self, rotation: Sequence[Sequence[int]], *, check: bool = True):
        n = len(rotation)
        rot = tuple(tuple(r) for r in rotation)
        pos = []
        for v, r in enumerate(rot):
            p = {}
            for i, w in enumerate(r):
                if check:
                    if not 0 <= w < n:
                        raise UnknownVertex(f"vertex {v} lists unknown neighbour {w}")
                    if w == v:
                        raise Loop(f"loop at vertex {v}")
                    if w in p:
                        raise DuplicateNeighbour(f"vertex {v} lists {w} twice")
                p[w] = i
            pos.append(p)
        if check:
            for v, r in enumerate(rot):
                for w in r:
                    if v not in pos[w]:
                        raise AsymmetricDart(f"dart ({v},{w}) has no reverse")
        self.n = n
        self.rot = rot
        self._pos = pos
        self._code = None
        self._poly = None
        self._abstract = None
        self._faces = None
        self._df = None
        if check:
            comps = self.to_abstract().components() if n else []
            if len(comps) > 1:
                raise Disconnected("plane graphs must be connected")
            euler = n - self.q + self.f
            if n and euler != 2:
                raise NonSpherical((2 - euler) // 2)

    def _trace(self):
        rot, pos = self.rot, self._pos
        dart_face = {}
        faces = []
        for u in range(self.n):
            for v in rot[u]:
                if (u, v) in dart_face:
                    continue
                idx = len(faces)
                walk = []
                a, b = u, v
                while (a, b) not in dart_face:
                    dart_face[(a, b)] = idx
                    walk.append(a)
                    rb = rot[b]
                    a, b = b, rb[(pos[b][a] + 1) % len(rb)]
                faces.append(tuple(walk))
        if self.n == 1:
            faces.append(())
        self._faces = tuple(faces)
        self._df = dart_face

    @property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        if self._faces is None:
            self._trace()
        return self._faces

    @property
    def _dart_face(self) -> dict[tuple[int, int], int]:
        if self._df is None:
            self._trace()
        return self._df

    # basic measures -----------------------------------------------------
    @property
    def q(self) -> int:
        return sum(len(r) for r in self.rot) // 2

    @property
    def f(self) -> int:
        return len(self.faces)

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.rot[u] if u < v]

    def darts(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.rot[u]]

    def succ(self, v: int, w: int) -> int:
        """Neighbour after ``w`` in the rotation at ``v``."""
        r = self.rot[v]
        return r[(self._pos[v][w] + 1) % len(r)]

    def pred(self, v: int, w: int) -> int:
        r = self.rot[v]
        return r[(self._pos[v][w] - 1) % len(r)]

    def face_of(self, u: int, v: int) -> int:
        """Index of the face traced through dart ``(u, v)``."""
        return self._dart_face[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def face_lengths(self) -> list[int]:
        return [len(fc) for fc in self.faces]

    def to_abstract(self) -> AbstractGraph:
        if self._abstract is None:
            self._abstract = AbstractGraph(self.n, self.rot)
        return self._abstract

    def mirror(self) -> PlaneGraph:
        return PlaneGraph([r[::-1] for r in self.rot])

    def relabel(self, perm: Sequence[int]) -> PlaneGraph:
        rot = [None] * self.n
        for v, r in enumerate(self.rot):
            rot[perm[v]] = [perm[w] for w in r]
        return PlaneGraph(rot)

    def is_polyhedral(self) -> bool:
        """3-connectivity read off the embedding.

        Holds iff every face boundary is a cycle and any two faces meet in
        nothing, a single vertex, or a single common edge.
        """
        if self._poly is None:
            self._poly = _faces_polyhedral(self)
        return self._poly

    def require_polyhedral(self):
        if not self.is_polyhedral():
            raise NotPolyhedral("plane graph is not 3-connected")

    def canonical_code(self) -> bytes:
        if self._code is None:
            self._code = canonical_code(self)
        return self._code

    def __repr__(self):
        return f"PlaneGraph(n={self.n}, q={self.q}, f={self.f})"


def build_plane(rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    """Validated :class:`PlaneGraph` from per-vertex cyclic neighbour lists."""
    return PlaneGraph(rotation)


def trace_faces(g: PlaneGraph) -> list[tuple[int, ...]]:
    return list(g.faces)


def _faces_polyhedral(g: PlaneGraph) -> bool:
    if g.n < 4:
        return False
    faces = g.faces
    at_vertex = [[] for _ in range(g.n)]
    for i, fc in enumerate(faces):
        if len(set(fc)) != len(fc):
            return False
        for v in fc:
            at_vertex[v].append(i)
    for i, fc in enumerate(faces):
        across = {g.face_of(fc[(k + 1) % len(fc)], fc[k]) for k in range(len(fc))}
        if len(across) != len(fc) or i in across:
            return False
        count = {}
        for v in fc:
            for j in at_vertex[v]:
                if j != i:
                    count[j] = count.get(j, 0) + 1
        for j, c in count.items():
            if c >= 2 and (c > 2 or j not in across):
                return False
    return True


def dual(g: PlaneGraph) -> PlaneGraph:
    """Dual plane graph; only defined here for polyhedra."""
    g.require_polyhedral()
    rot = []
    for fc in g.faces:
        k = len(fc)
        rot.append([g.face_of(fc[(i + 1) % k], fc[i]) for i in range(k)])
    return PlaneGraph(rot)


# canonical codes -------------------------------------------------------

def _start_keys(g: PlaneGraph):
    deg = [len(r) for r in g.rot]
    # degree plus neighbour-degree sum: cheap, invariant, and prunes ties
    inv = [(deg[u] << 16) + sum(deg[w] for w in r) for u, r in enumerate(g.rot)]
    top_u = max(inv)
    us = [u for u in range(g.n) if inv[u] == top_u]
    top_v = max(inv[v] for u in us for v in g.rot[u])
    return [
        (u, i, step)
        for u in us
        for i, v in enumerate(g.rot[u])
        if inv[v] == top_v
        for step in (1, -1)
    ]


def _bfs_code(rot, pos, n, root, first_idx, best):
    """BFS code from a rooted dart, aborting as soon as it exceeds ``best``.

    Neighbours of each vertex are listed in rotation order starting from
    the vertex it was discovered from; mirrored starts pass the reversed
    rotation.
    """
    label = [0] * n
    first = [0] * n
    label[root] = 1
    first[root] = first_idx
    queue = [root]
    nxt = 2
    code = [n]
    k = 1
    cmp = 0 if best is not None else -1
    for v in queue:
        r = rot[v]
        j = first[v]
        for w in (r[j:] + r[:j]) if j else r:
            lw = label[w]
            if lw == 0:
                lw = label[w] = nxt
                nxt += 1
                first[w] = pos[w][v]
                queue.append(w)
            code.append(lw)
            if cmp == 0:
                b = best[k]
                if lw > b:
                    return None
                if lw < b:
                    cmp = -1
            k += 1
        code.append(0)
        if cmp == 0 and best[k] != 0:
            cmp = -1
        k += 1
    return code


def canonical_code(g: PlaneGraph) -> bytes:
    """Minimal BFS code over all rooted darts and both orientations.

    Equal codes mean the embedded graphs agree up to a homeomorphism of the
    sphere, possibly orientation-reversing.
    """
    if g.n == 0:
        return b"\x00"
    if g.n == 1:
        return b"\x01\x00"
    mrot = mpos = None
    best = None
    for u, i, step in _start_keys(g):
        if step == 1:
            code = _bfs_code(g.rot, g._pos, g.n, u, i, best)
        else:
            if mrot is None:
                mrot = [r[::-1] for r in g.rot]
                mpos = [{w: k for k, w in enumerate(r)} for r in mrot]
            code = _bfs_code(mrot, mpos, g.n, u, len(mrot[u]) - 1 - i, best)
        if code is not None:
            best = code
    # one 0 terminator per visited vertex
    if best.count(0) != g.n:
        raise Disconnected("canonical codes need a connected graph")
    if g.n < 256:
        return bytes(best)
    return b"".join(x.to_bytes(2, "big") for x in best)


# embedding -------------------------------------------------------------

def embed(g: AbstractGraph, max_n: int = EMBED_CAP) -> PlaneGraph | None:
    """A genus-0 rotation system for ``g``, or ``None`` when non-planar.

    Only connected graphs can be represented as a :class:`PlaneGraph`.
    """
    if g.n > max_n:
        raise TooLarge(f"embedding capped at {max_n} vertices, got {g.n}")
    if not g.is_connected():
        raise Disconnected("embed needs a connected graph")
    planar, emb = nx.check_planarity(g.to_networkx())
    if not planar:
        return None
    rot = [list(emb.neighbors_cw_order(v)) if g.adj[v] else [] for v in range(g.n)]
    return PlaneGraph(rot)
