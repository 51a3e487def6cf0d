"""Structural measurements on abstract and plane graphs.

Common-neighbour type profiles, connectivity, girth, the small subgraph
witnesses (K(2,r), square pyramid, 4-cycle), face statistics and the two
face-count inequality reports for 5-regular and 4-regular plane graphs.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .errors import PreconditionViolated, SameVertex, TooSmall, UnknownVertex
from .graph import AbstractGraph, PlaneGraph, embed


def _as_abstract(g) -> AbstractGraph:
    return g.to_abstract() if isinstance(g, PlaneGraph) else g


def common_neighbors(g, u: int, v: int) -> frozenset[int]:
    g = _as_abstract(g)
    if u == v:
        raise SameVertex(f"common neighbours need two distinct vertices, got {u} twice")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise UnknownVertex(f"unknown vertex in pair ({u}, {v})")
    return g.adj[u] & g.adj[v]


@dataclass(frozen=True)
class TypeProfile:
    """The set A(G) with the lexicographically first witness pair per value."""

    a_set: frozenset[int]
    witnesses: dict[int, tuple[int, int]]
    max_common: int
    counts: dict[int, int] = field(default_factory=dict)

    def sorted(self) -> list[int]:
        return sorted(self.a_set)


def type_profile(g) -> TypeProfile:
    g = _as_abstract(g)
    if g.n < 2:
        raise TooSmall("type profile needs at least two vertices")
    adj = g.adj
    witnesses: dict[int, tuple[int, int]] = {}
    counts: Counter = Counter()
    for u in range(g.n):
        au = adj[u]
        for v in range(u + 1, g.n):
            k = len(au & adj[v])
            counts[k] += 1
            if k not in witnesses:
                witnesses[k] = (u, v)
    return TypeProfile(frozenset(witnesses), witnesses, max(witnesses), dict(counts))


def _connected_without(g: AbstractGraph, removed: set[int]) -> bool:
    rest = [v for v in range(g.n) if v not in removed]
    if len(rest) <= 1:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y not in removed and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(rest)


def vertex_connectivity(g) -> int:
    """Exact vertex connectivity by exhaustive search over small cut sets."""
    g = _as_abstract(g)
    n = g.n
    if n == 0:
        return 0
    if not _connected_without(g, set()):
        return 0
    if all(len(a) == n - 1 for a in g.adj):
        return n - 1
    for k in range(1, n - 1):
        for cut in combinations(range(n), k):
            if not _connected_without(g, set(cut)):
                return k
    return n - 1


def is_k_connected(g, k: int) -> bool:
    """``g`` has more than ``k`` vertices and no cut set smaller than ``k``."""
    g = _as_abstract(g)
    if g.n <= k:
        return False
    for s in range(k):
        for cut in combinations(range(g.n), s):
            if not _connected_without(g, set(cut)):
                return False
    return True


@dataclass(frozen=True)
class PolyhedronVerdict:
    is_polyhedron: bool
    embedding: PlaneGraph | None
    reason: str = ""

    def __bool__(self):
        return self.is_polyhedron


def is_polyhedron(g: AbstractGraph, max_n: int | None = None) -> PolyhedronVerdict:
    """Planar, 3-connected and at least four vertices."""
    g = _as_abstract(g)
    if g.n < 4:
        return PolyhedronVerdict(False, None, "fewer than 4 vertices")
    if not g.is_connected():
        return PolyhedronVerdict(False, None, "disconnected")
    pg = embed(g) if max_n is None else embed(g, max_n=max_n)
    if pg is None:
        return PolyhedronVerdict(False, None, "non-planar")
    if not pg.is_polyhedral():
        return PolyhedronVerdict(False, None, "not 3-connected")
    return PolyhedronVerdict(True, pg)


def girth(g) -> int | float:
    """Shortest cycle length; ``math.inf`` for forests."""
    g = _as_abstract(g)
    best = math.inf
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif parent[x] != y:
                        best = min(best, dist[x] + dist[y] + 1)
            if best <= 2 * dist[frontier[0]] + 1:
                break
            frontier = nxt
    return best


def k2r_witness(g, r: int) -> tuple[int, int] | None:
    """First pair with at least ``r`` common neighbours (a K(2,r) subgraph)."""
    g = _as_abstract(g)
    if r < 1:
        raise ValueError("r must be at least 1")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if len(g.adj[u] & g.adj[v]) >= r:
                return (u, v)
    return None


def four_cycle_witness(g) -> tuple[int, int, int, int] | None:
    """Some 4-cycle found by walking paths ``a-b-c-d`` and closing ``d-a``."""
    g = _as_abstract(g)
    adj = g.adj
    for a in range(g.n):
        for b in adj[a]:
            if b < a:
                continue
            for c in adj[b]:
                if c == a or c < a:
                    continue
                for d in adj[c]:
                    if d != b and d > a and d in adj[a]:
                        return (a, b, c, d)
    return None


def square_pyramid_witness(g) -> tuple[int, tuple[int, int, int, int]] | None:
    """An apex adjacent to all four vertices of a 4-cycle, if any."""
    g = _as_abstract(g)
    adj = g.adj
    for t in range(g.n):
        nb = sorted(adj[t])
        for quad in combinations(nb, 4):
            a, b, c, d = quad
            for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
                if all(cyc[(i + 1) % 4] in adj[cyc[i]] for i in range(4)):
                    return t, cyc
    return None


@dataclass(frozen=True)
class FaceStats:
    p: int
    q: int
    f: int
    p_i: dict[int, int]
    f_i: dict[int, int]
    q0: int
    q1: int
    q2: int
    girth: int | float

    def fi(self, i: int) -> int:
        return self.f_i.get(i, 0)

    def pi(self, i: int) -> int:
        return self.p_i.get(i, 0)

    def as_dict(self) -> dict:
        return dict(
            p=self.p,
            q=self.q,
            f=self.f,
            p_i={str(k): v for k, v in sorted(self.p_i.items())},
            f_i={str(k): v for k, v in sorted(self.f_i.items())},
            q0=self.q0,
            q1=self.q1,
            q2=self.q2,
            girth=None if self.girth == math.inf else self.girth,
        )


def face_stats(g: PlaneGraph) -> FaceStats:
    tri = [len(fc) == 3 for fc in g.faces]
    qk = [0, 0, 0]
    for u, v in g.edges():
        qk[tri[g.face_of(u, v)] + tri[g.face_of(v, u)]] += 1
    return FaceStats(
        p=g.n,
        q=g.q,
        f=g.f,
        p_i=dict(Counter(len(r) for r in g.rot)),
        f_i=dict(Counter(len(fc) for fc in g.faces)),
        q0=qk[0],
        q1=qk[1],
        q2=qk[2],
        girth=girth(g),
    )


@dataclass(frozen=True)
class Prop30Report:
    q0: int
    q2: int
    q: int
    lhs: int
    middle: float
    rhs: int
    holds: bool
    tight: bool


def prop30_report(g: PlaneGraph, check_preconditions: bool = True) -> Prop30Report:
    """Evaluate ``q2 >= 15 + q/2 + q0 >= 30`` for a 5-regular plane graph.

    Preconditions: connected, 5-regular, no quadrangular faces.
    """
    st = face_stats(g)
    if check_preconditions:
        if g.to_abstract().regularity() != 5:
            raise PreconditionViolated("not 5-regular")
        if st.fi(4):
            raise PreconditionViolated(f"has {st.fi(4)} quadrangular faces")
    middle = 15 + st.q / 2 + st.q0
    holds = st.q2 >= middle >= 30
    return Prop30Report(
        q0=st.q0,
        q2=st.q2,
        q=st.q,
        lhs=st.q2,
        middle=middle,
        rhs=30,
        holds=holds,
        tight=st.q2 == middle == 30,
    )


@dataclass(frozen=True)
class Prop1223Report:
    f: int
    f3: int
    q: int
    q1: int
    f3_lower_ok: bool
    f3_upper_ok: bool
    q1_ok: bool
    f3_lower_tight: bool
    f3_upper_tight: bool
    q1_tight: bool

    @property
    def holds(self) -> bool:
        return self.f3_lower_ok and self.f3_upper_ok and self.q1_ok


def prop1223_report(g: PlaneGraph, check_preconditions: bool = True) -> Prop1223Report:
    """Check ``f/2 + 4 <= f3 <= 2f/3 - 4/3`` and ``q1 >= 3q/4 + 15``.

    Integer forms are compared exactly: ``2 f3 >= f + 8``, ``3 f3 <= 2 f - 4``,
    ``4 q1 >= 3 q + 60``.  Preconditions: 4-regular Deza graph other than
    the three small exceptional quartic ones.
    """
    if check_preconditions:
        G = g.to_abstract()
        if G.regularity() != 4:
            raise PreconditionViolated("not 4-regular")
        if len(type_profile(G).a_set) > 2:
            raise PreconditionViolated("not a Deza graph")
        from .fixtures import exceptional_name

        name = exceptional_name(g)
        if name is not None:
            raise PreconditionViolated(f"exceptional quartic graph ({name})")
    st = face_stats(g)
    f, f3, q, q1 = st.f, st.fi(3), st.q, st.q1
    return Prop1223Report(
        f=f,
        f3=f3,
        q=q,
        q1=q1,
        f3_lower_ok=2 * f3 >= f + 8,
        f3_upper_ok=3 * f3 <= 2 * f - 4,
        q1_ok=4 * q1 >= 3 * q + 60,
        f3_lower_tight=2 * f3 == f + 8,
        f3_upper_tight=3 * f3 == 2 * f - 4,
        q1_tight=4 * q1 == 3 * q + 60,
    )


def _four_cycles(g: PlaneGraph):
    adj = [set(r) for r in g.rot]
    seen = set()
    for a in range(g.n):
        for b in adj[a]:
            if b < a:
                continue
            for c in adj[b]:
                if c <= a:
                    continue
                for d in adj[c]:
                    if d <= a or d == b or a not in adj[d]:
                        continue
                    key = (a, min(b, d), c, max(b, d))
                    if key not in seen:
                        seen.add(key)
                        yield key


def separating_4cycles(g: PlaneGraph) -> list[tuple[int, int, int, int]]:
    """4-cycles with vertices strictly on both sides in the embedding."""
    return [cyc for cyc in _four_cycles(g) if _both_sides_occupied(g, cyc)]


def _both_sides_occupied(g: PlaneGraph, cyc) -> bool:
    on = set(cyc)
    k = len(cyc)
    left = right = False
    for i in range(k):
        prev, v, nxt = cyc[i - 1], cyc[i], cyc[(i + 1) % k]
        r = g.rot[v]
        d = len(r)
        j = (g._pos[v][nxt] + 1) % d
        side = True
        while True:
            w = r[j]
            if w == prev:
                side = False
            elif w == nxt:
                break
            elif w not in on:
                if side:
                    left = True
                else:
                    right = True
            j = (j + 1) % d
        if left and right:
            return True
    return False


def has_separating_4cycle(g: PlaneGraph) -> bool:
    return any(_both_sides_occupied(g, cyc) for cyc in _four_cycles(g))
