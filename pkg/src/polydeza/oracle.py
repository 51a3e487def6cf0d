"""Brute-force oracle: connected r-regular planar 3-connected graphs.

Works on abstract adjacency only and shares no code with the plane-graph
generators.  Vertices are saturated one at a time; after each step the
partial graphs are deduplicated up to isomorphism (saturated vertices
coloured), which is sound because the completions of a partial graph do
not depend on its labelling.  Non-planar partial graphs, and partial graphs
in which a block of saturated vertices is already cut off by at most two
vertices, are pruned.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from .errors import PolydezaError, TooLarge
from .graph import AbstractGraph

ORACLE_CAP = {3: 14, 4: 13}


# canonical certificates by individualisation-refinement ----------------------

def _refine(adj, cells):
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        where = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                sig[v] = tuple(sorted(where[w] for w in adj[v]))
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            for key in sorted(groups):
                out.append(groups[key])
        if len(out) == len(cells):
            return out
        cells = out


def _search(adj, cells, best):
    cells = _refine(adj, cells)
    target = None
    for ci, cell in enumerate(cells):
        if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
            target = ci
    if target is None:
        order = {cell[0]: i for i, cell in enumerate(cells)}
        cert = tuple(sorted(
            (min(order[v], order[w]), max(order[v], order[w]))
            for v in adj for w in adj[v] if v < w
        ))
        if best[0] is None or cert < best[0]:
            best[0] = cert
        return
    cell = cells[target]
    for v in cell:
        rest = [w for w in cell if w != v]
        _search(adj, cells[:target] + [[v], rest] + cells[target + 1 :], best)


def certificate(adj: dict[int, set[int]], colour: dict[int, int]) -> tuple:
    """Labelling-independent certificate of a vertex-coloured graph."""
    groups: dict[tuple, list[int]] = {}
    for v in adj:
        groups.setdefault((colour[v], len(adj[v])), []).append(v)
    keys = sorted(groups)
    best = [None]
    _search(adj, [groups[k] for k in keys], best)
    return (len(adj), tuple((k, len(groups[k])) for k in keys), best[0])


# search --------------------------------------------------------------------

def _planar(adj) -> bool:
    G = nx.Graph()
    G.add_nodes_from(adj)
    G.add_edges_from((v, w) for v in adj for w in adj[v] if v < w)
    return nx.is_planar(G)


def _cut_off(adj, sat, r, total_known: bool) -> bool:
    """A component of saturated vertices with at most two outside neighbours."""
    seen = set()
    for s in sat:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        border = set()
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in sat:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
                else:
                    border.add(y)
        seen |= comp
        outside = len(adj) - len(comp) - len(border)
        if len(border) <= 2 and (outside > 0 or not total_known):
            return True
    return False


def _dead(adj, r: int, n: int) -> bool:
    m = len(adj)
    if m < n:
        return False
    open_ = [v for v in adj if len(adj[v]) < r]
    if sum(r - len(adj[v]) for v in open_) % 2:
        return True
    for v in open_:
        free = sum(1 for w in open_ if w != v and w not in adj[v])
        if free < r - len(adj[v]):
            return True
    return False


def oracle_regular_planar(r: int, n: int) -> list[AbstractGraph]:
    """All connected r-regular planar 3-connected graphs on ``n`` vertices."""
    if r not in ORACLE_CAP:
        raise PolydezaError(f"oracle supports r in {sorted(ORACLE_CAP)}, got {r}")
    if n > ORACLE_CAP[r]:
        raise TooLarge(f"oracle capped at n={ORACLE_CAP[r]} for r={r}")
    if (r * n) % 2 or n < r + 1:
        return []
    adj0 = {0: set(range(1, r + 1))}
    for i in range(1, r + 1):
        adj0[i] = {0}
    frontier = [(adj0, frozenset([0]))]
    finished: dict[tuple, dict] = {}
    while frontier:
        nxt: dict[tuple, tuple] = {}
        for adj, sat in frontier:
            open_ = [v for v in adj if v not in sat]
            if not open_:
                if len(adj) == n:
                    cert = certificate(adj, {v: 0 for v in adj})
                    finished.setdefault(cert, adj)
                continue
            u = max(open_, key=lambda v: (len(adj[v]), -v))
            need = r - len(adj[u])
            cands = sorted(v for v in open_ if v != u and v not in adj[u] and len(adj[v]) < r)
            m = len(adj)
            for k_new in range(0, min(need, n - m) + 1):
                for combo in combinations(cands, need - k_new):
                    H = {v: set(a) for v, a in adj.items()}
                    for c in combo:
                        H[u].add(c)
                        H[c].add(u)
                    for t in range(k_new):
                        H[m + t] = {u}
                        H[u].add(m + t)
                    S = set(sat)
                    S.add(u)
                    S.update(c for c in combo if len(H[c]) == r)
                    if _dead(H, r, n) or _cut_off(H, S, r, len(H) == n):
                        continue
                    cert = certificate(H, {v: int(v in S) for v in H})
                    if cert in nxt:
                        continue
                    if len(H) < 5 or _planar(H):
                        nxt[cert] = (H, frozenset(S))
                    else:
                        nxt[cert] = None
        frontier = [st for st in nxt.values() if st is not None]
    out = []
    for adj in finished.values():
        G = nx.Graph([(v, w) for v in adj for w in adj[v] if v < w])
        if nx.node_connectivity(G) >= 3:
            out.append(AbstractGraph.from_networkx(nx.convert_node_labels_to_integers(G)))
    return out
