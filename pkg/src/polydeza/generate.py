"""Isomorph-free generation of 3-connected quadrangulations and triangulations.

Quadrangulations grow from the pseudo-double-wheels by two expansions:

* ``A`` splits a vertex ``v`` into ``v`` and ``v'`` along two of its
  neighbours ``w_i, w_j``; ``v'`` takes the sector ``w_i .. w_j`` and the
  new face ``v w_i v' w_j`` appears.  One new vertex.
* ``B`` inserts a cube into a face ``a b c d``: four new vertices forming a
  4-cycle, each joined to its corner.  Four new vertices.

Triangulations grow from K4 by vertex splitting.  Duplicates are removed
with a per-order set of canonical codes; parents are processed in order, so
the output order is reproducible whatever the worker count.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor

from .analysis import has_separating_4cycle
from .errors import IllegalSite, KTooSmall, PolydezaError
from .graph import PlaneGraph, canonical_code, dual

MAX_ORDER = 255


def pseudo_double_wheel(k: int) -> PlaneGraph:
    """2k-cycle ``c_0..c_{2k-1}`` with hub ``2k`` on even and hub ``2k+1`` on odd positions."""
    if k < 3:
        raise KTooSmall(f"pseudo-double-wheels need k >= 3, got {k}")
    m = 2 * k
    h0, h1 = m, m + 1
    rot: list[list[int]] = []
    for i in range(m):
        nxt, prv = (i + 1) % m, (i - 1) % m
        rot.append([nxt, h0, prv] if i % 2 == 0 else [h1, nxt, prv])
    rot.append(list(range(0, m, 2)))
    rot.append(list(range(m - 1, 0, -2)))
    return PlaneGraph(rot)


# expansion A ------------------------------------------------------------

def a_sites(g: PlaneGraph) -> list[tuple[int, int, int]]:
    """Sites ``(v, i, j)``: both halves of the split keep degree at least 3."""
    sites = []
    for v, r in enumerate(g.rot):
        d = len(r)
        for i in range(d):
            for j in range(i + 2, i + d - 1):
                if j < d:
                    sites.append((v, i, j))
    return sites


def _split(rot, v, i, j, extra_v, extra_new):
    """Shared rotation surgery for face expansion and triangle splitting."""
    r = rot[v]
    d = len(r)
    if not (0 <= i < j < d):
        raise IllegalSite(f"bad split positions ({i}, {j}) at a vertex of degree {d}")
    n = len(rot)
    new = n
    sector = list(r[i : j + 1])
    keep = list(r[j:]) + list(r[: i + 1])
    out = [list(x) for x in rot]
    out[v] = keep + extra_v(new)
    out.append(sector + extra_new(v))
    wi, wj = r[i], r[j]
    for w in sector[1:-1]:
        rw = out[w]
        rw[rw.index(v)] = new
    rw = out[wi]
    rw.insert(rw.index(v), new)
    rw = out[wj]
    rw.insert(rw.index(v) + 1, new)
    return out


def expand_A(g: PlaneGraph, site: tuple[int, int, int], *, check: bool = True) -> PlaneGraph:
    v, i, j = site
    d = g.degree(v) if 0 <= v < g.n else 0
    if not (0 <= i < j < d) or not 2 <= j - i <= d - 2:
        raise IllegalSite(f"A needs 2 <= j-i <= deg-2, got ({i}, {j}) at degree {d}")
    return PlaneGraph(_split(g.rot, v, i, j, lambda new: [], lambda old: []), check=check)


# expansion B ------------------------------------------------------------

def b_sites(g: PlaneGraph) -> list[int]:
    return [i for i, fc in enumerate(g.faces) if len(fc) == 4]


def expand_B(g: PlaneGraph, face: int, *, check: bool = True) -> PlaneGraph:
    if not 0 <= face < g.f or len(g.faces[face]) != 4:
        raise IllegalSite(f"B needs a quadrangular face, got face {face}")
    fc = g.faces[face]
    n = g.n
    out = [list(r) for r in g.rot]
    prime = {x: n + t for t, x in enumerate(fc)}
    new_rows = []
    for t, x in enumerate(fc):
        p, s = fc[t - 1], fc[(t + 1) % 4]
        rx = out[x]
        rx.insert(rx.index(p) + 1, prime[x])
        new_rows.append([x, prime[p], prime[s]])
    return PlaneGraph(out + new_rows, check=check)


# triangulations ---------------------------------------------------------

def split_sites(t: PlaneGraph) -> list[tuple[int, int, int]]:
    return [(v, i, j) for v, r in enumerate(t.rot) for i in range(len(r)) for j in range(i + 1, len(r))]


def split_vertex(t: PlaneGraph, site: tuple[int, int, int], *, check: bool = True) -> PlaneGraph:
    """Split ``v`` so that ``v'`` is joined to ``w_i .. w_j`` and to ``v``."""
    v, i, j = site
    if not 0 <= v < t.n:
        raise IllegalSite(f"unknown vertex {v}")
    return PlaneGraph(_split(t.rot, v, i, j, _self_list, _self_list), check=check)


def k4() -> PlaneGraph:
    return PlaneGraph([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])


# level-wise drivers -----------------------------------------------------

def _quad_children(args):
    rot, use_b = args
    g = PlaneGraph(rot, check=False)
    out = []
    for site in a_sites(g):
        h = expand_A(g, site, check=False)
        if not h.is_polyhedral():
            continue
        if not use_b and has_separating_4cycle(h):
            continue
        out.append((canonical_code(h), h.rot))
    if use_b:
        for face in b_sites(g):
            h = expand_B(g, face, check=False)
            if h.is_polyhedral():
                out.append((canonical_code(h), h.rot))
    return out


def _deficit(rot, m: int) -> int:
    return sum(max(0, m - len(r)) for r in rot)


def _self_list(x):
    return [x]


def _tri_children(args):
    rot, min_degree, target = args
    t = PlaneGraph(rot, check=False)
    out = []
    budget = 2 * (target - t.n - 1)
    for v, i, j in split_sites(t):
        rot2 = _split(t.rot, v, i, j, _self_list, _self_list)
        if min_degree > 3 and _deficit(rot2, min_degree) > budget:
            continue
        h = PlaneGraph(rot2, check=False)
        out.append((canonical_code(h), h.rot))
    return out


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("POLYDEZA_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn, jobs, threads):
    if threads <= 1 or len(jobs) < 8:
        return map(fn, jobs)
    pool = ProcessPoolExecutor(max_workers=threads)
    chunk = max(1, len(jobs) // (threads * 8))
    return _closing_map(pool, fn, jobs, chunk)


def _closing_map(pool, fn, jobs, chunk):
    with pool:
        yield from pool.map(fn, jobs, chunksize=chunk)


def gen_quadrangulations(
    max_n: int,
    use_b: bool = True,
    threads: int | None = None,
    deterministic: bool = False,
) -> Iterator[PlaneGraph]:
    """3-connected quadrangulations with at most ``max_n`` vertices, one per class.

    Without ``use_b`` only the class with no separating 4-cycle is produced.
    Orders ascend; within an order the sequence is fixed by parent order.
    """
    if max_n > MAX_ORDER:
        raise PolydezaError(f"max_n must be at most {MAX_ORDER}")
    threads = 1 if deterministic else (threads or default_threads())
    levels: dict[int, dict[bytes, tuple]] = {}
    k = 3
    while 2 * k + 2 <= max_n:
        pdw = pseudo_double_wheel(k)
        levels.setdefault(pdw.n, {})[canonical_code(pdw)] = pdw.rot
        k += 1
    for n in range(8, max_n + 1):
        current = levels.pop(n, {})
        if not current:
            continue
        if n < max_n:
            jobs = [(rot, use_b) for rot in current.values()]
            for children in _map(_quad_children, jobs, threads):
                for code, rot in children:
                    m = len(rot)
                    if m <= max_n:
                        levels.setdefault(m, {}).setdefault(code, rot)
        for rot in current.values():
            yield PlaneGraph(rot, check=False)


def gen_quartic_polyhedra(
    max_n: int, threads: int | None = None, deterministic: bool = False
) -> Iterator[PlaneGraph]:
    """Quartic polyhedra of order up to ``max_n`` as duals of quadrangulations."""
    for q in gen_quadrangulations(max_n + 2, True, threads, deterministic):
        yield dual(q)


def gen_triangulations(
    max_n: int,
    min_degree: int = 3,
    threads: int | None = None,
    deterministic: bool = False,
) -> Iterator[PlaneGraph]:
    """Sphere triangulations on 4..max_n vertices with minimum degree ``min_degree``.

    Intermediate triangulations are pruned when their degree deficit
    ``sum(max(0, m - deg))`` exceeds ``2 (max_n - n)``: a split lowers the
    deficit by at most two, so pruned graphs have no qualifying descendant.
    """
    if max_n > MAX_ORDER:
        raise PolydezaError(f"max_n must be at most {MAX_ORDER}")
    if not 3 <= min_degree <= 5:
        raise PolydezaError("min_degree must be 3, 4 or 5")
    threads = 1 if deterministic else (threads or default_threads())
    if max_n < 4:
        return
    t0 = k4()
    current = {canonical_code(t0): t0.rot}
    for n in range(4, max_n + 1):
        nxt: dict[bytes, tuple] = {}
        if n < max_n:
            jobs = [(rot, min_degree, max_n) for rot in current.values()]
            for children in _map(_tri_children, jobs, threads):
                for code, rot in children:
                    nxt.setdefault(code, rot)
        for rot in current.values():
            if min(len(r) for r in rot) >= min_degree:
                yield PlaneGraph(rot, check=False)
        current = nxt


def gen_cubic_polyhedra(
    max_n: int,
    min_face: int = 3,
    threads: int | None = None,
    deterministic: bool = False,
) -> Iterator[PlaneGraph]:
    """Cubic polyhedra of order up to ``max_n`` whose faces have length >= ``min_face``."""
    top = (max_n + 4) // 2
    for t in gen_triangulations(top, min_face, threads, deterministic):
        yield dual(t)
