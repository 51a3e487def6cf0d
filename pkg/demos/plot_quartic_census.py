"""
Census of small quartic polyhedra
=================================

Generate all 4-regular polyhedra up to a modest order, compare the counts
with a brute-force oracle, and pick out the Deza graphs.
"""

import time
from collections import Counter

from polydeza import gen_quartic_polyhedra, is_deza, oracle_regular_planar, type_profile
from polydeza.fixtures import exceptional_name

MAX_N = 11

start = time.perf_counter()
graphs = list(gen_quartic_polyhedra(MAX_N))
print(f"generated {len(graphs)} graphs in {time.perf_counter() - start:.2f}s")

counts = Counter(g.n for g in graphs)
for n in range(6, MAX_N + 1):
    print(f"n={n:2d}  generated={counts[n]:3d}  oracle={len(oracle_regular_planar(4, n)):3d}")

# the types that occur, and which graphs have at most two values
types = Counter(tuple(sorted(type_profile(g).a_set)) for g in graphs)
print("types:", dict(types))
for g in graphs:
    if is_deza(g) is not None:
        print("Deza:", exceptional_name(g), "n =", g.n, "parameters", is_deza(g))
