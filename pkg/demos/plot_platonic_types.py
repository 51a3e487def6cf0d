"""
Common-neighbour types of the Platonic solids
=============================================

For each pair of distinct vertices count the shared neighbours. The set of
counts that occur is the type A of the graph.
"""

from polydeza import fixture, type_profile, classify_planar_regular

for name in ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"):
    g = fixture(name)
    prof = type_profile(g)
    cls = classify_planar_regular(g)
    print(f"{name:13s} n={g.n:2d}  A={sorted(prof.a_set)}  {cls.kind}: {cls.row}")

# how many pairs share i neighbours, and a first pair for each i
cube = type_profile(fixture("cube"))
print("cube pair counts:", dict(sorted(cube.counts.items())))
print("cube witness pairs:", cube.witnesses)
