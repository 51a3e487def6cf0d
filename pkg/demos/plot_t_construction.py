"""
Gluing two quartic polyhedra
============================

The T-construction removes a small configuration from each of two quartic
polyhedra and joins what is left. The result has a pair of vertices with
three common neighbours, so 3 is in its type, and it is not a medial graph.
"""

from polydeza import canonical_code, face_sites, fixture, medial_preimage, t_construct, t_decompose, type_profile

g1 = fixture("nine-vertex-quartic")
g2 = fixture("square-antiprism")
s1, s2 = face_sites(g1)[0], face_sites(g2)[0]
print("sites:", (s1.u, s1.v, s1.w), (s2.u, s2.v, s2.w))

g = t_construct(s1, s2)
print(f"n={g.n}  polyhedral={g.is_polyhedral()}  A={sorted(type_profile(g).a_set)}")
print("medial preimage:", medial_preimage(g))

dec = t_decompose(g)
print("pair with three common neighbours:", dec.pair)
print("hosts recovered:",
      {canonical_code(dec.g1), canonical_code(dec.g2)} == {canonical_code(g1), canonical_code(g2)})
