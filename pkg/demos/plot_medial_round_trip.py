"""
Medial graphs and their preimages
=================================

The medial graph of a cubic polyhedron is its line graph and is 4-regular.
A 4-regular polyhedron is a medial graph exactly when its faces split into
two classes, and then the two preimages are a graph and its dual.
"""

from polydeza import canonical_code, dual, fixture, face_stats, is_deza, medial, medial_preimage

dodeca = fixture("dodecahedron")
m = medial(dodeca)
st = face_stats(m)
print(f"medial(dodecahedron): p={st.p} q={st.q} f={st.f} f3={st.fi(3)} f5={st.fi(5)}")
print("Deza parameters:", is_deza(m))

h, h_star = medial_preimage(m)
print("preimage orders:", h.n, h_star.n)
print("recovers {H, H*}:",
      {canonical_code(h), canonical_code(h_star)} == {canonical_code(dodeca), canonical_code(dual(dodeca))})

# an antiprism is the medial graph of a pyramid
pyr, _ = medial_preimage(fixture("square-antiprism"))
print("square antiprism comes from a graph on", pyr.n, "vertices with degrees",
      sorted(len(r) for r in pyr.rot))
