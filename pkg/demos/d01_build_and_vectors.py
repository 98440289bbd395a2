"""
Building the 12-vertex flag 3-sphere
====================================

Two solid tori share the torus boundary. Their union has 33 facets.
"""

from flagsphere.complex import boundary_complex, is_flag, minimal_nonfaces
from flagsphere.constructions import delta_12_33, gamma1, gamma2
from flagsphere.vectors import face_vectors

# The first solid torus: three cones over octahedra.
g1 = gamma1()
# The second: a staircase triangulation of triangle x 3-cycle, relabelled.
g2 = gamma2()
print("facets:", len(g1.facets), "+", len(g2.facets))

# They meet exactly in their common boundary, a 9-vertex torus.
print("same boundary:", boundary_complex(g1) == boundary_complex(g2))

D = delta_12_33()
v = face_vectors(D)
print("f =", v.f)
print("h =", v.h, "(palindromic)" if v.h == v.h[::-1] else "")
print("gamma =", v.gamma)

# Neither torus is flag on its own; their union is.
print("flag:", is_flag(g1), is_flag(g2), is_flag(D))
print("minimal non-faces of the union:", len(minimal_nonfaces(D)))
