"""
No reduction applies
====================

The sphere is not a suspension, has no contractible edge, and all 12 of its
induced equators are vertex links.
"""

from flagsphere.certification import (
    enumerate_induced_equators,
    gamma2_has_no_equator,
    induced_4cycles_containing,
    question_1_5_report,
)
from flagsphere.complex import is_automorphism, link
from flagsphere.constructions import delta_12_33, gamma2, permutation_power, tau

D = delta_12_33()

# A witness 4-cycle for a few edges.
for e in D.edges[:5]:
    cyc = induced_4cycles_containing(D, e)[0]
    print(D.names(e), "lies on", D.names(cyc))

eqs = enumerate_induced_equators(D)
print(len(eqs), "equators:")
for e in eqs:
    print("  ", " ".join(D.names(e.S)), "= lk", e.link_of)

print("Gamma_2 has no induced 2-sphere:", gamma2_has_no_equator(), "on", gamma2().n_vertices, "vertices")

t = tau()
print("tau^k automorphisms:", all(is_automorphism(D, permutation_power(t, k)) for k in range(9)))
print("link of v1 has", len(link(D, ["v1"]).facets), "triangles")

print(question_1_5_report(D).as_dict()["question_1_5"])
