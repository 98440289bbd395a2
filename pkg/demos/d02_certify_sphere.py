"""
Certifying that the union is a 3-sphere
=======================================

Every vertex link is a 2-sphere. The homology matches S^3 over GF(2) and
over Q, and the stored facet order is a shelling.
"""

from flagsphere.constructions import delta_12_33
from flagsphere.homology import Field, betti_numbers, lbt_check
from flagsphere.recognition import certify_3_sphere

D = delta_12_33()  # facets in shelling order
cert = certify_3_sphere(D)
print(cert.as_dict())

for field in Field:
    print(field.value, betti_numbers(D, field, reduced=True))

# Few edges force H_1 = 0 on a closed 3-manifold.
print(lbt_check(D).as_dict())

# The reverse of a shelling of a sphere is again a shelling.
rev = D.reordered(D.facets[::-1])
print("reversed order:", certify_3_sphere(rev).strength)

# A shuffled order usually is not, and then only the homology verdict stands.
import random

order = list(D.facets)
random.Random(0).shuffle(order)
cert = certify_3_sphere(D.reordered(order))
print("shuffled order:", cert.strength, cert.shelling)
