"""
Star powers and ordered graphs
==============================

Expand f*f*...*f (p factors) for the one-sided star product on F_5[x, y]
and recover each t^n coefficient by summing derivative products over
upward-pointing graphs on p vertices.
"""

from restricted_poisson import (PolyRing, StarAlgebra, class_census, combinatorial_M,
                                vanishing_certificate)

ring = PolyRing(5, ["x", "y"])
S = StarAlgebra(ring, [[0, 1], [0, 0]], "onesided")
f = ring.parse("x^2 y + y^2 + x")

series = S.star_power(f, 5)
for n in range(5):
    print(f"t^{n}: {series[n]}")

# the middle coefficients vanish; the graph sums agree with the expansion
for n in range(1, 5):
    print(n, combinatorial_M(f, n, 5) == series[n])

# why they vanish: every class of graphs with n <= p-2 edges has size divisible by p
for c in class_census(2, 5):
    print(f"{c.profile.describe():28s} N = {c.N:3d}")
print(vanishing_certificate(2, 5).to_text())
