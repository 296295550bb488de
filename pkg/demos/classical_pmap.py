"""
The p-map of the classical plane
================================

Build the restricted structure on F_3[x, y] with {x, y} = 1 from the
generator images pp(x) = pp(y) = 0, then compare it with the star-product
coefficient and with the explicit cubic formula.
"""

from restricted_poisson import (PoissonAlgebra, RestrictedPoissonAlgebra, StarAlgebra,
                                build_pmap, closed_form_p3, derive_pmap, verify_restricted)

A = PoissonAlgebra.from_strings(3, ["x", "y"], {"x,y": "1"})
x, y = A.gens
print("{x^2, y} =", A.bracket(x * x, y))

# extend the generator images to every polynomial
R = RestrictedPoissonAlgebra(A, build_pmap(A, [0, 0]), "classical")
for m in A.ring.monomials_up_to(3):
    f = A.ring.monomial(m)
    print(f"pp({f}) = {R.pp(f)}")

# the same map read off from the t^2 coefficient of f*f*f
Q = derive_pmap(StarAlgebra(A.ring, [[0, 1], [0, 0]], "onesided"))
f = A.ring.parse("x^2 y + x y^2 + y")
print("inductive  :", R.pp(f))
print("quantized  :", Q.pp(f))
print("closed form:", closed_form_p3(f))

# all axioms on every pair of monomials of degree <= 3
print(verify_restricted(R, samples=16, degree_bound=3).to_text())
