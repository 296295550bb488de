"""
From restricted Lie algebras to Hopf algebras
=============================================

Start from sl_2 over F_3 with h^[3] = h and e^[3] = f^[3] = 0, pass to its
symmetric algebra and its truncation, then form tensor products.
"""

from restricted_poisson import (catalog, hopf_check, sl2, symmetric_poisson, tensor_product,
                                truncated_symmetric, verify_restricted, verify_restricted_lie_fd,
                                verify_tensor)

L = sl2(3)
print(verify_restricted_lie_fd(L).to_text())

S = symmetric_poisson(L)
e, h, f = S.poisson.gens
print("{e, f} =", S.poisson.bracket(e, f))
print("pp(e f) =", S.pp(e * f))
print("pp(h^2) =", S.pp(h * h))

# the truncation by e^3, h^3, f^3 is 27-dimensional; check it exhaustively
s = truncated_symmetric(L)
basis = s.poisson.finite_basis()
print(len(basis), "basis monomials")
print(verify_restricted(s, samples=8, basis=basis).passed)

# tensor product with the classical plane
T = tensor_product(catalog("classical2"), S)
print(T.ring.names)
print(verify_tensor(T, samples=4).to_text())

# primitive coproduct, counit and antipode
print(hopf_check(s).to_text())
