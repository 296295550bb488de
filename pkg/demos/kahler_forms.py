"""
Restricted structure on Kähler forms
====================================

Forms a dx + b dy on the classical plane over F_3 carry a bracket, an
anchor to derivations and a p-map built from the one on functions.
"""

from restricted_poisson import LieRinehartStructure, catalog, verify_lie_rinehart

S = LieRinehartStructure(catalog("classical2"))
x, y = S.algebra.gens

w = S.dx(0, y) + S.dx(1, x * x)
print("w           =", w)
print("[dx, w]     =", S.bracket(S.dx(0), w))
print("alpha(w)(x) =", S.anchor(w)(x))
print("w^[3]       =", S.pmap(w))

# (y dx)^[3] is y dx: the derivation y d/dy fixes y
print(S.pmap(S.dx(0, y)))

print(verify_lie_rinehart(S, samples=32).to_text())

# dropping the second term of the pure-term formula breaks the scalar rule
bad = LieRinehartStructure(catalog("classical2"), mutated=True)
print(verify_lie_rinehart(bad, samples=32).failed_checks())
