"""Kähler differentials of a polynomial Poisson algebra as a restricted
Lie-Rinehart algebra.

For ``A = K[x_1..x_n]`` the module of differentials is free on the
``dx_i``.  The bracket, anchor and p-map are

    [a du, b dv] = a{u, b} dv + b{a, v} du + ab d{u, v}
    alpha(a du)(z) = a{u, z}
    (a du)^[p]   = a^p d(pp(u)) + D^{p-1}(a) du,    D = alpha(a du).
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, List, Optional, Sequence

from .algebra import Poly
from .poisson import PoissonAlgebra
from .report import Report
from .restricted import RestrictedPoissonAlgebra, lambda_from_bracket


class KahlerForm:
    """``sum_i a_i dx_i`` with polynomial coefficients.

    Supports ``+``, ``-``, multiplication by an int or a polynomial, and
    equality.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: PoissonAlgebra, coeffs: Sequence[Poly]):
        if len(coeffs) != algebra.ring.nvars:
            raise ValueError("need one coefficient per generator")
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, algebra: PoissonAlgebra) -> "KahlerForm":
        return cls(algebra, [algebra.zero] * algebra.ring.nvars)

    @classmethod
    def basis(cls, algebra: PoissonAlgebra, i: int, coeff: Optional[Poly] = None) -> "KahlerForm":
        """``coeff * dx_i`` (default coefficient 1)."""
        cs = [algebra.zero] * algebra.ring.nvars
        cs[i] = algebra.one if coeff is None else coeff
        return cls(algebra, cs)

    def _same(self, other: "KahlerForm"):
        if not isinstance(other, KahlerForm) or other.algebra is not self.algebra:
            raise ValueError("forms belong to different algebras")

    def __add__(self, other):
        self._same(other)
        return KahlerForm(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._same(other)
        return KahlerForm(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return KahlerForm(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, c):
        if isinstance(c, (int, Poly)):
            return KahlerForm(self.algebra, [a * c for a in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, KahlerForm) and other.algebra is self.algebra
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def terms(self):
        """Nonzero ``(i, a_i)`` pairs in generator order."""
        return [(i, a) for i, a in enumerate(self.coeffs) if a]

    def __str__(self):
        names = self.algebra.ring.names
        parts = []
        for i, a in self.terms():
            if a == 1:
                parts.append(f"d{names[i]}")
            elif len(a) == 1:
                parts.append(f"{a}*d{names[i]}")
            else:
                parts.append(f"({a})*d{names[i]}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"KahlerForm({self})"


def differential(A: PoissonAlgebra, f: Poly) -> KahlerForm:
    """df = sum_i (d f / d x_i) dx_i."""
    return KahlerForm(A, [f.diff(i) for i in range(A.ring.nvars)])


def form_bracket(omega: KahlerForm, eta: KahlerForm) -> KahlerForm:
    omega._same(eta)
    A = omega.algebra
    gens = A.gens
    out = KahlerForm.zero(A)
    for i, a in omega.terms():
        for j, b in eta.terms():
            cs = [A.zero] * A.ring.nvars
            cs[j] = cs[j] + a * A.bracket(gens[i], b)
            cs[i] = cs[i] + b * A.bracket(a, gens[j])
            out = out + KahlerForm(A, cs)
            if i != j:
                out = out + differential(A, A.generator_bracket(i, j)) * (a * b)
    return out


def anchor_apply(omega: KahlerForm, z: Poly) -> Poly:
    """alpha(sum a_i dx_i)(z) = sum a_i {x_i, z}."""
    A = omega.algebra
    out = A.zero
    for i, a in omega.terms():
        out = out + a * A.bracket(A.gens[i], z)
    return out


class LieRinehartStructure:
    """Forms on a polynomial restricted Poisson algebra with bracket, anchor and p-map.

    Parameters
    ----------
    base : RestrictedPoissonAlgebra
        Must be a polynomial algebra (no quotient), so that the forms are free.
    mutated : bool
        Drop the ``D^{p-1}(a) du`` term of the p-map.  Only useful as a
        negative control.
    """

    def __init__(self, base: RestrictedPoissonAlgebra, mutated: bool = False):
        if base.poisson.quotient is not None:
            raise ValueError("Kähler forms are modelled only for polynomial algebras")
        self.base = base
        self.algebra = base.poisson
        self.p = base.p
        self.mutated = mutated

    def zero(self) -> KahlerForm:
        return KahlerForm.zero(self.algebra)

    def dx(self, i: int, coeff: Optional[Poly] = None) -> KahlerForm:
        return KahlerForm.basis(self.algebra, i, coeff)

    def d(self, f: Poly) -> KahlerForm:
        return differential(self.algebra, f)

    def bracket(self, omega: KahlerForm, eta: KahlerForm) -> KahlerForm:
        return form_bracket(omega, eta)

    def anchor(self, omega: KahlerForm) -> Callable[[Poly], Poly]:
        return lambda z: anchor_apply(omega, z)

    def anchor_power(self, omega: KahlerForm, k: int, z: Poly) -> Poly:
        for _ in range(k):
            if not z:
                break
            z = anchor_apply(omega, z)
        return z

    def pure_pmap(self, a: Poly, u: Poly) -> KahlerForm:
        """(a du)^[p] = a^p d(pp(u)) + D^{p-1}(a) du with D = alpha(a du)."""
        p = self.p
        out = self.d(self.base.pp(u)) * a.frobenius()
        if not self.mutated:
            du = self.d(u)
            out = out + du * self.anchor_power(du * a, p - 1, a)
        return out

    def pmap(self, omega: KahlerForm, order: Optional[Sequence[int]] = None) -> KahlerForm:
        """p-map on a general form: pure terms ``a_i dx_i`` folded with Lambda_p."""
        idx = [i for i, _ in omega.terms()] if order is None else list(order)
        gens = self.algebra.gens
        acc, val = self.zero(), self.zero()
        for i in idx:
            a = omega.coeffs[i]
            if not a:
                continue
            piece = self.dx(i, a)
            val = val + self.pure_pmap(a, gens[i])
            if acc:
                val = val + lambda_from_bracket(form_bracket, acc, piece, self.p)
            acc = acc + piece
        return val

    def random_form(self, rng: random.Random, max_degree: int = 2, max_terms: int = 2) -> KahlerForm:
        A = self.algebra
        while True:
            cs = [A.ring.random_element(rng, max_degree, max_terms) if rng.random() < 0.7
                  else A.zero for _ in range(A.ring.nvars)]
            omega = KahlerForm(A, cs)
            if omega:
                return omega


def form_pmap(S: LieRinehartStructure, omega: KahlerForm) -> KahlerForm:
    return S.pmap(omega)


def verify_lie_rinehart(S: LieRinehartStructure, samples: int = 64, seed: int = 0) -> Report:
    """Lie-Rinehart axioms and the restricted conditions on random data.

    Checks: form Lie axioms, the module rule [X, aY] = a[X, Y] + alpha(X)(a) Y,
    the anchor as an A-linear bracket homomorphism, the restricted Lie axioms
    for the form p-map, alpha(w^[p]) = alpha(w)^p, the rule
    (aX)^[p] = a^p X^[p] + alpha(aX)^{p-1}(a) X, and the pure-term formula
    for a du with u arbitrary.
    """
    rng = random.Random(seed)
    A, p = S.algebra, S.p
    report = Report("lie-rinehart", seed)
    anti = report.check("antisymmetry")
    jac = report.check("jacobi")
    mod = report.check("module_rule")
    alin = report.check("anchor_linear")
    ahom = report.check("anchor_bracket")
    adp = report.check("ad_p")
    semi = report.check("semilinear")
    add = report.check("additive")
    order = report.check("fold_order")
    apow = report.check("anchor_pmap")
    defc = report.check("scalar_rule")
    pure = report.check("pure_term")

    def rand_poly(deg=2, terms=2):
        return A.ring.random_element(rng, deg, terms)

    n = A.ring.nvars
    gens = A.gens
    # generator probes first so that witnesses stay readable
    probes = [(gens[i], S.dx(j)) for i in range(n) for j in range(n)]
    probes += [(rand_poly(), S.random_form(rng)) for _ in range(samples)]
    for a, X in probes:
        aX = X * a
        lhs = S.pmap(aX)
        rhs = S.pmap(X) * a.frobenius() + X * S.anchor_power(aX, p - 1, a)
        defc.record(lhs == rhs, a=a, X=X, lhs=lhs, rhs=rhs)

    for _ in range(samples):
        w1, w2, w3 = (S.random_form(rng) for _ in range(3))
        a, z = rand_poly(), rand_poly(3, 3)

        b12, b21 = form_bracket(w1, w2), form_bracket(w2, w1)
        anti.record(b12 == -b21, X=w1, Y=w2, lhs=b12, rhs=-b21)
        r = (form_bracket(w1, form_bracket(w2, w3)) + form_bracket(w2, form_bracket(w3, w1))
             + form_bracket(w3, b12))
        jac.record(not r, X=w1, Y=w2, Z=w3, residual=r)

        lhs = form_bracket(w1, w2 * a)
        rhs = b12 * a + w2 * anchor_apply(w1, a)
        mod.record(lhs == rhs, X=w1, a=a, Y=w2, lhs=lhs, rhs=rhs)

        lhs, rhs = anchor_apply(w1 * a, z), a * anchor_apply(w1, z)
        alin.record(lhs == rhs, a=a, X=w1, z=z, lhs=lhs, rhs=rhs)
        lhs = anchor_apply(b12, z)
        rhs = anchor_apply(w1, anchor_apply(w2, z)) - anchor_apply(w2, anchor_apply(w1, z))
        ahom.record(lhs == rhs, X=w1, Y=w2, z=z, lhs=lhs, rhs=rhs)

        pw1 = S.pmap(w1)
        lhs = w2
        for _ in range(p):
            lhs = form_bracket(w1, lhs)
        rhs = form_bracket(pw1, w2)
        adp.record(lhs == rhs, X=w1, Y=w2, lhs=lhs, rhs=rhs)

        lam = rng.randrange(p)
        lhs, rhs = S.pmap(w1 * lam), pw1 * pow(lam, p, p)
        semi.record(lhs == rhs, X=w1, scalar=lam, lhs=lhs, rhs=rhs)

        lhs = S.pmap(w1 + w2)
        rhs = pw1 + S.pmap(w2) + lambda_from_bracket(form_bracket, w1, w2, p)
        add.record(lhs == rhs, X=w1, Y=w2, lhs=lhs, rhs=rhs)

        idx = [i for i, _ in w1.terms()]
        rng.shuffle(idx)
        other = S.pmap(w1, idx)
        order.record(other == pw1, X=w1, order=idx, lhs=other, rhs=pw1)

        lhs, rhs = anchor_apply(pw1, z), S.anchor_power(w1, p, z)
        apow.record(lhs == rhs, X=w1, z=z, lhs=lhs, rhs=rhs)

        u = rand_poly()
        lhs, rhs = S.pmap(S.d(u) * a), S.pure_pmap(a, u)
        pure.record(lhs == rhs, a=a, u=u, lhs=lhs, rhs=rhs)
    return report


__all__ = ["KahlerForm", "differential", "form_bracket", "anchor_apply", "form_pmap",
           "LieRinehartStructure", "verify_lie_rinehart"]
