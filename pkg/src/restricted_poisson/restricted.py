"""Restricted structures on Poisson algebras.

Jacobson's additivity defect ``Lambda_p``, the multiplicativity defect
``Phi_p``, p-maps built inductively on monomials, and the identity suites
that decide whether a p-map is a restricted Poisson structure.
"""

from __future__ import annotations

import itertools
import random
import threading
from typing import Callable, Dict, List, Mapping, Optional, Sequence, TypeVar

from .algebra import Monomial, MonomialIdeal, Poly, inverse, monomial_key
from .poisson import PoissonAlgebra, ad_power
from .report import Report

T = TypeVar("T")


class JacobsonError(ValueError):
    """ad_{x_i}^p differs from ad_{gamma(x_i)} for some generator."""


class CentralityError(ValueError):
    """A Frobenius-derivation candidate takes non-central values."""


class IdealError(ValueError):
    """An ideal is not Poisson-closed or not closed under the p-map."""


# -- Jacobson's coefficients ------------------------------------------------

def s_coefficients(bracket: Callable[[T, T], T], x: T, y: T, p: int) -> List[T]:
    """``[s_1(x, y), ..., s_{p-1}(x, y)]`` for any Lie bracket.

    ``ad_{tx+y}^{p-1}(x)`` is expanded as a polynomial in ``t``: the
    coefficient vector starts at ``[x]`` and ``t*ad_x + ad_y`` is applied
    ``p-1`` times; ``s_i`` is the coefficient of ``t^{i-1}``.
    """
    coeffs: List[Optional[T]] = [x]
    for _ in range(p - 1):
        new: List[Optional[T]] = [None] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            if c is None:
                continue
            for target, op in ((k, y), (k + 1, x)):
                v = bracket(op, c)
                if not v:
                    continue
                new[target] = v if new[target] is None else new[target] + v
        coeffs = new
    zero = x * 0
    return [c if c is not None else zero for c in coeffs[:p - 1]]


def lambda_from_bracket(bracket: Callable[[T, T], T], x: T, y: T, p: int) -> T:
    total = x * 0
    for i, s in enumerate(s_coefficients(bracket, x, y, p), start=1):
        if s:
            total = total + s * inverse(i, p)
    return total


def s_coeff(A: PoissonAlgebra, x: Poly, y: Poly, i: int) -> Poly:
    if not 1 <= i <= A.p - 1:
        raise ValueError(f"i must lie in 1..{A.p - 1}, got {i}")
    return s_coefficients(A.bracket, x, y, A.p)[i - 1]


def lambda_p(A: PoissonAlgebra, x: Poly, y: Poly) -> Poly:
    """Jacobson's Lambda_p(x, y) = sum_i s_i(x, y) / i."""
    if not x or not y:
        return A.zero
    return lambda_from_bracket(A.bracket, x, y, A.p)


def phi_p(A: PoissonAlgebra, x: Poly, y: Poly) -> Poly:
    """The correction term in pp(xy) = x^p pp(y) + y^p pp(x) + Phi_p(x, y)."""
    p = A.p
    x2, y2 = A.mul(x, x), A.mul(y, y)
    xy2 = A.mul(x, y) * 2
    head = A.mul(A.frobenius(x) + A.frobenius(y), lambda_p(A, x, y))
    tail = lambda_p(A, x2, y2) + lambda_p(A, x2 + y2, xy2)
    return head - tail * inverse(2, p)


def phi_p_prime(A: PoissonAlgebra, x: Poly, y: Poly) -> Poly:
    """Alternative form of Phi_p obtained from xy = ((x+y)^2 - (x-y)^2)/4."""
    p = A.p
    s, d = x + y, x - y
    xp, yp = A.frobenius(x), A.frobenius(y)
    first = lambda_p(A, A.mul(s, s), -A.mul(d, d)) * inverse(4, p)
    second = (A.mul(xp + yp, lambda_p(A, x, y))
              - A.mul(xp - yp, lambda_p(A, x, -y))) * inverse(2, p)
    return first + second


# -- p-maps -------------------------------------------------------------------

class PMap:
    """A p-map ``f -> f^{[p]}`` on a Poisson algebra."""

    name = "pmap"

    def __init__(self, algebra: PoissonAlgebra):
        self.algebra = algebra

    def __call__(self, f: Poly) -> Poly:
        raise NotImplementedError

    def generator_images(self) -> List[Poly]:
        return [self(g) for g in self.algebra.gens]


class MonomialPMap(PMap):
    """p-map fixed by its values on monomials and extended by Jacobson's rule

        pp(g + c m) = pp(g) + c^p pp(m) + Lambda_p(g, c m).

    Monomial values are memoised; the cache is guarded by a lock so a single
    instance can be shared between threads.
    """

    def __init__(self, algebra: PoissonAlgebra):
        super().__init__(algebra)
        self._cache: Dict[Monomial, Poly] = {}
        self._lock = threading.RLock()

    def compute_monomial(self, m: Monomial) -> Poly:
        raise NotImplementedError

    def monomial_value(self, m: Monomial) -> Poly:
        with self._lock:
            v = self._cache.get(m)
            if v is None:
                v = self.compute_monomial(m)
                self._cache[m] = v
            return v

    def fold(self, f: Poly, order: Optional[Sequence[Monomial]] = None) -> Poly:
        A = self.algebra
        p = A.p
        f = A.reduce(f)
        terms = f.sorted_terms() if order is None else [(m, f.terms[m]) for m in order]
        acc_elem = A.zero
        acc_val = A.zero
        for m, c in terms:
            piece = A.ring.monomial(m, c)
            val = self.monomial_value(m).scale(pow(c, p, p))
            if acc_elem:
                val = val + lambda_p(A, acc_elem, piece)
            acc_val = acc_val + val
            acc_elem = acc_elem + piece
        return acc_val

    def __call__(self, f: Poly) -> Poly:
        return self.fold(f)


class InductivePMap(MonomialPMap):
    """The p-map of a polynomial Poisson algebra determined by generator images.

    A monomial ``x_k * r`` (``k`` the smallest index occurring) gets

        pp(x_k r) = x_k^p pp(r) + r^p pp(x_k) + Phi_p(x_k, r).
    """

    name = "inductive"

    def __init__(self, algebra: PoissonAlgebra, images: Sequence[Poly]):
        super().__init__(algebra)
        self.images = [algebra.reduce(g) for g in images]

    def compute_monomial(self, m: Monomial) -> Poly:
        A = self.algebra
        deg = sum(m)
        if deg == 0:
            return A.zero
        k = next(i for i, e in enumerate(m) if e)
        if deg == 1:
            return self.images[k]
        rest = list(m)
        rest[k] -= 1
        rest = tuple(rest)
        xk = A.ring.gen(k)
        r = A.ring.monomial(rest)
        value = (A.mul(xk.frobenius(), self.monomial_value(rest))
                 + A.mul(r.frobenius(), self.images[k])
                 + phi_p(A, xk, r))
        return A.reduce(value)


class FormulaPMap(PMap):
    """A p-map given by a closed formula."""

    def __init__(self, algebra: PoissonAlgebra, func: Callable[[Poly], Poly], name: str):
        super().__init__(algebra)
        self.func = func
        self.name = name

    def __call__(self, f: Poly) -> Poly:
        return self.algebra.reduce(self.func(self.algebra.reduce(f)))


class QuotientPMap(MonomialPMap):
    """p-map induced on A/I by a p-map of A (I a restricted Poisson ideal)."""

    def __init__(self, algebra: PoissonAlgebra, base: PMap):
        super().__init__(algebra)
        self.base = base
        self.name = f"{base.name}/quotient"

    def compute_monomial(self, m: Monomial) -> Poly:
        return self.algebra.reduce(self.base(self.base.algebra.ring.monomial(m)))


class ShiftedPMap(PMap):
    """``f -> base(f) + shift(f)``."""

    def __init__(self, base: PMap, shift: Callable[[Poly], Poly], name: str):
        super().__init__(base.algebra)
        self.base = base
        self.shift = shift
        self.name = name

    def __call__(self, f: Poly) -> Poly:
        return self.algebra.reduce(self.base(f) + self.shift(f))


class RestrictedPoissonAlgebra:
    """A Poisson algebra together with a p-map."""

    def __init__(self, poisson: PoissonAlgebra, pmap: PMap, name: str = ""):
        if pmap.algebra is not poisson:
            raise ValueError("p-map belongs to a different algebra")
        self.poisson = poisson
        self.pmap = pmap
        self.name = name

    @property
    def ring(self):
        return self.poisson.ring

    @property
    def p(self) -> int:
        return self.poisson.p

    def pp(self, f: Poly) -> Poly:
        return self.pmap(f)

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"RestrictedPoissonAlgebra({label}{self.poisson!r}, pmap={self.pmap.name})"


def _gamma_list(A: PoissonAlgebra, gamma) -> List[Poly]:
    names = A.ring.names
    if isinstance(gamma, Mapping):
        images = []
        for i, n in enumerate(names):
            if n in gamma:
                v = gamma[n]
            elif i in gamma:
                v = gamma[i]
            else:
                raise ValueError(f"missing p-map image for generator {n!r}")
            images.append(A.element(v))
        return images
    images = [A.element(v) for v in gamma]
    if len(images) != len(names):
        raise ValueError("need one p-map image per generator")
    return images


def jacobson_check(A: PoissonAlgebra, images: Sequence[Poly], samples: int = 32,
                   seed: int = 0) -> Report:
    """Compare ad_{x_i}^p with ad_{gamma(x_i)} on generators and random elements.

    Both operators are derivations (D^p is one in characteristic p), so
    agreement on the generators already proves the identity; the random
    samples are an independent cross-check.
    """
    rng = random.Random(seed)
    report = Report("jacobson", seed)
    check = report.check("ad_p_generators")
    probes = list(A.gens) + [A.random_element(rng) for _ in range(samples)]
    for i, x in enumerate(A.gens):
        for g in probes:
            lhs = ad_power(A, x, A.p, g)
            rhs = A.bracket(images[i], g)
            check.record(lhs == rhs, generator=A.ring.names[i], element=g, lhs=lhs, rhs=rhs)
    return report


def build_pmap(A: PoissonAlgebra, gamma, check_jacobson: bool = True,
               samples: int = 32, seed: int = 0) -> InductivePMap:
    """p-map of a polynomial Poisson algebra with prescribed generator images.

    Raises
    ------
    JacobsonError
        If ``ad_{x_i}^p != ad_{gamma(x_i)}`` for some generator.
    """
    if A.quotient is not None:
        raise ValueError("build_pmap needs a polynomial algebra; "
                         "use quotient_restricted for quotients")
    images = _gamma_list(A, gamma)
    if check_jacobson:
        rep = jacobson_check(A, images, samples, seed)
        if not rep.passed:
            w = rep["ad_p_generators"].witnesses[0]
            raise JacobsonError(
                f"ad_{w['generator']}^p != ad_gamma on {w['element']}: "
                f"{w['lhs']} vs {w['rhs']}")
    return InductivePMap(A, images)


def pmap_eval(P: PMap, f: Poly) -> Poly:
    return P(f)


def restricted_algebra(A: PoissonAlgebra, gamma, name: str = "", **kw) -> RestrictedPoissonAlgebra:
    return RestrictedPoissonAlgebra(A, build_pmap(A, gamma, **kw), name)


# -- verification suites ------------------------------------------------------

def _exhaustive_basis(R: RestrictedPoissonAlgebra, degree: Optional[int]) -> List[Poly]:
    if degree is None:
        return []
    return R.poisson.basis(degree)


def verify_restricted_lie(R: RestrictedPoissonAlgebra, samples: int = 64, seed: int = 0,
                          degree_bound: Optional[int] = None,
                          basis: Optional[Sequence[Poly]] = None) -> Report:
    """Jacobson's three axioms for the p-map of ``R``.

    Random pairs are always checked.  With ``degree_bound`` (or an explicit
    ``basis``) the axioms are also checked on every pair of basis monomials,
    and axiom (1) additionally on sums of two basis elements.
    """
    A, pp, p = R.poisson, R.pmap, R.p
    rng = random.Random(seed)
    report = Report("lie", seed)
    c1 = report.check("ad_p")
    c2 = report.check("semilinear")
    c3 = report.check("additive")
    if basis is None:
        basis = _exhaustive_basis(R, degree_bound)
    basis = list(basis)

    def ad_check(f, g):
        lhs = ad_power(A, f, p, g)
        rhs = A.bracket(pp(f), g)
        c1.record(lhs == rhs, f=f, g=g, lhs=lhs, rhs=rhs)

    def add_check(f, g):
        lhs = pp(f + g)
        rhs = pp(f) + pp(g) + lambda_p(A, f, g)
        c3.record(lhs == rhs, f=f, g=g, lhs=lhs, rhs=rhs)

    def semi_check(f, lam):
        lhs = pp(f * lam)
        rhs = pp(f).scale(pow(lam, p, p))
        c2.record(lhs == rhs, f=f, scalar=lam, lhs=lhs, rhs=rhs)

    for _ in range(samples):
        f, g = A.random_element(rng), A.random_element(rng)
        ad_check(f, g)
        add_check(f, g)
        semi_check(f, rng.randrange(p))

    gens = A.gens
    for f in basis:
        for g in basis:
            ad_check(f, g)
            add_check(f, g)
        for lam in range(p):
            semi_check(f, lam)
    for f, g in itertools.combinations(basis, 2):
        for h in gens:
            ad_check(f + g, h)
    return report


def verify_frobenius_condition(R: RestrictedPoissonAlgebra, mode: str = "product",
                               samples: int = 64, seed: int = 0,
                               degree_bound: Optional[int] = 2,
                               basis: Optional[Sequence[Poly]] = None) -> Report:
    """Compatibility of the p-map with multiplication.

    ``mode="square"`` checks pp(f^2) = 2 f^p pp(f) (and the power rule
    pp(f^n) = n f^{(n-1)p} pp(f) for n = 2..5); ``mode="product"`` checks
    pp(fg) = f^p pp(g) + g^p pp(f) + Phi_p(f, g) on random pairs and on all
    pairs of basis monomials of degree <= ``degree_bound``.
    """
    if mode not in ("square", "product"):
        raise ValueError(f"unknown mode {mode!r}")
    A, pp, p = R.poisson, R.pmap, R.p
    rng = random.Random(seed)
    report = Report(f"frobenius-{mode}", seed)
    if basis is None:
        basis = _exhaustive_basis(R, degree_bound)
    basis = list(basis)

    if mode == "square":
        sq = report.check("square")
        elems = list(A.gens) + basis + [A.random_element(rng) for _ in range(samples)]
        elems = list(dict.fromkeys(elems))
        for f in elems:
            lhs = pp(A.mul(f, f))
            rhs = A.mul(A.frobenius(f), pp(f)) * 2
            sq.record(lhs == rhs, f=f, lhs=lhs, rhs=rhs)
        pw = report.check("power_rule")
        small = list(A.gens) + [A.random_element(rng, max_degree=2, max_terms=2)
                                for _ in range(min(samples, 8))]
        for f in small:
            fp = A.frobenius(f)
            ppf = pp(f)
            for n in range(2, 6):
                lhs = pp(A.power(f, n))
                rhs = A.mul(A.power(fp, n - 1), ppf) * n
                pw.record(lhs == rhs, f=f, n=n, lhs=lhs, rhs=rhs)
        return report

    prod = report.check("product")
    pairs = [(A.random_element(rng), A.random_element(rng)) for _ in range(samples)]
    pairs += [(f, g) for f in basis for g in basis]
    for f, g in pairs:
        lhs = pp(A.mul(f, g))
        rhs = (A.mul(A.frobenius(f), pp(g)) + A.mul(A.frobenius(g), pp(f))
               + phi_p(A, f, g))
        prod.record(lhs == rhs, f=f, g=g, lhs=lhs, rhs=rhs)
    return report


def verify_restricted(R: RestrictedPoissonAlgebra, samples: int = 64, seed: int = 0,
                      degree_bound: Optional[int] = 2,
                      basis: Optional[Sequence[Poly]] = None) -> Report:
    """Restricted Lie axioms plus both Frobenius modes in one report."""
    report = Report("restricted", seed)
    report.merge(verify_restricted_lie(R, samples, seed, degree_bound, basis))
    for mode in ("square", "product"):
        report.merge(verify_frobenius_condition(R, mode, samples, seed, degree_bound, basis))
    return report


def phi_identities(A: PoissonAlgebra, samples: int = 64, seed: int = 0) -> Report:
    """Cocycle-type identities satisfied by Phi_p and Lambda_p in any Poisson algebra."""
    rng = random.Random(seed)
    report = Report("phi-identities", seed)
    c1 = report.check("cocycle")
    c2 = report.check("central_factor")
    c3 = report.check("additivity_defect")
    p = A.p
    for _ in range(samples):
        f, g, h = (A.random_element(rng) for _ in range(3))
        r = (A.mul(A.frobenius(f), phi_p(A, g, h)) - phi_p(A, A.mul(f, g), h)
             + phi_p(A, f, A.mul(g, h)) - A.mul(A.frobenius(h), phi_p(A, f, g)))
        c1.record(not r, f=f, g=g, h=h, residual=r)

        lhs = phi_p(A, f, g + h) - phi_p(A, f, g) - phi_p(A, f, h)
        rhs = lambda_p(A, A.mul(f, g), A.mul(f, h)) - A.mul(A.frobenius(f), lambda_p(A, g, h))
        c3.record(lhs == rhs, f=f, g=g, h=h, lhs=lhs, rhs=rhs)

        # constants and p-th powers lie in the Poisson center
        for z in (A.ring.const(rng.randrange(1, p)), A.frobenius(A.random_element(rng, 1, 2))):
            base = A.mul(A.frobenius(z), phi_p(A, g, h))
            left = phi_p(A, A.mul(z, g), h)
            right = phi_p(A, g, A.mul(z, h))
            c2.record(base == left == right, z=z, g=g, h=h, lhs=base, mid=left, rhs=right)
    return report


# -- modifications and quotients ----------------------------------------------

def apply_derivation(A: PoissonAlgebra, images: Sequence[Poly], f: Poly) -> Poly:
    """psi0(f) = sum_i psi0(x_i) d_i f for the derivation with given generator images."""
    out = A.zero
    for i, img in enumerate(images):
        if img:
            out = out + A.mul(img, f.diff(i))
    return out


def modify_pmap(R: RestrictedPoissonAlgebra, derivation_images, samples: int = 32,
                seed: int = 0) -> RestrictedPoissonAlgebra:
    """Shift the p-map by the Frobenius derivation f -> psi0(f)^p.

    Raises
    ------
    CentralityError
        If a sampled value psi0(f)^p fails to be Poisson-central.
    """
    A = R.poisson
    images = _gamma_list(A, derivation_images)

    def shift(f):
        return A.frobenius(apply_derivation(A, images, f))

    rng = random.Random(seed)
    probes = list(A.gens) + [A.random_element(rng) for _ in range(samples)]
    for f in probes:
        z = shift(f)
        for g in A.gens:
            b = A.bracket(z, g)
            if b:
                raise CentralityError(f"psi({f})^p = {z} is not central: {{., {g}}} = {b}")
    new = ShiftedPMap(R.pmap, shift, f"{R.pmap.name}+frobenius-derivation")
    return RestrictedPoissonAlgebra(A, new, R.name + "+psi" if R.name else "")


def semilinear_shift(R: RestrictedPoissonAlgebra, central_images) -> RestrictedPoissonAlgebra:
    """Shift the p-map by the semilinear map f -> sum_i [x_i-coefficient of f] z_i.

    With central ``z_i`` this keeps the restricted Lie axioms but, unless the
    map happens to be a Frobenius derivation, breaks pp(f^2) = 2 f^p pp(f).
    """
    A = R.poisson
    images = _gamma_list(A, central_images)
    units = [A.ring.unit(i) for i in range(A.ring.nvars)]

    def shift(f):
        out = A.zero
        for u, z in zip(units, images):
            c = f.coeff(u)
            if c:
                out = out + z.scale(c)
        return out

    new = ShiftedPMap(R.pmap, shift, f"{R.pmap.name}+semilinear")
    return RestrictedPoissonAlgebra(A, new, R.name + "+semilinear" if R.name else "")


def quotient_restricted(R: RestrictedPoissonAlgebra, ideal: MonomialIdeal) -> RestrictedPoissonAlgebra:
    """Restricted quotient A/I.

    Raises
    ------
    IdealError
        If I is not Poisson-closed, or pp(m) is not in I for a generator m.
    """
    A = R.poisson
    if ideal.ring != A.ring:
        raise ValueError("ideal lives in a different ring")
    gens = list(ideal.generators)
    if A.quotient is not None:
        gens += list(A.quotient.generators)
    full = MonomialIdeal(A.ring, gens)
    for m in ideal.generators:
        mono = A.ring.monomial(m)
        for i, x in enumerate(A.gens):
            b = A.bracket(x, mono)
            if b not in full:
                raise IdealError(f"ideal not Poisson-closed: {{{A.ring.names[i]}, {mono}}} = {b}")
        img = R.pmap(mono)
        if img not in full:
            raise IdealError(f"ideal not restricted: pp({mono}) = {img} is not in the ideal")
    Q = PoissonAlgebra(A.ring, A.table, full)
    return RestrictedPoissonAlgebra(Q, QuotientPMap(Q, R.pmap),
                                    R.name + "/I" if R.name else "")
