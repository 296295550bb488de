"""Poisson brackets on polynomial algebras and their monomial quotients.

A bracket is given by its values on pairs of generators; it is extended to
all polynomials as the biderivation

    {f, g} = sum_{i<j} {x_i, x_j} (d_i f d_j g - d_j f d_i g).
"""

from __future__ import annotations

import itertools
import random
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .algebra import MonomialIdeal, Poly, PolyRing
from .report import Report


class InvalidAlgebraError(ValueError):
    """Raised when a bracket table does not define a Poisson algebra."""


class PoissonAlgebra:
    """Polynomial Poisson algebra, optionally modulo a monomial ideal.

    Parameters
    ----------
    ring : PolyRing
    table : mapping (i, j) -> Poly
        Values of ``{x_i, x_j}``.  Keys with ``i > j`` are accepted and
        converted by antisymmetry; missing pairs are zero.
    quotient : MonomialIdeal, optional
    validate : bool
        Check the Jacobi identity on generator triples and bracket-closure
        of the quotient ideal.  Disable only to build deliberately broken
        algebras for negative tests.
    """

    def __init__(self, ring: PolyRing, table: Mapping[Tuple[int, int], Poly],
                 quotient: Optional[MonomialIdeal] = None, validate: bool = True):
        self.ring = ring
        self.p = ring.p
        if quotient is not None and not quotient.generators:
            quotient = None
        self.quotient = quotient
        self.table: Dict[Tuple[int, int], Poly] = {}
        for (i, j), v in table.items():
            if isinstance(v, int):
                v = ring.const(v)
            if v.ring != ring:
                raise InvalidAlgebraError(f"bracket value {v} lives in the wrong ring")
            if i == j:
                if v:
                    raise InvalidAlgebraError(f"{{x_{i}, x_{i}}} must vanish")
                continue
            if i > j:
                i, j, v = j, i, -v
            v = self.reduce(v)
            if v:
                self.table[(i, j)] = v
        if validate:
            if quotient is not None:
                self._check_ideal_closed()
            self._check_jacobi()

    # -- construction helpers ---------------------------------------------
    @classmethod
    def from_strings(cls, p: int, names: Sequence[str], brackets: Mapping[str, str],
                     quotient: Iterable[str] = (), validate: bool = True) -> "PoissonAlgebra":
        ring = PolyRing(p, names)
        table = {}
        for key, value in brackets.items():
            a, b = (s.strip() for s in key.split(","))
            table[(ring.index(a), ring.index(b))] = ring.parse(value)
        ideal = None
        quotient = list(quotient)
        if quotient:
            ideal = MonomialIdeal.from_polys(ring, [ring.parse(q) for q in quotient])
        return cls(ring, table, ideal, validate=validate)

    def _check_ideal_closed(self):
        ambient = PoissonAlgebra(self.ring, self.table, validate=False)
        for m in self.quotient.generators:
            mono = self.ring.monomial(m)
            for i in range(self.ring.nvars):
                b = ambient.bracket(self.ring.gen(i), mono)
                if b not in self.quotient:
                    raise InvalidAlgebraError(
                        f"ideal not Poisson-closed: {{{self.ring.names[i]}, {mono}}} = {b}")

    def _check_jacobi(self):
        gens = self.gens
        for a, b, c in itertools.combinations(range(len(gens)), 3):
            r = jacobiator(self, gens[a], gens[b], gens[c])
            if r:
                n = self.ring.names
                raise InvalidAlgebraError(
                    f"Jacobi fails on ({n[a]}, {n[b]}, {n[c]}): residual {r}")

    # -- basic structure --------------------------------------------------
    @property
    def names(self):
        return self.ring.names

    @property
    def gens(self) -> List[Poly]:
        return [self.reduce(g) for g in self.ring.gens]

    @property
    def zero(self) -> Poly:
        return self.ring.zero

    @property
    def one(self) -> Poly:
        return self.reduce(self.ring.one)

    def generator_bracket(self, i: int, j: int) -> Poly:
        if i == j:
            return self.ring.zero
        if i < j:
            return self.table.get((i, j), self.ring.zero)
        return -self.table.get((j, i), self.ring.zero)

    def reduce(self, f: Poly) -> Poly:
        if self.quotient is None:
            return f
        return self.quotient.reduce(f)

    def element(self, f) -> Poly:
        if isinstance(f, str):
            f = self.ring.parse(f)
        elif isinstance(f, int):
            f = self.ring.const(f)
        self._own(f)
        return self.reduce(f)

    def _own(self, f: Poly):
        if not isinstance(f, Poly) or f.ring != self.ring:
            raise ValueError("element does not belong to this algebra")

    def mul(self, f: Poly, g: Poly) -> Poly:
        return self.reduce(f * g)

    def power(self, f: Poly, k: int) -> Poly:
        if self.quotient is None:
            return f ** k
        result = self.one
        for _ in range(k):
            result = self.mul(result, f)
        return result

    def frobenius(self, f: Poly) -> Poly:
        return self.reduce(f.frobenius())

    def random_element(self, rng: random.Random, max_degree: int = 3,
                       max_terms: int = 4) -> Poly:
        while True:
            f = self.reduce(self.ring.random_element(rng, max_degree, max_terms))
            if f:
                return f

    def basis(self, degree: int) -> List[Poly]:
        """Monomial basis elements of degree <= ``degree`` (standard monomials)."""
        monos = self.ring.monomials_up_to(degree)
        if self.quotient is not None:
            monos = [m for m in monos if not self.quotient.contains_monomial(m)]
        return [self.ring.monomial(m) for m in monos]

    def finite_basis(self) -> Optional[List[Poly]]:
        """The full monomial basis when the quotient is finite-dimensional."""
        if self.quotient is None:
            return None
        bounds = []
        for i in range(self.ring.nvars):
            pure = [g[i] for g in self.quotient.generators
                    if all(e == 0 for k, e in enumerate(g) if k != i)]
            if not pure:
                return None
            bounds.append(min(pure))
        return self.basis(sum(b - 1 for b in bounds))

    def is_constant_bracket(self) -> bool:
        return all(v.is_constant() for v in self.table.values())

    def is_linear_bracket(self) -> bool:
        return all(all(sum(m) == 1 for m in v.terms) for v in self.table.values())

    def __repr__(self):
        n = self.ring.names
        entries = ", ".join(f"{{{n[i]},{n[j]}}}={v}" for (i, j), v in sorted(self.table.items()))
        q = f" / {self.quotient!r}" if self.quotient else ""
        return f"PoissonAlgebra(p={self.p}, [{', '.join(n)}], {entries}{q})"

    # -- the bracket -------------------------------------------------------
    def bracket(self, f: Poly, g: Poly) -> Poly:
        self._own(f)
        self._own(g)
        if not self.table or f.is_constant() or g.is_constant():
            return self.ring.zero
        df: Dict[int, Poly] = {}
        dg: Dict[int, Poly] = {}

        def d(cache, h, i):
            if i not in cache:
                cache[i] = h.diff(i)
            return cache[i]

        result = self.ring.zero
        for (i, j), c in self.table.items():
            fi, gj = d(df, f, i), d(dg, g, j)
            fj, gi = d(df, f, j), d(dg, g, i)
            term = fi * gj - fj * gi
            if term:
                result = result + c * term
        return self.reduce(result)

    def ad(self, f: Poly):
        return lambda g: self.bracket(f, g)


def bracket(A: PoissonAlgebra, f: Poly, g: Poly) -> Poly:
    return A.bracket(f, g)


def nested_bracket(A: PoissonAlgebra, args: Sequence[Poly]) -> Poly:
    """Right-nested bracket {f_1, {f_2, ..., {f_{n-1}, f_n}}}."""
    if len(args) < 2:
        raise ValueError("nested bracket needs at least two arguments")
    acc = args[-1]
    for f in reversed(args[:-1]):
        acc = A.bracket(f, acc)
    return acc


def ad_power(A: PoissonAlgebra, x: Poly, k: int, y: Poly) -> Poly:
    if k < 0:
        raise ValueError("k must be non-negative")
    for _ in range(k):
        if not y:
            break
        y = A.bracket(x, y)
    return y


def jacobiator(A: PoissonAlgebra, a: Poly, b: Poly, c: Poly) -> Poly:
    return (A.bracket(a, A.bracket(b, c)) + A.bracket(b, A.bracket(c, a))
            + A.bracket(c, A.bracket(a, b)))


def verify_poisson(A: PoissonAlgebra, samples: int = 64, seed: int = 0) -> Report:
    """Antisymmetry, Jacobi and Leibniz on generator triples and random triples."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    report = Report("poisson", seed)
    anti = report.check("antisymmetry")
    jac = report.check("jacobi")
    leib = report.check("leibniz")

    gens = A.gens
    triples = list(itertools.product(gens, repeat=3))
    triples += [tuple(A.random_element(rng) for _ in range(3)) for _ in range(samples)]
    for f, g, h in triples:
        fg = A.bracket(f, g)
        gf = A.bracket(g, f)
        anti.record(fg == -gf, f=f, g=g, lhs=fg, rhs=-gf)
        r = jacobiator(A, f, g, h)
        jac.record(not r, f=f, g=g, h=h, residual=r, expected=0)
        lhs = A.bracket(A.mul(f, g), h)
        rhs = A.mul(f, A.bracket(g, h)) + A.mul(g, A.bracket(f, h))
        leib.record(lhs == rhs, f=f, g=g, h=h, lhs=lhs, rhs=rhs)
    return report
