"""Restricted Lie algebras, S(L) and s(L), tensor products, Hopf checks and
the catalog of worked examples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import Monomial, MonomialIdeal, Poly, PolyRing, check_char
from .poisson import PoissonAlgebra
from .quantize import StarAlgebra
from .report import Report
from .restricted import (FormulaPMap, MonomialPMap, RestrictedPoissonAlgebra,
                         build_pmap, lambda_from_bracket, quotient_restricted)


# -- finite-dimensional restricted Lie algebras -----------------------------------

class LieVector:
    """Coordinate vector in a finite-dimensional Lie algebra."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords: Sequence[int]):
        self.p = p
        self.coords = tuple(c % p for c in coords)

    def __add__(self, other: "LieVector") -> "LieVector":
        return LieVector(self.p, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "LieVector") -> "LieVector":
        return LieVector(self.p, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "LieVector":
        return LieVector(self.p, [-a for a in self.coords])

    def __mul__(self, c: int) -> "LieVector":
        return LieVector(self.p, [a * c for a in self.coords])

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        return isinstance(other, LieVector) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"LieVector{self.coords}"


class RestrictedLieAlgebra:
    """Restricted Lie algebra given by structure constants.

    Parameters
    ----------
    p : int
    basis : list of str
    structure : mapping (i, j) -> sequence of ints
        Coordinates of ``[x_i, x_j]``.  Pairs with ``i > j`` are converted by
        antisymmetry; missing pairs are zero.
    pmap : mapping i -> sequence of ints
        Coordinates of ``x_i^{[p]}``; missing entries are zero.

    Examples
    --------
    >>> L = sl2(3)
    >>> L.bracket(L.basis_vector(1), L.basis_vector(0))
    LieVector(2, 0, 0)
    """

    def __init__(self, p: int, basis: Sequence[str], structure: Mapping[Tuple[int, int], Sequence[int]],
                 pmap: Optional[Mapping[int, Sequence[int]]] = None):
        check_char(p)
        self.p = p
        self.basis = list(basis)
        n = self.dim = len(self.basis)
        self.structure: Dict[Tuple[int, int], LieVector] = {}
        for (i, j), vec in structure.items():
            if len(vec) != n:
                raise ValueError(f"structure vector for ({i}, {j}) has wrong length")
            v = LieVector(p, vec)
            if i == j:
                if v:
                    raise ValueError("[x_i, x_i] must vanish")
                continue
            if i > j:
                i, j, v = j, i, -v
            if v:
                self.structure[(i, j)] = v
        pmap = pmap or {}
        self.images = [LieVector(p, pmap.get(i, [0] * n)) for i in range(n)]

    def basis_vector(self, i: int) -> LieVector:
        return LieVector(self.p, [1 if k == i else 0 for k in range(self.dim)])

    @property
    def zero(self) -> LieVector:
        return LieVector(self.p, [0] * self.dim)

    def vector(self, coords: Sequence[int]) -> LieVector:
        return LieVector(self.p, coords)

    def basis_bracket(self, i: int, j: int) -> LieVector:
        if i == j:
            return self.zero
        if i < j:
            return self.structure.get((i, j), self.zero)
        return -self.structure.get((j, i), self.zero)

    def bracket(self, u: LieVector, v: LieVector) -> LieVector:
        out = [0] * self.dim
        for i, a in enumerate(u.coords):
            if not a:
                continue
            for j, b in enumerate(v.coords):
                if not b or i == j:
                    continue
                w = self.basis_bracket(i, j)
                for k, c in enumerate(w.coords):
                    out[k] += a * b * c
        return LieVector(self.p, out)

    def lambda_p(self, u: LieVector, v: LieVector) -> LieVector:
        return lambda_from_bracket(self.bracket, u, v, self.p)

    def pp(self, u: LieVector) -> LieVector:
        """p-map extended from the basis by Jacobson's rule, folding coordinates in order."""
        p = self.p
        acc, val = self.zero, self.zero
        for i, c in enumerate(u.coords):
            if not c:
                continue
            piece = self.basis_vector(i) * c
            val = val + self.images[i] * pow(c, p, p)
            if acc:
                val = val + self.lambda_p(acc, piece)
            acc = acc + piece
        return val

    def ad_power(self, u: LieVector, k: int, v: LieVector) -> LieVector:
        for _ in range(k):
            v = self.bracket(u, v)
        return v

    def random_element(self, rng: random.Random) -> LieVector:
        return LieVector(self.p, [rng.randrange(self.p) for _ in range(self.dim)])

    def __repr__(self):
        return f"RestrictedLieAlgebra(p={self.p}, basis={self.basis})"


def verify_restricted_lie_fd(L: RestrictedLieAlgebra, samples: int = 32, seed: int = 0) -> Report:
    """Jacobi and Jacobson's axioms in a finite-dimensional restricted Lie algebra.

    Jacobi and ``ad_x^p = ad_{x^[p]}`` are checked on all basis triples and
    pairs, the latter also for random vectors against every basis vector.
    Semilinearity uses every scalar; additivity uses all basis pairs and
    random pairs.
    """
    rng = random.Random(seed)
    p = L.p
    report = Report("lie-fd", seed)
    jac = report.check("jacobi")
    c1 = report.check("ad_p")
    c2 = report.check("semilinear")
    c3 = report.check("additive")
    basis = [L.basis_vector(i) for i in range(L.dim)]
    for a, b, c in itertools.product(range(L.dim), repeat=3):
        u, v, w = basis[a], basis[b], basis[c]
        r = (L.bracket(u, L.bracket(v, w)) + L.bracket(v, L.bracket(w, u))
             + L.bracket(w, L.bracket(u, v)))
        jac.record(not r, x=L.basis[a], y=L.basis[b], z=L.basis[c], residual=r)
    randoms = [L.random_element(rng) for _ in range(samples)]
    for u in basis + randoms:
        pu = L.pp(u)
        for v in basis:
            lhs, rhs = L.ad_power(u, p, v), L.bracket(pu, v)
            c1.record(lhs == rhs, u=u, v=v, lhs=lhs, rhs=rhs)
    for u in basis + randoms:
        for lam in range(p):
            lhs, rhs = L.pp(u * lam), L.pp(u) * pow(lam, p, p)
            c2.record(lhs == rhs, u=u, scalar=lam, lhs=lhs, rhs=rhs)
    pairs = list(itertools.product(basis, repeat=2))
    pairs += [(L.random_element(rng), L.random_element(rng)) for _ in range(samples)]
    for u, v in pairs:
        lhs = L.pp(u + v)
        rhs = L.pp(u) + L.pp(v) + L.lambda_p(u, v)
        c3.record(lhs == rhs, u=u, v=v, lhs=lhs, rhs=rhs)
    return report


def _linear(ring: PolyRing, vec: LieVector) -> Poly:
    return ring.from_dict({ring.unit(k): c for k, c in enumerate(vec.coords) if c})


def _require_valid(L: RestrictedLieAlgebra):
    rep = verify_restricted_lie_fd(L, samples=8)
    if not rep.passed:
        raise ValueError(f"not a restricted Lie algebra: {rep.failed_checks()}")


def symmetric_poisson(L: RestrictedLieAlgebra, validate: bool = True) -> RestrictedPoissonAlgebra:
    """S(L): the polynomial algebra on a basis of L with the induced restricted structure."""
    if validate:
        _require_valid(L)
    ring = PolyRing(L.p, L.basis)
    table = {key: _linear(ring, v) for key, v in L.structure.items()}
    A = PoissonAlgebra(ring, table)
    gamma = [_linear(ring, v) for v in L.images]
    return RestrictedPoissonAlgebra(A, build_pmap(A, gamma, samples=8), "S(L)")


def truncated_symmetric(L: RestrictedLieAlgebra, validate: bool = True) -> RestrictedPoissonAlgebra:
    """s(L) = S(L) / (x_i^p)."""
    S = symmetric_poisson(L, validate)
    ring = S.ring
    ideal = MonomialIdeal(ring, [ring.unit(i, L.p) for i in range(ring.nvars)])
    R = quotient_restricted(S, ideal)
    R.name = "s(L)"
    return R


# -- tensor products ------------------------------------------------------------

def _fresh_names(left: Sequence[str], right: Sequence[str]) -> List[str]:
    taken = set(left)
    out = []
    for n in right:
        new, k = n, 2
        while new in taken:
            new = f"{n}_{k}"
            k += 1
        taken.add(new)
        out.append(new)
    return out


class TensorPMap(MonomialPMap):
    """pp(a (x) b) = pp(a) (x) b^p + a^p (x) pp(b) on monomials, then the usual fold."""

    name = "tensor"

    def __init__(self, algebra: PoissonAlgebra, T: "TensorProduct"):
        super().__init__(algebra)
        self.T = T

    def compute_monomial(self, m: Monomial) -> Poly:
        T = self.T
        a = T.left.ring.monomial(m[:T.n_left])
        b = T.right.ring.monomial(m[T.n_left:])
        ea, eb = T.embed_left(a), T.embed_right(b)
        value = (T.embed_left(T.left.pp(a)) * eb.frobenius()
                 + ea.frobenius() * T.embed_right(T.right.pp(b)))
        return self.algebra.reduce(value)


class TensorProduct(RestrictedPoissonAlgebra):
    """A (x) B with cross brackets zero.

    Variables of ``B`` whose names clash with those of ``A`` are renamed
    ``name_2``, ``name_3``, ...
    """

    def __init__(self, left: RestrictedPoissonAlgebra, right: RestrictedPoissonAlgebra):
        if left.p != right.p:
            raise ValueError(f"characteristic mismatch: {left.p} vs {right.p}")
        self.left, self.right = left, right
        self.n_left = left.ring.nvars
        names = list(left.ring.names) + _fresh_names(left.ring.names, right.ring.names)
        ring = PolyRing(left.p, names)
        self._zl = (0,) * right.ring.nvars
        self._zr = (0,) * self.n_left
        table = {}
        for (i, j), v in left.poisson.table.items():
            table[(i, j)] = self._embed(v, ring, True)
        for (i, j), v in right.poisson.table.items():
            table[(i + self.n_left, j + self.n_left)] = self._embed(v, ring, False)
        gens = []
        for src, is_left in ((left.poisson.quotient, True), (right.poisson.quotient, False)):
            if src is not None:
                gens += [m + self._zl if is_left else self._zr + m for m in src.generators]
        ideal = MonomialIdeal(ring, gens) if gens else None
        A = PoissonAlgebra(ring, table, ideal, validate=False)
        super().__init__(A, TensorPMap(A, self), f"({left.name})x({right.name})")

    def _embed(self, f: Poly, ring: PolyRing, is_left: bool) -> Poly:
        if is_left:
            return ring.from_dict({m + self._zl: c for m, c in f.terms.items()})
        return ring.from_dict({self._zr + m: c for m, c in f.terms.items()})

    def embed_left(self, f: Poly) -> Poly:
        """a -> a (x) 1."""
        return self._embed(f, self.ring, True)

    def embed_right(self, f: Poly) -> Poly:
        """b -> 1 (x) b."""
        return self._embed(f, self.ring, False)


def tensor_product(A: RestrictedPoissonAlgebra, B: RestrictedPoissonAlgebra) -> TensorProduct:
    return TensorProduct(A, B)


def verify_tensor(T: TensorProduct, samples: int = 16, seed: int = 0) -> Report:
    """pp on pure tensors and on the images of both factors."""
    rng = random.Random(seed)
    report = Report("tensor", seed)
    pure = report.check("pure_tensor")
    side = report.check("factor_images")
    A, B = T.left, T.right
    lefts = list(A.poisson.gens) + [A.poisson.random_element(rng, 2, 3) for _ in range(samples)]
    rights = list(B.poisson.gens) + [B.poisson.random_element(rng, 2, 3) for _ in range(samples)]
    for a, b in zip(lefts, rights):
        ea, eb = T.embed_left(a), T.embed_right(b)
        lhs = T.pp(T.poisson.mul(ea, eb))
        rhs = T.poisson.reduce(T.embed_left(A.pp(a)) * T.embed_right(B.poisson.frobenius(b))
                               + T.embed_left(A.poisson.frobenius(a)) * T.embed_right(B.pp(b)))
        pure.record(lhs == rhs, a=a, b=b, lhs=lhs, rhs=rhs)
    for a in lefts:
        lhs, rhs = T.pp(T.embed_left(a)), T.embed_left(A.pp(a))
        side.record(lhs == rhs, a=a, side="left", lhs=lhs, rhs=rhs)
    for b in rights:
        lhs, rhs = T.pp(T.embed_right(b)), T.embed_right(B.pp(b))
        side.record(lhs == rhs, b=b, side="right", lhs=lhs, rhs=rhs)
    return report


# -- Hopf structure of S(L) and s(L) ---------------------------------------------

def hopf_check(H: RestrictedPoissonAlgebra, degree_bound: int = 2) -> Report:
    """Coproduct, counit and antipode of a primitively generated H.

    Delta(x) = x (x) 1 + 1 (x) x, eps(x) = 0 and S(x) = -x on generators,
    each extended multiplicatively.  All checks run over every pair of
    basis monomials of degree <= ``degree_bound``.  Compatibility of S with
    the p-map is recorded as informational.
    """
    A = H.poisson
    HH = tensor_product(H, H)
    TA = HH.poisson
    report = Report("hopf", None)
    report.info["degree_bound"] = degree_bound
    n = A.ring.nvars
    delta_images = [HH.embed_left(g) + HH.embed_right(g) for g in A.ring.gens]
    anti_images = [-g for g in A.ring.gens]

    def delta(f):
        return TA.reduce(f.subs(delta_images))

    def eps(f):
        return f.constant_term()

    def antipode(f):
        return A.reduce(f.subs(anti_images))

    basis = A.basis(degree_bound)
    db = report.check("delta_bracket")
    dp = report.check("delta_pmap")
    eb = report.check("counit_bracket")
    ep = report.check("counit_pmap")
    sb = report.check("antipode_bracket")
    sp = report.check("antipode_pmap", informational=True)
    for a in basis:
        lhs, rhs = delta(H.pp(a)), HH.pp(delta(a))
        dp.record(lhs == rhs, a=a, lhs=lhs, rhs=rhs)
        v = eps(H.pp(a))
        ep.record(v == 0, a=a, value=v)
        lhs, rhs = antipode(H.pp(a)), H.pp(antipode(a))
        sp.record(lhs == rhs, a=a, lhs=lhs, rhs=rhs)
        for b in basis:
            ab = A.bracket(a, b)
            lhs, rhs = delta(ab), TA.bracket(delta(a), delta(b))
            db.record(lhs == rhs, a=a, b=b, lhs=lhs, rhs=rhs)
            eb.record(eps(ab) == 0, a=a, b=b, value=eps(ab))
            lhs, rhs = antipode(ab), A.bracket(antipode(b), antipode(a))
            sb.record(lhs == rhs, a=a, b=b, lhs=lhs, rhs=rhs)
    report.info["generators"] = n
    return report


# -- closed-form p-maps -----------------------------------------------------------

def _partials(f: Poly, maxorder: int) -> Dict[Tuple[int, int], Poly]:
    """Ordinary partials f_{x^a y^b} for a + b <= maxorder, in two variables."""
    out = {(0, 0): f}
    for total in range(1, maxorder + 1):
        for a in range(total + 1):
            b = total - a
            if a:
                out[(a, b)] = out[(a - 1, b)].diff(0)
            else:
                out[(a, b)] = out[(a, b - 1)].diff(1)
    return out


def closed_form_p3(f: Poly) -> Poly:
    """f_x^2 f_yy + f_y^2 f_xx + f_x f_y f_xy for {x, y} = 1 at p = 3."""
    d = _partials(f, 2)
    fx, fy = d[(1, 0)], d[(0, 1)]
    return fx * fx * d[(0, 2)] + fy * fy * d[(2, 0)] + fx * fy * d[(1, 1)]


def closed_form_p5(f: Poly) -> Poly:
    """The quartic-in-derivatives formula for {x, y} = 1 at p = 5."""
    d = _partials(f, 4)
    f1, f2 = d[(1, 0)], d[(0, 1)]
    f11, f12, f22 = d[(2, 0)], d[(1, 1)], d[(0, 2)]
    f111, f112, f122, f222 = d[(3, 0)], d[(2, 1)], d[(1, 2)], d[(0, 3)]
    f1111, f1112, f1122, f1222, f2222 = d[(4, 0)], d[(3, 1)], d[(2, 2)], d[(1, 3)], d[(0, 4)]
    out = (f1 ** 4 * f2222 + f1 ** 3 * f2 * f1222 + f1 ** 2 * f2 ** 2 * f1122
           + f1 * f2 ** 3 * f1112 + f2 ** 4 * f1111)
    out = out + f12 * (f1 ** 3 * f222 - f1 ** 2 * f2 * f122 - f1 * f2 ** 2 * f112 + f2 ** 3 * f111)
    out = out - f1 * f22 * (f1 ** 2 * f122 - 2 * f1 * f2 * f112 + f2 ** 2 * f111)
    out = out - f2 * f11 * (f2 ** 2 * f112 - 2 * f2 * f1 * f122 + f1 ** 2 * f222)
    out = out + 2 * (f12 * f12 - f11 * f22) * (f1 ** 2 * f22 - 2 * f1 * f2 * f12 + f2 ** 2 * f11)
    return out


def closed_form_affine(f: Poly, lam: int, mu: int, nu: int) -> Poly:
    """p = 3 p-map for {x, y} = phi = lam x + mu y + nu."""
    ring = f.ring
    x, y = ring.gens
    phi = x * lam + y * mu + nu
    d = _partials(f, 2)
    fx, fy = d[(1, 0)], d[(0, 1)]
    core = fx * fx * d[(0, 2)] + fy * fy * d[(2, 0)] + fx * fy * d[(1, 1)]
    return (phi * fx * fy * fy * lam + phi * fx * fx * fy * mu + phi * phi * core
            + y * fy ** 3 * (lam * lam) + x * fx ** 3 * (mu * mu))


def closed_form_constant(f: Poly, c: Sequence[Sequence[int]]) -> Poly:
    """p = 3 p-map sum_{ijkl} c_ij c_kl f_i f_k f_jl for {x_i, x_j} = 2 c_ij."""
    n = f.ring.nvars
    first = [f.diff(i) for i in range(n)]
    second = [[first[j].diff(l) for l in range(n)] for j in range(n)]
    out = f.ring.zero
    for i, j, k, l in itertools.product(range(n), repeat=4):
        coef = c[i][j] * c[k][l]
        if coef % f.ring.p:
            out = out + first[i] * first[k] * second[j][l] * coef
    return out


# -- catalog ------------------------------------------------------------------------

def _classical(p: int, name: str, formula: Callable[[Poly], Poly]) -> RestrictedPoissonAlgebra:
    ring = PolyRing(p, ["x", "y"])
    A = PoissonAlgebra(ring, {(0, 1): ring.one})
    return RestrictedPoissonAlgebra(A, FormulaPMap(A, formula, name), name)


def _fixed_p(name: str, p: Optional[int], required: int) -> int:
    if p is not None and p != required:
        raise ValueError(f"catalog entry {name!r} is defined only for p = {required}")
    return required


def sl2(p: int = 3) -> RestrictedLieAlgebra:
    """sl_2 with basis (e, h, f): [h, e] = 2e, [h, f] = -2f, [e, f] = h."""
    return RestrictedLieAlgebra(p, ["e", "h", "f"],
                                {(1, 0): [2, 0, 0], (1, 2): [0, 0, -2], (0, 2): [0, 1, 0]},
                                {1: [0, 1, 0]})


def solvable2(p: int = 3) -> RestrictedLieAlgebra:
    """Two-dimensional L with [x, y] = x, x^[p] = 0, y^[p] = y."""
    return RestrictedLieAlgebra(p, ["x", "y"], {(0, 1): [1, 0]}, {1: [0, 1]})


DEFAULT_CONSTANT_C = ((0, 1, 2), (2, 0, 1), (1, 2, 0))


def _constant_matrix(n: int, c) -> List[List[int]]:
    if c is None:
        if n == 3:
            c = DEFAULT_CONSTANT_C
        else:
            c = [[(1 if i < j else -1) if i != j else 0 for j in range(n)] for i in range(n)]
    c = [[v % 3 for v in row] for row in c]
    if len(c) != n or any(len(r) != n for r in c):
        raise ValueError(f"c must be {n}x{n}")
    for i in range(n):
        for j in range(n):
            if (c[i][j] + c[j][i]) % 3:
                raise ValueError("c must be antisymmetric")
    return c


def catalog(name: str, p: Optional[int] = None, **params) -> RestrictedPoissonAlgebra:
    """Look up a named restricted Poisson algebra.

    Parameters
    ----------
    name : str
        One of :data:`CATALOG_NAMES`.
    p : int, optional
        Characteristic.  Entries with a fixed characteristic reject any
        other value; the rest default to 3.
    **params
        ``lam, mu, nu`` for ``affine-bracket-p3``; ``n`` and ``c`` for
        ``constant-bracket-n``; ``n`` for ``truncated-B2n``.
    """
    if name not in CATALOG:
        raise ValueError(f"unknown catalog name {name!r}; choose from {', '.join(CATALOG_NAMES)}")
    if p is not None:
        check_char(p)
    return CATALOG[name].build(p, **params)


def _cat_classical2(p=None):
    return _classical(_fixed_p("classical2", p, 3), "classical2", closed_form_p3)


def _cat_classical2_p5(p=None):
    return _classical(_fixed_p("classical2-p5", p, 5), "classical2-p5", closed_form_p5)


def _cat_affine(p=None, lam=1, mu=1, nu=1):
    p = _fixed_p("affine-bracket-p3", p, 3)
    ring = PolyRing(p, ["x", "y"])
    x, y = ring.gens
    A = PoissonAlgebra(ring, {(0, 1): x * lam + y * mu + nu})
    pm = FormulaPMap(A, lambda f: closed_form_affine(f, lam, mu, nu), "affine")
    return RestrictedPoissonAlgebra(A, pm, "affine-bracket-p3")


def _cat_constant(p=None, n=3, c=None):
    p = _fixed_p("constant-bracket-n", p, 3)
    c = _constant_matrix(n, c)
    ring = PolyRing(p, [f"x{i + 1}" for i in range(n)])
    table = {(i, j): ring.const(2 * c[i][j]) for i in range(n) for j in range(i + 1, n)}
    A = PoissonAlgebra(ring, table)
    pm = FormulaPMap(A, lambda f: closed_form_constant(f, c), "constant-bracket")
    return RestrictedPoissonAlgebra(A, pm, f"constant-bracket-{n}")


def _cat_trivial_extension(p=None):
    p = 3 if p is None else p
    A = PoissonAlgebra.from_strings(p, ["x", "y"], {"x,y": "x"}, ["x^2", "x*y", "y^2"])
    ux, uy = A.ring.unit(0), A.ring.unit(1)

    def formula(f):
        l1, l2 = f.coeff(ux), f.coeff(uy)
        return A.ring.from_dict({ux: l1, uy: l2}).scale(pow(l2, p - 1, p))

    return RestrictedPoissonAlgebra(A, FormulaPMap(A, formula, "trivial-extension"),
                                    "trivial-extension")


def _cat_truncated_b2n(p=None, n=1):
    p = 3 if p is None else p
    ring = PolyRing(p, [f"x{i + 1}" for i in range(2 * n)])
    c = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        c[i][n + i] = 1
    S = StarAlgebra(ring, c, "onesided")
    A = S.classical_limit()

    def quantized(f):
        if f.is_constant():
            return ring.zero
        return S.star_power(f, p)[p - 1]

    R = RestrictedPoissonAlgebra(A, FormulaPMap(A, quantized, "quantization"), "B2n")
    ideal = MonomialIdeal(ring, [ring.unit(i, p) for i in range(2 * n)])
    Q = quotient_restricted(R, ideal)
    Q.name = f"truncated-B{2 * n}"
    return Q


def _cat_sl2_sym(p=None):
    R = symmetric_poisson(sl2(3 if p is None else p))
    R.name = "sl2-sym"
    return R


def _cat_sl2_trunc(p=None):
    R = truncated_symmetric(sl2(3 if p is None else p))
    R.name = "sl2-trunc"
    return R


@dataclass
class AlgebraDescriptor:
    name: str
    build: Callable[..., RestrictedPoissonAlgebra]
    description: str
    parameters: Dict[str, object] = field(default_factory=dict)


CATALOG: Dict[str, AlgebraDescriptor] = {d.name: d for d in [
    AlgebraDescriptor("classical2", _cat_classical2, "K[x,y], {x,y} = 1, p = 3, closed-form p-map"),
    AlgebraDescriptor("classical2-p5", _cat_classical2_p5,
                      "K[x,y], {x,y} = 1, p = 5, closed-form p-map"),
    AlgebraDescriptor("affine-bracket-p3", _cat_affine,
                      "K[x,y], {x,y} = lam x + mu y + nu, p = 3",
                      {"lam": 1, "mu": 1, "nu": 1}),
    AlgebraDescriptor("constant-bracket-n", _cat_constant,
                      "K[x1..xn], {x_i,x_j} = 2 c_ij, p = 3", {"n": 3, "c": DEFAULT_CONSTANT_C}),
    AlgebraDescriptor("trivial-extension", _cat_trivial_extension,
                      "K[x,y]/(x^2,xy,y^2), {x,y} = x"),
    AlgebraDescriptor("truncated-B2n", _cat_truncated_b2n,
                      "K[x1..x2n]/(x_i^p), {x_i,x_{n+i}} = 1, quantization p-map", {"n": 1}),
    AlgebraDescriptor("sl2-sym", _cat_sl2_sym, "S(sl2)"),
    AlgebraDescriptor("sl2-trunc", _cat_sl2_trunc, "s(sl2), 27-dimensional at p = 3"),
]}

CATALOG_NAMES = list(CATALOG)


__all__ = [
    "LieVector", "RestrictedLieAlgebra", "verify_restricted_lie_fd", "symmetric_poisson",
    "truncated_symmetric", "TensorProduct", "tensor_product", "verify_tensor", "hopf_check",
    "closed_form_p3", "closed_form_p5", "closed_form_affine", "closed_form_constant",
    "sl2", "solvable2", "catalog", "CATALOG", "CATALOG_NAMES", "AlgebraDescriptor",
]
