"""Exact arithmetic over prime fields: sparse polynomials, monomial quotients
and truncated series in an auxiliary parameter ``t``.

Polynomials are stored as dictionaries mapping dense exponent tuples to
residues in ``[0, p)``.  Zero coefficients are never stored, so two equal
polynomials always have identical term maps.
"""

from __future__ import annotations

import ast
import io
import math
import random
import tokenize
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

Monomial = Tuple[int, ...]

MAX_PRIME = 7


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def check_char(p: int, max_prime: int = MAX_PRIME) -> int:
    """Validate the characteristic and return it.

    Raises
    ------
    ValueError
        If ``p`` is not an odd prime in ``[3, max_prime]``.
    """
    if not isinstance(p, int) or isinstance(p, bool) or p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")
    if p > max_prime:
        raise ValueError(f"p={p} exceeds the configured bound {max_prime}")
    return p


def inverse(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


def monomial_key(m: Monomial):
    """Sort key for the graded lexicographic order (x_1 > x_2 > ...)."""
    return (sum(m), m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(i <= j for i, j in zip(a, b))


class PolyRing:
    """The polynomial ring F_p[x_1, ..., x_n] with named generators."""

    def __init__(self, p: int, names: Sequence[str]):
        self.p = check_char(p)
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self.nvars = len(self.names)
        self._zero_mono = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.p == other.p
                and self.names == other.names)

    def __hash__(self):
        return hash((self.p, self.names))

    def __repr__(self):
        return f"PolyRing(p={self.p}, names={list(self.names)})"

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return Poly(self, {self._zero_mono: 1})

    def const(self, c: int) -> "Poly":
        c %= self.p
        return Poly(self, {self._zero_mono: c} if c else {})

    def gen(self, i) -> "Poly":
        if isinstance(i, str):
            i = self.index(i)
        return Poly(self, {self.unit(i): 1})

    @property
    def gens(self) -> List["Poly"]:
        return [self.gen(i) for i in range(self.nvars)]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}; ring has {list(self.names)}") from None

    def unit(self, i: int, exponent: int = 1) -> Monomial:
        e = [0] * self.nvars
        e[i] = exponent
        return tuple(e)

    def monomial(self, m: Monomial, c: int = 1) -> "Poly":
        return Poly(self, {tuple(m): c % self.p} if c % self.p else {})

    def from_dict(self, terms: Dict[Monomial, int]) -> "Poly":
        p = self.p
        clean = {}
        for m, c in terms.items():
            c %= p
            if c:
                clean[tuple(m)] = c
        return Poly(self, clean)

    def monomials_up_to(self, degree: int) -> List[Monomial]:
        """All monomials of total degree <= ``degree`` in graded-lex order."""
        out: List[Monomial] = []

        def rec(prefix, remaining, slots):
            if slots == 0:
                out.append(tuple(prefix))
                return
            for e in range(remaining + 1):
                rec(prefix + [e], remaining - e, slots - 1)

        rec([], degree, self.nvars)
        out.sort(key=monomial_key)
        return out

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)

    def random_element(self, rng: random.Random, max_degree: int = 3,
                       max_terms: int = 4, allow_zero: bool = False) -> "Poly":
        """A random polynomial with at most ``max_terms`` terms."""
        monos = self.monomials_up_to(max_degree)
        while True:
            k = rng.randint(1, max_terms)
            terms = {}
            for _ in range(k):
                m = monos[rng.randrange(len(monos))]
                terms[m] = rng.randrange(1, self.p)
            f = self.from_dict(terms)
            if f or allow_zero:
                return f


class Poly:
    """Immutable sparse polynomial over F_p."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, int]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- helpers -----------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                if other.ring.p != self.ring.p:
                    raise ValueError(
                        f"characteristic mismatch: {self.ring.p} vs {other.ring.p}")
                raise ValueError(
                    f"ring mismatch: {list(self.ring.names)} vs {list(other.ring.names)}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        p = self.ring.p
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = (terms.get(m, 0) + c) % p
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Poly(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Poly":
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero
        if c == 1:
            return self
        return Poly(self.ring, {m: (v * c) % p for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(self.terms) < len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        p = self.ring.p
        acc: Dict[Monomial, int] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(i + j for i, j in zip(ma, mb))
                acc[m] = acc.get(m, 0) + ca * cb
        return Poly(self.ring, {m: c % p for m, c in acc.items() if c % p})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def frobenius(self) -> "Poly":
        """f^p, computed term-wise (the Frobenius map is additive in char p)."""
        p = self.ring.p
        return Poly(self.ring, {tuple(e * p for e in m): pow(c, p, p)
                                for m, c in self.terms.items()})

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def coeff(self, m: Monomial) -> int:
        return self.terms.get(tuple(m), 0)

    def constant_term(self) -> int:
        return self.terms.get(self.ring._zero_mono, 0)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def sorted_terms(self, descending: bool = False) -> List[Tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: monomial_key(mc[0]),
                      reverse=descending)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self.sorted_terms())

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms(descending=True):
            factors = []
            for name, e in zip(self.ring.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self})"

    # -- calculus ----------------------------------------------------------
    def diff(self, var, k: int = 1) -> "Poly":
        """Ordinary k-th partial derivative in ``var`` (index or name)."""
        i = self.ring.index(var) if isinstance(var, str) else var
        p = self.ring.p
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e < k:
                continue
            # falling factorial e (e-1) ... (e-k+1)
            v = (c * math.perm(e, k)) % p
            if v:
                n = list(m)
                n[i] = e - k
                out[tuple(n)] = v
        return Poly(self.ring, out)

    def partial(self, orders: Sequence[int]) -> "Poly":
        """Ordinary mixed partial with ``orders[i]`` derivatives in x_i."""
        f = self
        for i, k in enumerate(orders):
            if k:
                f = f.diff(i, k)
        return f

    def subs(self, images: Sequence["Poly"]) -> "Poly":
        """Substitute ``images[i]`` for x_i (result lives in the images' ring)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = images[0].ring if images else self.ring
        result = target.zero
        powers: Dict[Tuple[int, int], Poly] = {}
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = images[i] ** e
                    term = term * powers[key]
            result = result + term
        return result


def divided_partial(f: Poly, var, k: int) -> Poly:
    """Divided-power derivative (1/k!) d^k f / dx^k via binomials mod p.

    Well defined for every ``k >= 0`` because no factorial is inverted.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    ring = f.ring
    i = ring.index(var) if isinstance(var, str) else var
    p = ring.p
    out = {}
    for m, c in f.terms.items():
        e = m[i]
        if e < k:
            continue
        v = (c * math.comb(e, k)) % p
        if v:
            n = list(m)
            n[i] = e - k
            out[tuple(n)] = v
    return Poly(ring, out)


def frobenius_power(f: Poly) -> Poly:
    return f.frobenius()


def poly_arith(f: Poly, g: Poly, kind: str) -> Poly:
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise ValueError(f"unknown operation {kind!r}")


class MonomialIdeal:
    """Ideal generated by monomials; stored as a minimal generating set."""

    def __init__(self, ring: PolyRing, generators: Iterable[Monomial]):
        self.ring = ring
        gens = sorted({tuple(g) for g in generators}, key=monomial_key)
        minimal: List[Monomial] = []
        for g in gens:
            if len(g) != ring.nvars:
                raise ValueError(f"monomial {g} has wrong arity for {ring!r}")
            if not any(divides(h, g) for h in minimal):
                minimal.append(g)
        self.generators = tuple(minimal)

    @classmethod
    def from_polys(cls, ring: PolyRing, polys: Iterable[Poly]) -> "MonomialIdeal":
        gens = []
        for f in polys:
            if len(f.terms) != 1:
                raise ValueError(f"ideal generator {f} is not a monomial")
            gens.append(next(iter(f.terms)))
        return cls(ring, gens)

    def __contains__(self, m) -> bool:
        if isinstance(m, Poly):
            return all(self.contains_monomial(n) for n in m.terms)
        return self.contains_monomial(m)

    def contains_monomial(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    def reduce(self, f: Poly) -> Poly:
        if not self.generators:
            return f
        return Poly(f.ring, {m: c for m, c in f.terms.items()
                             if not self.contains_monomial(m)})

    def standard_monomials(self, degree: int) -> List[Monomial]:
        return [m for m in self.ring.monomials_up_to(degree)
                if not self.contains_monomial(m)]

    def is_whole_ring(self) -> bool:
        return any(not any(g) for g in self.generators)

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.ring == other.ring
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __repr__(self):
        gens = ", ".join(str(self.ring.monomial(g)) for g in self.generators)
        return f"MonomialIdeal({gens})"


def reduce_mod_ideal(f: Poly, ideal: Optional[MonomialIdeal]) -> Poly:
    return f if ideal is None else ideal.reduce(f)


class TSeries:
    """Polynomial in ``t`` with Poly coefficients, truncated above ``truncation``."""

    __slots__ = ("ring", "coeffs", "truncation")

    def __init__(self, ring: PolyRing, coeffs: Sequence[Poly], truncation: int):
        if truncation < 0:
            raise ValueError("truncation must be non-negative")
        cs = list(coeffs[:truncation + 1])
        cs += [ring.zero] * (truncation + 1 - len(cs))
        self.ring = ring
        self.coeffs = tuple(cs)
        self.truncation = truncation

    @classmethod
    def constant(cls, f: Poly, truncation: int) -> "TSeries":
        return cls(f.ring, [f], truncation)

    def _check(self, other: "TSeries"):
        if not isinstance(other, TSeries):
            raise TypeError("expected a TSeries")
        if other.truncation != self.truncation:
            raise ValueError(
                f"truncation mismatch: {self.truncation} vs {other.truncation}")
        if other.ring != self.ring:
            raise ValueError("TSeries over different rings")

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def __add__(self, other):
        self._check(other)
        return TSeries(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)],
                       self.truncation)

    def __sub__(self, other):
        self._check(other)
        return TSeries(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)],
                       self.truncation)

    def __neg__(self):
        return TSeries(self.ring, [-a for a in self.coeffs], self.truncation)

    def __mul__(self, other):
        if isinstance(other, int):
            return TSeries(self.ring, [a * other for a in self.coeffs], self.truncation)
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return (self.truncation == other.truncation and self.ring == other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.truncation))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            s = str(c)
            if n == 0:
                parts.append(s)
            else:
                tpow = "t" if n == 1 else f"t^{n}"
                parts.append(f"({s})*{tpow}" if len(c) > 1 else
                             (tpow if s == "1" else f"{s}*{tpow}"))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TSeries({self}; trunc={self.truncation})"


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    """Cauchy product of two series with the same truncation."""
    a._check(b)
    N = a.truncation
    out = [a.ring.zero] * (N + 1)
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j in range(N + 1 - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return TSeries(a.ring, out, N)


# -- parsing ---------------------------------------------------------------

_OPERAND_END = {tokenize.NUMBER, tokenize.NAME}


def _split_name(name: str, names: Sequence[str]) -> Optional[List[str]]:
    """Split ``"xy"`` into known variable names, longest match first."""
    if name in names:
        return [name]
    for cand in sorted((n for n in names if name.startswith(n)), key=len, reverse=True):
        rest = _split_name(name[len(cand):], names)
        if rest is not None:
            return [cand] + rest
    return None


def _insert_implicit_mul(text: str, names: Sequence[str] = ()) -> str:
    text = text.replace("^", "**")
    toks = list(tokenize.generate_tokens(io.StringIO(text).readline))
    out = []
    prev = None
    for tok in toks:
        if tok.type in (tokenize.NEWLINE, tokenize.NL, tokenize.ENDMARKER):
            continue
        starts_operand = tok.type in _OPERAND_END or tok.string == "("
        if prev is not None and starts_operand and (
                prev.type in _OPERAND_END or prev.string == ")"):
            out.append("*")
        piece = tok.string
        if tok.type == tokenize.NAME and names:
            parts = _split_name(piece, names)
            if parts is not None:
                piece = " * ".join(parts)
        out.append(piece)
        prev = tok
    return " ".join(out)


def parse_poly(ring: PolyRing, text: str) -> Poly:
    """Parse strings like ``"2x^2 y - 3*x*y + 1"`` into a Poly of ``ring``.

    ``^`` and ``**`` both denote powers; ``*`` may be omitted, also between
    adjacent variable names (``"xy"`` is ``x*y`` when ``xy`` is not itself
    a variable).
    """
    try:
        tree = ast.parse(_insert_implicit_mul(text.strip() or "0", ring.names), mode="eval")
    except (SyntaxError, tokenize.TokenError) as exc:
        raise ValueError(f"cannot parse polynomial {text!r}: {exc}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return ring.const(node.value)
        if isinstance(node, ast.Name):
            return ring.gen(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                    raise ValueError(f"exponent must be a literal integer in {text!r}")
                return ev(node.left) ** exp.value
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
        raise ValueError(f"unsupported syntax in polynomial {text!r}")

    try:
        return ev(tree)
    except KeyError as exc:
        raise ValueError(str(exc.args[0])) from None
