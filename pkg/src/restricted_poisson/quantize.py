"""Star products for constant Poisson brackets and the p-map they induce.

The product is ``mu(exp(t * sum c_ij d_i (x) d_j)(f (x) g))``.  Each factor
``exp(t c d_i (x) d_j)`` is expanded as ``sum_k t^k c^k k! d_i^(k) (x) d_j^(k)``
with divided-power derivatives, so no factorial is ever inverted and all
terms with ``k >= p`` drop out.
"""

from __future__ import annotations

import math
import random
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Monomial, Poly, PolyRing, TSeries
from .poisson import PoissonAlgebra
from .report import Report
from .restricted import FormulaPMap, RestrictedPoissonAlgebra

MODES = ("onesided", "symmetric")


class StarAlgebra:
    """Deformation quantization of F_p[x_1..x_n] with constant bracket.

    Parameters
    ----------
    ring : PolyRing
    c : n x n matrix of ints
        ``onesided``: only the strict upper triangle is used and the
        classical limit has {x_i, x_j} = c[i][j].  ``symmetric``: ``c`` must
        be antisymmetric, all ordered pairs enter the exponent and the
        classical limit has {x_i, x_j} = 2 c[i][j].
    mode : "onesided" | "symmetric"
    truncation : int, optional
        Highest t-degree kept (default p).
    """

    def __init__(self, ring: PolyRing, c: Sequence[Sequence[int]], mode: str = "onesided",
                 truncation: Optional[int] = None):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        p, n = ring.p, ring.nvars
        if len(c) != n or any(len(row) != n for row in c):
            raise ValueError(f"coefficient matrix must be {n}x{n}")
        self.ring = ring
        self.p = p
        self.n = n
        self.mode = mode
        self.c = [[v % p for v in row] for row in c]
        if mode == "symmetric":
            for i in range(n):
                for j in range(n):
                    if (self.c[i][j] + self.c[j][i]) % p:
                        raise ValueError("symmetric mode needs an antisymmetric matrix")
            self.pairs = [(i, j, self.c[i][j]) for i in range(n) for j in range(n)
                          if i != j and self.c[i][j]]
        else:
            self.pairs = [(i, j, self.c[i][j]) for i in range(n) for j in range(i + 1, n)
                          if self.c[i][j]]
        self.truncation = p if truncation is None else truncation
        if self.truncation < p:
            raise ValueError(f"truncation must be >= p = {p}")
        self._mono_cache: Dict[Tuple[Monomial, Monomial], List[Dict[Monomial, int]]] = {}

    @classmethod
    def from_poisson(cls, A: PoissonAlgebra, mode: str, truncation: Optional[int] = None):
        """Quantize a constant-bracket polynomial algebra."""
        if A.quotient is not None:
            raise ValueError("quantization needs a polynomial algebra")
        if not A.is_constant_bracket():
            raise ValueError("quantization needs a constant bracket table")
        p, n = A.p, A.ring.nvars
        c = [[0] * n for _ in range(n)]
        half = pow(2, p - 2, p)
        for (i, j), v in A.table.items():
            val = v.constant_term()
            if mode == "onesided":
                c[i][j] = val
            else:
                c[i][j] = val * half % p
                c[j][i] = (-val * half) % p
        return cls(A.ring, c, mode, truncation)

    def classical_limit(self) -> PoissonAlgebra:
        p = self.p
        factor = 1 if self.mode == "onesided" else 2
        table = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                v = (factor * self.c[i][j]) % p
                if v:
                    table[(i, j)] = self.ring.const(v)
        return PoissonAlgebra(self.ring, table)

    def with_truncation(self, truncation: int) -> "StarAlgebra":
        return StarAlgebra(self.ring, self.c, self.mode, truncation)

    # -- products ------------------------------------------------------------
    def _monomial_star(self, a: Monomial, b: Monomial) -> List[Dict[Monomial, int]]:
        key = (a, b)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        p, N = self.p, self.truncation
        states: Dict[Tuple[int, Monomial, Monomial], int] = {(0, a, b): 1}
        for i, j, c in self.pairs:
            nxt: Dict[Tuple[int, Monomial, Monomial], int] = {}
            for (deg, u, v), coef in states.items():
                kmax = min(u[i], v[j], N - deg, p - 1)
                for k in range(kmax + 1):
                    w = (coef * pow(c, k, p) * math.factorial(k)
                         * math.comb(u[i], k) * math.comb(v[j], k)) % p
                    if not w:
                        continue
                    if k:
                        u2 = list(u)
                        u2[i] -= k
                        v2 = list(v)
                        v2[j] -= k
                        key2 = (deg + k, tuple(u2), tuple(v2))
                    else:
                        key2 = (deg, u, v)
                    nxt[key2] = (nxt.get(key2, 0) + w) % p
            states = {k: w for k, w in nxt.items() if w}
        out: List[Dict[Monomial, int]] = [dict() for _ in range(N + 1)]
        for (deg, u, v), coef in states.items():
            m = tuple(x + y for x, y in zip(u, v))
            out[deg][m] = (out[deg].get(m, 0) + coef) % p
        self._mono_cache[key] = out
        return out

    def star(self, f: Poly, g: Poly) -> TSeries:
        return self.star_series(TSeries.constant(f, self.truncation),
                                TSeries.constant(g, self.truncation))

    def star_series(self, a: TSeries, b: TSeries) -> TSeries:
        """Star product extended t-bilinearly to truncated series."""
        if a.truncation != self.truncation or b.truncation != self.truncation:
            raise ValueError("series truncation differs from the star algebra's")
        p, N = self.p, self.truncation
        acc: List[Dict[Monomial, int]] = [dict() for _ in range(N + 1)]
        for s, fa in enumerate(a.coeffs):
            if not fa:
                continue
            for r, gb in enumerate(b.coeffs):
                if not gb or s + r > N:
                    continue
                for ma, ca in fa.terms.items():
                    for mb, cb in gb.terms.items():
                        cc = ca * cb
                        for d, terms in enumerate(self._monomial_star(ma, mb)):
                            if s + r + d > N:
                                break
                            bucket = acc[s + r + d]
                            for m, v in terms.items():
                                bucket[m] = bucket.get(m, 0) + cc * v
        return TSeries(self.ring, [self.ring.from_dict(d) for d in acc], N)

    def star_power(self, f: Poly, k: int) -> TSeries:
        if k < 1:
            raise ValueError("k must be >= 1")
        base = TSeries.constant(f, self.truncation)
        acc = base
        for _ in range(k - 1):
            acc = self.star_series(acc, base)
        return acc


def star(f: Poly, g: Poly, S: StarAlgebra) -> TSeries:
    return S.star(f, g)


def star_power(f: Poly, k: int, S: StarAlgebra) -> TSeries:
    return S.star_power(f, k)


def extract_M(f: Poly, n: int, S: StarAlgebra) -> Poly:
    """Coefficient of t^n in the p-th star power of f."""
    if not 0 <= n <= S.truncation:
        raise ValueError(f"n must lie in 0..{S.truncation}")
    return S.star_power(f, S.p)[n]


def all_M(f: Poly, S: StarAlgebra) -> List[Poly]:
    """[M_0(f), ..., M_{p-1}(f)] from a single star power."""
    series = S.star_power(f, S.p)
    return [series[n] for n in range(S.p)]


def check_vanishing(f: Poly, S: StarAlgebra, samples: int = 8, seed: int = 0) -> Report:
    """M_n(f) = 0 for 1 <= n <= p-2, and f^p star-commutes with sampled g."""
    rng = random.Random(seed)
    report = Report("vanishing", seed)
    van = report.check("M_n_vanish")
    series = S.star_power(f, S.p)
    for n in range(1, S.p - 1):
        van.record(not series[n], f=f, n=n, M_n=series[n])
    cen = report.check("frobenius_central")
    fp = f.frobenius()
    probes = list(S.ring.gens) + [S.ring.random_element(rng) for _ in range(samples)]
    for g in probes:
        expected = TSeries.constant(fp * g, S.truncation)
        left, right = S.star(fp, g), S.star(g, fp)
        cen.record(left == expected and right == expected, f=f, g=g,
                   left=left, right=right, expected=expected)
    return report


def derive_pmap(S: StarAlgebra, check: bool = True, samples: int = 8,
                seed: int = 0) -> RestrictedPoissonAlgebra:
    """Classical limit of ``S`` with the p-map f -> M_{p-1}(f).

    Raises
    ------
    ValueError
        If the vanishing hypotheses fail on the generators or on samples.
    """
    A = S.classical_limit()
    if check:
        rng = random.Random(seed)
        probes = list(S.ring.gens) + [S.ring.random_element(rng) for _ in range(samples)]
        for f in probes:
            rep = check_vanishing(f, S, samples=2, seed=seed)
            if not rep.passed:
                raise ValueError(f"quantization does not certify a restricted structure: "
                                 f"{rep.failed_checks()} at f = {f}")
    p = S.p

    def pmap(f: Poly) -> Poly:
        if f.is_constant():
            return S.ring.zero
        return S.star_power(f, p)[p - 1]

    return RestrictedPoissonAlgebra(A, FormulaPMap(A, pmap, f"quantization-{S.mode}"),
                                    f"quantized-{S.mode}")
