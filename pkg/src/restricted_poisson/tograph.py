"""Totally ordered graphs and the combinatorics of star powers.

Expanding ``f * f * ... * f`` (p factors, one-sided kernel ``d_x (x) d_y``)
produces, at order ``t^n``, one term for every n-tuple of edges ``(i, j)``
with ``i < j`` among the p tensor slots: slot ``i`` receives a ``d_x`` and
slot ``j`` a ``d_y``.  Such a tuple is a tograph on vertices ``1..p``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from .algebra import Poly, check_char, inverse
from .report import Report

Edge = Tuple[int, int]
DegreeSequence = Tuple[Tuple[int, int], ...]


def enumerate_gamma(n: int, p: int) -> Iterator[Tuple[Edge, ...]]:
    """All n-tuples of edges ``(i, j)``, ``1 <= i < j <= p``; there are C(p,2)^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = list(itertools.combinations(range(1, p + 1), 2))
    return itertools.product(edges, repeat=n)


def edge_multisets(n: int, p: int) -> Iterator[Tuple[Tuple[Edge, ...], int]]:
    """Distinct edge multisets of size n with the number of tuples collapsing onto each."""
    edges = list(itertools.combinations(range(1, p + 1), 2))
    nfact = math.factorial(n)
    for combo in itertools.combinations_with_replacement(edges, n):
        mult = nfact
        for c in Counter(combo).values():
            mult //= math.factorial(c)
        yield combo, mult


@dataclass(frozen=True)
class Tograph:
    """Graph on vertices ``1..p`` whose edges all point upward.

    Edges form a multiset; the canonical form stores them sorted.
    """

    p: int
    edges: Tuple[Edge, ...]

    def __init__(self, p: int, edges: Sequence[Edge] = ()):
        canon = []
        for i, j in edges:
            if not 1 <= i < j <= p:
                raise ValueError(f"edge ({i}, {j}) must satisfy 1 <= i < j <= {p}")
            canon.append((i, j))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def out_degree(self, v: int) -> int:
        return sum(1 for i, _ in self.edges if i == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, j in self.edges if j == v)

    def multiplicity(self, u: int, v: int) -> int:
        return self.edges.count((u, v))

    def degree_sequence(self) -> DegreeSequence:
        return _degree_sequence(self.p, self.edges)

    def tuple_count(self) -> int:
        """Number of edge tuples in Gamma_n that collapse onto this graph."""
        out = math.factorial(len(self.edges))
        for c in Counter(self.edges).values():
            out //= math.factorial(c)
        return out

    def components(self) -> List[List[int]]:
        return _components(self.p, self.edges)


def _degree_sequence(p: int, edges: Sequence[Edge]) -> DegreeSequence:
    out = [0] * (p + 1)
    inn = [0] * (p + 1)
    for i, j in edges:
        out[i] += 1
        inn[j] += 1
    return tuple((out[v], inn[v]) for v in range(1, p + 1))


def _components(p: int, edges: Sequence[Edge]) -> List[List[int]]:
    parent = list(range(p + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: Dict[int, List[int]] = {}
    for v in range(1, p + 1):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def graph_weight(G: Tograph, f: Poly) -> Poly:
    """Product over vertices of the partial of f with x-order out(v) and y-order in(v)."""
    if f.ring.nvars != 2:
        raise ValueError("graph weights are defined for polynomials in two variables")
    cache: Dict[Tuple[int, int], Poly] = {}
    return _weight(G.degree_sequence(), f, cache)


def _weight(seq: DegreeSequence, f: Poly, cache: Dict[Tuple[int, int], Poly]) -> Poly:
    out = f.ring.one
    for d in seq:
        if d not in cache:
            cache[d] = f.partial(d)
        out = out * cache[d]
        if not out:
            break
    return out


# -- equivalence classes ------------------------------------------------------------

Signature = Tuple[int, Tuple[Edge, ...]]


@dataclass(frozen=True)
class ComponentProfile:
    """Isomorphism types of the components of a tograph with their multiplicities.

    ``entries`` holds ``(signature, k, size)`` triples sorted by signature,
    where a signature is the component's size together with its edges after
    the order-preserving relabelling of its vertices to ``1..size``.
    """

    p: int
    entries: Tuple[Tuple[Signature, int, int], ...]

    @property
    def component_count(self) -> int:
        return sum(k for _, k, _ in self.entries)

    def describe(self) -> str:
        parts = []
        for (size, edges), k, _ in self.entries:
            body = "pt" if size == 1 else ",".join(f"{i}{j}" for i, j in edges)
            parts.append(f"[{body}]x{k}")
        return " ".join(parts)


def equivalence_class(G: Tograph) -> ComponentProfile:
    return _profile(G.p, G.edges)


def _profile(p: int, edges: Sequence[Edge]) -> ComponentProfile:
    comps = _components(p, edges)
    where = {}
    for c in comps:
        relabel = {v: k + 1 for k, v in enumerate(c)}
        for v in c:
            where[v] = (tuple(c), relabel)
    sig_edges: Dict[Tuple[int, ...], List[Edge]] = {tuple(c): [] for c in comps}
    for i, j in edges:
        key, relabel = where[i]
        sig_edges[key].append((relabel[i], relabel[j]))
    counts: Counter = Counter()
    for c in comps:
        counts[(len(c), tuple(sorted(sig_edges[tuple(c)])))] += 1
    entries = tuple(sorted((sig, k, sig[0]) for sig, k in counts.items()))
    return ComponentProfile(p, entries)


def count_equivalent(profile: ComponentProfile) -> int:
    """N = p! / (prod (n_i!)^{k_i} k_i!), as an exact integer.

    Raises
    ------
    ValueError
        If the component sizes do not add up to p.
    """
    total = sum(k * n for _, k, n in profile.entries)
    if total != profile.p:
        raise ValueError(f"profile covers {total} vertices, expected {profile.p}")
    denom = 1
    for _, k, n in profile.entries:
        denom *= math.factorial(n) ** k * math.factorial(k)
    num = math.factorial(profile.p)
    if num % denom:
        raise ValueError("inconsistent profile")
    return num // denom


# -- star-power coefficients ----------------------------------------------------------

@lru_cache(maxsize=None)
def degree_census(n: int, p: int) -> Tuple[Tuple[DegreeSequence, int], ...]:
    """How many tuples of Gamma_n share each vertex degree sequence."""
    counts: Counter = Counter()
    for combo, mult in edge_multisets(n, p):
        counts[_degree_sequence(p, combo)] += mult
    return tuple(sorted(counts.items()))


def combinatorial_M(f: Poly, n: int, p: int) -> Poly:
    """(1/n!) * sum over Gamma_n of graph weights: the t^n coefficient of f^{*p}.

    Raises
    ------
    ValueError
        If ``n`` is outside ``1..p-1`` or ``f`` lives in another characteristic.
    """
    check_char(p)
    if f.ring.p != p:
        raise ValueError(f"polynomial has characteristic {f.ring.p}, expected {p}")
    if not 1 <= n <= p - 1:
        raise ValueError(f"n must lie in 1..{p - 1}, got {n}")
    if f.ring.nvars != 2:
        raise ValueError("graph weights are defined for polynomials in two variables")
    cache: Dict[Tuple[int, int], Poly] = {}
    total = f.ring.zero
    for seq, count in degree_census(n, p):
        if count % p:
            total = total + _weight(seq, f, cache).scale(count)
    return total.scale(inverse(math.factorial(n) % p, p))


@dataclass
class ClassCensus:
    profile: ComponentProfile
    N: int
    members: int
    tuples: int


def class_census(n: int, p: int) -> List[ClassCensus]:
    classes: Dict[ComponentProfile, List[int]] = {}
    for combo, mult in edge_multisets(n, p):
        prof = _profile(p, combo)
        entry = classes.setdefault(prof, [0, 0])
        entry[0] += 1
        entry[1] += mult
    out = [ClassCensus(prof, count_equivalent(prof), m, t) for prof, (m, t) in classes.items()]
    out.sort(key=lambda c: c.profile.entries)
    return out


def vanishing_certificate(n: int, p: int) -> Report:
    """Certify that every class of Gamma_n has size divisible by p (n <= p-2).

    Each class is checked for p | N, for at least two components, and for
    N matching the number of distinct edge multisets found in the class;
    the tuple counts must add up to |Gamma_n|.
    """
    check_char(p)
    if not 1 <= n <= p - 2:
        raise ValueError(f"n must lie in 1..{p - 2}, got {n}")
    report = Report("tograph-vanishing", None)
    div = report.check("p_divides_N")
    disc = report.check("disconnected")
    members = report.check("member_count")
    part = report.check("partition")
    census = class_census(n, p)
    for c in census:
        label = c.profile.describe()
        div.record(c.N % p == 0, profile=label, N=c.N)
        disc.record(c.profile.component_count >= 2, profile=label)
        members.record(c.N == c.members, profile=label, N=c.N, enumerated=c.members)
    total = sum(c.tuples for c in census)
    expected = math.comb(p, 2) ** n
    part.record(total == expected, total=total, expected=expected)
    report.info["n"] = n
    report.info["p"] = p
    report.info["classes"] = [
        {"profile": c.profile.describe(), "N": c.N, "members": c.members, "tuples": c.tuples}
        for c in census]
    return report
