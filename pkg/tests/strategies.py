"""Hypothesis strategies for polynomials over small prime fields."""

from hypothesis import strategies as st

from restricted_poisson.algebra import PolyRing


def monomials(nvars, max_degree):
    return st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars).filter(
        lambda e: sum(e) <= max_degree).map(tuple)


def polys(ring: PolyRing, max_degree=3, max_terms=4):
    terms = st.dictionaries(monomials(ring.nvars, max_degree),
                            st.integers(1, ring.p - 1), max_size=max_terms)
    return terms.map(ring.from_dict)


RING3 = PolyRing(3, ["x", "y"])
RING5 = PolyRing(5, ["x", "y"])
RING3_XYZ = PolyRing(3, ["x", "y", "z"])
