import math
import random

import pytest
from hypothesis import given, settings

from restricted_poisson.algebra import PolyRing, TSeries
from restricted_poisson.lie import catalog, closed_form_p3, closed_form_p5
from restricted_poisson.poisson import PoissonAlgebra
from restricted_poisson.quantize import (StarAlgebra, all_M, check_vanishing, derive_pmap,
                                         extract_M, star, star_power)
from restricted_poisson.restricted import lambda_from_bracket, lambda_p, verify_restricted
from strategies import RING3, RING5, polys


def onesided(ring, c12=1):
    return StarAlgebra(ring, [[0, c12], [0, 0]], "onesided")


def naive_onesided(f, g, c, truncation):
    """sum_k t^k c^k / k! d_x^k f d_y^k g for two variables, k < p."""
    p = f.ring.p
    coeffs = []
    fx, gy = f, g
    for k in range(min(p, truncation + 1)):
        coeffs.append(fx * gy * (pow(c, k, p) * pow(math.factorial(k), -1, p)))
        fx, gy = fx.diff(0), gy.diff(1)
    return TSeries(f.ring, coeffs, truncation)


def naive_symmetric(f, g, c, order):
    """sum_k t^k P^k / k! with P = c (d_x (x) d_y - d_y (x) d_x), for k <= order < p."""
    p = f.ring.p
    layer = [(f, g, 1)]
    out = []
    for k in range(order + 1):
        acc = f.ring.zero
        for a, b, w in layer:
            acc = acc + a * b * w
        out.append(acc * pow(math.factorial(k), -1, p))
        nxt = []
        for a, b, w in layer:
            nxt.append((a.diff(0), b.diff(1), w * c))
            nxt.append((a.diff(1), b.diff(0), -w * c))
        layer = nxt
    return out


# -- products -----------------------------------------------------------------

def test_generator_products():
    S = onesided(RING3)
    x, y = RING3.gens
    assert star(x, y, S) == TSeries(RING3, [x * y, RING3.one], 3)
    assert star(y, x, S) == TSeries.constant(x * y, 3)
    f = RING3.parse("x^2 y + y")
    assert star(f, RING3.one, S) == TSeries.constant(f, 3)
    assert star(RING3.one, f, S) == TSeries.constant(f, 3)


def test_star_power_example():
    S = onesided(RING3)
    x, y = RING3.gens
    series = star_power(x * y, 3, S)
    assert series == TSeries(RING3, [x ** 3 * y ** 3, RING3.zero, x * y], 3)
    assert star_power(x, 1, S) == TSeries.constant(x, 3)
    with pytest.raises(ValueError):
        star_power(x, 0, S)


@settings(max_examples=40, deadline=None)
@given(polys(RING5, 4, 4), polys(RING5, 4, 4))
def test_onesided_matches_naive_expansion(f, g):
    S = StarAlgebra(RING5, [[0, 2], [0, 0]], "onesided")
    assert star(f, g, S) == naive_onesided(f, g, 2, 5)


@settings(max_examples=40, deadline=None)
@given(polys(RING5, 4, 4), polys(RING5, 4, 4))
def test_symmetric_matches_naive_expansion_below_p(f, g):
    S = StarAlgebra(RING5, [[0, 3], [2, 0]], "symmetric")
    series = star(f, g, S)
    assert [series[k] for k in range(5)] == naive_symmetric(f, g, 3, 4)


@settings(max_examples=25, deadline=None)
@given(polys(RING3, 3, 3), polys(RING3, 3, 3), polys(RING3, 3, 3))
def test_associativity_to_high_order(f, g, h):
    S = StarAlgebra(RING3, [[0, 1], [0, 0]], "onesided", truncation=6)
    F, G, H = (TSeries.constant(u, 6) for u in (f, g, h))
    assert S.star_series(S.star_series(F, G), H) == S.star_series(F, S.star_series(G, H))


def test_associativity_three_variables_symmetric():
    ring = PolyRing(5, ["x", "y", "z"])
    c = [[0, 1, 3], [4, 0, 2], [2, 3, 0]]
    S = StarAlgebra(ring, c, "symmetric", truncation=10)
    rng = random.Random(3)
    for _ in range(6):
        F, G, H = (TSeries.constant(ring.random_element(rng, 3, 3), 10) for _ in range(3))
        assert S.star_series(S.star_series(F, G), H) == S.star_series(F, S.star_series(G, H))


@settings(max_examples=30, deadline=None)
@given(polys(RING3), polys(RING3))
def test_commutator_recovers_bracket(f, g):
    for mode, c in (("onesided", [[0, 1], [0, 0]]), ("symmetric", [[0, 2], [1, 0]])):
        S = StarAlgebra(RING3, c, mode)
        A = S.classical_limit()
        comm = star(f, g, S) - star(g, f, S)
        assert comm[0] == 0
        assert comm[1] == A.bracket(f, g)


def test_classical_limit_factor():
    S = StarAlgebra(RING5, [[0, 1], [4, 0]], "symmetric")
    x, y = RING5.gens
    assert S.classical_limit().bracket(x, y) == 2
    assert onesided(RING5, 3).classical_limit().bracket(x, y) == 3


def test_from_poisson_round_trip():
    A = PoissonAlgebra.from_strings(5, ["x", "y"], {"x,y": "3"})
    for mode in ("onesided", "symmetric"):
        S = StarAlgebra.from_poisson(A, mode)
        assert S.classical_limit().table == A.table


def test_constructor_validation():
    with pytest.raises(ValueError, match="mode"):
        StarAlgebra(RING3, [[0, 1], [0, 0]], "weyl")
    with pytest.raises(ValueError, match="antisymmetric"):
        StarAlgebra(RING3, [[0, 1], [1, 0]], "symmetric")
    with pytest.raises(ValueError):
        StarAlgebra(RING3, [[0, 1]], "onesided")
    with pytest.raises(ValueError, match="truncation"):
        StarAlgebra(RING3, [[0, 1], [0, 0]], "onesided", truncation=2)
    A = PoissonAlgebra.from_strings(3, ["x", "y"], {"x,y": "x"})
    with pytest.raises(ValueError, match="constant"):
        StarAlgebra.from_poisson(A, "onesided")


# -- the M_n coefficients -----------------------------------------------------------

def test_extract_M_examples():
    S = onesided(RING3)
    x, y = RING3.gens
    assert extract_M(x * y, 0, S) == x ** 3 * y ** 3
    assert extract_M(x * y, 1, S) == 0
    assert extract_M(x * y, 2, S) == x * y
    assert extract_M(x, 2, S) == 0
    with pytest.raises(ValueError):
        extract_M(x, 4, S)
    with pytest.raises(ValueError):
        extract_M(x, -1, S)


@settings(max_examples=30, deadline=None)
@given(polys(RING3, 4, 4))
def test_M0_is_frobenius(f):
    S = onesided(RING3)
    assert extract_M(f, 0, S) == f.frobenius()


@settings(max_examples=20, deadline=None)
@given(polys(RING5, 3, 3))
def test_vanishing_p5(f):
    S = onesided(RING5)
    rep = check_vanishing(f, S, samples=3)
    assert rep.passed, rep.to_text()
    Ms = all_M(f, S)
    assert all(not Ms[n] for n in range(1, 4))


def test_vanishing_three_variables_p7():
    ring = PolyRing(7, ["x", "y", "z"])
    S = StarAlgebra(ring, [[0, 1, 2], [0, 0, 3], [0, 0, 0]], "onesided")
    rng = random.Random(1)
    for _ in range(3):
        assert check_vanishing(ring.random_element(rng, 2, 3), S, samples=2).passed


@settings(max_examples=30, deadline=None)
@given(polys(RING3, 4, 4))
def test_top_coefficient_matches_closed_form_p3(f):
    assert extract_M(f, 2, onesided(RING3)) == closed_form_p3(f)


@settings(max_examples=15, deadline=None)
@given(polys(RING5, 3, 3))
def test_top_coefficient_matches_closed_form_p5(f):
    assert extract_M(f, 4, onesided(RING5)) == closed_form_p5(f)


def test_symmetric_mode_example():
    # bracket {x, y} = 2c with c = 1 at p = 3
    S = StarAlgebra(RING3, [[0, 1], [2, 0]], "symmetric")
    x, y = RING3.gens
    R = derive_pmap(S)
    assert R.poisson.bracket(x, y) == 2
    assert R.pp(x * y) == x * y
    assert R.pp(x) == 0


# -- derived restricted structure --------------------------------------------------

@pytest.mark.parametrize("ring, c, mode", [
    (RING3, [[0, 1], [0, 0]], "onesided"),
    (RING3, [[0, 1], [2, 0]], "symmetric"),
    (RING5, [[0, 1], [0, 0]], "onesided"),
    (RING5, [[0, 2], [3, 0]], "symmetric"),
])
def test_derive_pmap_suite(ring, c, mode):
    R = derive_pmap(StarAlgebra(ring, c, mode))
    rep = verify_restricted(R, samples=10, degree_bound=2)
    assert rep.passed, rep.to_text()


def test_derive_pmap_agrees_with_catalog():
    R = derive_pmap(onesided(RING3))
    C = catalog("classical2")
    for m in RING3.monomials_up_to(5):
        f = RING3.monomial(m)
        assert R.pp(f) == C.pp(f)


def test_star_lambda_matches_poisson_lambda():
    # the top coefficient of (f+g)^p - f^p - g^p is the additivity defect
    S = onesided(RING3)
    A = S.classical_limit()
    rng = random.Random(7)
    for _ in range(10):
        f, g = A.ring.random_element(rng, 2, 3), A.ring.random_element(rng, 2, 3)
        lam = lambda_p(A, f, g)
        top = (star_power(f + g, 3, S) - star_power(f, 3, S) - star_power(g, 3, S))[2]
        assert lam == top


def test_lambda_from_bracket_generic():
    A = catalog("classical2").poisson
    x, y = A.gens
    assert lambda_from_bracket(A.bracket, x, y, 3) == lambda_p(A, x, y)
