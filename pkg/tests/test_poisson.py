import pytest
from hypothesis import given, settings

from restricted_poisson.algebra import MonomialIdeal
from restricted_poisson.poisson import (InvalidAlgebraError, PoissonAlgebra, ad_power,
                                        bracket, jacobiator, nested_bracket, verify_poisson)
from strategies import RING3, polys


def classical(p=3):
    return PoissonAlgebra.from_strings(p, ["x", "y"], {"x,y": "1"})


def trivial_extension(p=3):
    return PoissonAlgebra.from_strings(p, ["x", "y"], {"x,y": "x"}, ["x^2", "x*y", "y^2"])


def test_generator_bracket():
    A = classical()
    x, y = A.gens
    assert bracket(A, x, y) == 1
    assert bracket(A, y, x) == -1


def test_leibniz_forced_value():
    A = classical()
    x, y = A.gens
    assert A.bracket(x * x, y) == 2 * x


@settings(max_examples=40, deadline=None)
@given(polys(RING3))
def test_self_bracket_vanishes(f):
    assert classical().bracket(f, f) == 0


@settings(max_examples=40, deadline=None)
@given(polys(RING3), polys(RING3))
def test_classical_bracket_formula(f, g):
    A = classical()
    assert A.bracket(f, g) == f.diff(0) * g.diff(1) - f.diff(1) * g.diff(0)


@settings(max_examples=40, deadline=None)
@given(polys(RING3), polys(RING3), polys(RING3))
def test_leibniz_random(f, g, h):
    A = PoissonAlgebra.from_strings(3, ["x", "y"], {"x,y": "x + y^2"})
    assert A.bracket(f * g, h) == f * A.bracket(g, h) + g * A.bracket(f, h)


def test_nested_bracket_examples():
    A = classical()
    x, y = A.gens
    assert nested_bracket(A, [x, y, x]) == 0
    B = trivial_extension()
    bx, by = B.gens
    assert nested_bracket(B, [by, by, bx]) == bx
    assert nested_bracket(A, [x, y]) == A.bracket(x, y)
    with pytest.raises(ValueError):
        nested_bracket(A, [x])


def test_ad_power_examples():
    A = classical()
    x, y = A.gens
    assert ad_power(A, x, 1, y) == 1
    assert ad_power(A, x, 3, y ** 3) == 0
    assert ad_power(A, x, 2, y ** 3) == 6 * y
    assert ad_power(A, x, 0, y) == y
    with pytest.raises(ValueError):
        ad_power(A, x, -1, y)


def test_ad_x_is_d_dy():
    A = classical()
    x, y = A.gens
    g = A.ring.parse("x^2 y^2 + x y + y^2")
    assert ad_power(A, x, 1, g) == g.diff(1)


def test_verify_classical_passes():
    assert verify_poisson(classical(), samples=16).passed


def test_verify_trivial_extension_passes():
    assert verify_poisson(trivial_extension(), samples=16).passed


def test_corrupted_table_reports_jacobi_witness():
    kw = dict(brackets={"x,y": "x", "y,z": "y", "x,z": "0"})
    A = PoissonAlgebra.from_strings(3, ["x", "y", "z"], validate=False, **kw)
    x, y, z = A.gens
    assert jacobiator(A, x, y, z) == x
    rep = verify_poisson(A, samples=4)
    assert not rep.passed
    assert rep.failed_checks() == ["jacobi"]
    assert rep["jacobi"].witnesses
    with pytest.raises(InvalidAlgebraError, match="Jacobi"):
        PoissonAlgebra.from_strings(3, ["x", "y", "z"], **kw)


def test_ideal_closure_checked():
    with pytest.raises(InvalidAlgebraError, match="closed"):
        PoissonAlgebra.from_strings(3, ["x", "y"], {"x,y": "1"}, ["x"])


def test_diagonal_table_entry_rejected():
    with pytest.raises(InvalidAlgebraError):
        PoissonAlgebra(RING3, {(0, 0): RING3.one})


def test_lower_triangle_converted():
    A = PoissonAlgebra(RING3, {(1, 0): RING3.gen(0)})
    assert A.generator_bracket(0, 1) == -RING3.gen(0)


def test_element_from_other_ring_rejected():
    A = classical()
    with pytest.raises(ValueError):
        A.bracket(A.gens[0], classical(5).gens[0])


@settings(max_examples=40, deadline=None)
@given(polys(RING3, 4, 5), polys(RING3, 4, 5))
def test_quotient_bracket_well_defined(f, g):
    B = trivial_extension()
    A = PoissonAlgebra(B.ring, B.table)
    assert B.bracket(B.reduce(f), B.reduce(g)) == B.reduce(A.bracket(f, g))


def test_finite_basis():
    B = trivial_extension()
    assert [str(b) for b in B.finite_basis()] == ["1", "y", "x"]
    assert classical().finite_basis() is None
    C = PoissonAlgebra(RING3, {}, MonomialIdeal(RING3, [(3, 0), (0, 3)]))
    assert len(C.finite_basis()) == 9
