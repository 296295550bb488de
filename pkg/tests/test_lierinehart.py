import random

import pytest

from restricted_poisson.lie import catalog
from restricted_poisson.lierinehart import (KahlerForm, LieRinehartStructure, anchor_apply,
                                            differential, form_bracket, form_pmap,
                                            verify_lie_rinehart)


@pytest.fixture(scope="module")
def classical():
    return LieRinehartStructure(catalog("classical2"))


@pytest.fixture(scope="module")
def sl2sym():
    return LieRinehartStructure(catalog("sl2-sym"))


# -- forms ---------------------------------------------------------------------------

def test_differential_examples(classical):
    A = classical.algebra
    x, y = A.gens
    assert differential(A, x * y) == classical.dx(1, x) + classical.dx(0, y)
    assert differential(A, x ** 3) == classical.zero()
    assert not differential(A, A.ring.const(2))


def test_form_arithmetic_and_printing(classical):
    A = classical.algebra
    x, y = A.gens
    w = classical.dx(1, x) + classical.dx(0, x + y)
    assert str(w) == "(x + y)*dx + x*dy"
    assert str(classical.zero()) == "0"
    assert w - w == classical.zero()
    assert w * 2 == w + w
    assert (w * y).coeffs[1] == x * y
    assert -w + w == classical.zero()
    assert hash(w) == hash(classical.dx(0, x + y) + classical.dx(1, x))


def test_forms_from_different_algebras_rejected(classical, sl2sym):
    with pytest.raises(ValueError):
        classical.dx(0) + sl2sym.dx(0)
    with pytest.raises(ValueError):
        form_bracket(classical.dx(0), sl2sym.dx(0))


def test_quotient_base_rejected():
    with pytest.raises(ValueError):
        LieRinehartStructure(catalog("sl2-trunc"))


# -- bracket and anchor ----------------------------------------------------------------

def test_bracket_examples(classical, sl2sym):
    A = classical.algebra
    x, _ = A.gens
    assert form_bracket(classical.dx(0), classical.dx(1)) == classical.zero()
    assert form_bracket(classical.dx(0, x), classical.dx(0)) == classical.zero()
    dh, de = sl2sym.dx(1), sl2sym.dx(0)
    assert form_bracket(dh, de) == de * 2


def test_bracket_of_exact_forms_is_exact(sl2sym):
    # [du, dv] = d{u, v}
    A = sl2sym.algebra
    rng = random.Random(2)
    for _ in range(10):
        u, v = A.ring.random_element(rng, 2, 3), A.ring.random_element(rng, 2, 3)
        assert form_bracket(sl2sym.d(u), sl2sym.d(v)) == sl2sym.d(A.bracket(u, v))


def test_anchor_examples(classical):
    A = classical.algebra
    x, y = A.gens
    g = A.ring.parse("x^2 y^2 + y + x")
    assert anchor_apply(classical.dx(0), g) == g.diff(1)
    w = classical.dx(0, x) + classical.dx(1, y * y)
    assert anchor_apply(w, A.ring.const(2)) == 0
    f = x + y
    assert anchor_apply(w * f, g) == f * anchor_apply(w, g)
    assert classical.anchor(w)(g) == anchor_apply(w, g)


def test_anchor_of_exact_form_is_hamiltonian(sl2sym):
    A = sl2sym.algebra
    rng = random.Random(5)
    u, z = A.ring.random_element(rng, 3, 3), A.ring.random_element(rng, 3, 3)
    assert anchor_apply(sl2sym.d(u), z) == A.bracket(u, z)


# -- p-map -------------------------------------------------------------------------------

def test_pmap_examples(classical):
    x, _ = classical.algebra.gens
    assert form_pmap(classical, classical.dx(0)) == classical.zero()
    assert form_pmap(classical, classical.dx(0, x)) == classical.zero()


def test_pmap_semilinear_in_scalars(classical):
    rng = random.Random(11)
    for _ in range(5):
        w = classical.random_form(rng)
        assert classical.pmap(w * 2) == classical.pmap(w) * pow(2, 3, 3)


def test_pmap_of_pure_term_with_nontrivial_second_term(classical):
    # (y dx)^[3]: D = y d/dy, D^2(y) = y, pp(x) = 0, so the result is y dx
    _, y = classical.algebra.gens
    assert classical.pmap(classical.dx(0, y)) == classical.dx(0, y)
    mutated = LieRinehartStructure(classical.base, mutated=True)
    assert mutated.pmap(mutated.dx(0, y)) == mutated.zero()


def test_pmap_of_exact_form_is_d_of_pmap(sl2sym):
    # (du)^[p] = d(pp(u)) since D^{p-1}(1) = 0
    A = sl2sym.algebra
    rng = random.Random(8)
    for _ in range(5):
        u = A.ring.random_element(rng, 2, 3)
        assert sl2sym.pure_pmap(A.one, u) == sl2sym.d(sl2sym.base.pp(u))


def test_fold_order_invariance(sl2sym):
    rng = random.Random(4)
    for _ in range(5):
        w = sl2sym.random_form(rng)
        assert sl2sym.pmap(w) == sl2sym.pmap(w, order=[2, 1, 0])


# -- suite --------------------------------------------------------------------------------

@pytest.mark.parametrize("name", ["classical2", "sl2-sym", "classical2-p5", "affine-bracket-p3"])
def test_suite_passes(name):
    rep = verify_lie_rinehart(LieRinehartStructure(catalog(name)), samples=12)
    assert rep.passed, rep.to_text()


def test_mutated_control_fails_scalar_rule():
    rep = verify_lie_rinehart(LieRinehartStructure(catalog("classical2"), mutated=True),
                              samples=12)
    assert "scalar_rule" in rep.failed_checks()
    assert rep["scalar_rule"].witnesses


def test_kahler_basis_constructor(classical):
    x, _ = classical.algebra.gens
    assert KahlerForm.basis(classical.algebra, 1, x) == classical.dx(1, x)
    assert list(classical.dx(1, x).terms()) == [(1, x)]
