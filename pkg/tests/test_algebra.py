from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altrings import (
    associator,
    check_alternative,
    check_associative,
    check_flexible,
    commutator,
    find_nonassociative_triple,
    mult_operators,
    multiply,
)
from altrings.algebra import Algebra, alternativity_witness
from altrings.errors import AlgebraMismatchError, UnitValidationError
from altrings.linalg import Matrix
from altrings.sampling import random_vector, rng_for

F = Fraction


def test_unit_validation_rejects_bad_unit(m2):
    with pytest.raises(UnitValidationError):
        Algebra(m2.constants, m2.basis_vec(0))  # E11 is not a two-sided unit


def test_unit_laws(zorn_algebra):
    one = zorn_algebra.one()
    for i in range(zorn_algebra.dim):
        b = zorn_algebra.basis_element(i)
        assert one * b == b
        assert b * one == b


def test_matrix_unit_product(m2):
    e11, e12 = m2.basis_element(0), m2.basis_element(1)
    assert multiply(e11, e12) == e12
    assert (e12 * e11).is_zero()


def test_zorn_offdiagonal_products(zorn_algebra):
    # hand-expanded vector-matrix products: u1 u2 = v3, u1 v1 = e1, v1 u1 = e2
    z = zorn_algebra
    u1, u2, v1 = z.basis_element(1), z.basis_element(2), z.basis_element(4)
    assert u1 * u2 == z.basis_element(6)
    assert u1 * v1 == z.basis_element(0)
    assert v1 * u1 == z.basis_element(7)


def test_algebra_mismatch_raises(m2, zorn_algebra):
    with pytest.raises(AlgebraMismatchError):
        multiply(m2.basis_element(0), zorn_algebra.basis_element(0))


def test_associator_vanishes_in_matrix_algebra(m2):
    rng = rng_for(7)
    for _ in range(10):
        x, y, z = (m2.element(random_vector(rng, 4)) for _ in range(3))
        assert associator(x, y, z).is_zero()


def test_zorn_alternating_law_on_samples(zorn_algebra):
    rng = rng_for(11)
    for _ in range(10):
        x = zorn_algebra.element(random_vector(rng, 8))
        y = zorn_algebra.element(random_vector(rng, 8))
        assert associator(x, x, y).is_zero()
        assert associator(y, x, x).is_zero()


def test_zorn_nonassociative_witness(zorn_algebra):
    # (u1, u2, u3) = e2 - e1, found by brute force over basis triples
    z = zorn_algebra
    w = associator(z.basis_element(1), z.basis_element(2), z.basis_element(3))
    assert w == z.element([-1, 0, 0, 0, 0, 0, 0, 1])
    assert find_nonassociative_triple(z) is not None


def test_commutator_basics(m2, zorn_algebra):
    e11, e12 = m2.basis_element(0), m2.basis_element(1)
    assert commutator(e11, e11).is_zero()
    assert commutator(e11, e12) == e12
    # [e1, a12] = a12 on the off-diagonal corner
    e1, u1 = zorn_algebra.basis_element(0), zorn_algebra.basis_element(1)
    assert commutator(e1, u1) == u1


def test_mult_operators_unit(m2):
    l, r = mult_operators(m2.one())
    assert l == Matrix.identity(4)
    assert r == Matrix.identity(4)


def test_mult_operators_e11_frozen(m2):
    # L projects onto the first row of columns, R onto rows: written out by hand
    l, r = mult_operators(m2.basis_element(0))
    assert l == Matrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    assert r == Matrix.from_rows([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]])


def test_left_minus_right_is_commutator(zorn_algebra):
    rng = rng_for(3)
    y = zorn_algebra.element(random_vector(rng, 8))
    l, r = mult_operators(y)
    for i in range(8):
        x = zorn_algebra.basis_element(i)
        assert (l - r).apply(x.coeffs) == commutator(y, x).coeffs


def test_identity_flags(m2, m3, zorn_algebra, nonalternative):
    for a in (m2, m3):
        assert check_alternative(a) and check_flexible(a) and check_associative(a)
    assert check_alternative(zorn_algebra)
    assert check_flexible(zorn_algebra)
    assert not check_associative(zorn_algebra)
    assert not check_alternative(nonalternative)
    assert not check_flexible(nonalternative)
    assert alternativity_witness(nonalternative) is not None


def test_alternative_implies_flexible_on_builtins(m2, zorn_algebra):
    for a in (m2, zorn_algebra):
        if check_alternative(a):
            assert check_flexible(a)


coeffs8 = st.lists(
    st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=8, max_size=8
)


@given(coeffs8, coeffs8, coeffs8, st.fractions(min_value=-3, max_value=3, max_denominator=2))
def test_bilinearity(zorn_algebra, av, bv, cv, alpha):
    a = zorn_algebra.element(av)
    b = zorn_algebra.element(bv)
    c = zorn_algebra.element(cv)
    assert (alpha * a + b) * c == alpha * (a * c) + b * c
    assert c * (alpha * a + b) == alpha * (c * a) + c * b


def test_associator_alternates_on_basis(zorn_algebra):
    z = zorn_algebra
    for i in range(8):
        for j in range(8):
            for k in range(8):
                x, y, w = z.basis_element(i), z.basis_element(j), z.basis_element(k)
                assert associator(x, y, w) == -associator(y, x, w)
                assert associator(x, y, w) == -associator(x, w, y)


def test_mult_operator_consistency(zorn_algebra):
    rng = rng_for(5)
    y = zorn_algebra.element(random_vector(rng, 8))
    l, _ = mult_operators(y)
    for i in range(8):
        x = zorn_algebra.basis_element(i)
        assert l.apply(x.coeffs) == (y * x).coeffs
