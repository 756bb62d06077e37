from fractions import Fraction

import pytest

from altrings import (
    analyze,
    associator,
    center,
    centralizer,
    check_prime,
    derivation_algebra,
    is_derivation,
    nucleus,
    verify_idempotent,
)
from altrings.catalog import direct_sum, matrix_algebra
from altrings.errors import NotAlternativeError
from altrings.linalg import Subspace, is_zero_vec
from altrings.structure import IdempotentKind

F = Fraction


def test_nucleus_matrix_algebra_full(m2):
    assert nucleus(m2) == Subspace.full(4)


def test_nucleus_zorn_is_unit_line(zorn_algebra):
    nuc = nucleus(zorn_algebra)
    assert nuc.basis == (zorn_algebra.unit,)
    # brute-force cross-check: the unit associates with every basis pair
    one = zorn_algebra.one()
    for i in range(8):
        for j in range(8):
            x = zorn_algebra.basis_element(i)
            y = zorn_algebra.basis_element(j)
            assert associator(x, y, one).is_zero()
            assert associator(x, one, y).is_zero()
            assert associator(one, x, y).is_zero()


def test_nucleus_direct_sum_full(m2m2):
    assert nucleus(m2m2).dim == 8


def test_center_matrix_algebra(m2):
    # scalar matrices: canonical basis is the identity's coefficient vector
    assert center(m2).basis == ((F(1), F(0), F(0), F(1)),)


def test_center_zorn(zorn_algebra):
    assert center(zorn_algebra).basis == (zorn_algebra.unit,)


def test_center_direct_sum_dims(m2, zorn_algebra):
    q = matrix_algebra(1)
    for a, b in ((m2, m2), (zorn_algebra, q), (m2, q)):
        s = direct_sum(a, b)
        assert center(s).dim == center(a).dim + center(b).dim


def test_center_inside_nucleus(m2, zorn_algebra, m2m2, nonalternative):
    for a in (m2, zorn_algebra, m2m2, nonalternative):
        assert nucleus(a).contains(center(a))


def test_derivations_trivial_for_scalars():
    assert derivation_algebra(matrix_algebra(1)) == ()


def test_derivations_m2(m2):
    ders = derivation_algebra(m2)
    assert len(ders) == 3
    for d in ders:
        assert is_derivation(m2, d)
        assert is_zero_vec(d.apply(m2.unit))


def test_derivations_zorn(zorn_algebra):
    ders = derivation_algebra(zorn_algebra)
    assert len(ders) == 14
    for d in ders:
        assert is_derivation(zorn_algebra, d)
        assert is_zero_vec(d.apply(zorn_algebra.unit))


def test_verify_idempotent(m2):
    assert verify_idempotent(m2, m2.one()) is IdempotentKind.TRIVIAL
    assert verify_idempotent(m2, m2.zero()) is IdempotentKind.TRIVIAL
    assert verify_idempotent(m2, m2.basis_element(0)) is IdempotentKind.NONTRIVIAL
    # (E11 + E12)^2 = E11 + E12 by direct multiplication
    e = m2.element([1, 1, 0, 0])
    assert (e * e) == e
    assert verify_idempotent(m2, e) is IdempotentKind.NONTRIVIAL
    assert verify_idempotent(m2, m2.basis_element(1)) is IdempotentKind.NOT_IDEMPOTENT


def _witness_is_valid(a, result):
    x, b = result.witness
    assert not x.is_zero() and not b.is_zero()
    for k in range(a.dim):
        prod = a.mul_vec(a.mul_vec(x.coeffs, a.basis_vec(k)), b.coeffs)
        assert is_zero_vec(prod)


def test_check_prime_direct_sum(m2m2):
    result = check_prime(m2m2, trials=5, seed=3)
    assert not result.probably_prime
    _witness_is_valid(m2m2, result)


def test_check_prime_zorn_plus_scalars(zorn_algebra):
    s = direct_sum(zorn_algebra, matrix_algebra(1))
    result = check_prime(s, trials=5, seed=3)
    assert not result.probably_prime
    _witness_is_valid(s, result)


def test_check_prime_simple_algebras(m2, zorn_algebra):
    assert check_prime(m2, trials=10, seed=5).probably_prime
    assert check_prime(zorn_algebra, trials=10, seed=5).probably_prime


def test_check_prime_requires_alternative(nonalternative):
    with pytest.raises(NotAlternativeError):
        check_prime(nonalternative, trials=1, seed=0)


def test_check_prime_rejects_zero_trials(m2):
    with pytest.raises(ValueError):
        check_prime(m2, trials=0, seed=0)


def test_centralizer_of_everything_is_center(m2, zorn_algebra):
    for a in (m2, zorn_algebra):
        assert centralizer(a, Subspace.full(a.dim)) == center(a)


def test_centralizer_of_unit_line_is_full(m2):
    assert centralizer(m2, Subspace.span(4, [m2.unit])) == Subspace.full(4)


def test_centralizer_of_offdiag_corner_m2(m2):
    # elements commuting with E12: span{I, E12}, computed by hand
    r12 = Subspace.span(4, [m2.basis_vec(1)])
    c = centralizer(m2, r12)
    assert c.dim == 2
    assert c.contains_vector(m2.unit)
    assert c.contains_vector(m2.basis_vec(1))


def test_analyze_reports(m2, zorn_algebra):
    rep = analyze(m2)
    assert (rep.nucleus.dim, rep.center.dim, rep.derivation_dim) == (4, 1, 3)
    assert rep.is_associative and rep.is_alternative and rep.is_flexible
    rep = analyze(zorn_algebra)
    assert (rep.nucleus.dim, rep.center.dim, rep.derivation_dim) == (1, 1, 14)
    assert rep.is_alternative and rep.is_flexible and not rep.is_associative


def test_analyze_scalars():
    rep = analyze(matrix_algebra(1))
    assert (rep.nucleus.dim, rep.center.dim, rep.derivation_dim) == (1, 1, 0)
