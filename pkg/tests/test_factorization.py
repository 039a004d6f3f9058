from functools import reduce

import pytest

from src.errors import InvalidInputError
from src.factorization import (
    bezout_pair, cyclotomic_cosets, factor_xn_minus_1_f2, graeffe_lift, hensel_lift, idempotents, lift_factors,
    multiplicative_order, multiply_mod_xn, x_order,
)
from src.polynomials import F2Poly, Z4Poly

F1 = Z4Poly((3, 1))
F2 = Z4Poly((3, 1, 2, 1))
F3 = Z4Poly((3, 2, 3, 1))

E1 = [3, 3, 3, 3, 3, 3, 3]
E2 = [1, 3, 3, 2, 3, 2, 2]
E3 = [1, 2, 2, 3, 2, 3, 3]


def test_cyclotomic_cosets_for_7():
    assert cyclotomic_cosets(7) == [[0], [1, 2, 4], [3, 6, 5]]
    assert multiplicative_order(7) == 3
    assert multiplicative_order(1) == 1


def test_factors_over_f2_are_sorted():
    assert [f.to_int() for f in factor_xn_minus_1_f2(7)] == [0b11, 0b1011, 0b1101]
    assert [f.to_int() for f in factor_xn_minus_1_f2(3)] == [0b11, 0b111]
    assert [f.to_int() for f in factor_xn_minus_1_f2(1)] == [0b11]


def test_lifted_factors_for_7():
    assert lift_factors(7) == [F1, F2, F3]
    product = reduce(lambda a, b: a * b, lift_factors(7))
    assert product == Z4Poly.x_n_minus_1(7)


@pytest.mark.parametrize('n', [1, 3, 5, 9, 15, 21])
def test_lift_divides_xn_minus_1(n):
    factors = lift_factors(n)
    assert reduce(lambda a, b: a * b, factors) == Z4Poly.x_n_minus_1(n)
    assert all(f.is_monic() for f in factors)


def test_graeffe_lift_of_primitive_polynomial():
    assert graeffe_lift(F2Poly.from_int(0b1011)) == F2
    with pytest.raises(InvalidInputError):
        graeffe_lift(F2Poly.from_int(0b101))


def test_hensel_lift_rejects_non_divisor():
    with pytest.raises(InvalidInputError):
        hensel_lift(F2Poly.from_int(0b111), 7)


@pytest.mark.parametrize('n', [0, 2, 8, -3])
def test_even_or_nonpositive_length_rejected(n):
    with pytest.raises(InvalidInputError):
        factor_xn_minus_1_f2(n)


def test_idempotents_for_7():
    e = idempotents(7)
    assert [p.coeffs + (0,) * (7 - len(p.coeffs)) for p in e] == [tuple(E1), tuple(E2), tuple(E3)]
    assert reduce(lambda a, b: a + b, e).mod_xn_minus_1(7) == Z4Poly.one()
    for j, first in enumerate(e):
        for l, second in enumerate(e):
            expected = first if j == l else Z4Poly.zero()
            assert multiply_mod_xn(first, second, 7) == expected


def test_bezout_pair_identity():
    F, _ = Z4Poly.x_n_minus_1(7).divmod(F2)
    v, w = bezout_pair(F, F2)
    assert v * F + w * F2 == Z4Poly.one()


def test_bezout_pair_requires_coprime_inputs():
    # x+1 и x+3 совпадают по модулю 2
    with pytest.raises(InvalidInputError):
        bezout_pair(Z4Poly((1, 1)), Z4Poly((3, 1)))


ODD_LENGTHS = [pytest.param(n, marks=pytest.mark.slow) if n > 45 else n for n in range(1, 64, 2)]


@pytest.mark.parametrize('n', ODD_LENGTHS)
def test_hensel_lift_for_every_odd_length(n):
    binary = factor_xn_minus_1_f2(n)
    factors = lift_factors(n)
    assert reduce(lambda a, b: a * b, factors) == Z4Poly.x_n_minus_1(n)
    for g, f in zip(binary, factors):
        assert f.is_monic()
        assert f.reduce_mod2() == g
        assert hensel_lift(g) == f


@pytest.mark.parametrize('n', ODD_LENGTHS)
def test_idempotents_for_every_odd_length(n):
    e = idempotents(n)
    assert len(e) == len(factor_xn_minus_1_f2(n))
    assert reduce(lambda a, b: a + b, e).mod_xn_minus_1(n) == Z4Poly.one()
    for j, first in enumerate(e):
        assert multiply_mod_xn(first, first, n) == first
        for second in e[j + 1:]:
            assert multiply_mod_xn(first, second, n).is_zero()


def test_x_order_gives_length_of_lift():
    assert x_order(F2Poly.from_int(0b11)) == 1
    assert x_order(F2Poly.from_int(0b111)) == 3
    assert x_order(F2Poly.from_int(0b1011)) == 7
    # x^4+x^3+x^2+x+1 делит x^5+1
    assert x_order(F2Poly.from_int(0b11111)) == 5
    assert hensel_lift(F2Poly.from_int(0b1011)) == F2
    with pytest.raises(InvalidInputError):
        x_order(F2Poly.from_int(0b10))
