import dataclasses

import pytest

from src.errors import InvalidInputError, InvariantViolationError
from src.factor_system import block_arrangement, build_factor_system, check_aligned, factor_index, sorted_order
from src.polynomials import F2Poly, Z4Poly


def test_system_for_7(system7):
    assert system7.r == 3
    assert system7.degrees == (1, 3, 3)
    assert [f.f for f in system7.factors] == [Z4Poly((3, 1)), Z4Poly((3, 1, 2, 1)), Z4Poly((3, 2, 3, 1))]
    assert system7.sigma == (0, 2, 1)
    assert system7.delta == (3, 3, 3)
    assert (system7.lam, system7.eps) == (1, 1)
    assert system7.pairs() == [(1, 2)]
    assert system7.self_paired() == [0]


def test_system_for_3_has_only_self_paired_factors(system3):
    assert system3.degrees == (1, 2)
    assert system3.sigma == (0, 1)
    assert (system3.lam, system3.eps) == (2, 0)


def test_system_for_1(system1):
    assert system1.r == 1
    assert system1.idempotent(0) == Z4Poly.one()


def test_block_order_for_longer_length():
    system = build_factor_system(15)
    assert system.lam + 2 * system.eps == system.r
    for l in range(system.eps):
        assert system.sigma[system.lam + l] == system.lam + system.eps + l
    assert all(system.is_self_paired(j) for j in range(system.lam))


def test_sorted_order_is_a_permutation():
    system = build_factor_system(15, block_order=False)
    assert sorted_order(system) == list(range(system.r))
    blocked = build_factor_system(15)
    assert sorted(f.f_bar.to_int() for f in blocked.factors) == [f.f_bar.to_int() for f in system.factors]


def test_block_arrangement():
    assert block_arrangement([0, 2, 1, 4, 3]) == [0, 1, 3, 2, 4]


def test_verify_detects_broken_sigma(system7):
    broken = dataclasses.replace(system7, sigma=(0, 1, 2))
    with pytest.raises(InvariantViolationError):
        broken.verify()


def test_factor_index_and_alignment(system7):
    assert factor_index(system7, F2Poly.from_int(0b1101)) == 2
    assert factor_index(system7, F2Poly.from_int(0b111)) is None
    with pytest.raises(InvalidInputError):
        check_aligned(system7, 2)


def test_to_table(system7):
    table = system7.to_table()
    assert table['j'].tolist() == [1, 2, 3]
    assert table['sigma'].tolist() == [1, 3, 2]
    assert table['e_coeffs'].iloc[1] == [1, 3, 3, 2, 3, 2, 2]
    assert system7.summary()['order'] == 'block'


def test_even_length_rejected():
    with pytest.raises(InvalidInputError):
        build_factor_system(4)
