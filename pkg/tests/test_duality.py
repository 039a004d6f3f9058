import pytest

from src.cyclic_codes import CodeElement, CyclicCode, iterate_codes, unit_code, zero_code
from src.duality import (
    DUAL_TABLE, annihilates, dual_case_row, dual_code, dual_ideal_spec, euclidean_inner_product, is_self_dual,
    substitute_inverse,
)
from src.errors import InvalidInputError
from src.galois_rings import ChainEl
from src.ideal_enumerator import IdealEnumerator
from src.ideal_specs import IdealSpec


def test_euclidean_inner_product_in_chain_ring():
    a = CodeElement([[1, 0], [0, 1]])
    b = CodeElement([[1, 1], [2, 0]])
    # 1·(1+u) + u·2 = 1 + 3u
    assert euclidean_inner_product(a, b) == (1, 3)
    with pytest.raises(InvalidInputError):
        euclidean_inner_product(a, CodeElement([[1, 0, 0]]))


@pytest.mark.parametrize('k', [2, 3, 4])
def test_all_codes_of_length_one(system1, k):
    for code in iterate_codes(system1, k):
        dual = dual_code(code)
        assert code.cardinality * dual.cardinality == 4 ** k
        assert annihilates(code, dual)
        assert dual_code(dual).specs == code.specs


def test_chain_length_one_is_rejected(system1):
    with pytest.raises(InvalidInputError):
        list(iterate_codes(system1, 1))


def test_all_codes_of_length_three(system3):
    for code in iterate_codes(system3, 2):
        dual = dual_code(code)
        assert code.cardinality * dual.cardinality == 4 ** 6
        assert annihilates(code, dual)
        assert dual_code(dual).specs == code.specs


def test_self_dual_codes_of_length_one(system1):
    found = sorted(code.spec_string() for code in iterate_codes(system1, 2) if is_self_dual(code))
    assert found == ['2', 'u', 'u+2']


def test_unit_and_zero_codes_are_dual(system7):
    assert dual_code(unit_code(system7, 3)).specs == zero_code(system7, 3).specs
    assert dual_code(zero_code(system7, 3)).specs == unit_code(system7, 3).specs


def test_dual_moves_ideal_to_reciprocal_factor(system7):
    field2, field3 = system7.field(1), system7.field(2)
    code = CyclicCode(system7, 2, (
        IdealSpec('I', system7.field(0), 2, i=0),
        IdealSpec('I', field2, 2, i=1),
        IdealSpec('II', field3, 2, s=0),
    ))
    dual = dual_code(code)
    assert str(dual.specs[0]) == '0'
    # <2> на f_3 переходит в <u^2, 2> = <2> на f_2
    assert str(dual.specs[1]) == '2'
    assert str(dual.specs[2]) == 'u'
    assert annihilates(code, dual)


def test_substitute_inverse_is_an_involution(system7):
    field2 = system7.field(1)
    h = ChainEl.from_values(field2, [[1, 1], [0, 1, 1], [1]], length=3)
    image = substitute_inverse(h, system7, 1)
    assert image.field == system7.field(2)
    assert substitute_inverse(image, system7, 2) == h
    one = ChainEl.one(field2, 2)
    assert substitute_inverse(one, system7, 1) == ChainEl.one(system7.field(2), 2)
    with pytest.raises(InvalidInputError):
        substitute_inverse(h, system7, 0)


def test_every_ideal_matches_exactly_one_table_row(system7):
    field = system7.field(1)
    for spec in IdealEnumerator(3, 4, field).specs():
        matching = [row for row in DUAL_TABLE if row.matches(spec)]
        assert len(matching) == 1
        assert matching[0] is dual_case_row(spec)
        dual = dual_ideal_spec(spec, system7, 1)
        assert spec.cardinality * dual.cardinality == 2 ** (2 * 3 * 4)


@pytest.mark.slow
def test_random_codes_of_length_seven(system7, rng):
    per_factor = [list(IdealEnumerator(d, 4, system7.field(j)).specs()) for j, d in enumerate(system7.degrees)]
    for _ in range(500):
        specs = tuple(choices[int(rng.integers(len(choices)))] for choices in per_factor)
        code = CyclicCode(system7, 4, specs)
        dual = dual_code(code)
        assert code.cardinality * dual.cardinality == 4 ** 28
        assert annihilates(code, dual)
        assert dual_code(dual).specs == specs
