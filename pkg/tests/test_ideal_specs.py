import itertools

import pytest

from src.errors import InvalidInputError
from src.galois_rings import ChainEl, GaloisRing, MixedEl, ResidueField
from src.ideal_enumerator import IdealEnumerator
from src.ideal_oracle import ideal_member_keys
from src.ideal_specs import IdealSpec


@pytest.fixture(scope='module')
def f2():
    return ResidueField.default(1)


@pytest.fixture(scope='module')
def f8():
    return ResidueField.default(3)


def unit(field, values, k):
    return ChainEl.from_values(field, values, length=k)


def test_case_parameters_are_validated(f2):
    with pytest.raises(InvalidInputError):
        IdealSpec('I', f2, 4, s=1)
    with pytest.raises(InvalidInputError):
        IdealSpec('V', f2, 4, i=2, s=2)
    with pytest.raises(InvalidInputError):
        IdealSpec('VII', f2, 4, i=1)
    # t >= 2i - k нарушено для III
    with pytest.raises(InvalidInputError):
        IdealSpec('III', f2, 4, i=3, t=1, h=unit(f2, [1], 4))


def test_twist_must_be_reduced_unit(f8):
    with pytest.raises(InvalidInputError):
        IdealSpec('III', f8, 4, i=2, t=1, h=unit(f8, [0, 1], 4))
    with pytest.raises(InvalidInputError):
        IdealSpec('III', f8, 4, i=2, t=1, h=unit(f8, [1, 1], 4))
    spec = IdealSpec('III', f8, 4, i=2, t=0, h=unit(f8, [3, 5], 4))
    assert spec.quotient_length == 2


@pytest.mark.parametrize('spec_args, log2_size', [
    (('I', {'i': 0}), 24),
    (('I', {'i': 4}), 0),
    (('II', {'s': 0}), 12),
    (('V', {'i': 3, 's': 1}), 12),
])
def test_cardinality_by_tor_exponents(f8, spec_args, log2_size):
    case, params = spec_args
    assert IdealSpec(case, f8, 4, **params).cardinality == 2 ** log2_size


def test_cardinality_of_twisted_cases(f8):
    iii = IdealSpec('III', f8, 4, i=3, t=2, h=unit(f8, [1], 4))
    iv = IdealSpec('IV', f8, 4, i=3, t=1, h=unit(f8, [6], 4))
    vi = IdealSpec('VI', f8, 4, i=2, s=1, t=0, h=unit(f8, [2], 4))
    assert iii.tor_exponents == (3, 3)
    assert iii.cardinality == 2 ** 6
    assert iv.tor_exponents == (3, 2)
    assert iv.cardinality == 2 ** 9
    assert vi.cardinality == 2 ** 15


def test_from_generators_degenerate_forms(f2):
    k = 4
    assert IdealSpec.from_generators(f2, k) == IdealSpec('I', f2, k, i=4)
    assert IdealSpec.from_generators(f2, k, i=4, s=0) == IdealSpec('II', f2, k, s=0)
    assert IdealSpec.from_generators(f2, k, i=2, s=3) == IdealSpec('I', f2, k, i=2)
    assert IdealSpec.from_generators(f2, k, i=3, s=1) == IdealSpec('V', f2, k, i=3, s=1)
    # 2u^3 h лежит в <u^2>
    assert IdealSpec.from_generators(f2, k, i=2, t=3, h=unit(f2, [1], k)) == IdealSpec('I', f2, k, i=2)


def test_from_generators_absorbs_twist_valuation(f2):
    spec = IdealSpec.from_generators(f2, 4, i=3, t=0, h=unit(f2, [0, 0, 1, 1], 4))
    assert spec == IdealSpec('III', f2, 4, i=3, t=2, h=unit(f2, [1], 4))


def test_from_generators_picks_case_iv_and_vi(f8):
    h = unit(f8, [3, 1], 4)
    iv = IdealSpec.from_generators(f8, 4, i=3, t=0, h=h)
    assert iv.case == 'IV'
    assert iv.h == unit(f8, [3], 4)
    vi = IdealSpec.from_generators(f8, 4, i=2, t=0, h=h, s=1)
    assert vi.case == 'VI'
    assert (vi.i, vi.s, vi.t) == (2, 1, 0)


def test_from_generators_rejects_out_of_range(f2):
    with pytest.raises(InvalidInputError):
        IdealSpec.from_generators(f2, 4, i=5)
    with pytest.raises(InvalidInputError):
        IdealSpec.from_generators(f2, 4, i=2, t=1)


def test_format_spec(f2, f8):
    assert str(IdealSpec('I', f2, 4, i=4)) == '0'
    assert str(IdealSpec('I', f2, 4, i=0)) == '1'
    assert str(IdealSpec('I', f2, 4, i=3)) == 'u^3'
    assert str(IdealSpec('II', f2, 4, s=0)) == '2'
    assert str(IdealSpec('III', f2, 4, i=2, t=1, h=unit(f2, [1], 4))) == 'u^2+2u'
    assert str(IdealSpec('III', f2, 4, i=2, t=0, h=unit(f2, [1, 1], 4))) == 'u^2+2*(1+u)'
    assert str(IdealSpec('V', f2, 4, i=3, s=1)) == '(u^3,2u)'
    assert str(IdealSpec('III', f8, 4, i=3, t=2, h=unit(f8, [5], 4))) == 'u^3+2u^2*(x^2+1)'


def test_generators_belong_to_ideal(f8):
    ring = GaloisRing.default(3)
    for spec in IdealEnumerator(3, 3).specs():
        for g in spec.generators(ring):
            assert spec.contains(g)


@pytest.mark.parametrize('d, k', [(1, 2), (1, 3), (1, 4), (2, 2)])
def test_contains_matches_enumerated_members(d, k):
    ring = GaloisRing.default(d)
    elements = [MixedEl.from_vector(ring, k, digits) for digits in itertools.product(range(4), repeat=d * k)]
    for spec in IdealEnumerator(d, k).specs():
        members = ideal_member_keys(spec, ring)
        assert len(members) == spec.cardinality
        for element in elements:
            key = tuple(int(c) for c in element.to_vector())
            assert spec.contains(element) == (key in members)
