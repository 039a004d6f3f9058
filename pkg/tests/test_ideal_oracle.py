import pytest

from src.errors import BudgetExceededError, InvalidInputError
from src.galois_rings import GaloisRing, ResidueField
from src.ideal_enumerator import IdealEnumerator
from src.ideal_oracle import brute_force_all_ideals, ideal_member_keys, ideal_members, monomial_basis, multiple_rows
from src.ideal_specs import IdealSpec


@pytest.mark.parametrize('d, k, expected', [(1, 2, 7), (1, 3, 13), (1, 4, 23), (2, 2, 9)])
def test_brute_force_matches_symbolic_enumeration(d, k, expected):
    found = brute_force_all_ideals(d, k)
    specs = list(IdealEnumerator(d, k).specs())
    symbolic = {ideal_member_keys(spec) for spec in specs}
    assert len(found) == expected
    assert len(symbolic) == len(specs) == expected
    assert symbolic == found


def test_member_sets_have_spec_cardinality():
    for spec in IdealEnumerator(1, 3).specs():
        assert len(ideal_members(spec)) == spec.cardinality


def test_monomial_basis_layout():
    ring = GaloisRing.default(2)
    basis = monomial_basis(ring, 2)
    assert [b.to_vector().tolist().index(1) for b in basis] == [0, 1, 2, 3]


def test_multiple_rows_requires_generators():
    with pytest.raises(InvalidInputError):
        multiple_rows([])


def test_oracle_respects_budget():
    with pytest.raises(BudgetExceededError):
        brute_force_all_ideals(2, 4, budget=1000)
    spec = IdealSpec('I', ResidueField.default(2), 3, i=0)
    with pytest.raises(BudgetExceededError):
        ideal_member_keys(spec, budget=100)
