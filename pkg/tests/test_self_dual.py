import pytest

from src.duality import annihilates, dual_code, is_self_dual
from src.errors import InvalidInputError
from src.factor_system import build_factor_system
from src.galois_rings import ResidueField
from src.ideal_specs import IdealSpec
from src.self_dual import (
    SelfDualCensus, census_table, check_printed_rules, count_self_dual, enumerate_self_dual, printed_rule_ideals,
    self_dual_by_filter, self_dual_ideals, self_paired_tag,
)

FACTOR_ONE_SELF_DUAL = {'u^2', '2', 'u^2+2', 'u^2+2*(1+u)', 'u^2+2u', 'u^3+2', '(u^3,2u)'}


def test_number_of_self_dual_codes_of_length_7(system7):
    assert count_self_dual(system7, 4) == 791


def test_self_dual_ideals_of_linear_factor(system7):
    specs = self_dual_ideals(system7, 0, 4)
    assert {str(spec) for spec in specs} == FACTOR_ONE_SELF_DUAL
    with pytest.raises(InvalidInputError):
        self_dual_ideals(system7, 1, 4)


def test_printed_rules_miss_one_ideal(system7, caplog):
    checks = check_printed_rules(system7, 4)
    assert len(checks) == 1
    check = checks[0]
    assert check.j == 0
    assert [str(spec) for spec in check.missing_from_rules] == ['(u^3,2u)']
    assert check.extra_in_rules == ()
    assert not check.consistent
    assert 'правила A не совпадают' in caplog.text


def test_printed_rules_are_self_dual_where_they_apply(system7):
    filtered = set(self_dual_ideals(system7, 0, 4))
    for spec in printed_rule_ideals(system7, 0, 4):
        assert spec in filtered


def test_rule_tags():
    field = ResidueField.default(1)
    assert self_paired_tag(IdealSpec('I', field, 4, i=2)) == 'A-i-1'
    assert self_paired_tag(IdealSpec('V', field, 4, i=3, s=1)) == 'A-i-5'
    assert self_paired_tag(IdealSpec('II', field, 3, s=0)) == 'A-ii-1'


def test_pair_table_breakdown(system7):
    table = SelfDualCensus(system7, 4).pair_table()
    assert table['count'].tolist() == [5, 4, 7, 56, 7, 7, 7, 7, 6, 7]
    assert table['rule'].tolist() == ['B-1', 'B-2', 'B-3', 'B-3', 'B-3', 'B-3', 'B-4', 'B-5', 'B-6', 'B-7']
    assert set(table['pair']) == {'(2,3)'}
    assert table['count'].sum() == 113


def test_census_matches_filter_for_length_one(system1):
    census = {code.specs for code in enumerate_self_dual(system1, 2)}
    assert census == self_dual_by_filter(system1, 2)
    assert len(census) == 3


def test_census_matches_filter_for_length_three(system3):
    for k in (2, 3):
        census = {code.specs for code in enumerate_self_dual(system3, k, threads=2)}
        assert census == self_dual_by_filter(system3, k)
        assert len(census) == count_self_dual(system3, k)


def test_census_table(system1):
    entries = list(SelfDualCensus(system1, 2).entries())
    table = census_table(entries)
    assert table['number'].tolist() == [1, 2, 3]
    assert sorted(table['specs']) == ['2', 'u', 'u+2']
    assert set(table['log2_size']) == {2}


def test_census_requires_chain_length_two(system7):
    with pytest.raises(InvalidInputError):
        SelfDualCensus(system7, 1)


@pytest.mark.slow
def test_all_listed_codes_are_self_dual(system7):
    entries = list(SelfDualCensus(system7, 4, threads=4).entries())
    assert len(entries) == 791
    assert len({entry.code.specs for entry in entries}) == 791
    for entry in entries:
        assert is_self_dual(entry.code)
        assert entry.code.log2_size == 28
    for entry in entries[::97]:
        assert annihilates(entry.code, dual_code(entry.code))


def _brute_force_factor_set(k):
    system = build_factor_system(1)
    return system, {specs[0] for specs in self_dual_by_filter(system, k)}


def test_written_rules_against_brute_force_for_k4():
    system, brute = _brute_force_factor_set(4)
    assert set(self_dual_ideals(system, 0, 4)) == brute
    check = check_printed_rules(system, 4)[0]
    assert set(check.missing_from_rules) == brute - set(printed_rule_ideals(system, 0, 4))
    assert [str(spec) for spec in check.missing_from_rules] == ['(u^3,2u)']
    assert check.extra_in_rules == ()


def test_written_rules_against_brute_force_for_k5():
    system, brute = _brute_force_factor_set(5)
    assert set(self_dual_ideals(system, 0, 5)) == brute
    printed = set(printed_rule_ideals(system, 0, 5))
    check = check_printed_rules(system, 5)[0]
    assert set(check.missing_from_rules) == brute - printed
    assert set(check.extra_in_rules) == printed - brute
    assert '(u^3,2u^2)' in {str(spec) for spec in check.missing_from_rules}


def test_filter_does_not_rely_on_dual_table(system3, monkeypatch):
    expected = count_self_dual(system3, 2)

    def forbidden(*args, **kwargs):
        pytest.fail('перебор не должен обращаться к таблице дуальности')

    monkeypatch.setattr('src.self_dual.dual_ideal_spec', forbidden)
    monkeypatch.setattr('src.self_dual.dual_case_row', forbidden)
    assert len(self_dual_by_filter(system3, 2)) == expected


@pytest.mark.slow
def test_census_matches_filter_for_length_seven_k2(system7):
    census = {code.specs for code in enumerate_self_dual(system7, 2)}
    assert census == self_dual_by_filter(system7, 2)
    assert len(census) == 3 * 13
    assert all(check.consistent for check in check_printed_rules(system7, 2))
