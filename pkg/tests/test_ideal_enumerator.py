import pytest

from src.errors import InvalidInputError
from src.ideal_enumerator import (
    IdealEnumerator, count_formulas, enumerate_ideal_specs, gamma, ideal_cardinality, omega1, omega2, spec_table,
)


@pytest.mark.parametrize('k, expected', [(2, 7), (3, 13), (4, 23), (5, 37)])
def test_ideal_counts_over_z4(k, expected):
    assert count_formulas(1, k).total == expected


@pytest.mark.parametrize('k, expected', [(2, 13), (3, 31), (4, 113), (5, 259)])
def test_ideal_counts_over_gr_4_3(k, expected):
    assert count_formulas(3, k).total == expected


@pytest.mark.parametrize('d', [1, 2, 3, 4])
@pytest.mark.parametrize('k', range(2, 9))
def test_case_sum_matches_closed_form(d, k):
    counts = count_formulas(d, k)
    assert counts.total == counts.closed_form
    assert IdealEnumerator(d, k).enumerated_counts() == counts.case_counts


def test_case_counts_for_d3_k4():
    counts = count_formulas(3, 4)
    assert counts.case_counts == {'I': 5, 'II': 4, 'III': 77, 'IV': 14, 'V': 6, 'VI': 7}
    assert counts.to_dict()['case_III'] == 77


def test_counting_functions():
    assert gamma(8, 3) == 0
    assert gamma(8, 4) == 1
    assert gamma(8, 5) == 3
    assert omega1(2, 4) == 5
    assert omega2(2, 4) == 2


@pytest.mark.parametrize('d, k', [(1, 4), (2, 3), (3, 4)])
def test_enumeration_is_complete_and_distinct(d, k):
    specs = list(enumerate_ideal_specs(d, k))
    assert len(specs) == count_formulas(d, k).total
    assert len(set(specs)) == len(specs)


def test_enumeration_order_is_by_case():
    cases = [spec.case for spec in enumerate_ideal_specs(1, 4)]
    assert cases == sorted(cases, key=['I', 'II', 'III', 'IV', 'V', 'VI'].index)


def test_case_table_for_d1_k4():
    table = IdealEnumerator(1, 4).case_table()
    assert table['case'].tolist() == ['I', 'II', 'III', 'IV', 'V', 'VI']
    assert table['formula_count'].tolist() == table['enumerated_count'].tolist()
    assert int(table['enumerated_count'].sum()) == 23
    assert table.loc[table['case'] == 'I', 'log2_sizes'].iloc[0] == '0 2 4 6 8'


def test_spec_table_columns():
    specs = list(enumerate_ideal_specs(1, 2))
    table = spec_table(specs)
    assert list(table.columns) == ['spec', 'case', 'd', 'k', 'i', 's', 't', 'h', 'log2_size']
    assert table['log2_size'].tolist() == [ideal_cardinality(spec).bit_length() - 1 for spec in specs]


@pytest.mark.parametrize('d, k', [(0, 3), (1, 1), (2, 0)])
def test_invalid_parameters(d, k):
    with pytest.raises(InvalidInputError):
        count_formulas(d, k)
