import numpy as np
import pytest

from src.errors import BudgetExceededError
from src.z4_span import as_z4_rows, contains_row, row_keys, span_closure


def test_span_of_unit_and_two():
    span = span_closure([[1, 0], [0, 2]], 2)
    assert row_keys(span) == {(a, b) for a in range(4) for b in (0, 2)}


def test_span_ignores_zero_and_repeated_rows():
    span = span_closure([[0, 0, 0], [1, 1, 1], [3, 3, 3], [2, 2, 2]], 3)
    assert len(span) == 4
    assert contains_row(span, np.array([2, 2, 2], dtype=np.int8))
    assert not contains_row(span, np.array([1, 0, 0], dtype=np.int8))


def test_empty_generators_give_zero_word():
    span = span_closure(np.zeros((0, 5), dtype=np.int64), 5)
    assert span.tolist() == [[0] * 5]


def test_rows_are_reduced_mod_four():
    assert as_z4_rows([5, -1, 8], 3).tolist() == [[1, 3, 0]]


def test_budget():
    with pytest.raises(BudgetExceededError):
        span_closure(np.eye(4, dtype=np.int64), 4, budget=100)
