"""
Z4-линейные оболочки наборов векторов.

Векторы хранятся строками матрицы numpy (dtype int8, значения 0..3).
Оболочка строится замыканием по сложению: к текущему множеству по очереди
добавляются кратные c·g (c = 0..3) очередного генератора, дубликаты
удаляются через ``np.unique``. Результат отсортирован лексикографически.
"""

import logging
from typing import Iterable, Set, Tuple

import numpy as np

from .errors import check_budget
from .settings import DEFAULT_CODEWORD_BUDGET

logger = logging.getLogger(__name__)

Z4 = 4


def as_z4_rows(vectors, length: int) -> np.ndarray:
    """Приводит набор векторов к матрице int8 с элементами 0..3."""
    rows = np.asarray(vectors, dtype=np.int64).reshape(-1, length)
    return (rows % Z4).astype(np.int8)


def contains_row(span: np.ndarray, row: np.ndarray) -> bool:
    return bool(np.any(np.all(span == row, axis=1)))


def span_closure(generators, length: int, budget: int = DEFAULT_CODEWORD_BUDGET,
                 what: str = 'векторов') -> np.ndarray:
    """Все Z4-линейные комбинации строк ``generators``."""
    rows = as_z4_rows(generators, length)
    span = np.zeros((1, length), dtype=np.int8)
    multipliers = np.arange(Z4, dtype=np.int8).reshape(Z4, 1)
    for row in rows:
        if not row.any() or contains_row(span, row):
            continue
        multiples = (multipliers * row) % Z4
        candidate = (span[:, None, :] + multiples[None, :, :]) % Z4
        span = np.unique(candidate.reshape(-1, length), axis=0)
        check_budget(len(span), budget, what)
    logger.debug('Оболочка %d генераторов: %d %s', len(rows), len(span), what)
    return span


def row_keys(span: np.ndarray) -> Set[Tuple[int, ...]]:
    return {tuple(int(c) for c in row) for row in span}


def frozen_keys(rows: Iterable[np.ndarray]) -> frozenset:
    return frozenset(tuple(int(c) for c in row) for row in rows)
