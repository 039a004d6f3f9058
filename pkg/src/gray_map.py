"""
Отображение Υ: A[u]/<u^4> -> A^4 и квазициклические коды над Z4.

Υ(ξ0 + uξ1 + u^2ξ2 + u^3ξ3) = (ξ3, ξ2+ξ3, ξ1+ξ2+ξ3, ξ0+ξ1+ξ2+ξ3).
Образ циклического кода длины n есть квазициклический код длины 4n
индекса 4. Вес Ли над Z4: 0, 1, 2, 1.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .cyclic_codes import CodeElement, CyclicCode, codeword_matrix
from .errors import InvalidInputError, InvariantViolationError, check_budget
from .settings import DEFAULT_CODEWORD_BUDGET
from .z4_span import span_closure

logger = logging.getLogger(__name__)

GRAY_K = 4
LEE_WEIGHTS = np.array([0, 1, 2, 1], dtype=np.int64)

# Выборка различных строк таблицы кодов длины 28 (n = 7, k = 4):
# спецификации по множителям и ожидаемые параметры [4n, log2 M, d].
QC_TABLE: Tuple[Tuple[str, Tuple[int, int, int]], ...] = (
    ('u^4;u^3;u^4', (28, 6, 24)),
    ('u^4;u^4;u^3+2u^2*(x^2+1)', (28, 6, 24)),
    ('u^4;u^4;u^3+2u^2*(x)', (28, 6, 24)),
    ('u^4;u^4;u^3+2u^2*(x^2+x)', (28, 6, 24)),
    ('u^4;u^4;u^3+2u^2', (28, 6, 24)),
    ('u^4;u^4;u^3+2u^2*(x^2)', (28, 6, 24)),
    ('u^4;u^4;u^3+2u^2*(x^2+x+1)', (28, 6, 24)),
    ('u^3;u^4;u^3+2u^2*(x^2)', (28, 8, 20)),
    ('u^3;u^4;u^3+2u^2*(x^2+x)', (28, 8, 20)),
    ('u^3;u^4;u^3+2u^2*(x)', (28, 8, 20)),
    ('u^3;u^4;u^3+2u^2*(x^2+1)', (28, 8, 20)),
    ('u^3;u^4;u^3+2u^2*(x+1)', (28, 8, 20)),
    ('u^3;u^4;u^3+2u^2*(x^2+x+1)', (28, 8, 20)),
    ('u^3+2u^2;u^4;u^3+2u^2*(x^2)', (28, 8, 20)),
    ('u^3+2u^2;u^4;u^3+2u^2*(x^2+x)', (28, 8, 20)),
    ('u^3+2u^2;u^4;u^3+2u^2*(x)', (28, 8, 20)),
    ('u^3+2u^2;u^4;u^3+2u^2*(x^2+1)', (28, 8, 20)),
    ('u^3+2u^2;u^4;u^3+2u^2*(x+1)', (28, 8, 20)),
    ('u^3+2u^2;u^4;u^3+2u^2*(x^2+x+1)', (28, 8, 20)),
)


def _check_gray_k(k: int) -> None:
    if k != GRAY_K:
        raise InvalidInputError(f'Отображение Υ определено только для k=4, получено k={k}')


def upsilon_matrix(words: np.ndarray, n: int) -> np.ndarray:
    """Υ построчно для матрицы слов длины 4n (блоки по степеням u)."""
    words = np.asarray(words, dtype=np.int64)
    if words.ndim != 2 or words.shape[1] != GRAY_K * n:
        raise InvalidInputError(f'Ожидались строки длины {GRAY_K * n}, получена форма {words.shape}')
    xi = [words[:, l * n:(l + 1) * n] for l in range(GRAY_K)]
    blocks = [xi[3], xi[2] + xi[3], xi[1] + xi[2] + xi[3], xi[0] + xi[1] + xi[2] + xi[3]]
    return np.hstack(blocks) % 4


def upsilon(element: CodeElement) -> np.ndarray:
    _check_gray_k(element.k)
    return upsilon_matrix(element.to_vector()[None, :], element.n)[0]


def upsilon_inverse(vector: Sequence[int], n: int) -> CodeElement:
    """Обратное к Υ: ξ3 = a, ξ2 = b - a, ξ1 = c - b, ξ0 = d - c."""
    v = np.asarray(vector, dtype=np.int64)
    if v.shape != (GRAY_K * n,):
        raise InvalidInputError(f'Ожидался вектор длины {GRAY_K * n}')
    a, b, c, d = (v[l * n:(l + 1) * n] for l in range(GRAY_K))
    return CodeElement.from_vector(np.concatenate([d - c, c - b, b - a, a]), n, GRAY_K)


def lee_weight(vector: Sequence[int]) -> int:
    v = np.asarray(vector, dtype=np.int64) % 4
    return int(LEE_WEIGHTS[v].sum())


def lee_weights(matrix: np.ndarray) -> np.ndarray:
    return LEE_WEIGHTS[np.asarray(matrix, dtype=np.int64) % 4].sum(axis=1)


def qc_generator_matrix(g0, g1, g2, g3) -> np.ndarray:
    """
    Порождающая матрица G_D квазициклического кода по блокам G0..G3.

    Строки блоков: [G3, G2+G3, G1+G2+G3, G0+G1+G2+G3],
    [G2, G1+G2, G0+G1+G2, G0+G1+G2], [G1, G0+G1, G0+G1, G0+G1],
    [G0, G0, G0, G0].
    """
    blocks = [np.asarray(g, dtype=np.int64) for g in (g0, g1, g2, g3)]
    shape = blocks[0].shape
    if len(shape) != 2 or any(b.shape != shape for b in blocks):
        raise InvalidInputError(f'Блоки G0..G3 разных размеров: {[b.shape for b in blocks]}')
    g0, g1, g2, g3 = blocks
    rows = [
        [g3, g2 + g3, g1 + g2 + g3, g0 + g1 + g2 + g3],
        [g2, g1 + g2, g0 + g1 + g2, g0 + g1 + g2],
        [g1, g0 + g1, g0 + g1, g0 + g1],
        [g0, g0, g0, g0],
    ]
    return np.block(rows) % 4


def quasi_cyclic_shift(words: np.ndarray, n: int) -> np.ndarray:
    """Одновременный циклический сдвиг всех четырёх блоков длины n."""
    words = np.asarray(words)
    blocks = words.reshape(len(words), GRAY_K, n)
    return np.roll(blocks, 1, axis=2).reshape(len(words), GRAY_K * n)


def is_quasi_cyclic(words: np.ndarray, n: int) -> bool:
    keys = {row.tobytes() for row in np.asarray(words, dtype=np.int8)}
    shifted = quasi_cyclic_shift(np.asarray(words, dtype=np.int8), n)
    return all(row.tobytes() in keys for row in shifted)


def _chunk_minimum(chunk: np.ndarray) -> Optional[int]:
    weights = lee_weights(chunk)
    weights = weights[weights > 0]
    return int(weights.min()) if len(weights) else None


def min_lee_distance_of_words(words: np.ndarray, threads: int = 1) -> Optional[int]:
    """Минимальный вес Ли ненулевых слов; None, если ненулевых слов нет."""
    if len(words) == 0:
        return None
    chunks = np.array_split(words, max(1, min(len(words), threads * 4)))
    with ThreadPoolExecutor(max_workers=threads) as executor:
        minima = [m for m in executor.map(_chunk_minimum, chunks) if m is not None]
    return min(minima) if minima else None


def min_lee_distance(code: CyclicCode, budget: int = DEFAULT_CODEWORD_BUDGET,
                     threads: int = 1) -> Optional[int]:
    """Минимальное расстояние Ли образа Υ(C) полным перебором; None для нулевого кода."""
    _check_gray_k(code.k)
    if code.cardinality == 1:
        return None
    images = upsilon_matrix(codeword_matrix(code, budget), code.n)
    distance = min_lee_distance_of_words(images, threads)
    logger.info('Код %s: %d слов, минимальное расстояние Ли %s', code, len(images), distance)
    return distance


def generator_blocks(code: CyclicCode) -> List[np.ndarray]:
    """Блоки G0..G3: u^l-коэффициенты порождающих кода как R-модуля."""
    _check_gray_k(code.k)
    generators = code.module_generators()
    if not generators:
        return [np.zeros((0, code.n), dtype=np.int64) for _ in range(GRAY_K)]
    return [np.array([g.coeffs[:, l] for g in generators], dtype=np.int64) for l in range(GRAY_K)]


@dataclass
class QCCode:
    """Квазициклический код длины 4n индекса 4 с кэшем параметров."""

    n: int
    generator_rows: np.ndarray
    cardinality: int
    source: Optional[CyclicCode] = None
    _distance: Optional[int] = field(default=None, repr=False)
    _distance_known: bool = field(default=False, repr=False)

    @classmethod
    def from_cyclic_code(cls, code: CyclicCode) -> 'QCCode':
        rows = qc_generator_matrix(*generator_blocks(code))
        return cls(code.n, rows, code.cardinality, code)

    @property
    def length(self) -> int:
        return GRAY_K * self.n

    @property
    def log2_size(self) -> int:
        return self.cardinality.bit_length() - 1

    def codewords(self, budget: int = DEFAULT_CODEWORD_BUDGET) -> np.ndarray:
        check_budget(self.cardinality, budget, 'кодовых слов')
        if len(self.generator_rows) == 0:
            return np.zeros((1, self.length), dtype=np.int8)
        words = span_closure(self.generator_rows, self.length, budget, 'кодовых слов')
        if len(words) != self.cardinality:
            raise InvariantViolationError(f'Оболочка G_D содержит {len(words)} слов, ожидалось {self.cardinality}')
        return words

    def is_quasi_cyclic(self, budget: int = DEFAULT_CODEWORD_BUDGET) -> bool:
        return is_quasi_cyclic(self.codewords(budget), self.n)

    def min_lee_distance(self, budget: int = DEFAULT_CODEWORD_BUDGET, threads: int = 1) -> Optional[int]:
        if not self._distance_known:
            if self.source is not None:
                self._distance = min_lee_distance(self.source, budget, threads)
            else:
                self._distance = min_lee_distance_of_words(self.codewords(budget), threads)
            self._distance_known = True
        return self._distance

    def parameters(self, budget: int = DEFAULT_CODEWORD_BUDGET, threads: int = 1) -> Tuple[int, int, Optional[int]]:
        """[4n, log2 M, d]."""
        return self.length, self.log2_size, self.min_lee_distance(budget, threads)

    def to_dict(self, budget: int = DEFAULT_CODEWORD_BUDGET, threads: int = 1) -> dict:
        length, log2_size, distance = self.parameters(budget, threads)
        return {'length': length, 'log2_size': log2_size, 'min_lee_distance': distance}

    def generator_table(self) -> pd.DataFrame:
        columns = [f'g{block}_{i}' for block in range(GRAY_K) for i in range(self.n)]
        return pd.DataFrame(self.generator_rows.astype(np.int64), columns=columns)


def format_parameters(parameters: Tuple[int, int, Optional[int]]) -> str:
    length, log2_size, distance = parameters
    return f'[{length}, {log2_size}, {"empty" if distance is None else distance}]'
