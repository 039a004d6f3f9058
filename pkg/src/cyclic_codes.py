"""
Циклические коды длины n над R = Z4[u]/<u^k>.

Элемент R[x]/<x^n - 1> хранится матрицей n×k над Z4: элемент (i, l) есть
коэффициент при x^i u^l. Строки матрицы читаются как элементы R (запись
в R[x]), столбцы как элементы A = Z4[x]/<x^n - 1> (запись в A[u]).
Код задаётся разложением C = ⊕ e_j·C_j с идеалом C_j кольца K_j[u]/<u^k>
для каждого множителя f_j.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .errors import InvalidInputError, InvariantViolationError, check_budget
from .factor_system import FactorSystem, build_factor_system, check_aligned
from .factorization import multiply_mod_xn
from .galois_rings import MixedEl
from .ideal_enumerator import IdealEnumerator, count_formulas
from .ideal_specs import IdealSpec
from .polynomials import Z4Poly
from .settings import DEFAULT_CODEWORD_BUDGET
from .z4_span import span_closure

logger = logging.getLogger(__name__)


class CodeElement:
    """Элемент R[x]/<x^n - 1> = A[u]/<u^k> в виде матрицы n×k над Z4."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs):
        matrix = np.asarray(coeffs, dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[0] < 1 or matrix.shape[1] < 1:
            raise InvalidInputError(f'Ожидалась матрица n×k, получена форма {matrix.shape}')
        matrix = matrix % 4
        matrix.setflags(write=False)
        self.coeffs = matrix

    @classmethod
    def zero(cls, n: int, k: int) -> 'CodeElement':
        return cls(np.zeros((n, k), dtype=np.int64))

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[Z4Poly]) -> 'CodeElement':
        """Элемент Σ_l a_l(x) u^l по многочленам a_l из A."""
        matrix = np.zeros((n, len(columns)), dtype=np.int64)
        for l, column in enumerate(columns):
            reduced = column.mod_xn_minus_1(n)
            for i, c in enumerate(reduced.coeffs):
                matrix[i, l] = c
        return cls(matrix)

    @classmethod
    def from_vector(cls, vector, n: int, k: int) -> 'CodeElement':
        """Обратное к ``to_vector``: столбцы идут подряд по степеням u."""
        return cls(np.asarray(vector, dtype=np.int64).reshape((k, n)).T)

    @property
    def n(self) -> int:
        return self.coeffs.shape[0]

    @property
    def k(self) -> int:
        return self.coeffs.shape[1]

    def column(self, l: int) -> Z4Poly:
        return Z4Poly(tuple(int(c) for c in self.coeffs[:, l]))

    def columns(self) -> List[Z4Poly]:
        return [self.column(l) for l in range(self.k)]

    def to_vector(self) -> np.ndarray:
        """Вектор длины n·k: индекс l·n + i отвечает x^i u^l."""
        return self.coeffs.T.reshape(-1).copy()

    def _check(self, other: 'CodeElement') -> None:
        if not isinstance(other, CodeElement) or other.coeffs.shape != self.coeffs.shape:
            raise InvalidInputError('Элементы разных размеров')

    def __add__(self, other: 'CodeElement') -> 'CodeElement':
        self._check(other)
        return CodeElement(self.coeffs + other.coeffs)

    def __sub__(self, other: 'CodeElement') -> 'CodeElement':
        self._check(other)
        return CodeElement(self.coeffs - other.coeffs)

    def __neg__(self) -> 'CodeElement':
        return CodeElement(-self.coeffs)

    def __mul__(self, other) -> 'CodeElement':
        if isinstance(other, (int, np.integer)):
            return CodeElement(self.coeffs * int(other))
        self._check(other)
        n, k = self.coeffs.shape
        result = np.zeros((n, k), dtype=np.int64)
        for l1 in range(k):
            for i1 in np.nonzero(self.coeffs[:, l1])[0]:
                shifted = np.roll(other.coeffs[:, :k - l1], int(i1), axis=0)
                result[:, l1:] += self.coeffs[i1, l1] * shifted
        return CodeElement(result)

    __rmul__ = __mul__

    def multiply_x(self) -> 'CodeElement':
        """Умножение на x: циклический сдвиг строк."""
        return CodeElement(np.roll(self.coeffs, 1, axis=0))

    def multiply_u(self) -> 'CodeElement':
        """Умножение на u: сдвиг столбцов с отбрасыванием u^k."""
        shifted = np.zeros_like(self.coeffs)
        shifted[:, 1:] = self.coeffs[:, :-1]
        return CodeElement(shifted)

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __eq__(self, other) -> bool:
        return isinstance(other, CodeElement) and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.coeffs.shape, self.coeffs.tobytes()))

    def __repr__(self) -> str:
        return f'CodeElement({self.coeffs.tolist()})'


def lift_to_code_element(beta: MixedEl, e: Z4Poly, n: int) -> CodeElement:
    """e_j·β: каждый u-коэффициент β (представитель в Z4[x]) умножается на e_j по модулю x^n - 1."""
    return CodeElement.from_columns(n, [multiply_mod_xn(c.poly, e, n) for c in beta.coeffs])


def project_to_factor(w: CodeElement, system: FactorSystem, j: int) -> MixedEl:
    """Образ w в K_j[u]/<u^k>: столбцы приводятся по модулю f_j."""
    ring = system.ring(j)
    return MixedEl(tuple(ring.element(column) for column in w.columns()), ring)


@dataclass(frozen=True)
class CyclicCode:
    """Циклический код: система множителей, длина цепи k и идеал C_j для каждого множителя."""

    system: FactorSystem
    k: int
    specs: Tuple[IdealSpec, ...]

    def __post_init__(self):
        check_aligned(self.system, len(self.specs))
        for j, spec in enumerate(self.specs):
            if spec.k != self.k:
                raise InvalidInputError(f'Спецификация {j + 1} задана для k={spec.k}, а не {self.k}')
            if spec.field != self.system.field(j):
                raise InvalidInputError(f'Спецификация {j + 1} задана над полем {spec.field}, '
                                        f'ожидалось {self.system.field(j)}')

    @property
    def n(self) -> int:
        return self.system.n

    @property
    def cardinality(self) -> int:
        return reduce(lambda a, b: a * b, (spec.cardinality for spec in self.specs), 1)

    @property
    def log2_size(self) -> int:
        return self.cardinality.bit_length() - 1

    def module_generators(self) -> List[CodeElement]:
        """Порождающие кода как R-модуля: e_j·g·x^a для генераторов g идеала C_j и a < d_j."""
        rows = []
        for j, spec in enumerate(self.specs):
            ring = self.system.ring(j)
            e = self.system.idempotent(j)
            for g in spec.generators(ring):
                for a in range(ring.degree):
                    element = lift_to_code_element(g * _x_power(ring, self.k, a), e, self.n)
                    if not element.is_zero():
                        rows.append(element)
        return rows

    def spanning_rows(self) -> np.ndarray:
        """Z4-порождающие кода: R-порождающие, умноженные на u^b."""
        length = self.n * self.k
        rows = []
        for element in self.module_generators():
            for _ in range(self.k):
                if element.is_zero():
                    break
                rows.append(element.to_vector())
                element = element.multiply_u()
        if not rows:
            return np.zeros((0, length), dtype=np.int64)
        return np.array(rows, dtype=np.int64)

    def contains(self, w: CodeElement) -> bool:
        if w.coeffs.shape != (self.n, self.k):
            raise InvalidInputError(f'Размер слова {w.coeffs.shape}, ожидалось ({self.n}, {self.k})')
        return all(spec.contains(project_to_factor(w, self.system, j)) for j, spec in enumerate(self.specs))

    def spec_string(self) -> str:
        return ';'.join(str(spec) for spec in self.specs)

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'k': self.k,
            'specs': [spec.to_dict() for spec in self.specs],
            'spec_string': self.spec_string(),
            'log2_size': self.log2_size,
        }

    def __str__(self) -> str:
        return self.spec_string()


def _x_power(ring, k: int, a: int) -> MixedEl:
    return MixedEl.from_values(ring, [Z4Poly.monomial(a)], length=k)


def assemble_code(system: FactorSystem, k: int, specs: Sequence[IdealSpec]) -> CyclicCode:
    return CyclicCode(system, k, tuple(specs))


def count_cyclic_codes(n: int, k: int, system: Optional[FactorSystem] = None) -> int:
    """Число циклических кодов длины n над Z4[u]/<u^k>: произведение N(2, d_j, k)."""
    system = system or build_factor_system(n)
    counts = [count_formulas(d, k).total for d in system.degrees]
    total = reduce(lambda a, b: a * b, counts, 1)
    logger.info('Циклических кодов длины %d при k=%d: %s = %d', n, k, '·'.join(map(str, counts)), total)
    return total


def codeword_matrix(code: CyclicCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> np.ndarray:
    """Все кодовые слова строками длины n·k (столбцы по степеням u)."""
    check_budget(code.cardinality, budget, 'кодовых слов')
    words = span_closure(code.spanning_rows(), code.n * code.k, budget, 'кодовых слов')
    if len(words) != code.cardinality:
        raise InvariantViolationError(f'Получено {len(words)} кодовых слов, ожидалось {code.cardinality}')
    return words


def enumerate_codewords(code: CyclicCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> Iterator[CodeElement]:
    for row in codeword_matrix(code, budget):
        yield CodeElement.from_vector(row, code.n, code.k)


def codeword_membership(code: CyclicCode, w: CodeElement) -> bool:
    return code.contains(w)


def random_codeword(code: CyclicCode, rng: np.random.Generator) -> CodeElement:
    """Случайная Z4-комбинация порождающих кода."""
    rows = code.spanning_rows()
    if len(rows) == 0:
        return CodeElement.zero(code.n, code.k)
    weights = rng.integers(0, 4, size=len(rows))
    return CodeElement.from_vector((weights @ rows) % 4, code.n, code.k)


def iterate_codes(system: FactorSystem, k: int) -> Iterator[CyclicCode]:
    """Все циклические коды (декартово произведение идеалов по множителям)."""
    per_factor = [list(IdealEnumerator(d, k, system.field(j)).specs()) for j, d in enumerate(system.degrees)]
    for specs in itertools.product(*per_factor):
        yield CyclicCode(system, k, specs)


def codeword_table(code: CyclicCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> pd.DataFrame:
    """Кодовые слова для экспорта: колонки c_u{l}_x{i}."""
    columns = [f'c_u{l}_x{i}' for l in range(code.k) for i in range(code.n)]
    return pd.DataFrame(codeword_matrix(code, budget).astype(np.int64), columns=columns)


def unit_code(system: FactorSystem, k: int) -> CyclicCode:
    return CyclicCode(system, k, tuple(IdealSpec('I', system.field(j), k, i=0) for j in range(system.r)))


def zero_code(system: FactorSystem, k: int) -> CyclicCode:
    return CyclicCode(system, k, tuple(IdealSpec('I', system.field(j), k, i=k) for j in range(system.r)))
