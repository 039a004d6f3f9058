"""
Евклидовы дуальные коды.

Дуальный идеал D_σ(j) строится по таблице из восьми строк (DualCaseRow),
результат приводится к каноническому виду через IdealSpec.from_generators.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .cyclic_codes import CodeElement, CyclicCode
from .errors import InvalidInputError, InvariantViolationError
from .factor_system import FactorSystem
from .galois_rings import ChainEl, FqEl, ResidueField
from .ideal_specs import IdealSpec
from .polynomials import F2Poly

logger = logging.getLogger(__name__)


def euclidean_inner_product(a: CodeElement, b: CodeElement) -> Tuple[int, ...]:
    """[a, b]_E = Σ_i a_i b_i в R = Z4[u]/<u^k>; результат как k коэффициентов при u^l."""
    if a.coeffs.shape != b.coeffs.shape:
        raise InvalidInputError(f'Разные размеры: {a.coeffs.shape} и {b.coeffs.shape}')
    k = a.k
    result = [0] * k
    for l1 in range(k):
        for l2 in range(k - l1):
            result[l1 + l2] += int(np.dot(a.coeffs[:, l1], b.coeffs[:, l2]))
    return tuple(c % 4 for c in result)


def inner_products(first: np.ndarray, second: np.ndarray, n: int, k: int) -> np.ndarray:
    """Попарные скалярные произведения строк двух матриц (векторы длины n·k, столбцы по u)."""
    left = first.reshape(-1, k, n).astype(np.int64)
    right = second.reshape(-1, k, n).astype(np.int64)
    result = np.zeros((len(left), len(right), k), dtype=np.int64)
    for l1 in range(k):
        for l2 in range(k - l1):
            result[:, :, l1 + l2] += np.einsum('pi,qi->pq', left[:, l1, :], right[:, l2, :])
    return result % 4


def substitute_inverse_coefficient(b: FqEl, target: ResidueField, n: int) -> FqEl:
    """b(x) -> b(x^(n-1)) mod f̄ целевого поля."""
    terms = F2Poly.zero()
    for power, c in enumerate(b.poly.coeffs):
        if c:
            terms = terms + F2Poly.monomial((power * (n - 1)) % n)
    return target.element(terms)


def substitute_inverse(h: ChainEl, system: FactorSystem, j: int) -> ChainEl:
    """h(x^-1): каждый u-коэффициент из F_j переводится в F_σ(j)."""
    if h.field != system.field(j):
        raise InvalidInputError(f'Элемент {h} задан не над полем множителя {j + 1}')
    target = system.field(system.sigma[j])
    return h.map_coefficients(lambda b: substitute_inverse_coefficient(b, target, system.n), target)


@dataclass(frozen=True)
class DualCaseRow:
    """Строка таблицы дуальности: образец C_j и построение D_σ(j)."""

    number: int
    source: str
    target: str
    matches: Callable[[IdealSpec], bool]
    build: Callable[[IdealSpec, Optional[ChainEl], ResidueField], IdealSpec]

    @property
    def label(self) -> str:
        return f'B-{self.number}'


def _gen(field: ResidueField, spec: IdealSpec, **kwargs) -> IdealSpec:
    return IdealSpec.from_generators(field, spec.k, **kwargs)


DUAL_TABLE: Tuple[DualCaseRow, ...] = (
    DualCaseRow(1, '<u^i>', '<u^(k-i)>',
                lambda c: c.case == 'I',
                lambda c, h, f: _gen(f, c, i=c.k - c.i)),
    DualCaseRow(2, '<2u^s>', '<u^(k-s), 2>',
                lambda c: c.case == 'II',
                lambda c, h, f: _gen(f, c, i=c.k - c.s, s=0)),
    DualCaseRow(3, '<u^i + 2u^t h>, t >= 2i-k', '<u^(k-i) + 2u^(k+t-2i) h(x^-1)>',
                lambda c: c.case == 'III',
                lambda c, h, f: _gen(f, c, i=c.k - c.i, t=c.k + c.t - 2 * c.i, h=h)),
    DualCaseRow(4, '<u^i + 2h>, 2i > k', '<u^i + 2h(x^-1)>',
                lambda c: c.case == 'IV' and c.t == 0,
                lambda c, h, f: _gen(f, c, i=c.i, t=0, h=h)),
    DualCaseRow(5, '<u^i + 2u^t h>, t < 2i-k, t >= 1', '<u^(i-t) + 2h(x^-1), 2u^(k-i)>',
                lambda c: c.case == 'IV' and c.t >= 1,
                lambda c, h, f: _gen(f, c, i=c.i - c.t, t=0, h=h, s=c.k - c.i)),
    DualCaseRow(6, '<u^i, 2u^s>', '<u^(k-s), 2u^(k-i)>',
                lambda c: c.case == 'V',
                lambda c, h, f: _gen(f, c, i=c.k - c.s, s=c.k - c.i)),
    DualCaseRow(7, '<u^i + 2h, 2u^s>', '<u^(k-s) + 2u^(k-i-s) h(x^-1)>',
                lambda c: c.case == 'VI' and c.t == 0,
                lambda c, h, f: _gen(f, c, i=c.k - c.s, t=c.k - c.i - c.s, h=h)),
    DualCaseRow(8, '<u^i + 2u^t h, 2u^s>', '<u^(k-s) + 2u^(k+t-i-s) h(x^-1), 2u^(k-i)>',
                lambda c: c.case == 'VI' and c.t >= 1,
                lambda c, h, f: _gen(f, c, i=c.k - c.s, t=c.k + c.t - c.i - c.s, h=h, s=c.k - c.i)),
)


def dual_case_row(spec: IdealSpec) -> DualCaseRow:
    for row in DUAL_TABLE:
        if row.matches(spec):
            return row
    raise InvariantViolationError(f'Спецификация {spec.describe()} не подходит ни под одну строку таблицы дуальности')


def dual_ideal_spec(spec: IdealSpec, system: FactorSystem, j: int) -> IdealSpec:
    """D_σ(j) для идеала C_j."""
    if spec.field != system.field(j):
        raise InvalidInputError(f'Спецификация {spec} задана не над полем множителя {j + 1}')
    row = dual_case_row(spec)
    h = substitute_inverse(spec.h, system, j) if spec.h is not None else None
    dual = row.build(spec, h, system.field(system.sigma[j]))
    if spec.cardinality * dual.cardinality != 2 ** (2 * spec.d * spec.k):
        raise InvariantViolationError(f'|C|·|D| != 2^(2dk) для {spec} и {dual} (строка {row.number})')
    logger.debug('Дуальный к %s (строка %d): %s', spec, row.number, dual)
    return dual


def dual_code(code: CyclicCode) -> CyclicCode:
    system = code.system
    specs = [None] * system.r
    for j, spec in enumerate(code.specs):
        specs[system.sigma[j]] = dual_ideal_spec(spec, system, j)
    dual = CyclicCode(system, code.k, tuple(specs))
    if code.cardinality * dual.cardinality != 4 ** (code.k * code.n):
        raise InvariantViolationError(f'|C|·|C^⊥| != 4^(kn) для {code}')
    return dual


def is_self_dual(code: CyclicCode) -> bool:
    return dual_code(code).specs == code.specs


def annihilates(code: CyclicCode, other: CyclicCode) -> bool:
    """Все скалярные произведения кодов нулевые (достаточно проверить на Z4-порождающих)."""
    if code.n != other.n or code.k != other.k:
        raise InvalidInputError('Коды разной длины или над разными кольцами')
    first, second = code.spanning_rows(), other.spanning_rows()
    if len(first) == 0 or len(second) == 0:
        return True
    return not inner_products(first, second, code.n, code.k).any()
