"""
Система множителей x^n - 1 над Z4 для нечётного n.

Хранит базисные неприводимые множители f_j, их редукции, идемпотенты e_j,
пары Безу (v_j, w_j), перестановку σ, порождённую взаимными многочленами,
и блочную расстановку: сначала самовзаимные множители, затем пары
(λ+l, λ+ε+l).
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Tuple

import pandas as pd

from .errors import InvalidInputError, InvariantViolationError
from .factorization import check_odd_length, factor_sort_key, hensel_lift, factor_xn_minus_1_f2, idempotent, multiply_mod_xn
from .galois_rings import GaloisRing, ResidueField
from .polynomials import F2Poly, Z4Poly, Z4_UNIT_INVERSES

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Factor:
    """Один множитель f_j вместе с его кольцом и идемпотентом."""

    f: Z4Poly
    f_bar: F2Poly
    e: Z4Poly
    v: Z4Poly
    w: Z4Poly

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def ring(self) -> GaloisRing:
        return GaloisRing(self.f)

    @property
    def field(self) -> ResidueField:
        return ResidueField(self.f_bar)


@dataclass(frozen=True)
class FactorSystem:
    n: int
    factors: Tuple[Factor, ...]
    sigma: Tuple[int, ...]
    delta: Tuple[int, ...]
    lam: int
    eps: int
    block_order: bool = True

    @property
    def r(self) -> int:
        return len(self.factors)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(f.degree for f in self.factors)

    def ring(self, j: int) -> GaloisRing:
        return self.factors[j].ring

    def field(self, j: int) -> ResidueField:
        return self.factors[j].field

    def idempotent(self, j: int) -> Z4Poly:
        return self.factors[j].e

    def is_self_paired(self, j: int) -> bool:
        return self.sigma[j] == j

    def pairs(self) -> List[Tuple[int, int]]:
        """Пары (j, σ(j)) с j < σ(j)."""
        return [(j, self.sigma[j]) for j in range(self.r) if j < self.sigma[j]]

    def self_paired(self) -> List[int]:
        return [j for j in range(self.r) if self.sigma[j] == j]

    def verify(self) -> None:
        """Проверяет все тождества системы; при нарушении бросает InvariantViolationError."""
        n = self.n
        product = reduce(lambda a, b: a * b, (f.f for f in self.factors), Z4Poly.one())
        if product != Z4Poly.x_n_minus_1(n):
            raise InvariantViolationError(f'Произведение множителей не равно x^{n}-1')

        total = reduce(lambda a, b: a + b, (f.e for f in self.factors), Z4Poly.zero()).mod_xn_minus_1(n)
        if total != Z4Poly.one():
            raise InvariantViolationError('Сумма идемпотентов не равна 1')
        for j, first in enumerate(self.factors):
            for l, second in enumerate(self.factors):
                expected = first.e if j == l else Z4Poly.zero()
                if multiply_mod_xn(first.e, second.e, n) != expected:
                    raise InvariantViolationError(f'Нарушена ортогональность идемпотентов e_{j + 1}, e_{l + 1}')

        for j, factor in enumerate(self.factors):
            if self.sigma[self.sigma[j]] != j:
                raise InvariantViolationError('Перестановка σ не является инволюцией')
            if factor.f.reciprocal() != self.factors[self.sigma[j]].f * self.delta[j]:
                raise InvariantViolationError(f'Взаимный многочлен f_{j + 1} не равен δ·f_σ(j)')
        if self.lam + 2 * self.eps != self.r:
            raise InvariantViolationError('Нарушено соотношение λ + 2ε = r')
        if self.block_order:
            for l in range(self.eps):
                if self.sigma[self.lam + l] != self.lam + self.eps + l:
                    raise InvariantViolationError('Нарушена блочная расстановка множителей')

    def to_table(self) -> pd.DataFrame:
        rows = []
        for j, factor in enumerate(self.factors):
            rows.append({
                'j': j + 1,
                'f': str(factor.f),
                'f_bar': str(factor.f_bar),
                'degree': factor.degree,
                'e': str(factor.e),
                'f_coeffs': factor.f.to_list(),
                'e_coeffs': factor.e.to_list(),
                'sigma': self.sigma[j] + 1,
                'delta': self.delta[j],
            })
        return pd.DataFrame(rows)

    def summary(self) -> dict:
        return {'n': self.n, 'r': self.r, 'lambda': self.lam, 'epsilon': self.eps,
                'degrees': list(self.degrees), 'order': 'block' if self.block_order else 'sorted'}


def _reciprocal_partner(f: Z4Poly, candidates: List[Z4Poly]) -> Tuple[int, int]:
    constant = f.coefficient(0)
    if constant not in Z4_UNIT_INVERSES:
        raise InvariantViolationError(f'Свободный член {f} необратим')
    target = f.reciprocal() * Z4_UNIT_INVERSES[constant]
    for index, candidate in enumerate(candidates):
        if candidate == target:
            return index, constant
    raise InvariantViolationError(f'Для {f} не найден взаимный множитель')


def block_arrangement(sigma: List[int]) -> List[int]:
    """Порядок индексов: неподвижные точки σ, затем первые элементы пар, затем их партнёры."""
    fixed = [j for j, image in enumerate(sigma) if image == j]
    firsts = [j for j, image in enumerate(sigma) if j < image]
    return fixed + firsts + [sigma[j] for j in firsts]


def build_factor_system(n: int, block_order: bool = True) -> FactorSystem:
    """
    Строит систему множителей для нечётного n.

    При ``block_order=False`` множители остаются в каноническом
    отсортированном порядке (степень, двоичная запись f̄).
    """
    check_odd_length(n)
    reductions = factor_xn_minus_1_f2(n)
    lifts = [hensel_lift(g, n) for g in reductions]
    sigma_sorted, delta_sorted = [], []
    for f in lifts:
        partner, delta = _reciprocal_partner(f, lifts)
        sigma_sorted.append(partner)
        delta_sorted.append(delta)

    order = block_arrangement(sigma_sorted) if block_order else list(range(len(lifts)))
    position = {old: new for new, old in enumerate(order)}

    factors = []
    for old in order:
        e, v, w = idempotent(lifts[old], n)
        factors.append(Factor(lifts[old], reductions[old], e, v, w))
    sigma = tuple(position[sigma_sorted[old]] for old in order)
    delta = tuple(delta_sorted[old] for old in order)
    lam = sum(1 for j, image in enumerate(sigma) if image == j)
    eps = (len(order) - lam) // 2

    system = FactorSystem(n, tuple(factors), sigma, delta, lam, eps, block_order)
    system.verify()
    logger.info('Система множителей x^%d-1: r=%d, λ=%d, ε=%d', n, system.r, lam, eps)
    return system


def factor_index(system: FactorSystem, f_bar: F2Poly) -> Optional[int]:
    """Индекс множителя с заданной редукцией по модулю 2."""
    for j, factor in enumerate(system.factors):
        if factor.f_bar == f_bar:
            return j
    return None


def sorted_order(system: FactorSystem) -> List[int]:
    """Перестановка индексов системы в канонический отсортированный порядок."""
    return sorted(range(system.r), key=lambda j: factor_sort_key(system.factors[j].f_bar))


def check_aligned(system: FactorSystem, count: int) -> None:
    if count != system.r:
        raise InvalidInputError(f'Ожидалось {system.r} спецификаций (по числу множителей), получено {count}')
