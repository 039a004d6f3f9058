"""
Перечисление и подсчёт идеалов кольца K[u]/<u^k> (K = GR(4, d)).
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, Iterator, List, Optional

import pandas as pd

from .errors import InvalidInputError, InvariantViolationError
from .galois_rings import ResidueField, enumerate_units, unit_count
from .ideal_specs import CASES, IdealSpec

logger = logging.getLogger(__name__)

CARDINALITY_FORMULAS = {
    'I': '2^(2d(k-i))',
    'II': '2^(d(k-s))',
    'III': '2^(2d(k-i))',
    'IV': '2^(d(k-t))',
    'V': '2^(d(2k-i-s))',
    'VI': '2^(d(2k-i-s))',
}


def _check_parameters(d: int, k: int) -> None:
    if d < 1:
        raise InvalidInputError(f'Степень поля d должна быть положительной, получено {d}')
    if k < 2:
        raise InvalidInputError(f'Длина цепи k должна быть не меньше 2, получено {k}')


@dataclass(frozen=True)
class IdealCount:
    """Число идеалов K[u]/<u^k> по случаям."""

    d: int
    k: int
    case_counts: Dict[str, int] = dataclass_field(default_factory=dict)
    omega1: int = 0
    omega2: int = 0
    gamma: int = 0

    @property
    def total(self) -> int:
        return sum(self.case_counts.values())

    @property
    def closed_form(self) -> int:
        """Сумма Σ(1+4i)2^((ρ-i)d) для k = 2ρ или Σ(3+4i)2^((ρ-i)d) для k = 2ρ+1."""
        rho, odd = divmod(self.k, 2)
        offset = 3 if odd else 1
        return sum((offset + 4 * i) * 2 ** ((rho - i) * self.d) for i in range(rho + 1))

    def to_dict(self) -> Dict[str, int]:
        result = {'d': self.d, 'k': self.k, 'total': self.total, 'omega1': self.omega1,
                  'omega2': self.omega2, 'gamma': self.gamma}
        result.update({f'case_{case}': self.case_counts[case] for case in CASES})
        return result


def omega1(q: int, k: int) -> int:
    """Число идеалов случая III."""
    if k % 2 == 0:
        numerator = q ** (k // 2 + 1) + q ** (k // 2) - 2
    else:
        numerator = 2 * (q ** ((k + 1) // 2) - 1)
    quotient, remainder = divmod(numerator, q - 1)
    if remainder:
        raise InvariantViolationError(f'Ω1({q}, {k}) не целое')
    return quotient - (k + 1)


def omega2(q: int, k: int) -> int:
    """Число идеалов случая IV."""
    start = k // 2 + 1
    return (q - 1) * sum((2 * i - k) * q ** (k - i - 1) for i in range(start, k))


def gamma(q: int, k: int) -> int:
    """Γ(q, k); число идеалов случая VI равно (q-1)·Γ."""
    if k <= 3:
        return 0
    value = 1
    for rho in range(5, k + 1):
        value += sum((rho - 2 * s - 1) * q ** (s - 1) for s in range(1, rho // 2))
    return value


def count_formulas(d: int, k: int) -> IdealCount:
    _check_parameters(d, k)
    q = 2 ** d
    o1, o2, g = omega1(q, k), omega2(q, k), gamma(q, k)
    counts = {
        'I': k + 1,
        'II': k,
        'III': o1,
        'IV': o2,
        'V': k * (k - 1) // 2,
        'VI': (q - 1) * g,
    }
    result = IdealCount(d, k, counts, o1, o2, g)
    if result.total != result.closed_form:
        raise InvariantViolationError(
            f'Сумма по случаям {result.total} не совпадает с замкнутой формулой {result.closed_form}'
        )
    return result


class IdealEnumerator:
    """Символьное перечисление идеалов K[u]/<u^k> в порядке случаев I..VI, затем (i, s, t, h)."""

    def __init__(self, d: int, k: int, field: Optional[ResidueField] = None):
        _check_parameters(d, k)
        self.field = field or ResidueField.default(d)
        if self.field.degree != d:
            raise InvalidInputError(f'Поле {self.field} имеет степень {self.field.degree}, а не {d}')
        self.d = d
        self.k = k

    def _twists(self, length: int):
        for h in enumerate_units(self.field, length):
            yield h.resize(self.k)

    def specs_for_case(self, case: str) -> Iterator[IdealSpec]:
        k, field = self.k, self.field
        if case == 'I':
            for i in range(k + 1):
                yield IdealSpec('I', field, k, i=i)
        elif case == 'II':
            for s in range(k):
                yield IdealSpec('II', field, k, s=s)
        elif case == 'III':
            for i in range(1, k):
                for t in range(max(0, 2 * i - k), i):
                    for h in self._twists(i - t):
                        yield IdealSpec('III', field, k, i=i, t=t, h=h)
        elif case == 'IV':
            for i in range(1, k):
                for t in range(0, min(i, 2 * i - k)):
                    for h in self._twists(k - i):
                        yield IdealSpec('IV', field, k, i=i, t=t, h=h)
        elif case == 'V':
            for i in range(1, k):
                for s in range(i):
                    yield IdealSpec('V', field, k, i=i, s=s)
        elif case == 'VI':
            for i in range(1, k):
                for s in range(1, i):
                    for t in range(s):
                        if i + s > k + t - 1:
                            continue
                        for h in self._twists(s - t):
                            yield IdealSpec('VI', field, k, i=i, s=s, t=t, h=h)
        else:
            raise InvalidInputError(f'Неизвестный случай идеала: {case}')

    def specs(self) -> Iterator[IdealSpec]:
        for case in CASES:
            yield from self.specs_for_case(case)

    def enumerated_counts(self) -> Dict[str, int]:
        """Число идеалов по случаям без построения самих спецификаций."""
        d, k = self.d, self.k
        counts = {'I': k + 1, 'II': k, 'V': k * (k - 1) // 2}
        counts['III'] = sum(unit_count(d, i - t) for i in range(1, k) for t in range(max(0, 2 * i - k), i))
        counts['IV'] = sum(unit_count(d, k - i) for i in range(1, k) for t in range(0, min(i, 2 * i - k)))
        counts['VI'] = sum(unit_count(d, s - t)
                           for i in range(1, k) for s in range(1, i) for t in range(s)
                           if i + s <= k + t - 1)
        return {case: counts[case] for case in CASES}

    def count(self) -> IdealCount:
        formulas = count_formulas(self.d, self.k)
        if self.enumerated_counts() != formulas.case_counts:
            raise InvariantViolationError(f'Подсчёт по формулам расходится с перечислением для d={self.d}, k={self.k}')
        return formulas

    def case_table(self) -> pd.DataFrame:
        """Таблица по случаям: число по формуле, число перечисленных, возможные мощности."""
        formulas = count_formulas(self.d, self.k)
        sizes: Dict[str, set] = {case: set() for case in CASES}
        enumerated: Dict[str, int] = {case: 0 for case in CASES}
        for spec in self.specs():
            enumerated[spec.case] += 1
            sizes[spec.case].add(spec.cardinality.bit_length() - 1)
        rows = []
        for case in CASES:
            rows.append({
                'case': case,
                'formula_count': formulas.case_counts[case],
                'enumerated_count': enumerated[case],
                'cardinality': CARDINALITY_FORMULAS[case],
                'log2_sizes': ' '.join(str(v) for v in sorted(sizes[case])),
            })
        table = pd.DataFrame(rows)
        logger.info('Идеалов K[u]/<u^%d> при d=%d: %d', self.k, self.d, int(table['enumerated_count'].sum()))
        return table


def enumerate_ideal_specs(d: int, k: int, field: Optional[ResidueField] = None) -> Iterator[IdealSpec]:
    return IdealEnumerator(d, k, field).specs()


def ideal_cardinality(spec: IdealSpec) -> int:
    return spec.cardinality


def spec_table(specs: List[IdealSpec]) -> pd.DataFrame:
    """Спецификации идеалов в виде таблицы для экспорта."""
    rows = []
    for spec in specs:
        row = spec.to_dict()
        row['spec'] = str(spec)
        row['log2_size'] = spec.cardinality.bit_length() - 1
        rows.append(row)
    return pd.DataFrame(rows, columns=['spec', 'case', 'd', 'k', 'i', 's', 't', 'h', 'log2_size'])
