"""
Самодуальные циклические коды.

Для самовзаимного множителя (σ(j) = j) идеал C_j должен совпадать со своим
дуальным; для пары (j, σ(j)) идеал C_j любой, а C_σ(j) однозначно равен
дуальному к C_j. Перечисление строится фильтром по таблице дуальности;
правила вида A-i-*/A-ii-* дополнительно порождаются как записаны и
сверяются с фильтром.
"""

import itertools
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import pandas as pd

from .cyclic_codes import CyclicCode, iterate_codes
from .duality import annihilates, dual_case_row, dual_ideal_spec, substitute_inverse
from .errors import InvalidInputError
from .factor_system import FactorSystem
from .galois_rings import enumerate_units
from .ideal_enumerator import IdealEnumerator, count_formulas
from .ideal_specs import IdealSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelfDualEntry:
    """Самодуальный код с метками правил по множителям."""

    code: CyclicCode
    tags: Tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            'specs': [spec.to_dict() for spec in self.code.specs],
            'spec_string': self.code.spec_string(),
            'tags': list(self.tags),
            'log2_size': self.code.log2_size,
        }


@dataclass(frozen=True)
class RuleCheck:
    """Сверка записанных правил с фильтром для одного множителя."""

    j: int
    missing_from_rules: Tuple[IdealSpec, ...]
    extra_in_rules: Tuple[IdealSpec, ...]

    @property
    def consistent(self) -> bool:
        return not self.missing_from_rules and not self.extra_in_rules


def self_paired_tag(spec: IdealSpec) -> str:
    """Метка правила A для самодуального идеала самовзаимного множителя."""
    even = spec.k % 2 == 0
    if even:
        tags = {'I': 'A-i-1', 'II': 'A-i-2', 'III': 'A-i-3', 'IV': 'A-i-4', 'V': 'A-i-5', 'VI': 'A-i-6'}
    else:
        tags = {'II': 'A-ii-1', 'IV': 'A-ii-2', 'V': 'A-ii-3', 'VI': 'A-ii-4'}
    return tags.get(spec.case, 'A-?')


def self_dual_ideals(system: FactorSystem, j: int, k: int) -> List[IdealSpec]:
    """Идеалы C_j, совпадающие со своим дуальным (для σ(j) = j)."""
    if not system.is_self_paired(j):
        raise InvalidInputError(f'Множитель {j + 1} не самовзаимный')
    enumerator = IdealEnumerator(system.degrees[j], k, system.field(j))
    return [spec for spec in enumerator.specs() if dual_ideal_spec(spec, system, j) == spec]


def _is_symmetric(h, system: FactorSystem, j: int, length: int) -> bool:
    # h(x^-1) = h(x) по модулю u^length
    return substitute_inverse(h, system, j).truncate(length) == h


def _symmetric_units(system: FactorSystem, j: int, k: int, length: int) -> Iterator:
    for h in enumerate_units(system.field(j), length):
        h = h.resize(k)
        if _is_symmetric(h, system, j, length):
            yield h


def printed_rule_ideals(system: FactorSystem, j: int, k: int) -> List[IdealSpec]:
    """Идеалы самовзаимного множителя по правилам A-i (k чётно) / A-ii (k нечётно) в записанном виде."""
    field = system.field(j)
    specs: List[IdealSpec] = []
    if k % 2 == 0:
        half = k // 2
        specs.append(IdealSpec('I', field, k, i=half))
        specs.append(IdealSpec('II', field, k, s=0))
        for t in range(half):
            for h in _symmetric_units(system, j, k, half - t):
                specs.append(IdealSpec('III', field, k, i=half, t=t, h=h))
        low = half + 1
        strict_low = half + 2
    else:
        specs.append(IdealSpec('II', field, k, s=0))
        low = (k + 1) // 2
        strict_low = low + 1
    for i in range(low, k):
        for h in _symmetric_units(system, j, k, k - i):
            specs.append(IdealSpec('IV', field, k, i=i, t=0, h=h))
    for i in range(strict_low, k):
        specs.append(IdealSpec('V', field, k, i=i, s=k - i))
    for i in range(low, k):
        for t in range(1, k - i):
            for h in _symmetric_units(system, j, k, k - i - t):
                specs.append(IdealSpec('VI', field, k, i=i, s=k - i, t=t, h=h))
    return specs


def check_printed_rules(system: FactorSystem, k: int) -> List[RuleCheck]:
    """Сравнивает записанные правила A с фильтром для всех самовзаимных множителей."""
    checks = []
    for j in system.self_paired():
        filtered = self_dual_ideals(system, j, k)
        printed = printed_rule_ideals(system, j, k)
        filtered_set, printed_set = set(filtered), set(printed)
        missing = tuple(spec for spec in filtered if spec not in printed_set)
        extra = tuple(spec for spec in printed if spec not in filtered_set)
        check = RuleCheck(j, missing, extra)
        if not check.consistent:
            logger.warning('Множитель %d, k=%d: правила A не совпадают с фильтром; нет в правилах: %s; лишние: %s',
                           j + 1, k, ', '.join(map(str, missing)) or '-', ', '.join(map(str, extra)) or '-')
        checks.append(check)
    return checks


class SelfDualCensus:
    """Перечень самодуальных кодов длины n над Z4[u]/<u^k>."""

    def __init__(self, system: FactorSystem, k: int, threads: int = 1):
        if k < 2:
            raise InvalidInputError(f'Длина цепи k должна быть не меньше 2, получено {k}')
        self.system = system
        self.k = k
        self.threads = threads

    def _choices(self, j: int) -> List[Tuple[IdealSpec, str]]:
        system, k = self.system, self.k
        if system.is_self_paired(j):
            return [(spec, self_paired_tag(spec)) for spec in self_dual_ideals(system, j, k)]
        enumerator = IdealEnumerator(system.degrees[j], k, system.field(j))
        return [(spec, dual_case_row(spec).label) for spec in enumerator.specs()]

    def factor_choices(self) -> Dict[int, List[Tuple[IdealSpec, str]]]:
        """Выбор C_j для самовзаимных множителей и первых элементов пар."""
        indices = self.system.self_paired() + [first for first, _ in self.system.pairs()]
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            results = list(executor.map(self._choices, indices))
        return dict(zip(indices, results))

    def count(self) -> int:
        """Число самодуальных кодов без их построения."""
        counts = [len(self_dual_ideals(self.system, j, self.k)) for j in self.system.self_paired()]
        counts += [count_formulas(self.system.degrees[first], self.k).total for first, _ in self.system.pairs()]
        total = reduce(lambda a, b: a * b, counts, 1)
        logger.info('Самодуальных кодов длины %d при k=%d: %d', self.system.n, self.k, total)
        return total

    def entries(self) -> Iterator[SelfDualEntry]:
        system = self.system
        choices = self.factor_choices()
        indices = sorted(choices)
        for combination in itertools.product(*(choices[j] for j in indices)):
            specs: List[Optional[IdealSpec]] = [None] * system.r
            tags: List[str] = [''] * system.r
            for j, (spec, tag) in zip(indices, combination):
                specs[j] = spec
                tags[j] = tag
                partner = system.sigma[j]
                if partner != j:
                    specs[partner] = dual_ideal_spec(spec, system, j)
                    tags[partner] = tag
            yield SelfDualEntry(CyclicCode(system, self.k, tuple(specs)), tuple(tags))

    def codes(self) -> Iterator[CyclicCode]:
        for entry in self.entries():
            yield entry.code

    def pair_table(self) -> pd.DataFrame:
        """Разбивка выборов C_j для пар по строкам таблицы и параметрам (случай, i, s, t)."""
        rows = []
        for first, second in self.system.pairs():
            groups: Counter = Counter()
            examples: Dict[Tuple, Tuple[IdealSpec, IdealSpec]] = {}
            for spec, tag in self._choices(first):
                key = (tag, spec.case, spec.i, spec.s, spec.t) if spec.case in ('III', 'IV', 'VI') else (tag, spec.case)
                groups[key] += 1
                if key not in examples:
                    examples[key] = (spec, dual_ideal_spec(spec, self.system, first))
            for key in sorted(groups, key=lambda g: (int(g[0].split('-')[1]), g[1:])):
                example, partner = examples[key]
                rows.append({
                    'pair': f'({first + 1},{second + 1})',
                    'rule': key[0],
                    'case': key[1],
                    'count': groups[key],
                    'example': str(example),
                    'partner': str(partner),
                })
        return pd.DataFrame(rows, columns=['pair', 'rule', 'case', 'count', 'example', 'partner'])


def enumerate_self_dual(system: FactorSystem, k: int, threads: int = 1) -> Iterator[CyclicCode]:
    return SelfDualCensus(system, k, threads).codes()


def count_self_dual(system: FactorSystem, k: int) -> int:
    return SelfDualCensus(system, k).count()


def self_dual_by_filter(system: FactorSystem, k: int) -> Set[Tuple[IdealSpec, ...]]:
    """
    Проверочный перебор без таблицы дуальности.

    Код самодуален, если он ортогонален сам себе и |C|^2 = 4^(kn);
    ортогональность проверяется на Z4-порождающих.
    """
    half_size = 2 ** (k * system.n)
    found = set()
    for code in iterate_codes(system, k):
        if code.cardinality == half_size and annihilates(code, code):
            found.add(code.specs)
    logger.info('Перебор: самодуальных кодов длины %d при k=%d: %d', system.n, k, len(found))
    return found


def census_table(entries: Sequence[SelfDualEntry]) -> pd.DataFrame:
    rows = []
    for number, entry in enumerate(entries, start=1):
        row = {'number': number, 'specs': entry.code.spec_string(), 'tags': ';'.join(entry.tags),
               'log2_size': entry.code.log2_size}
        rows.append(row)
    return pd.DataFrame(rows, columns=['number', 'specs', 'tags', 'log2_size'])
