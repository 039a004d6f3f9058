"""
Проверочный перебор идеалов K[u]/<u^k> замыканием.

Используется только для малых колец: элементы представлены векторами
над Z4 длины d·k (индекс b·d + a отвечает x^a u^b).
"""

import itertools
import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from .errors import InvalidInputError, check_budget
from .galois_rings import GaloisRing, MixedEl
from .ideal_specs import IdealSpec
from .polynomials import Z4Poly
from .settings import DEFAULT_CODEWORD_BUDGET, DEFAULT_IDEAL_BUDGET
from .z4_span import frozen_keys, span_closure

logger = logging.getLogger(__name__)

MemberSet = FrozenSet[Tuple[int, ...]]


def monomial_basis(ring: GaloisRing, k: int) -> List[MixedEl]:
    """Z4-базис x^a u^b кольца K[u]/<u^k> в порядке индекса b·d + a."""
    basis = []
    for b in range(k):
        for a in range(ring.degree):
            basis.append(MixedEl.from_values(ring, [()] * b + [Z4Poly.monomial(a)], length=k))
    return basis


def multiple_rows(generators: Sequence[MixedEl]) -> np.ndarray:
    """Строки g·x^a·u^b для всех генераторов g: их Z4-оболочка и есть идеал."""
    if not generators:
        raise InvalidInputError('Пустой список генераторов идеала')
    ring, k = generators[0].ring, generators[0].length
    basis = monomial_basis(ring, k)
    return np.array([(g * m).to_vector() for g in generators for m in basis], dtype=np.int64)


def ideal_member_vectors(spec: IdealSpec, ring: Optional[GaloisRing] = None,
                         budget: int = DEFAULT_CODEWORD_BUDGET) -> np.ndarray:
    ring = ring or _ring_for(spec)
    check_budget(spec.cardinality, budget, 'элементов идеала')
    members = span_closure(multiple_rows(spec.generators(ring)), ring.degree * spec.k, budget, 'элементов идеала')
    logger.debug('Идеал %s: %d элементов', spec, len(members))
    return members


def ideal_members(spec: IdealSpec, ring: Optional[GaloisRing] = None,
                  budget: int = DEFAULT_CODEWORD_BUDGET) -> Set[MixedEl]:
    """Все элементы идеала как множество MixedEl."""
    ring = ring or _ring_for(spec)
    vectors = ideal_member_vectors(spec, ring, budget)
    return {MixedEl.from_vector(ring, spec.k, row) for row in vectors}


def ideal_member_keys(spec: IdealSpec, ring: Optional[GaloisRing] = None,
                      budget: int = DEFAULT_CODEWORD_BUDGET) -> MemberSet:
    return frozen_keys(ideal_member_vectors(spec, ring, budget))


def _ring_for(spec: IdealSpec) -> GaloisRing:
    ring = GaloisRing.default(spec.d)
    if ring.residue_field != spec.field:
        raise InvalidInputError(f'Для поля {spec.field} нужно явно передать кольцо Галуа')
    return ring


def brute_force_all_ideals(d: int, k: int, budget: int = DEFAULT_IDEAL_BUDGET,
                           ring: Optional[GaloisRing] = None) -> Set[MemberSet]:
    """
    Все идеалы K[u]/<u^k> полным перебором.

    Строятся главные идеалы всех элементов кольца, затем множество
    замыкается попарными суммами идеалов до неподвижной точки.
    """
    ring = ring or GaloisRing.default(d)
    length = d * k
    check_budget(4 ** length, budget, 'элементов кольца')

    basis = monomial_basis(ring, k)
    generators: Dict[MemberSet, np.ndarray] = {}
    for digits in itertools.product(range(4), repeat=length):
        element = MixedEl.from_vector(ring, k, digits)
        rows = np.array([(element * m).to_vector() for m in basis], dtype=np.int64)
        members = span_closure(rows, length, budget)
        key = frozen_keys(members)
        if key not in generators:
            generators[key] = rows
    logger.info('Главных идеалов при d=%d, k=%d: %d', d, k, len(generators))

    changed = True
    while changed:
        changed = False
        for first, second in itertools.combinations(list(generators), 2):
            rows = np.vstack([generators[first], generators[second]])
            key = frozen_keys(span_closure(rows, length, budget))
            if key not in generators:
                generators[key] = rows
                changed = True
    logger.info('Всего идеалов при d=%d, k=%d: %d', d, k, len(generators))
    return set(generators)
