"""
Символьное описание идеалов кольца K[u]/<u^k>.

Каждый идеал записывается в одном из шести канонических видов:

    I    <u^i>                     0 <= i <= k
    II   <2u^s>                    0 <= s <= k-1
    III  <u^i + 2u^t h>            0 <= t < i <= k-1, t >= 2i-k, h ∈ (F[u]/<u^(i-t)>)^×
    IV   <u^i + 2u^t h>            0 <= t < i <= k-1, t <  2i-k, h ∈ (F[u]/<u^(k-i)>)^×
    V    <u^i, 2u^s>               0 <= s < i <= k-1
    VI   <u^i + 2u^t h, 2u^s>      0 <= t < s < i <= k-1, i+s <= k+t-1, h ∈ (F[u]/<u^(s-t)>)^×

h хранится как элемент цепи полной длины k, коэффициенты вне своего фактора равны нулю.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from .errors import InvalidInputError, InvariantViolationError
from .galois_rings import ChainEl, GaloisRing, MixedEl, ResidueField

logger = logging.getLogger(__name__)

CASES = ('I', 'II', 'III', 'IV', 'V', 'VI')


@dataclass(frozen=True)
class IdealSpec:
    """Идеал K[u]/<u^k>: номер случая и параметры (i, s, t, h)."""

    case: str
    field: ResidueField
    k: int
    i: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None
    h: Optional[ChainEl] = None

    def __post_init__(self):
        if self.case not in CASES:
            raise InvalidInputError(f'Неизвестный случай идеала: {self.case}')
        if self.k < 1:
            raise InvalidInputError(f'Длина цепи k должна быть положительной, получено {self.k}')
        expected = {
            'I': ('i',), 'II': ('s',), 'III': ('i', 't', 'h'), 'IV': ('i', 't', 'h'),
            'V': ('i', 's'), 'VI': ('i', 's', 't', 'h'),
        }[self.case]
        for name in ('i', 's', 't', 'h'):
            present = getattr(self, name) is not None
            if present != (name in expected):
                raise InvalidInputError(f'Параметр {name} не соответствует случаю {self.case}')
        if not self._ranges_hold():
            raise InvalidInputError(f'Параметры вне допустимых границ для случая {self.case}: {self.describe()}')
        if self.h is not None:
            self._check_twist()

    def _ranges_hold(self) -> bool:
        k, i, s, t = self.k, self.i, self.s, self.t
        if self.case == 'I':
            return 0 <= i <= k
        if self.case == 'II':
            return 0 <= s <= k - 1
        if self.case == 'III':
            return 0 <= t < i <= k - 1 and t >= 2 * i - k
        if self.case == 'IV':
            return 0 <= t < i <= k - 1 and t < 2 * i - k
        if self.case == 'V':
            return 0 <= s < i <= k - 1
        return 0 <= t < s < i <= k - 1 and i + s <= k + t - 1

    def _check_twist(self) -> None:
        h = self.h
        if h.field != self.field or h.length != self.k:
            raise InvalidInputError('Множитель h задан над другим полем или другой длины')
        if not h.is_unit():
            raise InvalidInputError(f'Множитель h = {h} необратим')
        if h.truncate(self.quotient_length) != h:
            raise InvalidInputError(f'Множитель h = {h} не приведён по модулю u^{self.quotient_length}')

    @property
    def d(self) -> int:
        return self.field.degree

    @property
    def quotient_length(self) -> Optional[int]:
        """Длина цепи, по модулю которой определён h."""
        if self.case == 'III':
            return self.i - self.t
        if self.case == 'IV':
            return self.k - self.i
        if self.case == 'VI':
            return self.s - self.t
        return None

    @property
    def tor_exponents(self) -> Tuple[int, int]:
        """Показатели (a, b): τ(C) = u^a F[u] и {ξ : 2ξ ∈ C} = u^b F[u]."""
        if self.case == 'I':
            return self.i, self.i
        if self.case == 'II':
            return self.k, self.s
        if self.case == 'III':
            return self.i, self.i
        if self.case == 'IV':
            return self.i, self.k - self.i + self.t
        return self.i, self.s

    @property
    def cardinality(self) -> int:
        first, second = self.tor_exponents
        return 2 ** (self.d * (2 * self.k - first - second))

    def is_zero(self) -> bool:
        return self.case == 'I' and self.i == self.k

    def is_whole_ring(self) -> bool:
        return self.case == 'I' and self.i == 0

    def principal_generator(self, ring: GaloisRing) -> MixedEl:
        """u^i + 2u^t h (или u^i); для случая II ноль."""
        self._check_ring(ring)
        first, _ = self.tor_exponents
        generator = MixedEl.u_power(ring, self.k, first)
        if self.h is not None:
            generator = generator + self.h.embed(ring).shift_up(self.t) * 2
        return generator

    def generators(self, ring: GaloisRing) -> List[MixedEl]:
        self._check_ring(ring)
        if self.case == 'II':
            return [MixedEl.u_power(ring, self.k, self.s) * 2]
        result = [self.principal_generator(ring)]
        if self.case in ('V', 'VI'):
            result.append(MixedEl.u_power(ring, self.k, self.s) * 2)
        return result

    def contains(self, element: MixedEl) -> bool:
        """Проверка принадлежности через нормальную форму, без перечисления идеала."""
        ring = element.ring
        self._check_ring(ring)
        if element.length != self.k:
            raise InvalidInputError(f'Элемент длины {element.length}, ожидалась {self.k}')
        first, second = self.tor_exponents
        eta0, _ = element.two_adic_split()
        if eta0.valuation() < first:
            return False
        quotient = eta0.shift_down(first).embed(ring)
        rest = element - self.principal_generator(ring) * quotient
        rho0, rho1 = rest.two_adic_split()
        if not rho0.is_zero():
            raise InvariantViolationError(f'Остаток {rest} не делится на 2')
        return rho1.valuation() >= second

    def _check_ring(self, ring: GaloisRing) -> None:
        if ring.residue_field != self.field:
            raise InvalidInputError(f'Кольцо {ring} не согласовано с полем {self.field}')

    def with_field(self, field: ResidueField, h: Optional[ChainEl] = None) -> 'IdealSpec':
        """Та же запись над другим полем той же степени (h заменяется на переданный)."""
        return IdealSpec(self.case, field, self.k, self.i, self.s, self.t, h)

    def sort_key(self) -> Tuple:
        h_key = self.h.sort_key() if self.h is not None else ()
        return (CASES.index(self.case),
                -1 if self.i is None else self.i,
                -1 if self.s is None else self.s,
                -1 if self.t is None else self.t,
                h_key)

    def describe(self) -> str:
        return f'{self.case}(i={self.i}, s={self.s}, t={self.t}, h={self.h})'

    def to_dict(self) -> Dict[str, Any]:
        return {
            'case': self.case,
            'd': self.d,
            'k': self.k,
            'i': self.i,
            's': self.s,
            't': self.t,
            'h': self.h.to_lists() if self.h is not None else None,
        }

    def __str__(self) -> str:
        return format_spec(self)

    @classmethod
    def from_generators(cls, field: ResidueField, k: int, i: Optional[int] = None,
                        s: Optional[int] = None, t: Optional[int] = None,
                        h: Optional[ChainEl] = None) -> 'IdealSpec':
        """
        Канонический вид идеала <u^i + 2u^t h, 2u^s>.

        Любой из генераторов может отсутствовать (i или s равны None); допускаются
        вырожденные показатели, например <u^k, 2> или <u^i, 2u^s> при s >= i.
        """
        for name, value in (('i', i), ('s', s), ('t', t)):
            if value is not None and not 0 <= value <= k:
                raise InvalidInputError(f'Показатель {name}={value} вне диапазона 0..{k}')
        if (h is None) != (t is None):
            raise InvalidInputError('Показатель t и множитель h задаются вместе')
        if h is not None:
            if h.field != field:
                raise InvalidInputError('Множитель h задан над другим полем')
            h = h.resize(k)
            if h.is_zero():
                h, t = None, None
            else:
                shift = h.valuation()
                h, t = h.shift_down(shift), t + shift
                if t >= k:
                    h, t = None, None

        if i is None or i >= k:
            exponents = [e for e in (t, s) if e is not None]
            if not exponents:
                return cls('I', field, k, i=k)
            return cls('II', field, k, s=min(exponents))

        if h is None or t >= i:
            if s is None or s >= i:
                return cls('I', field, k, i=i)
            return cls('V', field, k, i=i, s=s)

        principal_second = min(i, k - i + t)
        if s is None or s >= principal_second:
            if t >= 2 * i - k:
                return cls('III', field, k, i=i, t=t, h=h.truncate(i - t))
            return cls('IV', field, k, i=i, t=t, h=h.truncate(k - i))
        if t >= s:
            return cls('V', field, k, i=i, s=s)
        return cls('VI', field, k, i=i, s=s, t=t, h=h.truncate(s - t))


def _power(var: str, exponent: int) -> str:
    if exponent == 0:
        return ''
    return var if exponent == 1 else f'{var}^{exponent}'


def _twist_term(t: int, h: ChainEl) -> str:
    text = str(h)
    monomial = _power('u', t)
    if text == '1':
        return f'2{monomial}' if monomial else '2'
    if not monomial:
        return f'2*({text})'
    return f'2{monomial}*({text})'


def format_spec(spec: IdealSpec) -> str:
    """Запись идеала на языке спецификаций CLI (u^i, 2u^s, u^i+2u^t*(h), (u^i,2u^s), ...)."""
    if spec.case == 'I':
        if spec.i == spec.k:
            return '0'
        return _power('u', spec.i) or '1'
    if spec.case == 'II':
        return f"2{_power('u', spec.s)}"
    principal = (_power('u', spec.i) or '1')
    if spec.h is not None:
        principal = f'{principal}+{_twist_term(spec.t, spec.h)}'
    if spec.case in ('V', 'VI'):
        return f"({principal},2{_power('u', spec.s)})"
    return principal
