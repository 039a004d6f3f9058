"""
Многочлены над Z4 и F2.

Коэффициенты хранятся по возрастанию степени x, без хвостовых нулей.
Нулевой многочлен не имеет степени: ``degree`` возвращает ``None``.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

from .errors import InvalidInputError

logger = logging.getLogger(__name__)

# Обратимые элементы Z4 и их обратные
Z4_UNIT_INVERSES = {1: 1, 3: 3}


def _strip(coeffs: Iterable[int], modulus: int) -> Tuple[int, ...]:
    values = [c % modulus for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def _format_terms(coeffs: Tuple[int, ...], var: str = 'x') -> str:
    if not coeffs:
        return '0'
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
            continue
        monomial = var if power == 1 else f'{var}^{power}'
        terms.append(monomial if c == 1 else f'{c}{monomial}')
    return '+'.join(terms)


@dataclass(frozen=True)
class F2Poly:
    """Многочлен над F2."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _strip(self.coeffs, 2))

    @classmethod
    def zero(cls) -> 'F2Poly':
        return cls(())

    @classmethod
    def one(cls) -> 'F2Poly':
        return cls((1,))

    @classmethod
    def monomial(cls, power: int) -> 'F2Poly':
        return cls((0,) * power + (1,))

    @classmethod
    def from_int(cls, value: int) -> 'F2Poly':
        """Бит i числа задаёт коэффициент при x^i."""
        bits = []
        while value:
            bits.append(value & 1)
            value >>= 1
        return cls(tuple(bits))

    def to_int(self) -> int:
        return sum(c << i for i, c in enumerate(self.coeffs))

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if power < len(self.coeffs) else 0

    def __add__(self, other: 'F2Poly') -> 'F2Poly':
        size = max(len(self.coeffs), len(other.coeffs))
        return F2Poly(tuple(self.coefficient(i) ^ other.coefficient(i) for i in range(size)))

    __sub__ = __add__

    def __mul__(self, other: 'F2Poly') -> 'F2Poly':
        if self.is_zero() or other.is_zero():
            return F2Poly.zero()
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    result[i + j] ^= b
        return F2Poly(tuple(result))

    def divmod(self, divisor: 'F2Poly') -> Tuple['F2Poly', 'F2Poly']:
        if divisor.is_zero():
            raise InvalidInputError('Деление на нулевой многочлен')
        remainder = list(self.coeffs)
        d = divisor.degree
        quotient = [0] * max(len(remainder) - d, 0)
        for power in range(len(remainder) - 1, d - 1, -1):
            if remainder[power]:
                quotient[power - d] = 1
                for i, b in enumerate(divisor.coeffs):
                    remainder[power - d + i] ^= b
        return F2Poly(tuple(quotient)), F2Poly(tuple(remainder))

    def __floordiv__(self, divisor: 'F2Poly') -> 'F2Poly':
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: 'F2Poly') -> 'F2Poly':
        return self.divmod(divisor)[1]

    def pow_mod(self, exponent: int, modulus: 'F2Poly') -> 'F2Poly':
        result = F2Poly.one() % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    def gcd(self, other: 'F2Poly') -> 'F2Poly':
        return extended_gcd_f2(self, other)[0]

    def is_irreducible(self) -> bool:
        """Тест Бен-Ора: gcd(f, x^(2^i) - x) = 1 для всех i <= deg/2."""
        d = self.degree
        if d is None or d < 1:
            return False
        x = F2Poly.monomial(1)
        power = x
        for _ in range(d // 2):
            power = (power * power) % self
            if self.gcd(power + x).coeffs != (1,):
                return False
        return True

    def embed(self) -> 'Z4Poly':
        """Вкладывает коэффициенты {0,1} в Z4 без изменения."""
        return Z4Poly(self.coeffs)

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        return _format_terms(self.coeffs)


@dataclass(frozen=True)
class Z4Poly:
    """Многочлен над Z4."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _strip(self.coeffs, 4))

    @classmethod
    def zero(cls) -> 'Z4Poly':
        return cls(())

    @classmethod
    def one(cls) -> 'Z4Poly':
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> 'Z4Poly':
        return cls((0,) * power + (coefficient,))

    @classmethod
    def x_n_minus_1(cls, n: int) -> 'Z4Poly':
        return cls((3,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if power < len(self.coeffs) else 0

    def __add__(self, other: 'Z4Poly') -> 'Z4Poly':
        size = max(len(self.coeffs), len(other.coeffs))
        return Z4Poly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __neg__(self) -> 'Z4Poly':
        return Z4Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: 'Z4Poly') -> 'Z4Poly':
        return self + (-other)

    def __mul__(self, other: Union['Z4Poly', int]) -> 'Z4Poly':
        if isinstance(other, int):
            return Z4Poly(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Z4Poly.zero()
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    result[i + j] += a * b
        return Z4Poly(tuple(result))

    __rmul__ = __mul__

    def divmod(self, divisor: 'Z4Poly') -> Tuple['Z4Poly', 'Z4Poly']:
        """Деление с остатком на многочлен с обратимым старшим коэффициентом."""
        if divisor.leading not in Z4_UNIT_INVERSES:
            raise InvalidInputError(f'Старший коэффициент делителя {divisor} необратим в Z4')
        inverse = Z4_UNIT_INVERSES[divisor.leading]
        remainder = list(self.coeffs)
        d = divisor.degree
        quotient = [0] * max(len(remainder) - d, 0)
        for power in range(len(remainder) - 1, d - 1, -1):
            factor = (remainder[power] * inverse) % 4
            if factor:
                quotient[power - d] = factor
                for i, b in enumerate(divisor.coeffs):
                    remainder[power - d + i] = (remainder[power - d + i] - factor * b) % 4
        return Z4Poly(tuple(quotient)), Z4Poly(tuple(remainder))

    def __floordiv__(self, divisor: 'Z4Poly') -> 'Z4Poly':
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: 'Z4Poly') -> 'Z4Poly':
        return self.divmod(divisor)[1]

    def mod_xn_minus_1(self, n: int) -> 'Z4Poly':
        """Приведение по модулю x^n - 1: показатели складываются по модулю n."""
        folded = [0] * n
        for power, c in enumerate(self.coeffs):
            folded[power % n] += c
        return Z4Poly(tuple(folded))

    def reduce_mod2(self) -> F2Poly:
        return F2Poly(self.coeffs)

    def reciprocal(self) -> 'Z4Poly':
        if self.is_zero():
            raise InvalidInputError('Взаимный многочлен нулевого многочлена не определён')
        return Z4Poly(tuple(reversed(self.coeffs)))

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        return _format_terms(self.coeffs)


def reduce_mod2(f: Z4Poly) -> F2Poly:
    """Покоэффициентная редукция Z4 -> F2 (0,2 -> 0; 1,3 -> 1)."""
    return f.reduce_mod2()


def reciprocal(f: Z4Poly) -> Z4Poly:
    """x^d f(1/x) для d = deg f."""
    return f.reciprocal()


def extended_gcd_f2(a: F2Poly, b: F2Poly) -> Tuple[F2Poly, F2Poly, F2Poly]:
    """Возвращает (g, s, t) с s*a + t*b = g = gcd(a, b)."""
    r0, r1 = a, b
    s0, s1 = F2Poly.one(), F2Poly.zero()
    t0, t1 = F2Poly.zero(), F2Poly.one()
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 + q * s1
        t0, t1 = t1, t0 + q * t1
    return r0, s0, t0
