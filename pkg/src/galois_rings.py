"""
Арифметика колец Галуа K = Z4[x]/<f>, полей вычетов F = F2[x]/<f̄>,
цепных колец F[u]/<u^s> и смешанных колец K[u]/<u^k>.

Элементы F вкладываются в K покоэффициентно ({0,1} ⊂ Z4), поэтому каждый
элемент K[u]/<u^k> однозначно записывается как η0 + 2·η1 с η0, η1 из F[u]/<u^k>.
Операции между элементами разных колец запрещены.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import InvalidInputError
from .factorization import graeffe_lift, smallest_irreducible
from .polynomials import F2Poly, Z4Poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResidueField:
    """Поле F2[x]/<f̄>."""

    modulus: F2Poly

    @classmethod
    def default(cls, degree: int) -> 'ResidueField':
        """Поле степени d, заданное наименьшим неприводимым многочленом."""
        if degree < 1:
            raise InvalidInputError(f'Степень поля должна быть положительной, получено {degree}')
        return cls(smallest_irreducible(degree))

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def size(self) -> int:
        return 2 ** self.degree

    def element(self, value: Union[F2Poly, int, Sequence[int]]) -> 'FqEl':
        if isinstance(value, int):
            poly = F2Poly.from_int(value)
        elif isinstance(value, F2Poly):
            poly = value
        else:
            poly = F2Poly(tuple(value))
        return FqEl(poly % self.modulus, self)

    def zero(self) -> 'FqEl':
        return FqEl(F2Poly.zero(), self)

    def one(self) -> 'FqEl':
        return FqEl(F2Poly.one(), self)

    def elements(self) -> Iterator['FqEl']:
        """Все элементы поля в порядке двоичной записи."""
        for value in range(self.size):
            yield FqEl(F2Poly.from_int(value), self)

    def __str__(self) -> str:
        return f'F2[x]/<{self.modulus}>'


@dataclass(frozen=True)
class GaloisRing:
    """Кольцо Галуа Z4[x]/<f> для базисного неприводимого f."""

    modulus: Z4Poly

    def __post_init__(self):
        if self.modulus.degree is None or self.modulus.degree < 1 or not self.modulus.is_monic():
            raise InvalidInputError(f'Модуль {self.modulus} должен быть унитарным степени >= 1')

    @classmethod
    def default(cls, degree: int) -> 'GaloisRing':
        """GR(4, d), поднятое из наименьшего неприводимого многочлена степени d."""
        return cls(graeffe_lift(ResidueField.default(degree).modulus))

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def residue_field(self) -> ResidueField:
        return ResidueField(self.modulus.reduce_mod2())

    def element(self, value: Union[Z4Poly, Sequence[int]]) -> 'GREl':
        poly = value if isinstance(value, Z4Poly) else Z4Poly(tuple(value))
        return GREl(poly % self.modulus, self)

    def zero(self) -> 'GREl':
        return GREl(Z4Poly.zero(), self)

    def one(self) -> 'GREl':
        return GREl(Z4Poly.one(), self)

    def x_matrix(self) -> np.ndarray:
        """Матрица умножения на x в базисе 1, x, ..., x^(d-1) (столбец = образ x^a)."""
        d = self.degree
        matrix = np.zeros((d, d), dtype=np.int64)
        for a in range(d):
            image = Z4Poly.monomial(a + 1) % self.modulus
            for b in range(d):
                matrix[b, a] = image.coefficient(b)
        return matrix

    def __str__(self) -> str:
        return f'Z4[x]/<{self.modulus}>'


@dataclass(frozen=True)
class FqEl:
    """Элемент поля вычетов."""

    poly: F2Poly
    field: ResidueField

    def __post_init__(self):
        if self.poly.degree is not None and self.poly.degree >= self.field.degree:
            raise InvalidInputError(f'Степень {self.poly} не меньше степени поля')

    def _check(self, other: 'FqEl') -> None:
        if not isinstance(other, FqEl) or other.field != self.field:
            raise InvalidInputError('Операция над элементами разных полей')

    def __add__(self, other: 'FqEl') -> 'FqEl':
        self._check(other)
        return FqEl(self.poly + other.poly, self.field)

    __sub__ = __add__

    def __mul__(self, other: 'FqEl') -> 'FqEl':
        self._check(other)
        return FqEl((self.poly * other.poly) % self.field.modulus, self.field)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def to_int(self) -> int:
        return self.poly.to_int()

    def embed(self, ring: GaloisRing) -> 'GREl':
        if ring.residue_field != self.field:
            raise InvalidInputError(f'Поле {self.field} не является полем вычетов кольца {ring}')
        return GREl(self.poly.embed(), ring)

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class GREl:
    """Элемент кольца Галуа; степень представителя меньше степени модуля."""

    poly: Z4Poly
    ring: GaloisRing

    def __post_init__(self):
        if self.poly.degree is not None and self.poly.degree >= self.ring.degree:
            raise InvalidInputError(f'Степень {self.poly} не меньше степени кольца')

    def _check(self, other: 'GREl') -> None:
        if not isinstance(other, GREl) or other.ring != self.ring:
            raise InvalidInputError('Операция над элементами разных колец Галуа')

    def __add__(self, other: 'GREl') -> 'GREl':
        self._check(other)
        return GREl(self.poly + other.poly, self.ring)

    def __sub__(self, other: 'GREl') -> 'GREl':
        self._check(other)
        return GREl(self.poly - other.poly, self.ring)

    def __neg__(self) -> 'GREl':
        return GREl(-self.poly, self.ring)

    def __mul__(self, other: Union['GREl', int]) -> 'GREl':
        if isinstance(other, int):
            return GREl(self.poly * other, self.ring)
        self._check(other)
        return GREl((self.poly * other.poly) % self.ring.modulus, self.ring)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def residue(self) -> FqEl:
        return FqEl(self.poly.reduce_mod2(), self.ring.residue_field)

    def two_adic_split(self) -> Tuple[FqEl, FqEl]:
        """a = t0 + 2·t1 с t0, t1 из F (как подмножества {0,1})."""
        low = tuple(c % 2 for c in self.poly.coeffs)
        high = tuple(c // 2 for c in self.poly.coeffs)
        field = self.ring.residue_field
        return FqEl(F2Poly(low), field), FqEl(F2Poly(high), field)

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class ChainEl:
    """Элемент цепного кольца F[u]/<u^s>: коэффициенты при u^0, ..., u^(s-1)."""

    coeffs: Tuple[FqEl, ...]
    field: ResidueField

    def __post_init__(self):
        if not self.coeffs:
            raise InvalidInputError('Длина цепи должна быть положительной')
        if any(c.field != self.field for c in self.coeffs):
            raise InvalidInputError('Коэффициенты элемента цепного кольца из разных полей')

    @classmethod
    def from_values(cls, field: ResidueField, values: Sequence[Union[F2Poly, int, Sequence[int]]],
                    length: Optional[int] = None) -> 'ChainEl':
        length = len(values) if length is None else length
        if len(values) > length:
            raise InvalidInputError(f'Слишком много коэффициентов для длины цепи {length}')
        coeffs = [field.element(v) for v in values] + [field.zero()] * (length - len(values))
        return cls(tuple(coeffs), field)

    @classmethod
    def zero(cls, field: ResidueField, length: int) -> 'ChainEl':
        return cls((field.zero(),) * length, field)

    @classmethod
    def one(cls, field: ResidueField, length: int) -> 'ChainEl':
        return cls.u_power(field, length, 0)

    @classmethod
    def u_power(cls, field: ResidueField, length: int, power: int) -> 'ChainEl':
        coeffs = [field.zero()] * length
        if power < length:
            coeffs[power] = field.one()
        return cls(tuple(coeffs), field)

    @property
    def length(self) -> int:
        return len(self.coeffs)

    def _check(self, other: 'ChainEl') -> None:
        if not isinstance(other, ChainEl) or other.field != self.field or other.length != self.length:
            raise InvalidInputError('Операция над элементами разных цепных колец')

    def __add__(self, other: 'ChainEl') -> 'ChainEl':
        self._check(other)
        return ChainEl(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.field)

    __sub__ = __add__

    def __mul__(self, other: 'ChainEl') -> 'ChainEl':
        self._check(other)
        result = [self.field.zero()] * self.length
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.length - i):
                result[i + j] = result[i + j] + a * other.coeffs[j]
        return ChainEl(tuple(result), self.field)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_unit(self) -> bool:
        return not self.coeffs[0].is_zero()

    def inverse(self) -> 'ChainEl':
        """Обратный элемент: ξ^(|U|-1), где |U| - порядок группы обратимых."""
        if not self.is_unit():
            raise InvalidInputError(f'Элемент {self} необратим в F[u]/<u^{self.length}>')
        result, base = ChainEl.one(self.field, self.length), self
        exponent = unit_count(self.field.degree, self.length) - 1
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def valuation(self) -> int:
        """Индекс младшего ненулевого коэффициента; для нуля равен длине цепи."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return self.length

    def truncate(self, length: int) -> 'ChainEl':
        """Приведение по модулю u^length с сохранением длины хранения."""
        kept = self.coeffs[:length]
        return ChainEl(kept + (self.field.zero(),) * (self.length - len(kept)), self.field)

    def resize(self, length: int) -> 'ChainEl':
        kept = self.coeffs[:length]
        return ChainEl(kept + (self.field.zero(),) * (length - len(kept)), self.field)

    def shift_down(self, power: int) -> 'ChainEl':
        """Деление на u^power (младшие коэффициенты отбрасываются), длина сохраняется."""
        kept = self.coeffs[power:]
        return ChainEl(kept + (self.field.zero(),) * (self.length - len(kept)), self.field)

    def shift_up(self, power: int) -> 'ChainEl':
        """Умножение на u^power с усечением."""
        if power >= self.length:
            return ChainEl.zero(self.field, self.length)
        kept = self.coeffs[:self.length - power]
        return ChainEl((self.field.zero(),) * power + kept, self.field)

    def map_coefficients(self, func, field: ResidueField) -> 'ChainEl':
        return ChainEl(tuple(func(c) for c in self.coeffs), field)

    def embed(self, ring: GaloisRing) -> 'MixedEl':
        return MixedEl(tuple(c.embed(ring) for c in self.coeffs), ring)

    def to_lists(self):
        return [c.poly.to_list() for c in self.coeffs]

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(c.to_int() for c in self.coeffs)

    def __str__(self) -> str:
        terms = []
        for power, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            text = str(c)
            if power == 0:
                terms.append(text)
                continue
            monomial = 'u' if power == 1 else f'u^{power}'
            if text == '1':
                terms.append(monomial)
            elif '+' in text:
                terms.append(f'({text}){monomial}')
            else:
                terms.append(f'{text}{monomial}')
        return '+'.join(terms) if terms else '0'


@dataclass(frozen=True)
class MixedEl:
    """Элемент K[u]/<u^k>: коэффициенты из K при u^0, ..., u^(k-1)."""

    coeffs: Tuple[GREl, ...]
    ring: GaloisRing

    def __post_init__(self):
        if not self.coeffs:
            raise InvalidInputError('Длина цепи должна быть положительной')
        if any(c.ring != self.ring for c in self.coeffs):
            raise InvalidInputError('Коэффициенты из разных колец Галуа')

    @classmethod
    def from_values(cls, ring: GaloisRing, values: Sequence[Union[Z4Poly, Sequence[int]]],
                    length: Optional[int] = None) -> 'MixedEl':
        length = len(values) if length is None else length
        if len(values) > length:
            raise InvalidInputError(f'Слишком много коэффициентов для длины цепи {length}')
        coeffs = [ring.element(v) for v in values] + [ring.zero()] * (length - len(values))
        return cls(tuple(coeffs), ring)

    @classmethod
    def zero(cls, ring: GaloisRing, length: int) -> 'MixedEl':
        return cls((ring.zero(),) * length, ring)

    @classmethod
    def u_power(cls, ring: GaloisRing, length: int, power: int) -> 'MixedEl':
        coeffs = [ring.zero()] * length
        if power < length:
            coeffs[power] = ring.one()
        return cls(tuple(coeffs), ring)

    @classmethod
    def from_vector(cls, ring: GaloisRing, length: int, vector: Sequence[int]) -> 'MixedEl':
        d = ring.degree
        return cls(tuple(GREl(Z4Poly(tuple(int(c) for c in vector[b * d:(b + 1) * d])), ring)
                         for b in range(length)), ring)

    @property
    def length(self) -> int:
        return len(self.coeffs)

    def _check(self, other: 'MixedEl') -> None:
        if not isinstance(other, MixedEl) or other.ring != self.ring:
            raise InvalidInputError('Операция над элементами разных колец K[u]/<u^k>')
        if other.length != self.length:
            raise InvalidInputError(f'Разные длины цепи: {self.length} и {other.length}')

    def __add__(self, other: 'MixedEl') -> 'MixedEl':
        self._check(other)
        return MixedEl(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.ring)

    def __sub__(self, other: 'MixedEl') -> 'MixedEl':
        self._check(other)
        return MixedEl(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.ring)

    def __neg__(self) -> 'MixedEl':
        return MixedEl(tuple(-a for a in self.coeffs), self.ring)

    def __mul__(self, other: Union['MixedEl', int]) -> 'MixedEl':
        if isinstance(other, int):
            return MixedEl(tuple(a * other for a in self.coeffs), self.ring)
        self._check(other)
        result = [self.ring.zero()] * self.length
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.length - i):
                result[i + j] = result[i + j] + a * other.coeffs[j]
        return MixedEl(tuple(result), self.ring)

    __rmul__ = __mul__

    def shift_up(self, power: int) -> 'MixedEl':
        if power >= self.length:
            return MixedEl.zero(self.ring, self.length)
        return MixedEl((self.ring.zero(),) * power + self.coeffs[:self.length - power], self.ring)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def two_adic_split(self) -> Tuple[ChainEl, ChainEl]:
        field = self.ring.residue_field
        parts = [c.two_adic_split() for c in self.coeffs]
        return (ChainEl(tuple(p[0] for p in parts), field),
                ChainEl(tuple(p[1] for p in parts), field))

    def tau(self) -> ChainEl:
        return self.two_adic_split()[0]

    def to_vector(self) -> np.ndarray:
        """Вектор над Z4 длины d·k, индекс b·d + a отвечает x^a u^b."""
        d = self.ring.degree
        vector = np.zeros(d * self.length, dtype=np.int64)
        for b, c in enumerate(self.coeffs):
            for a, value in enumerate(c.poly.coeffs):
                vector[b * d + a] = value
        return vector

    def to_lists(self):
        return [c.poly.to_list() for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for power, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            monomial = '' if power == 0 else ('u' if power == 1 else f'u^{power}')
            text = str(c)
            if not monomial:
                terms.append(text)
            elif text == '1':
                terms.append(monomial)
            else:
                terms.append(f'({text}){monomial}')
        return '+'.join(terms) if terms else '0'


def mixed_arith(a: MixedEl, b: MixedEl, op: str) -> MixedEl:
    """Сложение или умножение в K[u]/<u^k>."""
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    raise InvalidInputError(f'Неизвестная операция: {op}')


def two_adic_split(a: MixedEl) -> Tuple[ChainEl, ChainEl]:
    return a.two_adic_split()


def scaled_product(xi: ChainEl, eta: ChainEl, ring: GaloisRing) -> MixedEl:
    """2·(ξη): произведение считается в F[u], затем умножается на 2."""
    return (xi * eta).embed(ring) * 2


def enumerate_units(field: Union[ResidueField, int], length: int) -> Iterator[ChainEl]:
    """Обратимые элементы F[u]/<u^s> в лексикографическом порядке коэффициентов."""
    if isinstance(field, int):
        field = ResidueField.default(field)
    if length < 1:
        raise InvalidInputError(f'Длина цепи должна быть положительной, получено {length}')
    ranges = [range(1, field.size)] + [range(field.size)] * (length - 1)
    for values in itertools.product(*ranges):
        yield ChainEl.from_values(field, values)


def unit_count(degree: int, length: int) -> int:
    return (2 ** degree - 1) * 2 ** ((length - 1) * degree)


def unit_decompose(a: ChainEl) -> Tuple[int, ChainEl]:
    """Запись a = u^i · ξ с обратимым ξ."""
    if a.is_zero():
        raise InvalidInputError('Нулевой элемент не раскладывается в u^i·ξ')
    power = a.valuation()
    return power, a.shift_down(power)
