"""
Разбор строковых спецификаций идеалов.

Код задаётся строкой из термов через ';', по одному на множитель:
``u^i``, ``2u^s``, ``u^i+2u^t*(h)``, ``(u^i,2u^s)``, ``(u^i+2u^t*(h),2u^s)``,
а также ``0`` и ``1``. Допускается и запись вида ``u^3+2x^2u^2`` или
``u^3+2(x^2+1)u^2``: каждый генератор вычисляется как многочлен от x и u
над Z4, приводится по модулю f_j и затем к каноническому IdealSpec.
"""

import logging
import re
from typing import Dict, List, Optional, Tuple

from .cyclic_codes import CyclicCode
from .errors import InvalidInputError, InvariantViolationError
from .factor_system import FactorSystem
from .galois_rings import ChainEl, MixedEl, unit_decompose
from .ideal_specs import IdealSpec
from .polynomials import Z4Poly

logger = logging.getLogger(__name__)

TOKEN_RE = re.compile(r'\s*(?:(\d+)|([xu])|([-+*^(),]))')

# (степень x, степень u) -> коэффициент в Z4
Monomials = Dict[Tuple[int, int], int]


def tokenize(text: str) -> List[str]:
    tokens = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = TOKEN_RE.match(text, position)
        if not match or match.end() == position:
            raise InvalidInputError(f'Непонятный символ в "{text}" на позиции {position}: "{text[position]}"')
        tokens.append(next(group for group in match.groups() if group is not None))
        position = match.end()
    return tokens


def _add(first: Monomials, second: Monomials, sign: int = 1) -> Monomials:
    result = dict(first)
    for key, c in second.items():
        result[key] = (result.get(key, 0) + sign * c) % 4
    return {key: c for key, c in result.items() if c}


def _multiply(first: Monomials, second: Monomials, k: int) -> Monomials:
    result: Monomials = {}
    for (a1, b1), c1 in first.items():
        for (a2, b2), c2 in second.items():
            if b1 + b2 >= k:
                continue
            key = (a1 + a2, b1 + b2)
            result[key] = (result.get(key, 0) + c1 * c2) % 4
    return {key: c for key, c in result.items() if c}


class _ExpressionParser:
    """Рекурсивный спуск по выражению из чисел, x, u, +, -, *, ^ и скобок."""

    def __init__(self, tokens: List[str], k: int, text: str):
        self.tokens = tokens
        self.position = 0
        self.k = k
        self.text = text

    def _peek(self) -> Optional[str]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _take(self, expected: Optional[str] = None) -> str:
        token = self._peek()
        if token is None or (expected is not None and token != expected):
            raise InvalidInputError(f'Ошибка разбора "{self.text}": ожидалось {expected or "выражение"}, '
                                    f'получено {token or "конец строки"}')
        self.position += 1
        return token

    def parse(self) -> Monomials:
        value = self.expression()
        if self._peek() is not None:
            raise InvalidInputError(f'Лишние символы в "{self.text}" начиная с "{self._peek()}"')
        return value

    def expression(self) -> Monomials:
        sign = 1
        if self._peek() == '-':
            self._take()
            sign = -1
        value = _add({}, self.term(), sign)
        while self._peek() in ('+', '-'):
            sign = 1 if self._take() == '+' else -1
            value = _add(value, self.term(), sign)
        return value

    def term(self) -> Monomials:
        value = self.power()
        while True:
            token = self._peek()
            if token == '*':
                self._take()
            elif token is None or not (token.isdigit() or token in ('x', 'u', '(')):
                return value
            value = _multiply(value, self.power(), self.k)

    def power(self) -> Monomials:
        base = self.atom()
        if self._peek() != '^':
            return base
        self._take()
        exponent = self._take()
        if not exponent.isdigit():
            raise InvalidInputError(f'Показатель степени должен быть числом в "{self.text}"')
        result: Monomials = {(0, 0): 1}
        for _ in range(int(exponent)):
            result = _multiply(result, base, self.k)
        return result

    def atom(self) -> Monomials:
        token = self._take()
        if token.isdigit():
            value = int(token) % 4
            return {(0, 0): value} if value else {}
        if token == 'x':
            return {(1, 0): 1}
        if token == 'u':
            return {(0, 1): 1} if self.k > 1 else {}
        if token == '(':
            value = self.expression()
            self._take(')')
            return value
        raise InvalidInputError(f'Неожиданный символ "{token}" в "{self.text}"')


def split_generators(term: str) -> List[str]:
    """'(g1,g2)' -> ['g1', 'g2']; одиночный генератор возвращается как есть."""
    term = term.strip()
    if not term:
        raise InvalidInputError('Пустая спецификация идеала')
    if not (term.startswith('(') and term.endswith(')')) or ',' not in term:
        return [term]
    parts, depth, current = [], 0, []
    for char in term[1:-1]:
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
            if depth < 0:
                raise InvalidInputError(f'Несбалансированные скобки в "{term}"')
        if char == ',' and depth == 0:
            parts.append(''.join(current))
            current = []
        else:
            current.append(char)
    parts.append(''.join(current))
    if depth != 0:
        raise InvalidInputError(f'Несбалансированные скобки в "{term}"')
    return [part for part in parts if part.strip()]


def evaluate_generator(text: str, system: FactorSystem, j: int, k: int) -> MixedEl:
    """Значение генератора в K_j[u]/<u^k>."""
    monomials = _ExpressionParser(tokenize(text), k, text).parse()
    columns: List[List[int]] = [[] for _ in range(k)]
    for (a, b), c in monomials.items():
        column = columns[b]
        column.extend([0] * (a + 1 - len(column)))
        column[a] = (column[a] + c) % 4
    ring = system.ring(j)
    return MixedEl.from_values(ring, [Z4Poly(tuple(column)) for column in columns], length=k)


def normalise_principal(element: MixedEl, text: str) -> Tuple[int, ChainEl]:
    """
    Генератор с вычетом u^i·ξ (ξ обратим) заменяется на ассоциированный
    с вычетом ровно u^i; возвращаются i и его 2-часть.
    """
    residue, _ = element.two_adic_split()
    i, unit = unit_decompose(residue)
    normalised = element * unit.inverse().embed(element.ring)
    residue, twist = normalised.two_adic_split()
    if residue != ChainEl.u_power(residue.field, residue.length, i):
        raise InvariantViolationError(f'Генератор "{text}" не приведён к виду u^i + 2(...)')
    logger.debug('Генератор "%s": вычет u^%d·(%s) нормирован', text, i, unit)
    return i, twist


def parse_ideal_term(term: str, system: FactorSystem, j: int, k: int) -> IdealSpec:
    """Терм одного множителя -> канонический IdealSpec над полем F_j."""
    field = system.field(j)
    i: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None
    h: Optional[ChainEl] = None
    for text in split_generators(term):
        element = evaluate_generator(text, system, j, k)
        if element.is_zero():
            continue
        residue, twist = element.two_adic_split()
        if residue.is_zero():
            valuation = twist.valuation()
            s = valuation if s is None else min(s, valuation)
            continue
        if i is not None:
            raise InvalidInputError(f'В "{term}" больше одного генератора вида u^i + 2(...)')
        i, twist = normalise_principal(element, text)
        if not twist.is_zero():
            t, h = 0, twist
    spec = IdealSpec.from_generators(field, k, i=i, s=s, t=t, h=h)
    logger.debug('Терм "%s" для множителя %d: %s', term, j + 1, spec.describe())
    return spec


def parse_code_specs(text: str, system: FactorSystem, k: int) -> CyclicCode:
    """Строка 't1;t2;...' -> CyclicCode (по одному терму на множитель системы)."""
    terms = [term for term in text.split(';')]
    if len(terms) != system.r:
        raise InvalidInputError(f'Ожидалось {system.r} термов через ";" (по числу множителей x^{system.n}-1), '
                                f'получено {len(terms)}')
    specs = tuple(parse_ideal_term(term, system, j, k) for j, term in enumerate(terms))
    return CyclicCode(system, k, specs)


def format_code_specs(code: CyclicCode) -> str:
    return code.spec_string()
