"""
Разложение x^n - 1 над F2 и Z4, идемпотенты колец Z4[x]/<x^n - 1>.

Над F2 множители собираются как минимальные многочлены степеней элемента
порядка n по циклотомическим классам; подъём в Z4 выполняется методом Грэффе.
"""

import logging
from functools import reduce
from typing import List, Optional, Tuple

from .errors import InvalidInputError, InvariantViolationError
from .polynomials import F2Poly, Z4Poly, extended_gcd_f2

logger = logging.getLogger(__name__)


def check_odd_length(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1 or n % 2 == 0:
        raise InvalidInputError(f'Длина n должна быть нечётным положительным числом, получено {n}')


def factor_sort_key(g: F2Poly) -> Tuple[int, int]:
    """Порядок множителей: степень, затем двоичная запись коэффициентов."""
    return g.degree, g.to_int()


def multiplicative_order(n: int) -> int:
    """Наименьшее m >= 1 с 2^m = 1 (mod n)."""
    m, value = 1, 2 % n
    while value != 1 % n:
        value = (value * 2) % n
        m += 1
    return m


def cyclotomic_cosets(n: int) -> List[List[int]]:
    """Циклотомические классы {c, 2c, 4c, ...} по модулю n."""
    seen = set()
    cosets = []
    for c in range(n):
        if c in seen:
            continue
        coset = []
        value = c
        while value not in coset:
            coset.append(value)
            value = (value * 2) % n
        seen.update(coset)
        cosets.append(coset)
    return cosets


def _prime_divisors(n: int) -> List[int]:
    primes, p = [], 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


def smallest_irreducible(m: int) -> F2Poly:
    for value in range(2 ** m + 1, 2 ** (m + 1), 2):
        candidate = F2Poly.from_int(value)
        if candidate.is_irreducible():
            return candidate
    raise InvariantViolationError(f'Не найден неприводимый многочлен степени {m}')


def _element_of_order(n: int, modulus: F2Poly) -> F2Poly:
    group_order = 2 ** modulus.degree - 1
    cofactor = group_order // n
    one = F2Poly.one()
    for value in range(1, 2 ** modulus.degree):
        beta = F2Poly.from_int(value).pow_mod(cofactor, modulus)
        if beta.pow_mod(n, modulus) != one:
            continue
        if all(beta.pow_mod(n // p, modulus) != one for p in _prime_divisors(n)):
            return beta
    raise InvariantViolationError(f'Не найден элемент порядка {n}')


def _minimal_polynomial(coset: List[int], beta: F2Poly, modulus: F2Poly) -> F2Poly:
    # Коэффициенты произведения (X - beta^c) лежат в F_{2^m}, по возрастанию степени X
    product: List[F2Poly] = [F2Poly.one()]
    for c in coset:
        root = beta.pow_mod(c, modulus)
        shifted = [F2Poly.zero()] + product
        scaled = [(a * root) % modulus for a in product] + [F2Poly.zero()]
        product = [a + b for a, b in zip(shifted, scaled)]
    bits = []
    for coefficient in product:
        if coefficient.degree not in (None, 0):
            raise InvariantViolationError('Минимальный многочлен не лежит в F2[x]')
        bits.append(coefficient.coefficient(0))
    return F2Poly(tuple(bits))


def factor_xn_minus_1_f2(n: int) -> List[F2Poly]:
    """Неприводимые множители x^n + 1 над F2 в каноническом порядке."""
    check_odd_length(n)
    m = multiplicative_order(n)
    modulus = smallest_irreducible(m)
    beta = _element_of_order(n, modulus)
    factors = sorted(
        (_minimal_polynomial(coset, beta, modulus) for coset in cyclotomic_cosets(n)),
        key=factor_sort_key,
    )
    product = reduce(lambda a, b: a * b, factors, F2Poly.one())
    if product != Z4Poly.x_n_minus_1(n).reduce_mod2():
        raise InvariantViolationError(f'Произведение множителей не равно x^{n}+1')
    logger.debug('x^%d+1 над F2: %s', n, ', '.join(str(f) for f in factors))
    return factors


def graeffe_lift(g: F2Poly) -> Z4Poly:
    """Базисный неприводимый многочлен над Z4 с редукцией g (g неприводим, g(0) = 1)."""
    if g.degree is None or g.degree < 1 or not g.is_irreducible():
        raise InvalidInputError(f'Многочлен {g} не является неприводимым над F2')
    lifted = g.embed()
    even = Z4Poly(tuple(c if i % 2 == 0 else 0 for i, c in enumerate(lifted.coeffs)))
    odd = Z4Poly(tuple(c if i % 2 == 1 else 0 for i, c in enumerate(lifted.coeffs)))
    # (e^2 - o^2) = (-1)^d f(x^2)
    square = even * even - odd * odd
    if any(square.coefficient(i) for i in range(1, len(square.coeffs), 2)):
        raise InvariantViolationError('Нечётные коэффициенты в подъёме Грэффе')
    f = Z4Poly(square.coeffs[::2])
    if g.degree % 2 == 1:
        f = -f

    if not f.is_monic() or f.reduce_mod2() != g:
        raise InvariantViolationError(f'Подъём {f} не согласован с {g}')
    return f


def x_order(g: F2Poly) -> int:
    """Порядок x по модулю g: наименьшее n с g | x^n + 1."""
    if g.degree is None or g.degree < 1 or g.coefficient(0) == 0:
        raise InvalidInputError(f'Многочлен {g} не делит ни одного x^n + 1')
    x = F2Poly.monomial(1) % g
    power, n = x, 1
    while power != F2Poly.one():
        power = (power * x) % g
        n += 1
    return n


def hensel_lift(g: F2Poly, n: Optional[int] = None) -> Z4Poly:
    """
    Единственный унитарный делитель x^n - 1 в Z4[x], редуцирующийся в g.

    Без n берётся порядок x по модулю g.
    """
    if g.degree is None or g.degree < 1 or not g.is_irreducible():
        raise InvalidInputError(f'Многочлен {g} не является неприводимым над F2')
    if n is None:
        n = x_order(g)
    check_odd_length(n)
    if not (Z4Poly.x_n_minus_1(n).reduce_mod2() % g).is_zero():
        raise InvalidInputError(f'Многочлен {g} не делит x^{n}+1')

    f = graeffe_lift(g)
    if not (Z4Poly.x_n_minus_1(n) % f).is_zero():
        raise InvariantViolationError(f'Подъём {f} не делит x^{n}-1')
    return f


def lift_factors(n: int) -> List[Z4Poly]:
    """Базисные неприводимые множители x^n - 1 над Z4 в каноническом порядке."""
    return [hensel_lift(g, n) for g in factor_xn_minus_1_f2(n)]


def bezout_pair(F: Z4Poly, f: Z4Poly) -> Tuple[Z4Poly, Z4Poly]:
    """Находит v, w с v*F + w*f = 1 в Z4[x]."""
    g, s, t = extended_gcd_f2(F.reduce_mod2(), f.reduce_mod2())
    if g != F2Poly.one():
        raise InvalidInputError(f'Многочлены {F} и {f} не взаимно просты по модулю 2 (НОД {g})')

    v0, w0 = s.embed(), t.embed()
    # v0*F + w0*f = 1 + 2e, шаг Ньютона умножает на 1 - 2e
    two_eps = v0 * F + w0 * f - Z4Poly.one()
    correction = Z4Poly.one() - two_eps
    v, w = v0 * correction, w0 * correction
    if v * F + w * f != Z4Poly.one():
        raise InvariantViolationError('Тождество Безу не выполнено')
    return v, w


def multiply_mod_xn(a: Z4Poly, b: Z4Poly, n: int) -> Z4Poly:
    return (a * b).mod_xn_minus_1(n)


def idempotent(f: Z4Poly, n: int) -> Tuple[Z4Poly, Z4Poly, Z4Poly]:
    """Идемпотент e = v*F для множителя f, где F = (x^n - 1)/f. Возвращает (e, v, w)."""
    F, remainder = Z4Poly.x_n_minus_1(n).divmod(f)
    if not remainder.is_zero():
        raise InvalidInputError(f'Многочлен {f} не делит x^{n}-1')
    v, w = bezout_pair(F, f)
    return multiply_mod_xn(v, F, n), v, w


def idempotents(n: int) -> List[Z4Poly]:
    """Примитивные идемпотенты e_1, ..., e_r в порядке множителей."""
    return [idempotent(f, n)[0] for f in lift_factors(n)]
