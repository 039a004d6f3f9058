"""Исключения пакета и коды завершения CLI."""


class CyclicCodeError(Exception):
    """Базовая ошибка пакета."""

    exit_code = 1


class InvalidInputError(CyclicCodeError, ValueError):
    """Некорректные входные данные: n, k, спецификации идеалов, размеры."""

    exit_code = 2


class BudgetExceededError(CyclicCodeError):
    """Перечисление превышает заданный бюджет."""

    exit_code = 3

    def __init__(self, required: int, budget: int, what: str = 'элементов'):
        self.required = required
        self.budget = budget
        super().__init__(f'Требуется {required} {what}, бюджет {budget}')


class InvariantViolationError(CyclicCodeError):
    """Нарушен внутренний инвариант (ошибка в реализации)."""

    exit_code = 4


def check_budget(required: int, budget: int, what: str = 'элементов') -> None:
    if required > budget:
        raise BudgetExceededError(required, budget, what)
