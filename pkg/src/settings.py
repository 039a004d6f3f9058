import logging
import os
from dataclasses import dataclass, replace
from typing import Optional

from .errors import InvalidInputError

logger = logging.getLogger(__name__)

DEFAULT_CODEWORD_BUDGET = 2 ** 22
DEFAULT_IDEAL_BUDGET = 4096
SUPPORTED_FORMATS = ('json', 'csv', 'xlsx', 'pdf')


@dataclass(frozen=True)
class Settings:
    """Настройки вычислений: бюджеты, потоки, порядок факторов, формат вывода."""

    codeword_budget: int = DEFAULT_CODEWORD_BUDGET
    ideal_budget: int = DEFAULT_IDEAL_BUDGET
    threads: int = 1
    block_order: bool = False
    output_format: str = 'json'

    def __post_init__(self):
        if self.codeword_budget < 1 or self.ideal_budget < 1:
            raise InvalidInputError('Бюджет должен быть положительным')
        if self.threads < 1:
            raise InvalidInputError('Число потоков должно быть не меньше 1')
        if self.output_format not in SUPPORTED_FORMATS:
            raise InvalidInputError(f'Неизвестный формат: {self.output_format}')

    @classmethod
    def from_env(cls) -> 'Settings':
        """Читает переопределения из переменных окружения."""
        settings = cls()
        budget = os.environ.get('CYCLIC_CODES_BUDGET')
        threads = os.environ.get('CYCLIC_CODES_THREADS')
        try:
            if budget:
                settings = replace(settings, codeword_budget=int(budget))
            if threads:
                settings = replace(settings, threads=int(threads))
        except ValueError as e:
            raise InvalidInputError(f'Некорректная переменная окружения: {e}') from e
        return settings

    def with_overrides(self, budget: Optional[int] = None, threads: Optional[int] = None,
                       block_order: Optional[bool] = None,
                       output_format: Optional[str] = None) -> 'Settings':
        """Применяет флаги командной строки поверх текущих значений."""
        changes = {}
        if budget is not None:
            changes['codeword_budget'] = budget
        if threads is not None:
            changes['threads'] = threads
        if block_order is not None:
            changes['block_order'] = block_order
        if output_format is not None:
            changes['output_format'] = output_format
        if changes:
            logger.debug('Переопределены настройки: %s', changes)
        return replace(self, **changes)
