import pytest

from src.errors import InvalidInputError
from src.settings import DEFAULT_CODEWORD_BUDGET, Settings


def test_defaults():
    settings = Settings()
    assert settings.codeword_budget == DEFAULT_CODEWORD_BUDGET
    assert settings.threads == 1
    assert not settings.block_order
    assert settings.output_format == 'json'


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv('CYCLIC_CODES_BUDGET', '1000')
    monkeypatch.setenv('CYCLIC_CODES_THREADS', '3')
    settings = Settings.from_env()
    assert (settings.codeword_budget, settings.threads) == (1000, 3)


def test_bad_environment(monkeypatch):
    monkeypatch.setenv('CYCLIC_CODES_THREADS', 'many')
    with pytest.raises(InvalidInputError):
        Settings.from_env()


def test_command_line_overrides():
    settings = Settings().with_overrides(budget=64, block_order=True, output_format='csv')
    assert (settings.codeword_budget, settings.threads, settings.block_order, settings.output_format) == \
        (64, 1, True, 'csv')
    assert Settings().with_overrides() == Settings()


def test_validation():
    with pytest.raises(InvalidInputError):
        Settings(threads=0)
    with pytest.raises(InvalidInputError):
        Settings(output_format='html')
