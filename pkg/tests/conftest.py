import numpy as np
import pytest

from src.factor_system import build_factor_system


@pytest.fixture(scope='session')
def system1():
    return build_factor_system(1)


@pytest.fixture(scope='session')
def system3():
    return build_factor_system(3)


@pytest.fixture(scope='session')
def system7():
    return build_factor_system(7)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
