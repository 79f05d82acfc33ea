import pytest

from parklike import Generator, SpeciesEnv


@pytest.fixture
def env():
    return SpeciesEnv.standard()


@pytest.fixture
def gen(env):
    return Generator(env)
