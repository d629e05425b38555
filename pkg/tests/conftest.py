import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from fillings.presentation import make_oracle, preset  # noqa: E402


@pytest.fixture(scope="session")
def z2():
    return preset("z2")


@pytest.fixture(scope="session")
def f2():
    return preset("f2")


@pytest.fixture(scope="session")
def bs():
    return preset("bs12")


@pytest.fixture(scope="session")
def h3():
    return preset("h3")


@pytest.fixture(scope="session")
def z2_oracle(z2):
    return make_oracle(z2)


@pytest.fixture(scope="session")
def f2_oracle(f2):
    return make_oracle(f2)
