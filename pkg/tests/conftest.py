import random

import pytest

from grasskit import Field


@pytest.fixture
def QQ():
    return Field.rational()


@pytest.fixture
def GF101():
    return Field.prime(101)


@pytest.fixture
def both_fields(QQ, GF101):
    return (QQ, GF101)


@pytest.fixture
def rng():
    return random.Random(20260810)
