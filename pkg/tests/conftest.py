import pytest

from thetarank import Symbol


def P(text: str) -> Symbol:
    return Symbol.parse(text)


@pytest.fixture
def parse():
    return P
