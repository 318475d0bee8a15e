import pytest

from ladderdet import parse_ascii

from helpers import L1_ASCII, L2_ASCII, L3_ASCII


@pytest.fixture
def l1():
    return parse_ascii(L1_ASCII)


@pytest.fixture
def l2():
    return parse_ascii(L2_ASCII)


@pytest.fixture
def l3():
    return parse_ascii(L3_ASCII)
