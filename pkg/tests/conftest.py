# coding=utf-8
import pytest

from po_gamma.core import OrderedGammaStructure
from po_gamma.search import enumerate_ordered


@pytest.fixture
def fix1():
    return OrderedGammaStructure.from_tables([[[0]]])


@pytest.fixture
def fixp():
    return OrderedGammaStructure.from_tables([[[0, 1], [1, 0]], [[1, 0], [0, 1]]])


@pytest.fixture
def fixc():
    return OrderedGammaStructure.from_tables([[[0, 0], [0, 0]]])


@pytest.fixture
def fixc_chain():
    return OrderedGammaStructure.from_tables([[[0, 0], [0, 0]]], [(0, 1)])


@pytest.fixture
def fixlz():
    return OrderedGammaStructure.from_tables([[[0, 0], [1, 1]]], [(0, 1)])


@pytest.fixture
def chain3():
    """min and the constant 0 on the chain 0 <= 1 <= 2."""
    minimum = [[min(x, y) for y in range(3)] for x in range(3)]
    zero = [[0] * 3 for _ in range(3)]
    return OrderedGammaStructure.from_tables([minimum, zero], [(0, 1), (0, 2), (1, 2)])


@pytest.fixture(scope='session')
def small_sweep():
    """Every ordered structure with n <= 2 and k <= 2 plus n = 3 with k = 1."""
    sizes = ((1, 1), (1, 2), (2, 1), (2, 2), (3, 1))
    return [s for n, k in sizes for s in enumerate_ordered(n, k)]


@pytest.fixture(scope='session')
def full_sweep(small_sweep):
    """Every ordered structure with n <= 3 and k <= 2."""
    return small_sweep + list(enumerate_ordered(3, 2))
