import math

import pytest

from cycleops import CycleOpsInvalidParameters
from cycleops.exact import binomial, falling


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(40, 20) == 137846528820
    assert all(binomial(m, 0) == 1 for m in range(30))
    assert binomial(4, -1) == 0
    assert binomial(4, 5) == 0


def test_binomial_pascal_rule():
    for n in range(1, 61):
        for k in range(0, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_falling_examples():
    assert falling(5, 2) == 60
    assert falling(3, 3) == 0
    assert all(falling(m, 0) == m for m in range(-3, 30))


def test_falling_against_binomial():
    for m in range(1, 41):
        for j in range(0, m):
            assert falling(m, j) == binomial(m, j + 1) * math.factorial(j + 1)


def test_falling_rejects_negative_index():
    with pytest.raises(CycleOpsInvalidParameters):
        falling(5, -1)
