import math

import pytest

from cycleops import CycleOpsInvalidParameters
from cycleops.linear import (
    ExponentConvention,
    build_p7_system,
    build_s_system,
    kappa_functional,
    moment_row,
    nullspace,
    p7_exponents,
    p7_functional,
)


def test_moment_row():
    assert moment_row(3, 1) == [3, 6, 3]
    assert moment_row(3, 2) == [3, 12, 9]


def test_s_system_rows():
    system = build_s_system(1, 5)
    assert [row.label for row in system.rows] == ["S2:e=1", "S1:e=2"]
    assert system.exponents == [1, 2]
    assert build_s_system(4, 11).exponents == [1, 2, 4]
    assert build_s_system(5, 13).exponents == [1, 2, 4, 6]


def test_s_system_is_solvable_past_the_bound():
    for g in range(1, 7):
        for m in range(2 * g + 3, 2 * g + 9):
            basis = nullspace(build_s_system(g, m))
            assert basis.dimension >= m - (math.ceil(g / 2) + 1) > 0


def test_kappa_functional():
    assert kappa_functional(5, 3).vector == [0, 0, 1, 2, 1]
    assert kappa_functional(4, 3).vector == [0, 0, 1, 1]
    with pytest.raises(CycleOpsInvalidParameters):
        kappa_functional(3, 3)
    with pytest.raises(CycleOpsInvalidParameters):
        kappa_functional(3, 0)


def test_p7_exponents():
    assert p7_exponents(5, 1) == [2, 3]
    assert p7_exponents(3, 1) == []
    assert p7_exponents(5, 0) == [1, 2, 3]
    assert p7_exponents(5, 1, ExponentConvention.BEAUVILLE) == [1, 2, 4, 5]
    assert p7_exponents(3, 1, ExponentConvention.BEAUVILLE) == [1, 2]
    with pytest.raises(CycleOpsInvalidParameters):
        p7_exponents(2, 0)


def test_p7_system():
    system = build_p7_system(5, 1, 8)
    assert [row.label for row in system.rows] == ["P7:e=2", "P7:e=3"]
    assert build_p7_system(3, 1, 4).rows == []
    assert build_p7_system(5, 1, 8, exponents=[1, 4]).exponents == [1, 4]
    with pytest.raises(CycleOpsInvalidParameters):
        build_p7_system(5, 1, 8, exponents=[2, 2])


def test_p7_functional_first_entry():
    assert p7_functional(1, 2, 0).vector == [1, 1]
    for n in range(1, 6):
        assert p7_functional(n, n + 3, 1).vector[0] == n
