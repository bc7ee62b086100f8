from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boxcalc import series
from boxcalc.numbers import bell, eulerian, stirling1_signed, stirling2
from boxcalc.poly import X, falling_factorial
from boxcalc.setpart import enumerate_partitions


def test_stirling_examples():
    assert stirling2(4, 2) == 7
    assert stirling1_signed(3, 2) == -3
    assert all(stirling2(n, n) == 1 for n in range(8))
    assert stirling2(0, 0) == 1 and all(stirling2(n, 0) == 0 for n in range(1, 8))


@pytest.mark.parametrize("n", range(9))
def test_stirling2_and_bell_by_enumeration(n):
    for k in range(n + 1):
        assert stirling2(n, k) == enumerate_partitions(n, k)[0]
    assert bell(n) == enumerate_partitions(n)[0]


@pytest.mark.parametrize("r", range(8))
def test_stirling1_are_falling_factorial_coefficients(r):
    ff = falling_factorial(r)
    assert [stirling1_signed(r, i) for i in range(r + 1)] == list(ff.coeffs) + [0] * (r + 1 - len(ff.coeffs))


def test_falling_factorial():
    assert falling_factorial(3) == X * (X - 1) * (X - 2)


def excedances(p):
    return sum(1 for i, v in enumerate(p, 1) if v > i)


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_by_permutations(n):
    counts = [0] * (n + 1)
    for p in permutations(range(1, n + 1)):
        counts[excedances(p)] += 1
    assert [eulerian(n, k) for k in range(1, n + 1)] == counts[:n]


def test_eulerian_examples():
    assert eulerian(5, 3) == 66
    assert eulerian(3, 2) == 4
    assert all(eulerian(n, 1) == 1 for n in range(1, 9))
    assert eulerian(4, 0) == 0 and eulerian(4, 5) == 0


def test_series_basics():
    exp = [Fraction(1, factorial(k)) for k in range(8)]
    assert series.mul(exp, exp, 7) == [Fraction(2 ** k, factorial(k)) for k in range(8)]
    assert series.power(exp, 3, 7) == [Fraction(3 ** k, factorial(k)) for k in range(8)]
    geo = series.reciprocal([1, -1], 6)
    assert geo == [1] * 7
    assert series.derivative([1, 2, 3], 3) == [2, 6, 0, 0]


def test_revert_known_series():
    # x/(1 - x) reverts to x/(1 + x)
    f = [0] + [1] * 9
    h = series.revert(f, 9)
    assert h == [0] + [(-1) ** (k - 1) for k in range(1, 10)]
    # sinh reverts to arcsinh: x - x^3/6 + 3x^5/40 - ...
    sinh = [Fraction(k % 2, factorial(k)) for k in range(10)]
    ash = series.revert(sinh, 9)
    assert ash[:6] == [0, 1, 0, Fraction(-1, 6), 0, Fraction(3, 40)]


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=1, max_size=8))
def test_revert_inverts(tail):
    if tail[0] == 0:
        return
    f = [0] + tail
    N = len(f) - 1
    h = series.revert(f, N)
    assert series.compose(f, h, N) == series.trunc([0, 1], N)
    assert series.compose(h, f, N) == series.trunc([0, 1], N)


def test_compose_requires_zero_constant():
    with pytest.raises(ValueError):
        series.compose([1, 1], [1, 1], 3)
