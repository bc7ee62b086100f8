import csv
import io
from fractions import Fraction

import mpmath
import pytest

from boxcalc import roots as rt
from boxcalc.boxpoly import box_poly
from boxcalc.poly import X, Polynomial

TINY = mpmath.mpf(10) ** -30


@pytest.fixture(autouse=True)
def high_precision():
    with mpmath.workprec(rt.DEFAULT_BITS + 32):
        yield


def near(a, b, tol=TINY):
    return abs(a - b) < tol


def test_quadratic_example():
    rs = rt.find_roots(Polynomial([7, 12, 6]))
    s = 1 / mpmath.sqrt(6)
    assert near(rs[0].value, mpmath.mpc(-1, -s)) and near(rs[1].value, mpmath.mpc(-1, s))


def test_linear_and_unit_circle():
    for n in range(1, 8):
        (r,) = rt.box_roots(1, n)
        assert r.value == mpmath.mpc(mpmath.mpf(-n) / 2)
    rs = rt.find_roots(X ** 2 + 1)
    assert near(rs[0].value, -1j) and near(rs[1].value, 1j)
    with pytest.raises(ValueError):
        rt.find_roots(Polynomial([3]))


def test_residual_certification():
    for m, n in [(3, 2), (6, 5), (9, 3)]:
        p = box_poly(m, n)
        for r in rt.box_roots(m, n):
            assert r.residual <= mpmath.mpf(2) ** (-rt.DEFAULT_BITS / 2)
            assert r.radius > 0
            # the residual is recomputed independently of the solver
            z = r.value
            val = sum(mpmath.mpf(c.numerator) / c.denominator * z ** k for k, c in enumerate(p.coeffs))
            assert abs(val) / (abs(p.leading_coefficient) * (1 + abs(z)) ** p.degree) <= mpmath.mpf(2) ** -100


def test_conjugate_symmetry():
    for m, n in [(4, 3), (7, 2), (5, 5)]:
        vals = [r.value for r in rt.box_roots(m, n)]
        for z in vals:
            assert min(abs(z.conjugate() - w) for w in vals) < TINY


def test_real_part_examples():
    assert rt.verify_real_parts(2, 2) < TINY
    assert all(rt.verify_real_parts(1, n) < TINY for n in range(1, 6))
    assert rt.verify_real_parts(7, 5) < TINY


@pytest.mark.parametrize("m", range(1, 9))
def test_real_parts_small_grid(m):
    for n in range(1, 7):
        assert rt.verify_real_parts(m, n) < TINY


def test_closed_form_n1_examples():
    (z,) = rt.closed_form_roots_n1(1)
    assert near(z, mpmath.mpc(-0.5, 0))
    z1, z2 = sorted(rt.closed_form_roots_n1(2), key=lambda z: z.imag)
    s = 1 / (2 * mpmath.sqrt(3))
    assert near(z1, mpmath.mpc(-0.5, -s)) and near(z2, mpmath.mpc(-0.5, s))
    top = max(z.imag for z in rt.closed_form_roots_n1(40))
    assert abs(top / ((40 + 1) / (2 * mpmath.pi)) - 1) < 0.05


@pytest.mark.parametrize("m", range(1, 13))
def test_closed_form_n1_matches_solver(m):
    found = [r.value for r in rt.box_roots(m, 1)]
    expected = rt.closed_form_roots_n1(m)
    assert len(found) == len(expected) == m
    for z in expected:
        assert min(abs(z - w) for w in found) < mpmath.mpf(10) ** -25


def test_bounds_examples():
    rep = rt.bounds_check(2, 2)
    assert rep.ok
    assert (rep.inner, rep.outer) == (1, Fraction(7, 6)) == rt.annulus_radii(2, 2)
    assert near(rep.min_mod, mpmath.sqrt(1 + mpmath.mpf(1) / 6))
    for n in range(1, 6):
        rep = rt.bounds_check(1, n)
        assert rep.ok and near(rep.min_mod, mpmath.mpf(n) / 2)
    assert rt.bounds_check(3, 3).ok


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 8) for n in range(1, 7)])
def test_bounds_grid(m, n):
    rep = rt.bounds_check(m, n)
    assert rep.im_ok and rep.inner_ok and rep.outer_ok
    assert rep.bound_im == mpmath.mpf(m * n) / mpmath.pi


def test_square_free_examples():
    assert rt.square_free_certificate(3, 2)
    assert rt.square_free_certificate(1, 1)
    assert rt.square_free_certificate(6, 4)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 9) for n in range(1, 9)])
def test_minus_half_n_root_iff_m_odd(m, n):
    assert (box_poly(m, n)(Fraction(-n, 2)) == 0) == (m % 2 == 1)
    assert rt.square_free_certificate(m, n)


def test_table2_examples():
    assert rt.table2_formulas(2, 3) == [mpmath.mpf(-0.5), mpmath.mpf(0.5)]
    three = rt.table2_formulas(3, 2)
    assert near(three[0], -mpmath.sqrt(0.5)) and three[1] == 0 and near(three[2], mpmath.sqrt(0.5))
    assert rt.table2_check(2, 3)["ok"] and rt.table2_check(3, 2)["ok"]
    five = rt.table2_check(5, 2, corrected=True)
    assert five["ok"] and len(five["found"]) == 5 and abs(five["found"][2]) < TINY


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 6) for n in range(1, 7)])
def test_table2_corrected(m, n):
    assert rt.table2_check(m, n, corrected=True)["ok"]


@pytest.mark.parametrize("m,n", [(m, n) for m in (1, 2, 3) for n in range(1, 7)])
def test_table2_printed_rows_one_to_three(m, n):
    assert rt.table2_check(m, n)["ok"]


@pytest.mark.parametrize("m,n", [(m, n) for m in (4, 5) for n in range(1, 7)])
def test_table2_printed_rows_four_five_disagree(m, n):
    rep = rt.table2_check(m, n)
    assert not rep["ok"] and rep["max_error"] > mpmath.mpf(10) ** -3


def test_imaginary_scaling_rows():
    rows = rt.imaginary_scaling_experiment([1, 2], [2, 3])
    by = {(m, n): (mx, ratio) for m, n, mx, ratio in rows}
    assert by[1, 2][0] == 0 and by[1, 3][0] == 0
    assert near(by[2, 2][0], 1 / mpmath.sqrt(6))
    assert near(by[2, 2][1], by[2, 2][0] / (2 * mpmath.sqrt(2)))


def test_chebyshev_n2():
    for m in range(1, 5):
        for row in rt.chebyshev_n2_report(m):
            assert near(row["re"], -1)
            assert row["residual"] < mpmath.mpf(10) ** -50


def test_column_roots_and_csv():
    cols = rt.column_roots(3, 2)
    assert sorted(cols) == [1, 2]
    # the last column is the box polynomial itself
    assert [r.value for r in cols[2]] == [r.value for r in rt.box_roots(3, 2)]
    trend = rt.column_trend(cols)
    assert [k for k, *_ in trend] == [1, 2]
    text = rt.roots_csv([(3, k, rs) for k, rs in cols.items()], bits=96)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["m", "n", "root_index", "re", "im"]
    assert len(rows) == 1 + 3 + 3
    assert [r[3] for r in rows if r[1] == "2" and r[4] == "0"] == ["-1.0"]


def test_root_finding_error(monkeypatch):
    monkeypatch.setattr(rt, "_aberth", lambda p, bits, seed: ([mpmath.mpc(5, 5)] * p.degree, False))
    with pytest.raises(rt.RootFindingError) as info:
        rt.find_roots(box_poly(3, 3))
    assert info.value.best is not None and info.value.residual > 0
