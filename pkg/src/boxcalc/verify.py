"""Invariant suites behind ``boxcalc verify``.

Each suite takes a size cap and returns a list of :class:`Check` records;
a check passes only if every case within the cap holds exactly.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath

from . import boxpoly as bp
from . import excedance as ex
from . import ffop
from . import roots as rt
from . import setpart as sp
from .graphs import random_s_tree
from .numbers import bell, stirling2
from .poly import Polynomial, X, rational_series

__all__ = ["Check", "SUITES", "DEFAULT_CAPS", "run_suite"]


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    cases: int
    seconds: float
    detail: str = ""

    def as_dict(self) -> dict:
        return dict(self.__dict__)


class _Recorder:
    def __init__(self, suite):
        self.suite = suite
        self.checks = []

    def run(self, name, cases):
        """``cases`` yields ``(ok, label)``; the first failure is kept as the detail."""
        t = time.perf_counter()
        n, ok, detail = 0, True, ""
        for good, label in cases:
            n += 1
            if not good and ok:
                ok, detail = False, f"fails at {label}"
        self.checks.append(Check(self.suite, name, ok, n, time.perf_counter() - t, detail))


def _same(pair) -> bool:
    return pair[0] == pair[1]


def _box_column_ok(d) -> bool:
    return d["column"] == d["box"] and d["row"] == d["box_transposed"]


def _suite_boxpoly(cap: int) -> list:
    r = _Recorder("boxpoly")
    grid = [(m, n) for m in range(cap + 1) for n in range(cap + 1)]
    pos = [(m, n) for m, n in grid if m >= 1 and n >= 1]
    B = bp.box_poly
    r.run("triple equality", ((B(m, n) == bp.box_poly_oracle(m, n) == bp.box_poly_closed_form(m, n), (m, n)) for m, n in grid))
    r.run("recursion", ((B(m, n) == X * B(m - 1, n) + B(m, n - 1).shift(1), (m, n)) for m, n in pos))
    r.run("symmetry", ((B(m, n).scale_argument(-1).shift(n) == B(m, n) * (-1) ** m, (m, n)) for m, n in grid))
    r.run("derivative", ((B(m, n).derivative() == B(m - 1, n) * (m + n), (m, n)) for m, n in grid if m >= 1))
    r.run("split", ((_same(bp.box_split(m, n1, n2)), (m, n1, n2))
                    for m in range(cap + 1) for n1 in range(cap) for n2 in range(cap - n1)))
    r.run("alternating sum", ((B(m, n) == bp.box_via_alternating_sum(m, n), (m, n)) for m, n in grid))
    r.run("shifted expansion", ((bp.shifted_expansion(B(m, n)) == [comb(m + n, j) * stirling2(m + n - j + 1, n + 1) for j in range(m + 1)], (m, n)) for m, n in grid))
    pts = [Fraction(0), Fraction(-1), Fraction(1, 3), Fraction(-7, 2)]
    r.run("generating function", ((rational_series([x0 + i for i in range(n + 1)], m)[m] == B(m, n)(x0), (m, n, x0))
                                  for m, n in grid for x0 in pts))
    r.run("leading and constant terms", ((B(m, n).leading_coefficient == comb(m + n, m) and B(m, n)(0) == stirling2(m + n, n), (m, n)) for m, n in grid))
    r.run("alternating Stirling sum", ((bp.alternating_stirling_sum(n, k) == B(n - k, k)(-1), (n, k))
                                       for n in range(2, cap + 3) for k in range(2, n + 1)))
    return r.checks


def _suite_setpart(cap: int) -> list:
    r = _Recorder("setpart")
    cap = min(cap, 11)
    r.run("cyclic adjacency", ((sp.cyclic_adjacency_count(n, k) == sp.cyclic_adjacency_oracle(n, k), (n, k))
                               for n in range(3, cap + 1) for k in range(2, n + 1)))
    r.run("distance s", ((sp.distance_s_count(n, k, s) == sp.distance_s_oracle(n, k, s), (n, k, s))
                         for n in range(1, cap + 1) for k in range(1, n + 1) for s in range(1, k + 1)))
    r.run("first r separated", ((sp.first_r_separated_count(m, n, q) == sp.first_r_separated_oracle(m, n, q), (m, n, q))
                                for m in range(cap) for n in range(cap) for q in range(1, cap + 1) if m + n + q <= cap))
    r.run("parity minima (r < n/2)", ((sp.parity_minima_count(m, n, q) == sp.parity_minima_oracle(m, n, q), (m, n, q))
                                      for m in range(cap) for n in range(2, cap + 1) for q in range(1, n // 2 + 1)
                                      if m + n - q <= cap and 2 * q < n))
    r.run("parity minima (r = n/2, phantom parity)", ((sp.parity_minima_count(m, n, q) == sp.parity_minima_oracle(m, n, q, corrected=True), (m, n, q))
                                                     for m in range(cap) for n in range(2, cap + 1, 2) for q in [n // 2]
                                                     if m + n - q <= cap))
    r.run("odd blocks", ((bp.box_at_minus_half_n_scaled(m, n) == sp.odd_block_count_oracle(m + n, n), (m, n))
                         for m in range(cap + 1) for n in range(cap + 1) if m + n <= cap))
    r.run("odd blocks, convolution", ((bp.t_convolution(m, n) == sp.odd_block_count_oracle(m + n, n), (m, n))
                                      for m in range(cap + 1) for n in range(0, cap + 1, 2) if m + n <= cap))
    r.run("odd blocks, homogeneous", ((bp.t_homogeneous(m, n) == sp.odd_block_count_oracle(m + n, n), (m, n))
                                      for m in range(0, cap + 1, 2) for n in range(0, cap + 1, 2) if m + n <= cap))
    r.run("mod r blocks", ((ffop.mod_r_block_count(n, k, q) == sp.mod_r_block_oracle(n, k, q), (n, k, q))
                           for n in range(cap + 1) for k in range(n + 1) for q in range(1, 5)))
    r.run("no singleton", ((sp.no_singleton_count(n) == sp.no_singleton_oracle(n), n) for n in range(2, cap + 1)))
    r.run("no singleton = sum of cyclic counts", ((sp.no_singleton_count(n) == sum(sp.cyclic_adjacency_count(n, k) for k in range(2, n + 1)), n)
                                                  for n in range(4, cap + 1)))
    psi_cap = min(cap, 9)

    def psi_cases():
        for n in range(3, psi_cap + 1):
            _, A = sp.enumerate_partitions(n, None, sp.is_cyclic_adjacency_free, collect=True)
            _, Q = sp.enumerate_partitions(n, None, sp.has_no_singleton, collect=True)
            fwd = [sp.psi_map(p) for p in A]
            ok = (set(fwd) == set(Q) and len(set(fwd)) == len(A)
                  and all(sp.psi_map(q, "backward") == p for p, q in zip(A, fwd)))
            yield ok, n
    r.run("psi bijection", psi_cases())
    rng = random.Random(7)

    def stree_cases():
        for n in range(1, min(cap, 9) + 1):
            for s in range(1, n + 1):
                g = random_s_tree(n, s, rng)
                yield sum(sp.graph_partition_count(g, k) for k in range(n + 1)) == bell(n - s), (n, s)
    r.run("s-tree Bell sums", stree_cases())
    return r.checks


def _suite_ffop(cap: int) -> list:
    r = _Recorder("ffop")
    rng = random.Random(11)

    def rand_poly(d):
        return Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(d + 1)])

    polys = [rand_poly(d) for d in range(cap + 1) for _ in range(2)]
    r.run("F_r(x) = 1", ((ffop.ff_apply(q, X) == Polynomial([1]), q) for q in range(1, 6)))
    r.run("shift invariance", ((ffop.ff_apply(q, p.shift(a)) == ffop.ff_apply(q, p).shift(a), (q, i))
                               for q in range(1, 5) for i, p in enumerate(polys) for a in (Fraction(1, 2), Fraction(-3))))
    r.run("basic sequence axioms", (((ffop.ff_apply(q, ffop.basic_sequence(q, n)) == ffop.basic_sequence(q, n - 1) * n
                                      and ffop.basic_sequence(q, n)(0) == 0 and ffop.basic_sequence(q, n).degree == n), (q, n))
                                    for q in range(1, 5) for n in range(1, cap + 3)))
    pts = [(Fraction(a, 3), Fraction(b, 2)) for a in range(-2, 3) for b in range(-2, 3)]

    def binom_cases():
        for q in range(1, 5):
            for n in range(min(cap, 6) + 1):
                ps = [ffop.basic_sequence(q, k) for k in range(n + 1)]
                for x, y in pts:
                    yield ps[n](x + y) == sum(comb(n, k) * ps[k](x) * ps[n - k](y) for k in range(n + 1)), (q, n, x, y)
    r.run("binomial type", binom_cases())

    def inversion_cases():
        from . import series
        for q in range(1, 5):
            h = ffop.h_series(q, 9)
            yield series.compose(ffop.f_series(q, 9), h, 9) == series.trunc([0, 1], 9), q
    r.run("f_r(h_r(x)) = x", inversion_cases())
    r.run("mu against poset", ((ffop.mobius_mod_r(n, q) == ffop.mobius_poset_oracle(n, q), (n, q))
                               for q, top in ((1, 6), (2, 9), (3, 7), (4, 9)) for n in range(1, top + 1)))
    r.run("F_2 box identity", ((_same(ffop.ff2_box_identity(m, n)), (m, n))
                              for m in range(cap + 1) for n in range(cap + 1)))
    return r.checks


def _suite_excedance(cap: int) -> list:
    r = _Recorder("excedance")
    grid = [(m, n) for m in range(cap + 1) for n in range(cap + 1)]
    M = {mn: ex.excedance_matrix(*mn) for mn in grid}
    r.run("DP = direct summation", ((M[m, n] == ex.excedance_matrix_direct(m, n), (m, n)) for m, n in grid if m + n <= 9))
    r.run("transpose", ((M[m, n] == M[n, m].transpose(), (m, n)) for m, n in grid))
    r.run("sum = Eulerian", ((M[m, n].total() == ex.eulerian(m + n + 1, n + 1), (m, n)) for m, n in grid))
    r.run("diagonal sums", ((ex.diagonal_sums(M[m, n])[:-1] == [0] * (m + n) and M[m, n].entry(m, n) == comb(m + n, m), (m, n))
                            for m, n in grid))
    r.run("entry recursion", ((_same(ex.entry_recursion_check(m, n, i, j)), (m, n, i, j))
                             for m, n in grid if m >= 1 and n >= 1 for i in range(m + 1) for j in range(n + 1)))
    r.run("box column and row", ((_box_column_ok(ex.box_column_check(m, n)), (m, n)) for m, n in grid))
    r.run("corner formula", ((M[m, n].entry(m - 1, n - 1) == ex.corner_formula(m, n, corrected=True), (m, n)) for m, n in grid if m >= 1 and n >= 1))
    r.run("c_{1,0} = c_{0,1} = Eulerian", ((M[m, n].entry(1, 0) == M[m, n].entry(0, 1) == ex.eulerian(m + n - 1, n), (m, n))
                                          for m, n in grid if m >= 1 and n >= 1))
    r.run("bracket = brute force", ((ex.bracket(w) == ex.bracket_bruteforce(w), w)
                                    for L in range(min(cap, 8) + 1) for b in range(L + 1) for w in ex.words(L - b, b)))
    return r.checks


def _suite_roots(cap: int) -> list:
    r = _Recorder("roots")
    pairs = [(m, n) for m in range(1, cap + 1) for n in range(1, cap + 1)]
    tiny = mpmath.mpf(10) ** -30
    r.run("real parts", ((rt.verify_real_parts(m, n) < tiny, (m, n)) for m, n in pairs))
    r.run("bounds", ((rt.bounds_check(m, n).ok, (m, n)) for m, n in pairs))
    r.run("square free", ((rt.square_free_certificate(m, n), (m, n)) for m, n in pairs))
    r.run("-n/2 is a root iff m odd", (((bp.box_poly(m, n)(Fraction(-n, 2)) == 0) == (m % 2 == 1), (m, n)) for m, n in pairs))
    return r.checks


SUITES = {
    "boxpoly": _suite_boxpoly,
    "setpart": _suite_setpart,
    "ffop": _suite_ffop,
    "excedance": _suite_excedance,
    "roots": _suite_roots,
}
DEFAULT_CAPS = {"boxpoly": 8, "setpart": 9, "ffop": 6, "excedance": 6, "roots": 6}


def run_suite(name: str, max_size=None) -> list:
    if name == "all":
        out = []
        for key in SUITES:
            out += run_suite(key, max_size)
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    cap = DEFAULT_CAPS[name] if max_size is None else max_size
    return SUITES[name](cap)
