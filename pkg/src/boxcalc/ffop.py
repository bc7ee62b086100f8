"""The fast Fourier delta operator ``F_r = sum_{m >= 1, m = 1 (mod r)} D^m / m!``.

``F_r`` averages ``omega^{-j} E^{omega^j}`` over the ``r``-th roots of unity;
expanding the shifts in powers of ``D`` leaves only the exponents
``m = 1 (mod r)``, so everything here stays in exact rational arithmetic and
``omega`` is never formed.  ``F_2`` is ``sinh(D)`` and ``F_1`` is ``Delta``.

The compositional inverse ``h_r`` of ``f_r(x) = sum x^m / m!`` (same range of
``m``) has coefficients ``mu(n) / n!``, the Möbius values of the poset of
partitions of ``[n]`` with block sizes ``1 (mod r)``; the basic polynomials
are ``sum_pi prod_B mu(|B|) x^{|pi|}`` over that poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import series
from .boxpoly import box_poly
from .errors import SizeLimitError
from .poly import ONE, Polynomial

__all__ = [
    "FFOperator",
    "f_series",
    "ff_apply",
    "ff_power",
    "mod_r_block_count",
    "mobius_mod_r",
    "mobius_poset_oracle",
    "h_series",
    "basic_sequence",
    "basic_sequence_oracle",
    "ff2_box_identity",
]


def _check_r(r: int) -> None:
    if r < 1:
        raise ValueError("r must be a positive integer")


@dataclass(frozen=True)
class FFOperator:
    r: int

    def __post_init__(self):
        _check_r(self.r)

    def __call__(self, p: Polynomial) -> Polynomial:
        return ff_apply(self.r, p)


def f_series(r: int, N: int) -> list:
    """Coefficients of ``f_r`` through ``x^N``."""
    _check_r(r)
    return [Fraction(1, factorial(m)) if m >= 1 and m % r == 1 % r else Fraction(0)
            for m in range(N + 1)]


def ff_apply(r: int, p: Polynomial) -> Polynomial:
    _check_r(r)
    out = Polynomial()
    d = p
    for m in range(1, p.degree + 1):
        d = d.derivative()
        if m % r == 1 % r:
            out = out + d / factorial(m)
    return out


def ff_power(r: int, p: Polynomial, k: int) -> Polynomial:
    for _ in range(k):
        p = ff_apply(r, p)
    return p


def mod_r_block_count(n: int, k: int, r: int) -> int:
    """``F_r^k(x^n)/k!`` at 0: partitions of ``[n]`` into ``k`` blocks of size ``1 (mod r)``."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    v = ff_power(r, Polynomial.monomial(n), k)(0) / factorial(k)
    return int(v)


@lru_cache(maxsize=64)
def _h(r: int, N: int) -> tuple:
    return tuple(series.revert(f_series(r, N + 1), N))


def h_series(r: int, N: int) -> list:
    """Compositional inverse of ``f_r`` through ``x^N``."""
    _check_r(r)
    return list(_h(r, N))


def mobius_mod_r(n: int, r: int) -> int:
    """``n! [x^n] h_r(x)``; zero unless ``n = 1 (mod r)``."""
    _check_r(r)
    if n < 1 or n % r != 1 % r:
        return 0
    v = _h(r, n)[n] * factorial(n)
    assert v.denominator == 1
    return int(v)


def _partitions_with_sizes(n: int, r: int):
    """Set partitions of ``[n]`` (as tuples of frozensets) with block sizes ``1 (mod r)``."""
    def rec(rest: tuple):
        if not rest:
            yield ()
            return
        first, others = rest[0], rest[1:]
        L = len(others)
        for mask in range(1 << L):
            chosen = [others[i] for i in range(L) if mask >> i & 1]
            if (len(chosen) + 1) % r != 1 % r:
                continue
            block = frozenset([first] + chosen)
            left = tuple(o for i, o in enumerate(others) if not mask >> i & 1)
            for tail in rec(left):
                yield (block,) + tail
    return list(rec(tuple(range(1, n + 1))))


@lru_cache(maxsize=None)
def mobius_poset_oracle(n: int, r: int) -> int:
    """``mu(0, 1)`` by the defining recursion on the explicit poset."""
    _check_r(r)
    if n < 1 or n % r != 1 % r:
        return 0
    if n > 10:
        raise SizeLimitError("poset oracle limited to n <= 10")
    elems = _partitions_with_sizes(n, r)
    elems.sort(key=len, reverse=True)           # finer partitions first
    labels = []
    for p in elems:
        lab = {}
        for i, b in enumerate(p):
            for v in b:
                lab[v] = i
        labels.append(lab)
    mu = []
    for s, sigma in enumerate(elems):
        if s == 0:
            mu.append(1)                         # all singletons
            continue
        lab = labels[s]
        total = 0
        for t in range(s):
            tau = elems[t]
            if len(tau) > len(sigma) and all(len({lab[v] for v in b}) == 1 for b in tau):
                total += mu[t]
        mu.append(-total)
    return mu[-1]                                # the one-block partition


def basic_sequence(r: int, n: int) -> Polynomial:
    """Basic polynomials of ``F_r``, from ``exp(x h_r(t))``."""
    _check_r(r)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    h = h_series(r, n)
    coeffs = [Fraction(0)]
    hk = series.trunc([1], n)
    for k in range(1, n + 1):
        hk = series.mul(hk, h, n)
        coeffs.append(hk[n] * factorial(n) / factorial(k))
    return Polynomial(coeffs)


def basic_sequence_oracle(r: int, n: int) -> Polynomial:
    """Sum over partitions with block sizes ``1 (mod r)`` of ``prod mu(|B|) x^{#blocks}``."""
    _check_r(r)
    if n == 0:
        return ONE
    coeffs = [0] * (n + 1)
    for p in _partitions_with_sizes(n, r):
        w = 1
        for b in p:
            w *= mobius_poset_oracle(len(b), r)
        coeffs[len(p)] += w
    return Polynomial(coeffs)


def ff2_box_identity(m: int, n: int) -> tuple:
    """Both sides of ``F_2^n(x^{m+n}) = 2^m n! B_{m,n}((x - n)/2)``."""
    lhs = ff_power(2, Polynomial.monomial(m + n), n)
    rhs = box_poly(m, n).scale_argument(Fraction(1, 2)).shift(-n) * (2 ** m * factorial(n))
    return lhs, rhs
