"""Truncated formal power series with exact rational coefficients.

A series is a list ``c`` with ``c[k]`` the coefficient of ``x^k``; every
function takes the truncation order ``N`` and returns ``N + 1`` coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

__all__ = ["trunc", "mul", "reciprocal", "compose", "derivative", "revert", "power"]

Series = List[Fraction]


def trunc(a: Sequence, N: int) -> Series:
    out = [Fraction(v) for v in a[: N + 1]]
    return out + [Fraction(0)] * (N + 1 - len(out))


def mul(a: Sequence, b: Sequence, N: int) -> Series:
    out = [Fraction(0)] * (N + 1)
    for i, ai in enumerate(a[: N + 1]):
        if ai:
            for j, bj in enumerate(b[: N + 1 - i]):
                if bj:
                    out[i + j] += ai * bj
    return out


def power(a: Sequence, k: int, N: int) -> Series:
    out = trunc([1], N)
    base = trunc(a, N)
    while k:
        if k & 1:
            out = mul(out, base, N)
        k >>= 1
        if k:
            base = mul(base, base, N)
    return out


def reciprocal(a: Sequence, N: int) -> Series:
    a = trunc(a, N)
    if a[0] == 0:
        raise ZeroDivisionError("series has zero constant term")
    out = [Fraction(0)] * (N + 1)
    out[0] = 1 / a[0]
    for k in range(1, N + 1):
        s = sum(a[i] * out[k - i] for i in range(1, k + 1))
        out[k] = -s / a[0]
    return out


def compose(f: Sequence, g: Sequence, N: int) -> Series:
    """``f(g(x))`` truncated; requires ``g(0) = 0``."""
    g = trunc(g, N)
    if g[0] != 0:
        raise ValueError("inner series must have zero constant term")
    f = trunc(f, N)
    out = [Fraction(0)] * (N + 1)
    for c in reversed(f):      # Horner in the series ring
        out = mul(out, g, N)
        out[0] += c
    return out


def derivative(a: Sequence, N: int) -> Series:
    a = trunc(a, N + 1)
    return [a[k + 1] * (k + 1) for k in range(N + 1)]


def revert(f: Sequence, N: int) -> Series:
    """Compositional inverse ``h`` with ``f(h(x)) = x``, by Newton iteration.

    ``f`` must have ``f(0) = 0`` and ``f'(0) != 0``.  Each step doubles the
    number of correct coefficients.
    """
    f = trunc(f, N + 1)
    if f[0] != 0 or f[1] == 0:
        raise ValueError("series is not invertible under composition")
    fp = derivative(f, N)
    h = [Fraction(0)] * (N + 1)
    if N >= 1:
        h[1] = 1 / f[1]
    prec = 1
    while prec < N:
        prec = min(2 * prec, N)
        resid = compose(f, h, prec)
        resid[1] -= 1
        step = mul(resid, reciprocal(compose(fp, h, prec), prec), prec)
        h = [h[k] - step[k] if k <= prec else h[k] for k in range(N + 1)]
    return h
