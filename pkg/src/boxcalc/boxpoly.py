"""Box polynomials ``B_{m,n}(x)`` and their identities.

``B_{m,n}(x)`` sums ``prod(x + lambda_i)`` over partitions ``lambda`` with ``m``
parts in ``[0, n]``.  Three constructions are provided:

* :func:`box_poly_oracle` -- the defining sum, exponential in ``m + n``;
* :func:`box_poly` -- ``Delta^n(x^{m+n}) / n!``, the production path;
* :func:`box_poly_closed_form` -- ``sum_j C(m+n, j) S(m+n-j, n) x^j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Tuple

from .errors import SizeLimitError
from .numbers import stirling1_signed, stirling2
from .poly import Polynomial, rational_series

__all__ = [
    "IntegerPartition",
    "partitions_in_box",
    "box_poly",
    "box_poly_oracle",
    "box_poly_closed_form",
    "box_via_alternating_sum",
    "shifted_expansion",
    "BoxSpecialValues",
    "box_special_values",
    "box_split",
    "box_at_minus_half_n_scaled",
    "t_convolution",
    "t_homogeneous",
    "box_at_positive_r_via_stirling",
    "alternating_stirling_sum",
    "ORACLE_LIMIT",
]

ORACLE_LIMIT = 24

IntegerPartition = Tuple[int, ...]


def _check_mn(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise ValueError(f"m and n must be non-negative, got ({m}, {n})")


def partitions_in_box(m: int, n: int) -> Iterator[IntegerPartition]:
    """Weakly decreasing ``m``-tuples with entries in ``[0, n]``, colex order."""
    _check_mn(m, n)
    if m == 0:
        yield ()
        return

    # choose entries from the last (smallest) one upward; the last entry varies slowest
    def rec(k: int, lo: int):
        # k = number of remaining leading parts, each >= lo
        if k == 0:
            yield ()
            return
        for v in range(lo, n + 1):
            for head in rec(k - 1, v):
                yield head + (v,)

    for lam in rec(m, 0):
        yield lam


def box_poly_oracle(m: int, n: int) -> Polynomial:
    """Direct sum over all partitions in the box."""
    _check_mn(m, n)
    if m + n > ORACLE_LIMIT:
        raise SizeLimitError(f"oracle limited to m + n <= {ORACLE_LIMIT}")
    # walk the parts in weakly decreasing order, extending the prefix product
    total = [0] * (m + 1)

    def walk(prod, slots, top):
        if slots == 0:
            for i, v in enumerate(prod):
                total[i] += v
            return
        for part in range(top + 1):
            nxt = [0] * (len(prod) + 1)
            for i, v in enumerate(prod):
                nxt[i] += part * v
                nxt[i + 1] += v
            walk(nxt, slots - 1, part)

    walk([1], m, n)
    return Polynomial(total)


@lru_cache(maxsize=512)
def box_poly(m: int, n: int) -> Polynomial:
    """``B_{m,n}(x) = Delta^n(x^{m+n}) / n!``."""
    _check_mn(m, n)
    return Polynomial.monomial(m + n).forward_difference(n) / factorial(n)


def box_poly_closed_form(m: int, n: int) -> Polynomial:
    _check_mn(m, n)
    return Polynomial(comb(m + n, j) * stirling2(m + n - j, n) for j in range(m + 1))


def box_via_alternating_sum(m: int, n: int) -> Polynomial:
    """``(1/n!) sum_r (-1)^(n-r) C(n, r) (x + r)^(m+n)``."""
    _check_mn(m, n)
    acc = Polynomial()
    for r in range(n + 1):
        acc = acc + (Polynomial([r, 1]) ** (m + n)) * ((-1) ** (n - r) * comb(n, r))
    return acc / factorial(n)


def shifted_expansion(p: Polynomial) -> list:
    """Coefficients ``c_j`` with ``p(x) = sum c_j (x - 1)^j``."""
    return list(p.shift(1).coeffs)


@dataclass(frozen=True)
class BoxSpecialValues:
    at0: Fraction
    at1: Fraction
    at_neg_n: Fraction
    at_neg_n_minus_1: Fraction


def box_special_values(m: int, n: int) -> BoxSpecialValues:
    b = box_poly(m, n)
    return BoxSpecialValues(b(Fraction(0)), b(Fraction(1)), b(Fraction(-n)), b(Fraction(-n - 1)))


def box_split(m: int, n1: int, n2: int) -> tuple:
    """Both sides of ``B_{m,n1+n2+1}(x) = sum_k B_{k,n1}(x) B_{m-k,n2}(x+n1+1)``."""
    _check_mn(m, n1)
    _check_mn(m, n2)
    lhs = box_poly(m, n1 + n2 + 1)
    rhs = Polynomial()
    for k in range(m + 1):
        rhs = rhs + box_poly(k, n1) * box_poly(m - k, n2).shift(n1 + 1)
    return lhs, rhs


def box_at_minus_half_n_scaled(m: int, n: int) -> Fraction:
    """``2^m B_{m,n}(-n/2)``; counts partitions of ``[m+n]`` into ``n`` odd blocks."""
    return 2 ** m * box_poly(m, n)(Fraction(-n, 2))


def t_convolution(m: int, n: int) -> int:
    """``2^m sum_k (-1)^k S(k + n/2, n/2) S(m - k + n/2, n/2)`` for even ``n``."""
    if n % 2:
        raise ValueError("n must be even")
    _check_mn(m, n)
    h = n // 2
    return 2 ** m * sum((-1) ** k * stirling2(k + h, h) * stirling2(m - k + h, h) for k in range(m + 1))


def t_homogeneous(m: int, n: int) -> Fraction:
    """``h_{m/2}(2^2, 4^2, ..., n^2)`` for ``m``, ``n`` both even."""
    if m % 2 or n % 2:
        raise ValueError("m and n must both be even")
    poles = [(2 * i) ** 2 for i in range(1, n // 2 + 1)]
    return rational_series(poles, m // 2)[m // 2]


def box_at_positive_r_via_stirling(m: int, n: int, r: int) -> int:
    """``sum_{i<r} s(r, r-i) S(m+n+r-i, r+n)``, which equals ``B_{m,n}(r)``."""
    if r <= 0:
        raise ValueError("r must be a positive integer")
    _check_mn(m, n)
    return sum(stirling1_signed(r, r - i) * stirling2(m + n + r - i, r + n) for i in range(r))


def alternating_stirling_sum(n: int, k: int) -> int:
    """``sum_j (-1)^j C(n, j) S(n-j, k)``; equals ``B_{n-k,k}(-1)``."""
    return sum((-1) ** j * comb(n, j) * stirling2(n - j, k) for j in range(n + 1))
