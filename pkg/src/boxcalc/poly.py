"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored lowest degree first as :class:`fractions.Fraction`
values.  Construction normalizes (trailing zeros stripped, every entry coerced
to a reduced fraction), so two polynomials are equal exactly when their
coefficient tuples are equal.

The operator calculus used throughout the package lives here as well: shift
``E^a``, forward difference ``Delta``, derivative ``D``, argument scaling
``M_a`` and the series expansion of ``1 / prod(1 - a_i t)``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]

__all__ = [
    "Polynomial",
    "X",
    "ONE",
    "ZERO",
    "evaluate",
    "shift",
    "forward_difference",
    "derivative",
    "scale_argument",
    "poly_gcd",
    "rational_series",
    "falling_factorial",
    "to_json",
    "from_json",
    "parse_rational",
    "format_rational",
]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return parse_rational(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


def parse_rational(s: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"`` into a Fraction (no floats accepted)."""
    s = s.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational: {s!r}")
    return Fraction(s)


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Polynomial:
    """Immutable polynomial ``sum(coeffs[i] * x**i)`` over the rationals."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [_frac(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)
        self._hash = None

    @classmethod
    def monomial(cls, k: int, coeff: Number = 1) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [coeff])

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self._c) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial([other])._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # arithmetic

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-v for v in self._c)

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(v * other for v in self._c)
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return ZERO
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, u in enumerate(self._c):
            if u == 0:
                continue
            for j, v in enumerate(other._c):
                out[i + j] += u * v
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return Polynomial(v / other for v in self._c)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "Polynomial"):
        """Euclidean division: returns ``(q, r)`` with ``deg r < deg other``."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        d = other.degree
        lc = other._c[-1]
        q = [Fraction(0)] * max(len(r) - d, 0)
        for k in range(len(r) - 1, d - 1, -1):
            t = r[k] / lc
            if t == 0:
                continue
            q[k - d] = t
            for j in range(d + 1):
                r[k - d + j] -= t * other._c[j]
        return Polynomial(q), Polynomial(r[:d] if d > 0 else [])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self / self._c[-1]

    # evaluation and operators

    def __call__(self, x):
        acc = 0
        for v in reversed(self._c):
            acc = acc * x + v
        if isinstance(acc, int):
            return Fraction(acc)
        return acc

    def shift(self, a: Number) -> "Polynomial":
        """``p(x + a)`` by binomial expansion."""
        a = _frac(a)
        if a == 0 or len(self._c) <= 1:
            return self
        n = len(self._c)
        apow = [Fraction(1)] * n
        for i in range(1, n):
            apow[i] = apow[i - 1] * a
        out = [Fraction(0)] * n
        for k, ck in enumerate(self._c):
            if ck == 0:
                continue
            for j in range(k + 1):
                out[j] += ck * comb(k, j) * apow[k - j]
        return Polynomial(out)

    def forward_difference(self, k: int = 1) -> "Polynomial":
        """``Delta^k p`` by repeated shift-and-subtract."""
        if k < 0:
            raise ValueError("k must be non-negative")
        p = self
        for _ in range(k):
            if p.degree < 1:
                return ZERO
            p = p.shift(1) - p
        return p

    def derivative(self) -> "Polynomial":
        return Polynomial(i * v for i, v in enumerate(self._c) if i)

    def scale_argument(self, a: Number) -> "Polynomial":
        """``p(a x)``."""
        a = _frac(a)
        out, ap = [], Fraction(1)
        for v in self._c:
            out.append(v * ap)
            ap *= a
        return Polynomial(out)

    def compose(self, q: "Polynomial") -> "Polynomial":
        acc = ZERO
        for v in reversed(self._c):
            acc = acc * q + v
        return acc

    # serialization

    def to_json(self) -> str:
        return json.dumps([format_rational(v) for v in self._c])

    def to_text(self, var: str = "x") -> str:
        """Descending powers with exact coefficients, e.g. ``6x^2+12x+7``."""
        if not self._c:
            return "0"
        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = format_rational(a)
            else:
                mon = var if k == 1 else f"{var}^{k}"
                if a == 1:
                    body = mon
                elif a.denominator == 1:
                    body = f"{a.numerator}{mon}"
                else:
                    body = f"({format_rational(a)}){mon}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out


def _as_poly(v):
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return Polynomial([v])
    return NotImplemented


ZERO = Polynomial()
ONE = Polynomial([1])
X = Polynomial([0, 1])


def evaluate(p: Polynomial, x: Number) -> Fraction:
    return p(_frac(x))


def shift(p: Polynomial, a: Number) -> Polynomial:
    return p.shift(a)


def forward_difference(p: Polynomial, k: int = 1) -> Polynomial:
    return p.forward_difference(k)


def derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def scale_argument(p: Polynomial, a: Number) -> Polynomial:
    return p.scale_argument(a)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd undefined for two zero polynomials")
    while not q.is_zero():
        p, q = q, p.divmod(q)[1]
    return p.monic()


def rational_series(poles: Sequence[Number], order: int) -> list:
    """Coefficients of ``t^0..t^order`` in ``1 / prod(1 - a_i t)``.

    Each factor is a geometric series; multiplying by ``1/(1 - a t)`` is the
    running-sum recurrence ``c_k <- c_k + a c_{k-1}``.  The coefficient of
    ``t^m`` is the complete homogeneous symmetric function ``h_m(poles)``.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [Fraction(1)] + [Fraction(0)] * order
    for a in poles:
        a = _frac(a)
        for k in range(1, order + 1):
            c[k] += a * c[k - 1]
    return c


def falling_factorial(k: int) -> Polynomial:
    """``x (x-1) ... (x-k+1)``."""
    p = ONE
    for i in range(k):
        p = p * Polynomial([-i, 1])
    return p


def to_json(p: Polynomial) -> str:
    return p.to_json()


def from_json(s: str) -> Polynomial:
    data = json.loads(s)
    if not isinstance(data, list) or not all(isinstance(v, str) for v in data):
        raise ValueError("expected a JSON array of coefficient strings")
    return Polynomial(parse_rational(v) for v in data)
