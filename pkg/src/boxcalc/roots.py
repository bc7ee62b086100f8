"""High-precision complex roots of box polynomials and the checks built on them.

Roots come from Aberth-Ehrlich iteration in mpmath.  Each root carries a
scaled residual and an inclusion radius ``deg * |p(z) / p'(z)|``: the disk of
that radius about ``z`` contains a true root.  Bound checks compare the exact
bound values against these disks.
"""

from __future__ import annotations

import csv
import io
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, List, Optional, Sequence

import mpmath

from .boxpoly import box_poly
from .excedance import excedance_matrix
from .numbers import stirling2
from .poly import Polynomial, poly_gcd

__all__ = [
    "DEFAULT_BITS",
    "ComplexRoot",
    "RootFindingError",
    "find_roots",
    "box_roots",
    "verify_real_parts",
    "closed_form_roots_n1",
    "BoundsReport",
    "annulus_radii",
    "bounds_check",
    "square_free_certificate",
    "table2_formulas",
    "table2_check",
    "imaginary_scaling_experiment",
    "chebyshev_n2_report",
    "column_roots",
    "column_trend",
    "roots_csv",
]

DEFAULT_BITS = 256
GOLDEN_ANGLE = math.pi * (3 - math.sqrt(5))


@dataclass(frozen=True)
class ComplexRoot:
    value: mpmath.mpc
    residual: mpmath.mpf     # |p(z)| / (|lc| (1 + |z|)^deg)
    radius: mpmath.mpf       # a root of p lies within this distance of value


class RootFindingError(ArithmeticError):
    def __init__(self, message, best=None, residual=None):
        super().__init__(message)
        self.best = best
        self.residual = residual


def _to_mpf(c: Fraction):
    return mpmath.mpf(c.numerator) / c.denominator


def _horner(coeffs, z):
    """``p(z)`` and ``p'(z)``, coefficients highest degree first."""
    p = coeffs[0]
    dp = mpmath.mpc(0)
    for c in coeffs[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(p: Polynomial, bits: int, seed: int):
    deg = p.degree
    with mpmath.workprec(bits + 32):
        lc = _to_mpf(p.leading_coefficient)
        coeffs = [_to_mpf(c) / lc for c in reversed(p.coeffs)]   # monic, highest first
        cauchy = 1 + max(abs(c) for c in coeffs[1:])
        rng = random.Random(seed)
        z = []
        for k in range(deg):
            r = cauchy * (1 + mpmath.mpf(1e-3) * (rng.random() - 0.5))
            z.append(mpmath.mpc(mpmath.cos(0.25 + k * GOLDEN_ANGLE), mpmath.sin(0.25 + k * GOLDEN_ANGLE)) * r)
        tol = mpmath.mpf(2) ** (-(bits - 8))
        settled = 0
        for _ in range(200 * deg):
            worst = mpmath.mpf(0)
            for k in range(deg):
                pk, dpk = _horner(coeffs, z[k])
                if pk == 0:
                    continue
                ratio = pk / dpk if dpk != 0 else mpmath.mpc(1)
                s = mpmath.fsum(1 / (z[k] - z[j]) for j in range(deg) if j != k)
                w = ratio / (1 - ratio * s)
                z[k] -= w
                worst = max(worst, abs(w) / (1 + abs(z[k])))
            if worst <= tol:
                settled += 1
                if settled >= 2:
                    return z, True
            else:
                settled = 0
        return z, False


def _certify(p: Polynomial, z, bits: int) -> List[ComplexRoot]:
    deg = p.degree
    with mpmath.workprec(bits + 32):
        lc = _to_mpf(p.leading_coefficient)
        coeffs = [_to_mpf(c) for c in reversed(p.coeffs)]
        out = []
        for v in z:
            pv, dpv = _horner(coeffs, v)
            res = abs(pv) / (abs(lc) * (1 + abs(v)) ** deg)
            rad = deg * abs(pv) / abs(dpv) if dpv != 0 else mpmath.inf
            # no enclosure is tighter than the working resolution
            rad = max(rad, mpmath.mpf(2) ** (-bits) * (1 + abs(v)))
            out.append(ComplexRoot(+v, +res, +rad))
        return out


def find_roots(p: Polynomial, bits: int = DEFAULT_BITS, seed: int = 0) -> List[ComplexRoot]:
    """All ``deg p`` roots, sorted by (imaginary, real) part.

    If the iteration cap is hit or a residual fails certification the
    precision is doubled once before :class:`RootFindingError` is raised.
    """
    if p.degree < 1:
        raise ValueError("polynomial must have degree at least 1")
    if p.degree == 1:
        c0, c1 = p.coeffs
        with mpmath.workprec(bits + 32):
            v = mpmath.mpc(-_to_mpf(c0) / _to_mpf(c1))
            rad = mpmath.mpf(2) ** (-bits) * (1 + abs(v))
        return [ComplexRoot(v, mpmath.mpf(0), rad)]
    threshold = mpmath.mpf(2) ** (-bits / 2)
    best = None
    for attempt_bits in (bits, 2 * bits):
        z, converged = _aberth(p, attempt_bits, seed)
        roots = _certify(p, z, attempt_bits)
        worst = max(r.residual for r in roots)
        best = (roots, worst)
        if converged and worst <= threshold:
            return sorted(roots, key=lambda r: (r.value.imag, r.value.real))
    raise RootFindingError("Aberth iteration did not converge", best[0], best[1])


def box_roots(m: int, n: int, bits: int = DEFAULT_BITS) -> List[ComplexRoot]:
    return find_roots(box_poly(m, n), bits)


def verify_real_parts(m: int, n: int, bits: int = DEFAULT_BITS):
    """``max |Re z + n/2|`` over the roots of ``B_{m,n}``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    roots = box_roots(m, n, bits)
    with mpmath.workprec(bits + 32):
        half = mpmath.mpf(n) / 2
        return max(abs(r.value.real + half) for r in roots)


def closed_form_roots_n1(m: int, bits: int = DEFAULT_BITS) -> list:
    """``-1/2 + (i/2) sin(2 pi j/(m+1)) / (cos(2 pi j/(m+1)) - 1)`` for ``j = 1..m``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    with mpmath.workprec(bits + 32):
        out = []
        for j in range(1, m + 1):
            t = 2 * mpmath.pi * j / (m + 1)
            out.append(mpmath.mpc(-0.5, mpmath.sin(t) / (2 * (mpmath.cos(t) - 1))))
        return out


@dataclass(frozen=True)
class BoundsReport:
    m: int
    n: int
    max_im: mpmath.mpf
    bound_im: mpmath.mpf
    min_mod: mpmath.mpf
    max_mod: mpmath.mpf
    inner: Fraction
    outer: Fraction
    im_ok: bool
    inner_ok: bool
    outer_ok: bool

    @property
    def ok(self) -> bool:
        return self.im_ok and self.inner_ok and self.outer_ok


def annulus_radii(m: int, n: int) -> tuple:
    """Exact ``(n/2, S(m+n,n) / ((n/2)^(m-1) C(m+n,n)))``."""
    inner = Fraction(n, 2)
    outer = Fraction(stirling2(m + n, n), 1) / (inner ** (m - 1) * comb(m + n, n))
    return inner, outer


def bounds_check(m: int, n: int, bits: int = DEFAULT_BITS) -> BoundsReport:
    """Imaginary bound ``mn/pi`` and the annulus, checked against root disks."""
    if m < 1 or n < 1:
        raise ValueError("requires m, n >= 1")
    roots = box_roots(m, n, bits)
    inner, outer = annulus_radii(m, n)
    with mpmath.workprec(bits + 32):
        bound_im = mpmath.mpf(m * n) / mpmath.pi
        im_ok = all(abs(r.value.imag) - r.radius <= bound_im for r in roots)
        inner_ok = all(abs(r.value) + r.radius >= _to_mpf(inner) for r in roots)
        outer_ok = all(abs(r.value) - r.radius <= _to_mpf(outer) for r in roots)
        return BoundsReport(
            m, n,
            max(abs(r.value.imag) for r in roots), bound_im,
            min(abs(r.value) for r in roots), max(abs(r.value) for r in roots),
            inner, outer, im_ok, inner_ok, outer_ok,
        )


def square_free_certificate(m: int, n: int) -> bool:
    """``gcd(B, B') = 1`` in exact arithmetic."""
    if n < 1:
        raise ValueError("n must be at least 1")
    b = box_poly(m, n)
    if b.degree < 1:
        return True
    return poly_gcd(b, b.derivative()).degree == 0


def table2_formulas(m: int, n: int, corrected: bool = False, bits: int = DEFAULT_BITS) -> list:
    """Predicted imaginary parts of the roots of ``B_{m,n}``, ascending.

    ``corrected=False`` uses the radicals as commonly printed; for ``m = 4, 5``
    those differ from the values obtained by solving the corresponding
    biquadratics, which ``corrected=True`` supplies.
    """
    if not 1 <= m <= 5:
        raise ValueError("formulas available for 1 <= m <= 5")
    with mpmath.workprec(bits + 32):
        N = mpmath.mpf(n)
        sq = mpmath.sqrt
        if m == 1:
            vals = [mpmath.mpf(0)]
        elif m == 2:
            vals = [sq(N / 12)]
        elif m == 3:
            vals = [mpmath.mpf(0), sq(N / 4)]
        elif m == 4:
            if corrected:
                d = sq(150 * N ** 2 + 30 * N)
                vals = [sq((15 * N + d) / 60), sq((15 * N - d) / 60)]
            else:
                d = sq(150 * N ** 2 + 30 * N)
                vals = [sq((30 * N + d) / 120), sq((30 * N - d) / 120)]
        else:
            if corrected:
                d = sq(10 * N ** 2 + 6 * N)
                vals = [mpmath.mpf(0), sq((5 * N + d) / 12), sq((5 * N - d) / 12)]
            else:
                d = sq(5 * N ** 2 + 3 * N)
                vals = [mpmath.mpf(0), sq((10 * N + d) / 24), sq((10 * N - d) / 24)]
        full = []
        for v in vals:
            full.extend([v] if v == 0 else [v, -v])
        return sorted(full)


def table2_check(m: int, n: int, corrected: bool = False, bits: int = DEFAULT_BITS,
                 tol: float = 1e-25) -> dict:
    roots = box_roots(m, n, bits)
    with mpmath.workprec(bits + 32):
        found = sorted(r.value.imag for r in roots)
        expected = table2_formulas(m, n, corrected, bits)
        # a radicand can go negative in a misprinted formula; sqrt then turns complex
        if len(found) != len(expected) or any(isinstance(e, mpmath.mpc) for e in expected):
            err = mpmath.inf
        else:
            err = max(abs(a - b) for a, b in zip(found, expected))
        return {"m": m, "n": n, "found": found, "expected": expected,
                "max_error": err, "ok": err <= tol}


def imaginary_scaling_experiment(m_range: Iterable[int], n_range: Iterable[int],
                                 bits: int = DEFAULT_BITS) -> list:
    """Rows ``(m, n, max |Im z|, max |Im z| / (m sqrt n))``; descriptive only."""
    rows = []
    n_values = list(n_range)
    for m in m_range:
        for n in n_values:
            roots = box_roots(m, n, bits)
            with mpmath.workprec(bits + 32):
                mx = max(abs(r.value.imag) for r in roots)
                # snap sub-resolution imaginary parts of real roots to zero
                if mx <= max(r.radius for r in roots):
                    mx = mpmath.mpf(0)
                rows.append((m, n, mx, mx / (m * mpmath.sqrt(n))))
    return rows


def chebyshev_n2_report(m: int, bits: int = DEFAULT_BITS) -> list:
    """For each root ``-1 + i u`` of ``B_{m,2}``: ``u``, ``v = u / sqrt(1 + u^2)``,
    and the residual ``|T_{m+2}(v) - v^{m+2}|``."""
    roots = box_roots(m, 2, bits)
    out = []
    with mpmath.workprec(bits + 32):
        for r in roots:
            u = r.value.imag
            v = u / mpmath.sqrt(1 + u * u)
            res = abs(mpmath.chebyt(m + 2, v) - v ** (m + 2))
            out.append({"re": r.value.real, "u": u, "v": v, "residual": res})
    return out


def column_roots(m: int, n: int, columns: Optional[Sequence[int]] = None,
                 bits: int = DEFAULT_BITS) -> dict:
    """Roots of ``sum_j c^{m,n}_{j,k} x^j`` for each requested column ``k``.

    The default is columns ``1..n``; column 0 has ``c_{0,0} = 0`` and so a
    root at the origin.
    """
    M = excedance_matrix(m, n)
    cols = range(1, n + 1) if columns is None else columns
    return {k: find_roots(M.column_polynomial(k), bits) for k in cols}


def column_trend(col_roots: dict) -> list:
    """Per column: ``(k, min Re, max Re, max |z|)``, as floats, ordered by ``k``."""
    out = []
    for k in sorted(col_roots):
        rs = col_roots[k]
        out.append((k,
                    float(min(r.value.real for r in rs)),
                    float(max(r.value.real for r in rs)),
                    float(max(abs(r.value) for r in rs))))
    return out


def _fmt(x, digits: int, snap) -> str:
    if abs(x) <= snap:
        return "0"
    return mpmath.nstr(x, digits)


def roots_csv(rows: Iterable[tuple], bits: int = DEFAULT_BITS) -> str:
    """CSV text with header ``m,n,root_index,re,im``.

    ``rows`` holds ``(m, n, roots)`` triples.  Components smaller than a root's
    inclusion radius are written as ``0``.
    """
    digits = max(bits // 3, 10)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "n", "root_index", "re", "im"])
    with mpmath.workprec(bits + 32):
        for m, n, roots in rows:
            for idx, r in enumerate(roots):
                snap = r.radius
                w.writerow([m, n, idx, _fmt(r.value.real, digits, snap), _fmt(r.value.imag, digits, snap)])
    return buf.getvalue()
