"""The excedance algebra ``Z<a, b> / (ba - ab - a - b)``.

Words over ``{a, b}`` encode permutations: letter ``j`` of the word of a
permutation of ``[n]`` is ``b`` when ``pi_j > j`` (an excedance) and ``a``
otherwise, for ``j < n``.  Every word rewrites to a nonnegative combination of
``a^i b^j``, and the bracket ``[u]`` (number of permutations with word ``u``)
is linear with ``[a^i b^j] = 1``.

The excedance matrix ``M(m, n)`` holds the normal-form coefficients of the sum
of all words with ``m`` a's and ``n`` b's; row ``i`` is the a-exponent and
column ``j`` the b-exponent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Dict, Iterator, Optional, Tuple

from . import _kernels
from .boxpoly import box_poly
from .errors import SizeLimitError
from .numbers import eulerian
from .poly import Polynomial

__all__ = [
    "ExcedanceExpansion",
    "ExcedanceMatrix",
    "DIRECT_LIMIT",
    "words",
    "normal_form",
    "expand_word",
    "excedance_matrix",
    "excedance_matrix_direct",
    "bracket",
    "bracket_via_normal_form",
    "bracket_bruteforce",
    "eulerian",
    "eulerian_bruteforce",
    "diagonal_sums",
    "corner_formula",
    "entry_recursion_check",
    "box_column_check",
    "bareiss_determinant",
    "TNNReport",
    "total_nonnegativity_scan",
    "phi_candidate",
    "PHI_U",
    "PHI_U_IMAGE",
]

DIRECT_LIMIT = 16
MATRIX_LIMIT = 60


def _check_word(w: str) -> str:
    if any(ch not in "ab" for ch in w):
        raise ValueError(f"words are over the alphabet {{a, b}}, got {w!r}")
    return w


@dataclass(frozen=True)
class ExcedanceExpansion:
    """Finitely supported map ``(i, j) -> coefficient of a^i b^j``."""

    coeffs: Tuple[Tuple[Tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, d: Dict[Tuple[int, int], int]) -> "ExcedanceExpansion":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __getitem__(self, ij) -> int:
        return self.as_dict().get(tuple(ij), 0)

    def total(self) -> int:
        return sum(v for _, v in self.coeffs)


def words(m: int, n: int) -> Iterator[str]:
    """All words with ``m`` a's and ``n`` b's."""
    L = m + n
    for pos in combinations(range(L), n):
        w = ["a"] * L
        for p in pos:
            w[p] = "b"
        yield "".join(w)


def _exps(w: str) -> Optional[Tuple[int, int]]:
    i = len(w) - len(w.lstrip("a"))
    rest = w[i:]
    return (i, len(rest)) if rest.count("a") == 0 else None


def normal_form(w: str, rng: Optional[random.Random] = None) -> ExcedanceExpansion:
    """Rewrite ``ba -> ab + a + b`` until every term is ``a^i b^j``.

    Without ``rng`` the leftmost ``ba`` in the lexicographically first pending
    term is rewritten; with ``rng`` both the term and the occurrence are chosen
    at random.  The result does not depend on the order.
    """
    _check_word(w)
    pending: Dict[str, int] = {w: 1}
    done: Dict[Tuple[int, int], int] = {}
    while pending:
        if rng is None:
            t = min(pending)
        else:
            t = rng.choice(sorted(pending))
        c = pending.pop(t)
        e = _exps(t)
        if e is not None:
            done[e] = done.get(e, 0) + c
            continue
        spots = [p for p in range(len(t) - 1) if t[p] == "b" and t[p + 1] == "a"]
        p = spots[0] if rng is None else rng.choice(spots)
        head, tail = t[:p], t[p + 2:]
        for nt in (head + "ab" + tail, head + "a" + tail, head + "b" + tail):
            pending[nt] = pending.get(nt, 0) + c
    return ExcedanceExpansion.from_dict(done)


def _times_a(state: Dict[Tuple[int, int], int]) -> Dict[Tuple[int, int], int]:
    # a^i b^k a = sum_{j=0}^{k} C(k,j) a^(i+1) b^j + sum_{j=1}^{k} C(k,j-1) a^i b^j
    out: Dict[Tuple[int, int], int] = {}
    for (i, k), c in state.items():
        for j in range(k + 1):
            key = (i + 1, j)
            out[key] = out.get(key, 0) + c * comb(k, j)
            if j < k:
                key = (i, j + 1)
                out[key] = out.get(key, 0) + c * comb(k, j)
    return out


def _times_b(state: Dict[Tuple[int, int], int]) -> Dict[Tuple[int, int], int]:
    return {(i, k + 1): c for (i, k), c in state.items()}


def expand_word(w: str) -> ExcedanceExpansion:
    """Normal form by right multiplication, one letter at a time."""
    _check_word(w)
    state = {(0, 0): 1}
    for ch in w:
        state = _times_a(state) if ch == "a" else _times_b(state)
    return ExcedanceExpansion.from_dict(state)


@dataclass(frozen=True)
class ExcedanceMatrix:
    m: int
    n: int
    entries: Tuple[Tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        if 0 <= i <= self.m and 0 <= j <= self.n:
            return self.entries[i][j]
        return 0

    def rows(self) -> list:
        return [list(r) for r in self.entries]

    def column(self, j: int) -> list:
        return [r[j] for r in self.entries]

    def row(self, i: int) -> list:
        return list(self.entries[i])

    def total(self) -> int:
        return sum(map(sum, self.entries))

    def transpose(self) -> "ExcedanceMatrix":
        return ExcedanceMatrix(self.n, self.m, tuple(zip(*self.entries)))

    def flipped(self) -> list:
        """Rows in reverse order."""
        return [list(r) for r in reversed(self.entries)]

    def column_polynomial(self, j: int) -> Polynomial:
        return Polynomial(self.column(j))

    def to_json_data(self) -> list:
        return [[str(v) for v in r] for r in self.entries]


def _matrix_from(state: Dict[Tuple[int, int], int], m: int, n: int) -> ExcedanceMatrix:
    grid = [[0] * (n + 1) for _ in range(m + 1)]
    for (i, j), c in state.items():
        grid[i][j] += c
    return ExcedanceMatrix(m, n, tuple(tuple(r) for r in grid))


def excedance_matrix(m: int, n: int) -> ExcedanceMatrix:
    """``M(m, n)`` by dynamic programming over prefix letter counts."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    if m + n > MATRIX_LIMIT:
        raise SizeLimitError(f"excedance matrix limited to m + n <= {MATRIX_LIMIT}")
    # S[p][q]: normal form of the sum of all words with p a's and q b's
    prev = None
    for p in range(m + 1):
        cur = []
        for q in range(n + 1):
            if p == 0 and q == 0:
                s = {(0, 0): 1}
            else:
                s = {}
                if p > 0:
                    for k, v in _times_a(prev[q]).items():
                        s[k] = s.get(k, 0) + v
                if q > 0:
                    for k, v in _times_b(cur[q - 1]).items():
                        s[k] = s.get(k, 0) + v
            cur.append(s)
        prev = cur
    return _matrix_from(prev[n], m, n)


def excedance_matrix_direct(m: int, n: int) -> ExcedanceMatrix:
    """``M(m, n)`` by rewriting every word separately (small sizes only)."""
    if m + n > DIRECT_LIMIT:
        raise SizeLimitError(f"direct summation limited to m + n <= {DIRECT_LIMIT}")
    total: Dict[Tuple[int, int], int] = {}
    for w in words(m, n):
        for k, v in normal_form(w).coeffs:
            total[k] = total.get(k, 0) + v
    return _matrix_from(total, m, n)


def bracket(w: str, max_cache: int = _kernels.DEFAULT_BRACKET_CACHE) -> int:
    """``[w]`` by the memoized rewriting recursion."""
    return _kernels.bracket(_check_word(w), max_cache)


def bracket_via_normal_form(w: str) -> int:
    return expand_word(w).total()


def bracket_bruteforce(w: str) -> int:
    """Count permutations of ``[len(w) + 1]`` whose excedance word is ``w``."""
    _check_word(w)
    if len(w) > 12:
        raise SizeLimitError("brute force limited to words of length <= 12")
    bits = sum(1 << j for j, ch in enumerate(w) if ch == "b")
    return _kernels.excedance_word_counts(len(w) + 1)[bits]


def eulerian_bruteforce(n: int, k: int) -> int:
    """Permutations of ``[n]`` with ``k - 1`` excedances."""
    counts = _kernels.excedance_word_counts(n)
    return sum(c for bits, c in enumerate(counts) if bin(bits).count("1") == k - 1)


def diagonal_sums(M: ExcedanceMatrix) -> list:
    """``sum_{i+j=k} (-1)^i c_{i,j}`` for ``k = 0..m+n``."""
    return [sum((-1) ** i * M.entry(i, k - i) for i in range(M.m + 1)) for k in range(M.m + M.n + 1)]


def corner_formula(m: int, n: int, corrected: bool = False):
    """Closed form for ``c_{m-1,n-1}``.

    ``c_{m-1,n-1} = c_{m-2,n} + c_{m,n-2}``, and summing the two last-row and
    last-column values gives ``C(m+n, m) m n (3mn - m - n - 1) / 12``
    (``corrected=True``).  The default is the often-quoted variant without the
    ``- 1``, which is not even an integer in general (``1/6`` at ``(1, 1)``).
    """
    if m < 1 or n < 1:
        raise ValueError("requires m, n >= 1")
    return Fraction(comb(m + n, m) * m * n * (3 * m * n - m - n - int(corrected)), 12)


def entry_recursion_check(m: int, n: int, i: int, j: int) -> tuple:
    """Both sides of the entry recursion for ``c^{m,n}_{i,j}``."""
    if m < 1 or n < 1:
        raise ValueError("requires m, n >= 1")
    M = excedance_matrix(m, n)
    L = excedance_matrix(m, n - 1)
    U = excedance_matrix(m - 1, n)
    rhs = L.entry(i, j - 1)
    rhs += sum(comb(k, j) * U.entry(i - 1, k) for k in range(j, n + 1))
    if j >= 1:
        rhs += sum(comb(k, j - 1) * U.entry(i, k) for k in range(j, n + 1))
    return M.entry(i, j), rhs


def box_column_check(m: int, n: int) -> dict:
    """Last column against ``B_{m,n}``; last row against ``B_{n,m}``."""
    M = excedance_matrix(m, n)
    return {
        "column": Polynomial(M.column(n)),
        "box": box_poly(m, n),
        "row": Polynomial(M.row(m)),
        "box_transposed": box_poly(n, m),
    }


def bareiss_determinant(mat) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(map(int, r)) for r in mat]
    k = len(a)
    if k == 0:
        return 1
    sign, prev = 1, 1
    for p in range(k - 1):
        if a[p][p] == 0:
            swap = next((r for r in range(p + 1, k) if a[r][p] != 0), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) // prev
        prev = a[p][p]
    return sign * a[k - 1][k - 1]


@dataclass(frozen=True)
class TNNReport:
    m: int
    n: int
    is_tnn: bool
    minors_checked: int
    zero_minors: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]
    violating_minor: Optional[Tuple[Tuple[int, ...], Tuple[int, ...], int]] = None


def total_nonnegativity_scan(m: int, n: int) -> TNNReport:
    """Check every square minor of ``M(m, n)`` flipped upside down."""
    N = excedance_matrix(m, n).flipped()
    R, C = m + 1, n + 1
    checked = 0
    zeros = []
    for size in range(1, min(R, C) + 1):
        for rows, cols in product(combinations(range(R), size), combinations(range(C), size)):
            d = bareiss_determinant([[N[r][c] for c in cols] for r in rows])
            checked += 1
            if d < 0:
                return TNNReport(m, n, False, checked, tuple(zeros), (rows, cols, d))
            if d == 0:
                zeros.append((rows, cols))
    return TNNReport(m, n, True, checked, tuple(zeros))


def phi_candidate(u: str, convention: str = "shortest") -> str:
    """Split ``u = v w`` with ``v`` holding one more a than b; return ``rev(swap(v)) w``.

    ``convention`` picks the shortest or the longest such prefix.  The image
    has one a fewer and one b more than ``u``.
    """
    _check_word(u)
    bal, cuts = 0, []
    for i, ch in enumerate(u, 1):
        bal += 1 if ch == "a" else -1
        if bal == 1:
            cuts.append(i)
    if not cuts:
        raise ValueError(f"no prefix of {u!r} has exactly one more a than b")
    if convention == "shortest":
        cut = cuts[0]
    elif convention == "longest":
        cut = cuts[-1]
    else:
        raise ValueError("convention must be 'shortest' or 'longest'")
    v, w = u[:cut], u[cut:]
    swapped = v.translate(str.maketrans("ab", "ba"))
    return swapped[::-1] + w


PHI_U = "b" * 5 + "abab" + "a" * 5 + "babab" + "aa" + "a"
PHI_U_IMAGE = "bb" + "ababa" + "b" * 5 + "abab" + "a" * 5 + "a"
