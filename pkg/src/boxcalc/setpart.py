"""Set partitions, restricted growth words and constrained partition counts.

Counting functions come in pairs: a formula built on box polynomials or
chromatic polynomials, and an exhaustive oracle.  Oracles enumerate restricted
growth words, either one partition at a time (:func:`enumerate_partitions`)
or through the compiled feature census (:func:`census`), which tallies every
statistic needed here in a single sweep.
"""

from __future__ import annotations

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from . import _kernels
from .boxpoly import box_poly
from .errors import SizeLimitError
from .graphs import Graph, chromatic_polynomial
from .numbers import bell, stirling1_signed, stirling2

__all__ = [
    "SetPartition",
    "rg_from_partition",
    "partition_from_rg",
    "rg_words",
    "rg_factorization",
    "stirling2",
    "stirling1_signed",
    "bell",
    "ORACLE_LIMIT",
    "CENSUS_LIMIT",
    "enumerate_partitions",
    "census",
    "census_count",
    "graph_partition_count",
    "graph_partition_count_oracle",
    "cyclic_adjacency_count",
    "cyclic_adjacency_oracle",
    "distance_s_count",
    "distance_s_candidates",
    "distance_s_oracle",
    "first_r_separated_count",
    "first_r_separated_oracle",
    "parity_minima_count",
    "parity_minima_oracle",
    "odd_block_count_oracle",
    "mod_r_block_oracle",
    "no_singleton_count",
    "no_singleton_oracle",
    "is_cyclic_adjacency_free",
    "has_no_singleton",
    "PSI_SPECIAL_CASES_EVEN",
    "psi_special_cases",
    "phi_merge",
    "psi_map",
    "tree_switch",
]

ORACLE_LIMIT = 13
CENSUS_LIMIT = 16


class SetPartition:
    """Partition of ``[n]`` stored in standard form (blocks sorted by minima)."""

    __slots__ = ("n", "blocks")

    def __init__(self, blocks: Sequence[Sequence[int]], n: Optional[int] = None):
        bl = [tuple(sorted(int(v) for v in b)) for b in blocks]
        if any(not b for b in bl):
            raise ValueError("blocks must be nonempty")
        bl.sort()
        elems = [v for b in bl for v in b]
        if n is None:
            n = max(elems, default=0)
        if sorted(elems) != list(range(1, n + 1)):
            raise ValueError(f"blocks do not partition [{n}]")
        self.n = n
        self.blocks: Tuple[Tuple[int, ...], ...] = tuple(bl)

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Read ``"13|2|4"``; blocks may use commas (``"1,10|2"``) when n > 9."""
        text = text.strip()
        if not text:
            return cls([], 0)
        blocks = []
        for part in text.split("|"):
            part = part.strip()
            if "," in part:
                blocks.append([int(t) for t in part.split(",")])
            else:
                blocks.append([int(c) for c in part])
        return cls(blocks)

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls([[i] for i in range(1, n + 1)], n)

    @classmethod
    def one_block(cls, n: int) -> "SetPartition":
        return cls([range(1, n + 1)], n)

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __str__(self):
        sep = "," if self.n > 9 else ""
        return "|".join(sep.join(str(v) for v in b) for b in self.blocks)

    def __repr__(self):
        return f"SetPartition({str(self)!r})"

    def block_of(self) -> dict:
        """Map element to block index (1-based, standard order)."""
        return {v: i for i, b in enumerate(self.blocks, 1) for v in b}

    def minima(self) -> list:
        return [b[0] for b in self.blocks]


def rg_from_partition(p: SetPartition) -> Tuple[int, ...]:
    idx = p.block_of()
    return tuple(idx[i] for i in range(1, p.n + 1))


def partition_from_rg(word: Sequence[int]) -> SetPartition:
    top = 0
    blocks: List[List[int]] = []
    for i, v in enumerate(word, 1):
        if not 1 <= v <= top + 1:
            raise ValueError(f"not a restricted growth word: letter {v} at position {i}")
        if v == top + 1:
            top += 1
            blocks.append([])
        blocks[v - 1].append(i)
    return SetPartition(blocks, len(word))


def rg_words(n: int, k: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Restricted growth words of length ``n`` (with maximum ``k`` if given), lexicographic."""
    if n == 0:
        if k in (None, 0):
            yield ()
        return
    word = [0] * n

    def rec(i: int, top: int):
        if i == n:
            if k is None or top == k:
                yield tuple(word)
            return
        if k is not None and top + (n - i) < k:
            return
        hi = top + 1 if k is None else min(top + 1, k)
        for v in range(1, hi + 1):
            word[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(0, 0)


def rg_factorization(word: Sequence[int]) -> list:
    """Split ``1 u_1 2 u_2 ... k u_k``; returns ``[u_1, ..., u_k]`` with ``u_i`` over ``[i]``."""
    factors: List[list] = []
    top = 0
    for i, v in enumerate(word, 1):
        if v == top + 1:
            top += 1
            factors.append([])
        elif 1 <= v <= top:
            factors[-1].append(v)
        else:
            raise ValueError(f"not a restricted growth word: letter {v} at position {i}")
    return [tuple(f) for f in factors]


def enumerate_partitions(n: int, k: Optional[int] = None,
                         predicate: Optional[Callable[[SetPartition], bool]] = None,
                         collect: bool = False):
    """Exhaustive oracle: ``(count, list_or_None)`` over partitions of ``[n]``."""
    if n > ORACLE_LIMIT:
        raise SizeLimitError(f"oracle limit: n <= {ORACLE_LIMIT}")
    count = 0
    found = [] if collect else None
    for w in rg_words(n, k):
        p = partition_from_rg(w)
        if predicate is None or predicate(p):
            count += 1
            if collect:
                found.append(p)
    return count, found


# ---------------------------------------------------------------- census

CensusRow = namedtuple("CensusRow", "k cyc_free no_singleton min_gap sep parity modmask")


def _unpack(key: int) -> CensusRow:
    return CensusRow(key & 31, (key >> 5) & 1, (key >> 6) & 1, (key >> 7) & 31,
                     (key >> 12) & 31, (key >> 17) & 31, (key >> 22) & 7)


@lru_cache(maxsize=None)
def census(N: int) -> tuple:
    """Feature histogram of all partitions of ``[N]`` as ``(CensusRow, count)`` pairs.

    See ``_purepy.partition_census`` for the meaning of each field.
    """
    if N > CENSUS_LIMIT:
        raise SizeLimitError(f"census limited to N <= {CENSUS_LIMIT}")
    raw = _kernels.partition_census(N)
    return tuple(sorted((_unpack(key), c) for key, c in raw.items()))


def census_count(N: int, k: Optional[int] = None, where: Optional[Callable[[CensusRow], bool]] = None) -> int:
    return sum(c for row, c in census(N) if (k is None or row.k == k) and (where is None or where(row)))


# ---------------------------------------------------------------- predicates

def is_cyclic_adjacency_free(p: SetPartition) -> bool:
    n = p.n
    if n < 2:
        return True
    idx = p.block_of()
    return all(idx[i] != idx[i % n + 1] for i in range(1, n + 1))


def has_no_singleton(p: SetPartition) -> bool:
    return all(len(b) > 1 for b in p.blocks)


# ---------------------------------------------------------------- formulas vs oracles

def graph_partition_count(g: Graph, k: int) -> int:
    """Partitions of ``V(G)`` into ``k`` independent blocks: ``Delta^k chi(G) / k!`` at 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    v = chromatic_polynomial(g).forward_difference(k)(0) / factorial(k)
    return int(v)


def graph_partition_count_oracle(g: Graph, k: int) -> int:
    return enumerate_partitions(g.n, k, lambda p: all(g.is_independent(b) for b in p.blocks))[0]


def _box_eval_int(m: int, n: int, x) -> int:
    v = box_poly(m, n)(Fraction(x))
    assert v.denominator == 1
    return int(v)


def cyclic_adjacency_count(n: int, k: int) -> int:
    """Partitions of ``[n]`` into ``k`` blocks with no cyclically consecutive pair: ``B_{n-k,k}(-1)``."""
    if n < 3 or k < 2:
        raise ValueError("requires n >= 3 and k >= 2")
    if k > n:
        return 0
    return _box_eval_int(n - k, k, -1)


def cyclic_adjacency_oracle(n: int, k: int) -> int:
    return census_count(n, k, lambda r: r.cyc_free)


def distance_s_count(n: int, k: int, s: int) -> int:
    """Partitions of ``[n]`` into ``k`` blocks with ``|i - j| > s`` inside every block.

    The path power with edges ``|i - j| <= s`` is an ``s``-tree, so the count is
    ``S(n - s, k - s)``.
    """
    if not 1 <= s <= k:
        raise ValueError("requires k >= s >= 1")
    if n < s:
        return 0
    return stirling2(n - s, k - s)


def distance_s_candidates(n: int, k: int, s: int) -> dict:
    """Both closed forms that circulate for this count, keyed by shape."""
    return {
        "S(n-s,k-s)": stirling2(n - s, k - s) if n >= s else 0,
        "S(n-k,k-s)": stirling2(n - k, k - s) if n >= k else 0,
    }


def distance_s_oracle(n: int, k: int, s: int) -> int:
    # all-singleton partitions have no pair, so the gap condition is vacuous
    return census_count(n, k, lambda r: r.k == n or r.min_gap > s)


def first_r_separated_count(m: int, n: int, r: int) -> int:
    """Partitions of ``[m+n+r]`` into ``n+r`` blocks with ``1..r`` in distinct blocks: ``B_{m,n}(r)``."""
    if r < 1:
        raise ValueError("r must be positive")
    return _box_eval_int(m, n, r)


def first_r_separated_oracle(m: int, n: int, r: int) -> int:
    return census_count(m + n + r, n + r, lambda row: row.sep >= r)


def parity_minima_count(m: int, n: int, r: int) -> int:
    """``B_{m,n}(-r)`` for ``n >= 2r``."""
    if r < 1 or n < 2 * r:
        raise ValueError("hypothesis violated: need r >= 1 and n >= 2r")
    return _box_eval_int(m, n, -r)


def parity_minima_oracle(m: int, n: int, r: int, corrected: bool = False) -> int:
    """Partitions of ``[m+n-r]`` into ``n-r`` blocks with ``min(B_i) = i (mod 2)``.

    The condition runs over ``1 <= i <= r+1``; when ``r = n/2`` there are only
    ``r`` blocks and the plain reading stops at ``i = r``.  With
    ``corrected=True`` the missing condition is replaced by the parity of the
    phantom minimum ``m+n-r+1``, i.e. the trailing factor of the restricted
    growth word has even length.
    """
    if r < 1 or n < 2 * r:
        raise ValueError("hypothesis violated: need r >= 1 and n >= 2r")
    need = r if (2 * r == n and not corrected) else r + 1
    return census_count(m + n - r, n - r, lambda row: row.parity >= need)


def odd_block_count_oracle(N: int, k: int) -> int:
    """Partitions of ``[N]`` into ``k`` blocks, each of odd size."""
    if N > ORACLE_LIMIT:
        raise SizeLimitError(f"oracle limit: N <= {ORACLE_LIMIT}")
    return census_count(N, k, lambda r: r.modmask & 1)


def mod_r_block_oracle(N: int, k: int, r: int) -> int:
    """Partitions of ``[N]`` into ``k`` blocks with every size ``= 1 (mod r)``."""
    if r < 1:
        raise ValueError("r must be positive")
    if r == 1:
        return census_count(N, k)
    if r <= 4:
        bit = 1 << (r - 2)
        return census_count(N, k, lambda row: row.modmask & bit)
    return enumerate_partitions(N, k, lambda p: all(len(b) % r == 1 for b in p.blocks))[0]


def no_singleton_count(n: int) -> int:
    """``sum_{j=2}^{n} B_{n-j,j}(-1)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return sum(_box_eval_int(n - j, j, -1) for j in range(2, n + 1))


def no_singleton_oracle(n: int) -> int:
    return census_count(n, None, lambda r: r.no_singleton)


# ---------------------------------------------------------------- psi bijection

def _pi1(n):
    return SetPartition([range(1, n, 2)] + [[i] for i in range(2, n + 1, 2)], n)


def _pi2(n):
    return SetPartition([[i] for i in range(1, n, 2)] + [range(2, n + 1, 2)], n)


def _shifted_pairs(n):
    return SetPartition([[i, i + 1] for i in range(2, n, 2)] + [[n, 1]], n)


def _pairs(n):
    return SetPartition([[i, i + 1] for i in range(1, n, 2)], n)


# (source builder, image builder), applied for even n >= 4
PSI_SPECIAL_CASES_EVEN = ((_pi1, _shifted_pairs), (_pi2, _pairs))


def psi_special_cases(n: int) -> list:
    """Explicit ``(source, image)`` pairs overriding the merge map."""
    cases = [(SetPartition.singletons(n), SetPartition.one_block(n))]
    if n % 2 == 0 and n >= 4:
        cases += [(src(n), img(n)) for src, img in PSI_SPECIAL_CASES_EVEN]
    return cases


def phi_merge(p: SetPartition) -> SetPartition:
    """The merge map on partitions free of cyclic adjacencies (no overrides)."""
    n = p.n
    sizes = {v: len(b) for b in p.blocks for v in b}
    if all(s == 1 for s in sizes.values()):
        return SetPartition.one_block(n)
    label = dict(p.block_of())
    # start just after a non-singleton element, walk the cycle once
    start = next(v for v in range(1, n + 1) if sizes[v] > 1)
    order = [(start + t) % n + 1 for t in range(n)]
    run: list = []
    for v in order:              # the final v is start itself, closing any run
        if sizes[v] == 1:
            run.append(v)
            continue
        for a, b in zip(run[0::2], run[1::2]):
            label[b] = label[a]
        if len(run) % 2:
            label[run[-1]] = label[v]
        run = []
    groups: dict = {}
    for v in range(1, n + 1):
        groups.setdefault(label[v], []).append(v)
    return SetPartition(list(groups.values()), n)


def _psi_backward_general(p: SetPartition) -> SetPartition:
    n = p.n
    label = dict(p.block_of())
    fresh = max(label.values()) + 1

    def adj(c):
        return label[c] == label[c % n + 1]

    starts = [c for c in range(1, n + 1) if adj(c) and not adj(c % n + 1)]
    if not starts:
        return p
    c = starts[0]
    for _ in range(n):
        if adj(c):
            label[c] = fresh
            fresh += 1
        c = (c - 2) % n + 1
    groups: dict = {}
    for v in range(1, n + 1):
        groups.setdefault(label[v], []).append(v)
    return SetPartition(list(groups.values()), n)


def psi_map(p: SetPartition, direction: str = "forward") -> SetPartition:
    """Bijection between partitions of ``[n]`` with no two cyclically consecutive
    elements in a block and partitions of ``[n]`` with no singleton block."""
    n = p.n
    if n < 2:
        raise ValueError("n must be at least 2")
    cases = psi_special_cases(n)
    if direction == "forward":
        idx = p.block_of()
        for i in range(1, n + 1):
            j = i % n + 1
            if idx[i] == idx[j]:
                raise ValueError(f"precondition violated: {i} and {j} share a block")
        for src, img in cases:
            if p == src:
                return img
        return phi_merge(p)
    if direction == "backward":
        for b in p.blocks:
            if len(b) == 1:
                raise ValueError(f"precondition violated: singleton block {{{b[0]}}}")
        for src, img in cases:
            if p == img:
                return src
        return _psi_backward_general(p)
    raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")


# ---------------------------------------------------------------- tree switch

def tree_switch(p: SetPartition, forest: Graph, xy: Tuple[int, int], zw: Tuple[int, int]) -> SetPartition:
    """Carry ``p`` from independent partitions of ``F + xy`` to those of ``F + zw``.

    ``F`` must have exactly two components ``H1`` and ``H2``; both edges must
    join them.  Inside ``H1`` the blocks of ``x`` and ``z`` trade elements,
    inside ``H2`` the blocks of ``y`` and ``w`` do.  Calling again with the
    edges swapped undoes the switch.
    """
    if not forest.is_forest():
        raise ValueError("F is not a forest")
    comps = forest.components()
    if len(comps) != 2:
        raise ValueError(f"F must have two components, found {len(comps)}")
    if p.n != forest.n:
        raise ValueError("partition and forest have different vertex sets")
    h1 = set(next(c for c in comps if xy[0] in c))
    x, y = xy
    if y in h1:
        raise ValueError("x and y lie in the same component, F + xy is not a tree")
    z, w = zw if zw[0] in h1 else (zw[1], zw[0])
    if z not in h1 or w in h1:
        raise ValueError("z and w must lie in different components")
    t1 = forest.add_edge(x, y)
    if not all(t1.is_independent(b) for b in p.blocks):
        raise ValueError("partition has a block that is not independent in F + xy")
    label = p.block_of()
    b1, b2, c1, c2 = label[x], label[y], label[z], label[w]
    out = {}
    for v, lab in label.items():
        if v in h1:
            lab = c1 if lab == b1 else b1 if lab == c1 else lab
        else:
            lab = c2 if lab == b2 else b2 if lab == c2 else lab
        out.setdefault(lab, []).append(v)
    return SetPartition(list(out.values()), p.n)
