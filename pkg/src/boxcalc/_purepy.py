"""Pure-Python kernels.  ``_speedups.pyx`` implements the same functions in C.

Census keys are packed integers; see :func:`pack_key` for the layout.  Both
backends must produce identical dictionaries.
"""

import sys
from itertools import permutations

MAX_BRACKET_LENGTH = 62
DEFAULT_BRACKET_CACHE = 1 << 22


def pack_key(k, cyc_free, no_singleton, min_gap, sep, parity, modmask):
    return (k | cyc_free << 5 | no_singleton << 6 | min_gap << 7 | sep << 12
            | parity << 17 | modmask << 22)


def partition_census(N):
    """Histogram of set-partition features over all partitions of ``[N]``.

    Feature fields (all computed from the restricted growth word):

    * ``k`` -- number of blocks
    * ``cyc_free`` -- no block holds ``i, i+1`` or ``1, N`` (cyclic adjacency)
    * ``no_singleton`` -- every block has at least two elements
    * ``min_gap`` -- least ``j - i`` over ``i < j`` sharing a block (``N`` if none)
    * ``sep`` -- largest ``r`` with ``1..r`` in distinct blocks
    * ``parity`` -- largest ``t`` such that ``mins[i] = i (mod 2)`` for ``i <= t``,
      where ``mins`` lists block minima in standard order followed by ``N + 1``
    * ``modmask`` -- bit ``r - 2`` set when all block sizes are ``1 (mod r)``, r = 2..4
    """
    if N < 1:
        return {pack_key(0, 1, 1, 0, 0, 1, 7): 1}
    counts = {}
    word = [0] * N
    last = [0] * (N + 2)       # last position seen per block label (1-based)
    size = [0] * (N + 2)
    mins = [0] * (N + 2)

    def leaf(k, cyc, gap):
        if cyc and N >= 2 and word[0] == word[N - 1]:
            cyc = 0
        nosing = 1
        modmask = 7
        for b in range(1, k + 1):
            s = size[b]
            if s == 1:
                nosing = 0
            if s % 2 != 1:
                modmask &= ~1
            if s % 3 != 1:
                modmask &= ~2
            if s % 4 != 1:
                modmask &= ~4
        sep = 0
        while sep < N and word[sep] == sep + 1:
            sep += 1
        par = 0
        while par < k and mins[par + 1] % 2 == (par + 1) % 2:
            par += 1
        if par == k and (N + 1) % 2 == (k + 1) % 2:
            par += 1
        key = pack_key(k, cyc, nosing, gap, sep, par, modmask)
        counts[key] = counts.get(key, 0) + 1

    def rec(i, k, cyc, gap):
        if i == N:
            leaf(k, cyc, gap)
            return
        pos = i + 1
        for b in range(1, k + 2):
            word[i] = b
            prev = last[b]
            if b == k + 1:
                mins[b] = pos
                last[b] = pos
                size[b] = 1
                rec(i + 1, k + 1, cyc, gap)
                last[b] = 0
                size[b] = 0
            else:
                g = pos - prev
                ncyc = cyc if g != 1 else 0
                last[b] = pos
                size[b] += 1
                rec(i + 1, k, ncyc, gap if gap < g else g)
                last[b] = prev
                size[b] -= 1

    rec(0, 0, 1, N)
    return counts


def excedance_word_counts(n):
    """Counts of each excedance word over permutations of ``[n]``.

    Index is a bitmask over positions ``1..n-1`` (bit ``j-1`` set iff
    ``pi_j > j``, the letter ``b``).  Position ``n`` is never an excedance.
    """
    if n < 1:
        raise ValueError("n must be positive")
    counts = [0] * (1 << (n - 1))
    for perm in permutations(range(1, n + 1)):
        bits = 0
        for j in range(n - 1):
            if perm[j] > j + 1:
                bits |= 1 << j
        counts[bits] += 1
    return counts


def bracket(word, max_cache=DEFAULT_BRACKET_CACHE):
    """Excedance-set statistic by the rewriting recursion with memoization.

    ``[u ba v] = [u ab v] + [u a v] + [u b v]`` with ``[a u] = [u b] = [u]``
    and ``[] = 1``.  Words are canonicalized (leading a's and trailing b's
    stripped) before lookup.
    """
    memo = {}
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * len(word) * len(word) + 1000))

    def rec(w):
        i, j = 0, len(w)
        while i < j and w[i] == "a":
            i += 1
        while j > i and w[j - 1] == "b":
            j -= 1
        w = w[i:j]
        if not w:
            return 1
        r = memo.get(w)
        if r is not None:
            return r
        p = w.index("ba")
        head, tail = w[:p], w[p + 2:]
        r = rec(head + "ab" + tail) + rec(head + "a" + tail) + rec(head + "b" + tail)
        if len(memo) >= max_cache:
            raise MemoryError(f"bracket memo exceeded {max_cache} entries")
        memo[w] = r
        return r

    try:
        return rec(word)
    finally:
        sys.setrecursionlimit(old)
