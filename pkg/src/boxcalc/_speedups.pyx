# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels mirroring ``_purepy``.  Results must match bit for bit."""

from cython.operator cimport dereference as deref
from libcpp.unordered_map cimport unordered_map
from libc.stdint cimport uint64_t, int64_t
from cpython.mem cimport PyMem_Malloc, PyMem_Free

cdef enum:
    MAXN = 24

cdef struct CensusState:
    int N
    int word[MAXN]
    int last[MAXN + 2]
    int size[MAXN + 2]
    int mins[MAXN + 2]


cdef inline int pack_key(int k, int cyc, int nosing, int gap, int sep, int par, int modmask) nogil:
    return (k | cyc << 5 | nosing << 6 | gap << 7 | sep << 12 | par << 17 | modmask << 22)


cdef void census_leaf(CensusState* st, int k, int cyc, int gap,
                      unordered_map[int, int64_t]& counts) nogil:
    cdef int N = st.N
    cdef int b, s, sep, par
    cdef int nosing = 1
    cdef int modmask = 7
    if cyc and N >= 2 and st.word[0] == st.word[N - 1]:
        cyc = 0
    for b in range(1, k + 1):
        s = st.size[b]
        if s == 1:
            nosing = 0
        if s % 2 != 1:
            modmask &= ~1
        if s % 3 != 1:
            modmask &= ~2
        if s % 4 != 1:
            modmask &= ~4
    sep = 0
    while sep < N and st.word[sep] == sep + 1:
        sep += 1
    par = 0
    while par < k and st.mins[par + 1] % 2 == (par + 1) % 2:
        par += 1
    if par == k and (N + 1) % 2 == (k + 1) % 2:
        par += 1
    counts[pack_key(k, cyc, nosing, gap, sep, par, modmask)] += 1


cdef void census_rec(CensusState* st, int i, int k, int cyc, int gap,
                     unordered_map[int, int64_t]& counts) nogil:
    cdef int b, prev, g, pos
    if i == st.N:
        census_leaf(st, k, cyc, gap, counts)
        return
    pos = i + 1
    for b in range(1, k + 2):
        st.word[i] = b
        prev = st.last[b]
        if b == k + 1:
            st.mins[b] = pos
            st.last[b] = pos
            st.size[b] = 1
            census_rec(st, i + 1, k + 1, cyc, gap, counts)
            st.last[b] = 0
            st.size[b] = 0
        else:
            g = pos - prev
            st.last[b] = pos
            st.size[b] += 1
            census_rec(st, i + 1, k, cyc if g != 1 else 0, gap if gap < g else g, counts)
            st.last[b] = prev
            st.size[b] -= 1


def partition_census(int N):
    cdef CensusState st
    cdef unordered_map[int, int64_t] counts
    cdef int i
    if N < 1:
        return {pack_key(0, 1, 1, 0, 0, 1, 7): 1}
    if N > MAXN:
        raise ValueError(f"census limited to N <= {MAXN}")
    st.N = N
    for i in range(MAXN + 2):
        st.last[i] = 0
        st.size[i] = 0
        st.mins[i] = 0
    with nogil:
        census_rec(&st, 0, 0, 1, N, counts)
    return {p.first: p.second for p in counts}


def excedance_word_counts(int n):
    """Heap's algorithm over permutations of ``[n]``; tallies excedance words."""
    cdef int perm[16]
    cdef int c[16]
    cdef int i, j, t
    cdef uint64_t bits
    cdef list out
    cdef int64_t* counts
    cdef int64_t size
    if n < 1:
        raise ValueError("n must be positive")
    if n > 14:
        raise ValueError("permutation tally limited to n <= 14")
    size = (<int64_t>1) << (n - 1)
    counts = <int64_t*> PyMem_Malloc(size * sizeof(int64_t))
    if counts == NULL:
        raise MemoryError()
    try:
        for i in range(size):
            counts[i] = 0
        for i in range(n):
            perm[i] = i + 1
            c[i] = 0
        with nogil:
            bits = 0
            for j in range(n - 1):
                if perm[j] > j + 1:
                    bits |= (<uint64_t>1) << j
            counts[bits] += 1
            i = 1
            while i < n:
                if c[i] < i:
                    if i % 2 == 0:
                        t = perm[0]; perm[0] = perm[i]; perm[i] = t
                    else:
                        t = perm[c[i]]; perm[c[i]] = perm[i]; perm[i] = t
                    bits = 0
                    for j in range(n - 1):
                        if perm[j] > j + 1:
                            bits |= (<uint64_t>1) << j
                    counts[bits] += 1
                    c[i] += 1
                    i = 1
                else:
                    c[i] = 0
                    i += 1
        out = [counts[i] for i in range(size)]
    finally:
        PyMem_Free(counts)
    return out


cdef struct BracketCtx:
    unordered_map[uint64_t, uint64_t]* memo
    size_t max_cache
    int error       # 1 overflow, 2 cache exhausted


cdef uint64_t bracket_rec(BracketCtx* ctx, uint64_t bits, int L) nogil:
    # bit i is 1 when letter i is 'b'; letter 0 is leftmost
    cdef uint64_t key, r, a1, a2, a3, low, high, w1, w2, w3
    cdef int p
    cdef unordered_map[uint64_t, uint64_t].iterator it
    while L > 0 and (bits & 1) == 0:
        bits >>= 1
        L -= 1
    while L > 0 and (bits >> (L - 1)) & 1:
        bits &= ~((<uint64_t>1) << (L - 1))
        L -= 1
    if L == 0:
        return 1
    key = bits | ((<uint64_t>1) << L)
    it = ctx.memo.find(key)
    if it != ctx.memo.end():
        return deref(it).second
    p = 0
    while not (((bits >> p) & 1) == 1 and ((bits >> (p + 1)) & 1) == 0):
        p += 1
    # swap ba -> ab at positions p, p+1
    w1 = (bits & ~((<uint64_t>1) << p)) | ((<uint64_t>1) << (p + 1))
    # delete letter p+1 (the a): keeps the b
    low = bits & (((<uint64_t>1) << (p + 1)) - 1)
    high = bits >> (p + 2)
    w2 = low | (high << (p + 1))
    # delete letter p (the b): keeps the a
    low = bits & (((<uint64_t>1) << p) - 1)
    high = bits >> (p + 1)
    w3 = low | (high << p)
    a1 = bracket_rec(ctx, w1, L)
    if ctx.error:
        return 0
    a2 = bracket_rec(ctx, w2, L - 1)
    if ctx.error:
        return 0
    a3 = bracket_rec(ctx, w3, L - 1)
    if ctx.error:
        return 0
    if a1 > <uint64_t>0xFFFFFFFFFFFFFFFF - a2:
        ctx.error = 1
        return 0
    r = a1 + a2
    if r > <uint64_t>0xFFFFFFFFFFFFFFFF - a3:
        ctx.error = 1
        return 0
    r += a3
    if ctx.memo.size() >= ctx.max_cache:
        ctx.error = 2
        return 0
    ctx.memo[0][key] = r
    return r


def bracket(str word, size_t max_cache=1 << 22):
    cdef int L = len(word)
    cdef uint64_t bits = 0
    cdef int i
    cdef uint64_t r
    cdef unordered_map[uint64_t, uint64_t] memo
    cdef BracketCtx ctx
    if L > 62:
        raise OverflowError("word too long for the 64-bit kernel")
    for i in range(L):
        ch = word[i]
        if ch == "b":
            bits |= (<uint64_t>1) << i
        elif ch != "a":
            raise ValueError(f"invalid letter {ch!r}")
    ctx.memo = &memo
    ctx.max_cache = max_cache
    ctx.error = 0
    with nogil:
        r = bracket_rec(&ctx, bits, L)
    if ctx.error == 1:
        raise OverflowError("bracket value exceeds 64 bits")
    if ctx.error == 2:
        raise MemoryError(f"bracket memo exceeded {max_cache} entries")
    return r
