"""Integer sequences shared across modules: Stirling, Bell, Eulerian."""

from functools import lru_cache

__all__ = ["stirling2", "stirling1_signed", "bell", "eulerian"]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind by the triangle recurrence."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def _falling_coeffs(r: int) -> tuple:
    # coefficients of x(x-1)...(x-r+1), lowest degree first
    c = [1]
    for i in range(r):
        nxt = [0] * (len(c) + 1)
        for j, v in enumerate(c):
            nxt[j + 1] += v
            nxt[j] -= i * v
        c = nxt
    return tuple(c)


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind ``s(n, k)``."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    c = _falling_coeffs(n)
    return c[k] if k < len(c) else 0


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def eulerian(n: int, k: int) -> int:
    """Permutations of ``[n]`` with ``k - 1`` excedances (equivalently descents).

    ``A(1, 1) = 1`` and ``A(n, k) = k A(n-1, k) + (n-k+1) A(n-1, k-1)``.
    Out-of-range arguments give 0.
    """
    if n < 1 or k < 1 or k > n:
        return 0
    if n == 1:
        return 1
    return k * eulerian(n - 1, k) + (n - k + 1) * eulerian(n - 1, k - 1)
