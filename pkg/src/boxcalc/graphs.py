"""Small simple graphs and their chromatic polynomials.

Vertices are labeled ``1..n``.  :func:`chromatic_polynomial` uses
deletion-contraction, peeling isolated and pendant vertices first and
memoizing on the edge set; :func:`chromatic_named` gives closed forms for the
families used elsewhere in the package.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from .errors import SizeLimitError
from .poly import ONE, X, Polynomial, falling_factorial

__all__ = [
    "Graph",
    "CHROMATIC_LIMIT",
    "chromatic_polynomial",
    "chromatic_named",
    "empty_graph",
    "complete_graph",
    "path_graph",
    "star_graph",
    "cycle_graph",
    "path_power",
    "random_s_tree",
    "complete_plus_isolated",
    "cyclic_ladder",
    "random_graph",
]

CHROMATIC_LIMIT = 16


class Graph:
    """Simple undirected graph on the vertex set ``{1, ..., n}``."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for e in edges:
            u, v = e
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside vertex set 1..{n}")
            norm.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = frozenset(norm)

    @classmethod
    def from_edge_list(cls, text: str, n: Optional[int] = None) -> "Graph":
        """Parse ``"u v"`` pairs, one per line; ``#`` starts a comment."""
        edges = []
        top = 0
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected two vertex labels")
            u, v = int(parts[0]), int(parts[1])
            edges.append((u, v))
            top = max(top, u, v)
        return cls(top if n is None else n, edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph({self.n}, {sorted(self.edges)})"

    def adjacency(self) -> dict:
        adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def components(self) -> list:
        adj = self.adjacency()
        seen, comps = set(), []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in adj[u]:
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def is_forest(self) -> bool:
        return len(self.edges) == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1 and len(self.components()) == 1

    def is_independent(self, vertices) -> bool:
        vs = set(vertices)
        return not any(u in vs and v in vs for u, v in self.edges)

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, set(self.edges) | {(u, v)})

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = (min(u, v), max(u, v))
        if e not in self.edges:
            raise ValueError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})


@lru_cache(maxsize=256)
def chromatic_polynomial(g: Graph) -> Polynomial:
    """Chromatic polynomial by deletion-contraction."""
    if g.n > CHROMATIC_LIMIT:
        raise SizeLimitError(f"deletion-contraction limited to {CHROMATIC_LIMIT} vertices")
    memo: dict = {}
    x_minus_1 = X - 1

    def rec(vertices: frozenset, edges: frozenset) -> Polynomial:
        key = (vertices, edges)
        hit = memo.get(key)
        if hit is not None:
            return hit
        deg = {v: 0 for v in vertices}
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        # isolated and pendant vertices contribute x and (x - 1) factors
        factor = ONE
        vs, es = set(vertices), set(edges)
        changed = True
        while changed:
            changed = False
            for v in list(vs):
                if deg[v] == 0 and es:
                    vs.discard(v)
                    factor = factor * X
                    changed = True
                elif deg[v] == 1:
                    e = next(e for e in es if v in e)
                    w = e[0] if e[1] == v else e[1]
                    es.discard(e)
                    vs.discard(v)
                    deg[w] -= 1
                    factor = factor * x_minus_1
                    changed = True
        if not es:
            result = factor * X ** len(vs)
        else:
            # branch on an edge at a vertex of least positive degree
            v0 = min((v for v in vs if deg[v] > 0), key=lambda v: (deg[v], v))
            e = min(e for e in es if v0 in e)
            u, v = e
            rest = frozenset(es - {e})
            deleted = rec(frozenset(vs), rest)
            merged = set()
            for a, b in rest:
                a = u if a == v else a
                b = u if b == v else b
                if a != b:
                    merged.add((min(a, b), max(a, b)))
            contracted = rec(frozenset(vs - {v}), frozenset(merged))
            result = factor * (deleted - contracted)
        memo[key] = result
        return result

    return rec(frozenset(range(1, g.n + 1)), g.edges)


def chromatic_named(family: str, **params) -> Polynomial:
    """Closed-form chromatic polynomials.

    ``cycle(n)``, ``s_tree(n, s)``, ``complete_plus_isolated(r, extra)`` and
    ``cyclic_ladder(n)``.
    """
    if family == "cycle":
        n = params["n"]
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return (X - 1) ** n + (X - 1) * (-1) ** n
    if family == "s_tree":
        n, s = params["n"], params["s"]
        if not 1 <= s <= n:
            raise ValueError("s-tree needs n >= s >= 1")
        return falling_factorial(s) * (X - s) ** (n - s)
    if family == "complete_plus_isolated":
        r, extra = params["r"], params["extra"]
        if r < 0 or extra < 0:
            raise ValueError("r and extra must be non-negative")
        return falling_factorial(r) * X ** extra
    if family == "cyclic_ladder":
        n = params["n"]
        if n < 3:
            raise ValueError("cyclic ladder needs n >= 3")
        q = X * X - X * 3 + 3
        return q ** n + (X - 1) * ((1 - X) ** n + (3 - X) ** n) + X * X - X * 3 + 1
    raise ValueError(f"unknown family {family!r}")


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(1, n)))


def star_graph(n: int, center: Optional[int] = None) -> Graph:
    c = n if center is None else center
    return Graph(n, ((c, v) for v in range(1, n + 1) if v != c))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_power(n: int, s: int) -> Graph:
    """Edges ``ij`` with ``0 < |i - j| <= s``; an ``s``-tree when ``n >= s``."""
    return Graph(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, min(n, i + s) + 1)))


def random_s_tree(n: int, s: int, rng: random.Random) -> Graph:
    """Start from ``K_s`` and attach each new vertex to a random ``s``-clique."""
    if not 1 <= s <= n:
        raise ValueError("s-tree needs n >= s >= 1")
    edges = set(combinations(range(1, s + 1), 2))
    cliques = [tuple(range(1, s + 1))]
    for v in range(s + 1, n + 1):
        base = rng.choice(cliques)
        edges.update((u, v) for u in base)
        full = base + (v,)
        cliques.extend(tuple(c) for c in combinations(full, s) if v in c)
    return Graph(n, edges)


def complete_plus_isolated(r: int, extra: int) -> Graph:
    return Graph(r + extra, combinations(range(1, r + 1), 2))


def cyclic_ladder(n: int) -> Graph:
    """``C_n x K_2``: outer cycle ``1..n``, inner cycle ``n+1..2n``, rungs ``i ~ n+i``."""
    if n < 3:
        raise ValueError("cyclic ladder needs n >= 3")
    edges = []
    for i in range(1, n + 1):
        j = i % n + 1
        edges += [(i, j), (n + i, n + j), (i, n + i)]
    return Graph(2 * n, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, (e for e in combinations(range(1, n + 1), 2) if rng.random() < p))
