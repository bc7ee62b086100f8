import random
from itertools import product

import pytest

from boxcalc.errors import SizeLimitError
from boxcalc.graphs import (CHROMATIC_LIMIT, Graph, chromatic_named, chromatic_polynomial,
                            complete_graph, complete_plus_isolated, cycle_graph, cyclic_ladder,
                            empty_graph, path_graph, path_power, random_graph, random_s_tree,
                            star_graph)
from boxcalc.poly import X, Polynomial


def proper_colorings(g: Graph, q: int) -> int:
    return sum(1 for col in product(range(q), repeat=g.n)
               if all(col[u - 1] != col[v - 1] for u, v in g.edges))


def test_examples():
    assert chromatic_polynomial(empty_graph(5)) == X ** 5
    assert chromatic_polynomial(cycle_graph(3)) == X ** 3 - 3 * X ** 2 + 2 * X
    assert chromatic_polynomial(complete_graph(2)) == X ** 2 - X
    assert chromatic_named("cycle", n=4) == (X - 1) ** 4 + (X - 1)
    assert chromatic_polynomial(cycle_graph(4)) == chromatic_named("cycle", n=4)
    assert chromatic_named("s_tree", n=4, s=1) == X * (X - 1) ** 3 == chromatic_polynomial(path_graph(4))


GRAPHS = [empty_graph(4), complete_graph(4), path_graph(5), star_graph(5), cycle_graph(5),
          path_power(6, 2), complete_plus_isolated(3, 2), cyclic_ladder(3),
          Graph(5, [(1, 2), (2, 3), (3, 1), (3, 4)])]


@pytest.mark.parametrize("g", GRAPHS, ids=repr)
def test_chromatic_counts_colorings(g):
    chi = chromatic_polynomial(g)
    for q in range(5):
        assert chi(q) == proper_colorings(g, q)


@pytest.mark.parametrize("seed", range(12))
def test_random_graph_colorings(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(1, 6), 0.5, rng)
    chi = chromatic_polynomial(g)
    assert chi.degree == g.n and chi.leading_coefficient == 1
    for q in range(4):
        assert chi(q) == proper_colorings(g, q)


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_closed_form(n):
    assert chromatic_named("cycle", n=n) == chromatic_polynomial(cycle_graph(n))


@pytest.mark.parametrize("n,s", [(n, s) for n in range(1, 9) for s in range(1, n + 1)])
def test_s_tree_closed_form(n, s):
    want = chromatic_named("s_tree", n=n, s=s)
    assert chromatic_polynomial(path_power(n, s)) == want
    assert chromatic_polynomial(random_s_tree(n, s, random.Random(n * 10 + s))) == want


@pytest.mark.parametrize("r,extra", [(r, e) for r in range(5) for e in range(3)])
def test_complete_plus_isolated(r, extra):
    assert chromatic_named("complete_plus_isolated", r=r, extra=extra) == chromatic_polynomial(
        complete_plus_isolated(r, extra))


@pytest.mark.parametrize("n", range(3, 8))
def test_ladder_closed_form(n):
    assert chromatic_named("cyclic_ladder", n=n) == chromatic_polynomial(cyclic_ladder(n))


def test_ladder_three_colorings_small():
    # the prism C_3 x K_2: 3! colorings of the outer triangle, 2 derangements inside
    assert chromatic_named("cyclic_ladder", n=3)(3) == 12 == proper_colorings(cyclic_ladder(3), 3)


def test_graph_validation_and_parsing():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 4)])
    g = Graph.from_edge_list("# a path\n1 2\n2 3  # trailing\n\n")
    assert g == path_graph(3)
    assert Graph.from_edge_list("1 2\n", n=4).n == 4
    with pytest.raises(ValueError):
        Graph.from_edge_list("1 2 3\n")
    assert path_graph(4).is_tree() and path_graph(4).is_forest()
    assert not cycle_graph(4).is_forest()
    assert Graph(4, [(1, 2)]).components() == [[1, 2], [3], [4]]
    assert path_graph(3).remove_edge(2, 1) == Graph(3, [(2, 3)])
    with pytest.raises(ValueError):
        path_graph(3).remove_edge(1, 3)


def test_size_limit():
    with pytest.raises(SizeLimitError):
        chromatic_polynomial(empty_graph(CHROMATIC_LIMIT + 1))


def test_random_s_tree_is_chordal_skeleton():
    rng = random.Random(3)
    g = random_s_tree(7, 3, rng)
    assert len(g.edges) == 3 + 3 * 4  # K_3 plus three edges per later vertex
    assert all(sum(1 for e in g.edges if v in e) >= 3 for v in range(1, 8))


def test_named_family_errors():
    with pytest.raises(ValueError):
        chromatic_named("petersen")
    with pytest.raises(ValueError):
        chromatic_named("cycle", n=2)
    assert chromatic_named("complete_plus_isolated", r=0, extra=0) == Polynomial([1])
