from itertools import permutations

import pytest
from hypothesis import given, settings

from boxkit.circulant import gen_circulant
from boxkit.coloring import (
    ColorClasses,
    SizeGuardExceeded,
    chromatic_number,
    greedy_coloring,
    independence_number,
    is_k_colorable,
    verify_coloring,
)
from boxkit.graph import complete_graph, cycle_graph, generate, path_graph
from conftest import brute_alpha, brute_chromatic, graphs


def test_verify_coloring():
    c4 = cycle_graph(4)
    assert verify_coloring(c4, ColorClasses.of([[0, 2], [1, 3]]))
    assert not verify_coloring(c4, ColorClasses.of([[0, 1], [2, 3]]))
    assert not verify_coloring(c4, ColorClasses.of([[0, 2], [1]]))
    assert verify_coloring(gen_circulant(6, 2), ColorClasses.of([[0, 1], [2, 3], [4, 5]]))


def test_chromatic_examples():
    assert chromatic_number(cycle_graph(5))[0] == 3
    assert chromatic_number(gen_circulant(6, 2))[0] == 3
    assert chromatic_number(generate("crown", [5]))[0] == 2


def test_chromatic_guard():
    with pytest.raises(SizeGuardExceeded):
        chromatic_number(complete_graph(12), max_vertices=10)


def test_chromatic_is_optimal(atlas):
    for g in atlas:
        if g.n == 0:
            continue
        k, c = chromatic_number(g)
        assert verify_coloring(g, c) and len(c) == k
        assert k == 1 or not is_k_colorable(g, k - 1)
        if g.n <= 6:
            assert k == brute_chromatic(g)


def test_independence_examples():
    assert independence_number(gen_circulant(6, 2)) == 2
    assert independence_number(complete_graph(4)) == 1
    assert independence_number(gen_circulant(9, 3)) == 3


def test_independence_matches_brute(atlas):
    for g in atlas:
        assert independence_number(g) == brute_alpha(g)


def test_greedy_examples():
    assert greedy_coloring(path_graph(3), [0, 1, 2]).as_lists() == [[0, 2], [1]]
    for order in permutations(range(4)):
        assert len(greedy_coloring(complete_graph(4), order)) == 4
    assert greedy_coloring(cycle_graph(5), range(5)).as_lists() == [[0, 2], [1, 3], [4]]
    with pytest.raises(ValueError):
        greedy_coloring(path_graph(3), [0, 0, 1])


@settings(max_examples=150)
@given(graphs(min_n=1, max_n=12))
def test_greedy_not_better_than_exact(g):
    c = greedy_coloring(g, list(range(g.n)))
    assert verify_coloring(g, c)
    assert len(c) >= chromatic_number(g)[0]


@pytest.mark.parametrize("a", range(2, 21))
def test_circulant_chi_lower_bound(a):
    for b in range(1, a // 2 + 1):
        g = gen_circulant(a, b)
        if a <= 15:
            assert chromatic_number(g)[0] * b >= a
