import pytest

from boxkit.circulant import (
    CirculantParams,
    at_witness,
    coloring_41,
    coloring_42,
    gen_circulant,
    witness_41,
    witness_42,
)
from boxkit.graph import GraphError, complement, complete_graph, cycle_graph, is_cycle_graph
from boxkit.witness import chain_breaks, validate_witness
from conftest import circulant_by_rule

GRID_41 = [(n, b) for n in range(2, 6) for b in range(1, 6)]
GRID_42 = [(n, b, r) for n in range(2, 6) for b in range(2, 6) for r in range(1, b)
           if n >= b - r - 1 and n * b + r <= 25]


def test_params():
    p = CirculantParams(17, 5)
    assert (p.n, p.r) == (3, 2)
    with pytest.raises(GraphError):
        CirculantParams(5, 3)
    with pytest.raises(GraphError):
        gen_circulant(4, 0)


def test_gen_examples():
    assert gen_circulant(5, 1) == complete_graph(5)
    g62 = gen_circulant(6, 2)
    assert g62.num_edges() == 9 and g62 == complement(cycle_graph(6))
    c7 = gen_circulant(7, 3)
    order = [0, 3, 6, 2, 5, 1, 4]
    assert set(c7.edges()) == {tuple(sorted((order[i], order[(i + 1) % 7]))) for i in range(7)}


@pytest.mark.parametrize("a", range(2, 31))
def test_gen_matches_rule_and_degree(a):
    for b in range(1, a // 2 + 1):
        g = gen_circulant(a, b)
        assert g == circulant_by_rule(a, b)
        assert all(g.degree(v) == a - 2 * b + 1 for v in range(a))


def test_coloring_41_examples():
    assert coloring_41(3, 2).as_lists() == [[0, 1], [2, 3], [4, 5]]
    assert coloring_41(2, 3).as_lists() == [[0, 1, 2], [3, 4, 5]]
    assert coloring_41(4, 1).as_lists() == [[0], [1], [2], [3]]
    with pytest.raises(GraphError):
        coloring_41(1, 3)


def _x(w):
    return [[set(x) for x in row] for row in w.x_sets]


def test_witness_41_examples():
    w = witness_41(3, 2)
    assert _x(w) == [[{2, 3, 4}, {3, 4, 5}], [{4, 5, 0}, {5, 0, 1}], [{0, 1, 2}, {1, 2, 3}]]
    assert w.pivots == (1, 1, 1)
    w = witness_41(2, 3)
    assert _x(w)[0] == [{3, 4}, {4}, {4, 5}]
    assert w.pivots == (2, 2)
    w = witness_41(2, 2)
    assert _x(w)[0] == [{2}, {3}]


def test_witness_41_b1_is_neighbourhoods():
    w = witness_41(5, 1)
    g = complete_graph(5)
    assert all(w.x_of(v) == g.adj[v] for v in range(5))
    assert validate_witness(g, w).ok


@pytest.mark.parametrize("n,b", GRID_41)
def test_witness_41_validates(n, b):
    w = witness_41(n, b)
    assert validate_witness(gen_circulant(n * b, b), w).ok


def test_coloring_42_examples():
    assert coloring_42(2, 3, 1).as_lists() == [[0, 1, 2], [3, 4], [5, 6]]
    assert coloring_42(3, 2, 1).as_lists() == [[0, 1], [2, 3], [4, 5], [6]]
    assert coloring_42(2, 2, 1).as_lists() == [[0, 1], [2, 3], [4]]
    for bad in [(2, 5, 1), (1, 2, 1), (3, 3, 0), (3, 3, 3)]:
        with pytest.raises(GraphError):
            coloring_42(*bad)


def test_witness_42_c7():
    w = witness_42(2, 3, 1)
    assert _x(w) == [[{3, 4, 5}, {4, 5}, {4, 5, 6}], [{0, 6}, {0, 1}], [{1, 2}, {2, 3}]]
    assert validate_witness(gen_circulant(7, 3), w).ok


@pytest.mark.parametrize("n,b,r", GRID_42)
def test_witness_42_validates_with_chain_shape(n, b, r):
    w = witness_42(n, b, r)
    assert len(w.coloring) == n + 1
    assert validate_witness(gen_circulant(n * b + r, b), w).ok
    for cls, row, pivot in zip(w.coloring, w.x_sets, w.pivots):
        m = len(cls)
        assert pivot == (m + 1) // 2
        assert chain_breaks(list(row), pivot) == []


def _displayed_neighbourhood(classes, i, j):
    # 0-based class i and position j; previous run up to j, next run from j
    k = len(classes)
    prev, nxt = classes[(i - 1) % k], classes[(i + 1) % k]
    rest = set().union(*(set(classes[t]) for t in range(k) if t not in {i, (i - 1) % k, (i + 1) % k}))
    return set(prev[:j + 1]) | set(nxt[j:]) | rest


@pytest.mark.parametrize("n,b", [(n, b) for n in range(3, 7) for b in range(1, 6)])
def test_displayed_neighbourhood_formula(n, b):
    g = gen_circulant(n * b, b)
    classes = coloring_41(n, b).as_lists()
    for i, cls in enumerate(classes):
        for j, v in enumerate(cls):
            assert g.adj[v] == _displayed_neighbourhood(classes, i, j)


def test_displayed_formula_overcounts_at_two_classes():
    # G(2b, b) is a perfect matching; the formula would give each vertex b+1 neighbours
    g = gen_circulant(6, 3)
    classes = coloring_41(2, 3).as_lists()
    assert g.adj[0] == {3}
    assert _displayed_neighbourhood(classes, 0, 0) != g.adj[0]


def test_at_witness_examples():
    assert at_witness(9, 3).triple == (1, 2, 3)
    t = at_witness(12, 4)
    assert t.triple == (1, 2, 4)
    g = gen_circulant(12, 4)
    for path, third in zip(t.paths, (t.w, t.u, t.v)):
        assert path and not set(path) & g.adj[third]
    with pytest.raises(GraphError):
        at_witness(8, 3)
    with pytest.raises(GraphError):
        at_witness(12, 2)


@pytest.mark.parametrize("b", range(2, 7))
def test_odd_case_is_a_cycle(b):
    assert is_cycle_graph(gen_circulant(2 * b + 1, b))
