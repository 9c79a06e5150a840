import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from boxkit.circulant import gen_circulant
from boxkit.graph import (
    complete_graph,
    complete_multipartite,
    crown_graph,
    cycle_graph,
    induced,
    new_graph,
    non_edges,
    path_graph,
)
from boxkit.oracle import (
    GuardExceeded,
    boxicity_exact,
    crown_automorphisms,
    crown_search,
    guard_limit,
    interval_completions,
    min_cover,
    random_minimal_completion,
)
from boxkit.recognition import is_interval
from conftest import graphs


def _excluded(g, method="branching"):
    return sorted(sorted(s) for s in interval_completions(g, method=method).excluded_sets())


def test_catalog_examples():
    assert _excluded(complete_graph(4)) == [[]]
    assert _excluded(path_graph(3)) == [[(0, 2)]]
    assert _excluded(cycle_graph(4)) == [[(0, 2)], [(1, 3)]]


def _brute_catalog(g):
    """Maximal excluded sets straight from the definition."""
    pairs = non_edges(g)
    found = []
    for k in range(len(pairs) + 1):
        for added in combinations(pairs, k):
            h = new_graph(g.n, list(g.edges()) + list(added))
            if is_interval(h):
                found.append(frozenset(pairs) - set(added))
    return sorted(sorted(s) for s in found if not any(s < t for t in found))


@pytest.mark.parametrize("g", [cycle_graph(5), cycle_graph(6), complete_multipartite([2, 2, 2]),
                               gen_circulant(6, 2), crown_graph(3), path_graph(5)],
                         ids=["c5", "c6", "k222", "g62", "crown3", "p5"])
def test_catalog_routes_agree(g):
    assert _excluded(g, "branching") == _excluded(g, "subsets") == _brute_catalog(g)


def test_catalog_routes_agree_on_atlas(atlas):
    for g in atlas:
        if g.n >= 6 and len(non_edges(g)) <= 10:
            assert _excluded(g, "branching") == _excluded(g, "subsets"), g


def test_catalog_soundness_and_antichain():
    for g in [cycle_graph(7), complete_multipartite([2, 2, 2]), crown_graph(4)]:
        cat = interval_completions(g)
        for i in range(len(cat.excluded)):
            assert is_interval(cat.supergraph(i))
        for a, b in combinations(cat.excluded, 2):
            assert a & b not in (a, b)


def test_guard(monkeypatch):
    with pytest.raises(GuardExceeded):
        interval_completions(crown_graph(5))
    with pytest.raises(GuardExceeded):
        interval_completions(cycle_graph(7), limit=5)
    monkeypatch.setenv("BOXKIT_GUARD", "3")
    assert guard_limit() == 3
    with pytest.raises(GuardExceeded):
        boxicity_exact(cycle_graph(5))
    with pytest.raises(ValueError):
        interval_completions(cycle_graph(4), method="nope")


def test_min_cover():
    assert min_cover(0, (), 0) == []
    assert min_cover(0b111, (0b011, 0b100, 0b110), 1) is None
    assert sorted(min_cover(0b111, (0b011, 0b100, 0b110), 2)) in ([0, 1], [0, 2])


def test_boxicity_examples():
    assert boxicity_exact(complete_graph(5)) == 0
    assert boxicity_exact(cycle_graph(4)) == 2
    assert boxicity_exact(complete_multipartite([2, 2, 2])) == 3
    # the complement of C6 is a triangular prism
    assert boxicity_exact(gen_circulant(6, 2)) == 2
    with pytest.raises(RuntimeError):
        boxicity_exact(complete_multipartite([2, 2, 2]), k_max=2)


def test_boxicity_zero_and_one(atlas):
    for g in atlas:
        box = boxicity_exact(g, limit=21)
        assert (box == 0) == (g.num_edges() == g.n * (g.n - 1) // 2)
        assert (box <= 1) == is_interval(g), g


@pytest.mark.parametrize("g", [cycle_graph(4), complete_multipartite([2, 2, 2]), gen_circulant(6, 2)],
                         ids=["c4", "k222", "g62"])
def test_monotone_on_induced_subgraphs(g):
    whole = boxicity_exact(g)
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            sub, _ = induced(g, s)
            assert boxicity_exact(sub) <= whole


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_boxicity_matches_definition_catalog(g):
    if len(non_edges(g)) > 12:
        return
    cat = interval_completions(g, method="subsets")
    assert boxicity_exact(g) == boxicity_exact(g, catalog=cat)


def test_random_completions_are_dominated():
    g = crown_graph(4)
    pairs = tuple(non_edges(g))
    index = {p: i for i, p in enumerate(pairs)}
    cat = interval_completions(g)
    rng = random.Random(3)
    for _ in range(40):
        e = random_minimal_completion(g, pairs, index, rng)
        assert any(e & m == e for m in cat.excluded)


def test_crown_automorphism_count():
    g = crown_graph(3)
    perms = crown_automorphisms(3, tuple(non_edges(g)))
    assert len(perms) == 12 and len({tuple(p) for p in perms}) == 12


def test_crown_search_small_sampled():
    rep = crown_search(5, trials=2000, seed=1, pool=32)
    d = rep.to_dict()
    assert d["none_found"] and not d["box_gt_2_proven"]
    assert d["total_non_edges"] == 25 and 0 < d["best_coverage"] < 25
    assert crown_search(5, trials=2000, seed=1, pool=32).to_dict() == d


def test_crown_search_side3_reports():
    rep = crown_search(3, trials=200, seed=0, pool=16)
    assert rep.notes
    exact = crown_search(3, exhaustive=True)
    # K_{3,3} minus a matching is C6, which has boxicity 2
    assert exact.found and exact.exhausted


@pytest.mark.slow
def test_crown_exhaustive_proves_box_gt_2():
    d = crown_search(5, exhaustive=True).to_dict()
    assert d["exhausted"] and d["box_gt_2_proven"]
