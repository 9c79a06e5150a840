"""Chordal, split, asteroidal-triple and interval recognition.

Everything here is exact and aimed at small graphs.  The inner loops work on
integer bitmasks so the boxicity oracle can call ``interval_mask`` millions
of times without building ``Graph`` objects.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph, complement, is_clique, is_independent


@dataclass(frozen=True)
class SplitPartition:
    independent_set: frozenset[int]
    clique: frozenset[int]


@dataclass(frozen=True)
class ATriple:
    """An asteroidal triple with one witness path per pair.

    ``paths`` holds P_uv, P_vw and P_wu as vertex sequences; P_uv avoids the
    neighbourhood of ``w`` and so on cyclically.
    """

    u: int
    v: int
    w: int
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] = ((), (), ())

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.u, self.v, self.w)


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


# -- chordality ---------------------------------------------------------------

def mcs_order(n: int, masks: Sequence[int]) -> list[int]:
    """Maximum cardinality search visit order; ties go to the lowest id."""
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not numbered >> v & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        order.append(best)
        numbered |= 1 << best
        for u in _bits(masks[best] & ~numbered):
            weight[u] += 1
    return order


def _peo_violation(n: int, masks: Sequence[int], peo: Sequence[int]):
    """First vertex whose later neighbours are not a clique, or None."""
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    remaining = (1 << n) - 1
    for v in peo:
        remaining &= ~(1 << v)
        later = masks[v] & remaining
        if later:
            u = min(_bits(later), key=pos.__getitem__)
            if (later & ~(1 << u)) & ~masks[u]:
                return v
    return None


def peo_mask(n: int, masks: Sequence[int]) -> Optional[list[int]]:
    peo = mcs_order(n, masks)[::-1]
    return peo if _peo_violation(n, masks, peo) is None else None


def perfect_elimination_ordering(g: Graph) -> Optional[list[int]]:
    """A perfect elimination ordering of ``g``, or None if ``g`` is not chordal."""
    return peo_mask(g.n, g.masks)


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def chordless_cycle(n: int, masks: Sequence[int]) -> Optional[list[int]]:
    """A shortest chordless cycle of length >= 4, or None if chordal."""
    best = None
    for v in range(n):
        nv = masks[v]
        for u, x in combinations(list(_bits(nv)), 2):
            if masks[u] >> x & 1:
                continue
            # u..x path avoiding v and its other neighbours closes a hole
            allowed = ((1 << n) - 1) & ~(nv | 1 << v) | (1 << u) | (1 << x)
            path = _bfs_path(masks, allowed, u, x)
            if path is not None and (best is None or len(path) + 1 < len(best)):
                best = [v, *path]
                if len(best) == 4:
                    return best
    return best


# -- maximal cliques -----------------------------------------------------------

def maximal_cliques_chordal(n: int, masks: Sequence[int], peo: Sequence[int]) -> list[int]:
    """Maximal cliques of a chordal graph as bitmasks, sorted by member tuple."""
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    cands = []
    remaining = (1 << n) - 1
    for v in peo:
        remaining &= ~(1 << v)
        cands.append((masks[v] & remaining) | 1 << v)
    maximal = [c for c in set(cands) if not any(c != d and c & d == c for d in cands)]
    return sorted(maximal, key=lambda c: tuple(_bits(c)))


# -- split graphs --------------------------------------------------------------

def is_split(g: Graph) -> Optional[SplitPartition]:
    """Split partition (independent set, clique) of ``g``, or None."""
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    peo = perfect_elimination_ordering(g)
    if peo is None or not is_chordal(complement(g)):
        return None
    cliques = maximal_cliques_chordal(g.n, g.masks, peo)
    cliques.sort(key=lambda c: -bin(c).count("1"))
    full = (1 << g.n) - 1
    for c in cliques:
        rest = list(_bits(full & ~c))
        if is_independent(g, rest):
            s, k = set(rest), set(_bits(c))
            # prefer the larger independent side; at most one clique vertex can move
            for x in sorted(k):
                if g.adj[x].isdisjoint(s):
                    s.add(x)
                    k.discard(x)
                    break
            return SplitPartition(frozenset(s), frozenset(k))
    # unreachable for split graphs: some split partition has a maximal clique
    raise AssertionError("double-chordal graph without split partition")


def check_split_partition(g: Graph, p: SplitPartition) -> bool:
    s, k = p.independent_set, p.clique
    return (not s & k and s | k == frozenset(range(g.n))
            and is_independent(g, s) and is_clique(g, k))


# -- asteroidal triples --------------------------------------------------------

def _bfs_path(masks: Sequence[int], allowed: int, src: int, dst: int) -> Optional[list[int]]:
    """Shortest src-dst path inside ``allowed``; neighbours scanned in id order."""
    if not (allowed >> src & 1 and allowed >> dst & 1):
        return None
    pred = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = []
            while v is not None:
                path.append(v)
                v = pred[v]
            return path[::-1]
        for u in _bits(masks[v] & allowed):
            if u not in pred:
                pred[u] = v
                queue.append(u)
    return None


def avoid_components(n: int, masks: Sequence[int], w: int) -> list[int]:
    """Component labels of G - N[w]; vertices in N[w] get -1."""
    label = [-1] * n
    allowed = ((1 << n) - 1) & ~(masks[w] | 1 << w)
    c = 0
    rest = allowed
    while rest:
        s = (rest & -rest).bit_length() - 1
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= masks[v]
            frontier = nxt & allowed & ~comp
            comp |= frontier
        for v in _bits(comp):
            label[v] = c
        rest &= ~comp
        c += 1
    return label


def _at_triples(n: int, masks: Sequence[int], find_all: bool) -> list[tuple[int, int, int]]:
    comps = [avoid_components(n, masks, w) for w in range(n)]
    found = []
    for u, v, w in combinations(range(n), 3):
        cw, cu, cv = comps[w], comps[u], comps[v]
        if (cw[u] >= 0 and cw[u] == cw[v] and cu[v] >= 0 and cu[v] == cu[w]
                and cv[w] >= 0 and cv[w] == cv[u]):
            found.append((u, v, w))
            if not find_all:
                break
    return found


def at_free_mask(n: int, masks: Sequence[int]) -> bool:
    return not _at_triples(n, masks, find_all=False)


def at_paths(n: int, masks: Sequence[int], u: int, v: int, w: int):
    """Witness paths (P_uv, P_vw, P_wu), each avoiding N of the third vertex."""
    full = (1 << n) - 1

    def avoiding(x):
        return full & ~masks[x]

    return (
        tuple(_bfs_path(masks, avoiding(w), u, v) or ()),
        tuple(_bfs_path(masks, avoiding(u), v, w) or ()),
        tuple(_bfs_path(masks, avoiding(v), w, u) or ()),
    )


def asteroidal_triples(g: Graph, find_all: bool = True) -> list[ATriple]:
    """Asteroidal triples ``u < v < w`` in lexicographic order.

    A triple is asteroidal when, for each of its vertices, the other two lie
    in one component of the graph with that vertex's closed neighbourhood
    removed.  With ``find_all=False`` only the first triple is returned.
    """
    return [ATriple(u, v, w, at_paths(g.n, g.masks, u, v, w))
            for u, v, w in _at_triples(g.n, g.masks, find_all)]


def is_asteroidal(g: Graph, u: int, v: int, w: int) -> bool:
    if len({u, v, w}) < 3:
        return False
    cu, cv, cw = (avoid_components(g.n, g.masks, x) for x in (u, v, w))
    return (cw[u] >= 0 and cw[u] == cw[v] and cu[v] >= 0 and cu[v] == cu[w]
            and cv[w] >= 0 and cv[w] == cv[u])


# -- interval graphs -----------------------------------------------------------

def interval_mask(n: int, masks: Sequence[int]) -> bool:
    return peo_mask(n, masks) is not None and at_free_mask(n, masks)


def is_interval(g: Graph) -> bool:
    """Interval test: chordal and free of asteroidal triples."""
    return interval_mask(g.n, g.masks)


def nested_neighborhood_premise(g: Graph, p: SplitPartition) -> bool:
    """Nested-neighbourhood test on the independent side of a split partition.

    True iff no three vertices of the independent set have pairwise
    inclusion-incomparable neighbourhoods; this is sufficient (not necessary)
    for a split graph to be an interval graph.
    """
    if not check_split_partition(g, p):
        raise ValueError("not a split partition of this graph")
    s = sorted(p.independent_set)
    nb = [g.adj[v] for v in s]

    def comparable(a, b):
        return nb[a] <= nb[b] or nb[b] <= nb[a]

    for x, y, z in combinations(range(len(s)), 3):
        if not (comparable(x, y) or comparable(y, z) or comparable(x, z)):
            return False
    return True
