"""Interval models and box representations with integer endpoints.

Intervals are closed, so touching endpoints intersect and point intervals
are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph
from .recognition import SplitPartition, _bits, maximal_cliques_chordal, perfect_elimination_ordering
from .witness import SplitIntervalFamily, WitnessFamily, build_family

Interval = tuple[int, int]


class RealizationError(ValueError):
    pass


@dataclass(frozen=True)
class IntervalRealization:
    intervals: tuple[Interval, ...]

    def __getitem__(self, v: int) -> Interval:
        return self.intervals[v]

    def __len__(self):
        return len(self.intervals)


@dataclass(frozen=True)
class BoxRepresentation:
    k: int
    boxes: tuple[tuple[Interval, ...], ...]

    def __getitem__(self, v: int) -> tuple[Interval, ...]:
        return self.boxes[v]

    def __len__(self):
        return len(self.boxes)


def overlaps(p: Interval, q: Interval) -> bool:
    return max(p[0], q[0]) <= min(p[1], q[1])


def verify_realization(g: Graph, r: IntervalRealization) -> bool:
    if len(r) != g.n:
        raise RealizationError(f"realization covers {len(r)} vertices, graph has {g.n}")
    if any(lo > hi for lo, hi in r.intervals):
        return False
    return all(overlaps(r[u], r[v]) == g.has_edge(u, v) for u, v in combinations(range(g.n), 2))


def verify_boxes(g: Graph, b: BoxRepresentation) -> bool:
    """Boxes meet iff their intervals overlap in every coordinate."""
    if len(b) != g.n:
        raise RealizationError(f"representation covers {len(b)} vertices, graph has {g.n}")
    if any(len(box) != b.k for box in b.boxes):
        return False
    for u, v in combinations(range(g.n), 2):
        meet = all(overlaps(p, q) for p, q in zip(b[u], b[v]))
        if meet != g.has_edge(u, v):
            return False
    return True


def realize_chain_split(h: Graph, p: SplitPartition, order: Sequence[int],
                        pivot: int) -> IntervalRealization:
    """Closed-form model of a split graph whose independent side is chained.

    The independent vertices in ``order`` must have neighbourhoods that
    descend up to position ``pivot`` and ascend afterwards.  Descending
    vertex j (1-based) sits at the point -j, ascending vertex j at m - j + 1;
    each clique vertex stretches from its deepest descending neighbour to its
    farthest ascending one, always through 0.
    """
    order = list(order)
    if sorted(order) != sorted(p.independent_set):
        raise RealizationError("order must list the independent set exactly")
    m = len(order)
    nbrs = [h.adj[s] for s in order]
    for j in range(m - 1):
        if j + 1 < pivot and not nbrs[j] >= nbrs[j + 1]:
            raise RealizationError(f"neighbourhoods not descending at position {j + 1}")
        if j >= pivot and not nbrs[j] <= nbrs[j + 1]:
            raise RealizationError(f"neighbourhoods not ascending at position {j + 1}")
    iv: list[Optional[Interval]] = [None] * h.n
    for j, s in enumerate(order, start=1):
        pos = -j if j <= pivot else m - j + 1
        iv[s] = (pos, pos)
    for x in p.clique:
        left = max((j for j in range(1, pivot + 1) if x in nbrs[j - 1]), default=0)
        right = max((m - j + 1 for j in range(pivot + 1, m + 1) if x in nbrs[j - 1]), default=0)
        iv[x] = (-left, right)
    r = IntervalRealization(tuple(iv))
    if not verify_realization(h, r):
        raise RealizationError("closed-form model does not reproduce the graph")
    return r


def realize_interval(g: Graph) -> Optional[IntervalRealization]:
    """Interval model from a consecutive arrangement of maximal cliques.

    Vertex v gets [first, last] clique position containing it.  Returns None
    when the graph is not chordal or no consecutive arrangement exists.
    """
    if g.n == 0:
        return IntervalRealization(())
    peo = perfect_elimination_ordering(g)
    if peo is None:
        return None
    cliques = maximal_cliques_chordal(g.n, g.masks, peo)
    m = len(cliques)
    dead: set[tuple[int, int]] = set()

    def search(seq: list[int], placed: int, closed: int) -> Optional[list[int]]:
        if len(seq) == m:
            return seq
        key = (placed, seq[-1] if seq else -1)
        if key in dead:
            return None
        last = cliques[seq[-1]] if seq else 0
        for c in range(m):
            if placed >> c & 1 or cliques[c] & closed:
                continue
            now_closed = closed | (last & ~cliques[c])
            rest = [d for d in range(m) if not (placed | 1 << c) >> d & 1]
            if any(cliques[d] & now_closed for d in rest):
                continue
            found = search(seq + [c], placed | 1 << c, now_closed)
            if found is not None:
                return found
        dead.add(key)
        return None

    arrangement = search([], 0, 0)
    if arrangement is None:
        return None
    first = [None] * g.n
    last_pos = [None] * g.n
    for pos, c in enumerate(arrangement):
        for v in _bits(cliques[c]):
            if first[v] is None:
                first[v] = pos
            last_pos[v] = pos
    return IntervalRealization(tuple(zip(first, last_pos)))


def assemble_boxes(g: Graph, fam: SplitIntervalFamily,
                   realizations: Sequence[IntervalRealization]) -> BoxRepresentation:
    if len(realizations) != len(fam.members):
        raise RealizationError("one realization per family member is required")
    for i, (h, r) in enumerate(zip(fam.members, realizations)):
        if not verify_realization(h, r):
            raise RealizationError(f"realization {i} does not model member {i}")
    boxes = BoxRepresentation(len(realizations),
                              tuple(tuple(r[v] for r in realizations) for v in range(g.n)))
    if not verify_boxes(g, boxes):
        raise RealizationError("assembled boxes do not reproduce the graph")
    return boxes


def realize_family(fam: SplitIntervalFamily) -> list[IntervalRealization]:
    w = fam.witness
    return [realize_chain_split(h, p, w.coloring[i], w.pivots[i])
            for i, (h, p) in enumerate(zip(fam.members, fam.partitions))]


def boxes_from_witness(g: Graph, w: WitnessFamily):
    """Witness -> family -> per-member models -> boxes, all verified."""
    fam = build_family(g, w)
    reals = realize_family(fam)
    return fam, reals, assemble_boxes(g, fam, reals)
