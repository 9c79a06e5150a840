"""Witness families and their split interval supergraphs.

A witness family attaches to every vertex ``v`` of colour class ``V_i`` a set
``X(v)`` with ``N(v) <= X(v) <= V - V_i``.  Inside each class the sets must
run down a chain and then up a chain (the *pivot* is the length of the
descending part), and for every nonadjacent pair ``u, v`` in different
classes at least one of ``u not in X(v)``, ``v not in X(u)`` must hold.

Given such a family, the graph ``H_i`` obtained from ``G`` by joining each
``v`` in ``V_i`` to ``X(v)`` and making ``V - V_i`` a clique is a split
interval graph, and the ``H_i`` intersect exactly to ``G``.  So the number of
classes bounds the boxicity from above.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional, Sequence

from .coloring import ColorClasses, verify_coloring
from .graph import Graph, new_graph
from .recognition import (
    SplitPartition,
    check_split_partition,
    is_interval,
    nested_neighborhood_premise,
)

log = logging.getLogger(__name__)

EXHAUSTIVE_CLASS_SIZE = 8


class WitnessError(ValueError):
    pass


@dataclass(frozen=True)
class WitnessFamily:
    coloring: ColorClasses
    pivots: tuple[int, ...]
    x_sets: tuple[tuple[frozenset[int], ...], ...]

    @classmethod
    def of(cls, classes, pivots, x_sets) -> "WitnessFamily":
        return cls(ColorClasses.of(classes), tuple(int(p) for p in pivots),
                   tuple(tuple(frozenset(int(x) for x in s) for s in row) for row in x_sets))

    def x_of(self, v: int) -> frozenset[int]:
        i, j = self.coloring.position()[v]
        return self.x_sets[i][j]

    def replace_x(self, v: int, new: Sequence[int]) -> "WitnessFamily":
        i, j = self.coloring.position()[v]
        rows = [list(r) for r in self.x_sets]
        rows[i][j] = frozenset(new)
        return WitnessFamily(self.coloring, self.pivots, tuple(tuple(r) for r in rows))


@dataclass
class WitnessReport:
    """Outcome of ``validate_witness``; indices are 0-based (class, position)."""

    shape_failures: list[str] = field(default_factory=list)
    containment_failures: list[tuple[int, int, str]] = field(default_factory=list)
    chain_failures: list[tuple[int, int, int]] = field(default_factory=list)
    exclusion_failures: list[tuple[int, int]] = field(default_factory=list)

    @property
    def containment_ok(self) -> bool:
        return not self.containment_failures and not self.shape_failures

    @property
    def chain_ok(self) -> bool:
        return not self.chain_failures and not self.shape_failures

    @property
    def exclusion_ok(self) -> bool:
        return not self.exclusion_failures and not self.shape_failures

    @property
    def ok(self) -> bool:
        return self.containment_ok and self.chain_ok and self.exclusion_ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "containment_ok": self.containment_ok,
            "chain_ok": self.chain_ok,
            "exclusion_ok": self.exclusion_ok,
            "shape_failures": self.shape_failures,
            "containment_failures": [list(f) for f in self.containment_failures],
            "chain_failures": [list(f) for f in self.chain_failures],
            "exclusion_failures": [list(f) for f in self.exclusion_failures],
        }


def chain_breaks(sets: Sequence[frozenset], pivot: int) -> list[tuple[int, int]]:
    """Adjacent positions violating descend-to-pivot-then-ascend."""
    bad = []
    for j in range(len(sets) - 1):
        if j + 1 < pivot and not sets[j] >= sets[j + 1]:
            bad.append((j, j + 1))
        elif j >= pivot and not sets[j] <= sets[j + 1]:
            bad.append((j, j + 1))
    return bad


def validate_witness(g: Graph, w: WitnessFamily) -> WitnessReport:
    """Check containment, the chain condition and the exclusion condition.

    The three checks run independently, so a report can flag any subset of
    them.  Raises ``WitnessError`` if the colouring itself is not proper.
    """
    c = w.coloring
    if not verify_coloring(g, c):
        raise WitnessError("colour classes do not form a proper colouring")
    rep = WitnessReport()
    if len(w.pivots) != len(c) or len(w.x_sets) != len(c):
        rep.shape_failures.append("pivots/x_sets do not match the number of classes")
        return rep
    for i, cls in enumerate(c):
        if len(w.x_sets[i]) != len(cls):
            rep.shape_failures.append(f"class {i}: {len(w.x_sets[i])} sets for {len(cls)} vertices")
    if rep.shape_failures:
        return rep

    everything = frozenset(range(g.n))
    for i, cls in enumerate(c):
        outside = everything - set(cls)
        for j, v in enumerate(cls):
            x = w.x_sets[i][j]
            if not x <= outside:
                rep.containment_failures.append((i, j, "X meets its own class or is out of range"))
            if not g.adj[v] <= x:
                rep.containment_failures.append((i, j, "X misses a neighbour"))
        if not 1 <= w.pivots[i] <= len(cls):
            rep.chain_failures.append((i, -1, -1))
            continue
        for a, b in chain_breaks(w.x_sets[i], w.pivots[i]):
            rep.chain_failures.append((i, a, b))

    cls_of = c.class_of()
    for u, v in combinations(range(g.n), 2):
        if v in g.adj[u] or cls_of[u] == cls_of[v]:
            continue
        if v in w.x_of(u) and u in w.x_of(v):
            rep.exclusion_failures.append((u, v))
    return rep


def _require_valid(g: Graph, w: WitnessFamily):
    rep = validate_witness(g, w)
    if not rep.ok:
        detail = []
        if rep.shape_failures:
            detail.append("; ".join(rep.shape_failures))
        if rep.containment_failures:
            detail.append(f"containment fails at {rep.containment_failures[0][:2]}")
        if rep.chain_failures:
            detail.append(f"chain fails in class {rep.chain_failures[0][0]}")
        if rep.exclusion_failures:
            detail.append(f"both-way membership for non-edge {rep.exclusion_failures[0]}")
        raise WitnessError("invalid witness: " + ", ".join(detail))


def build_h(g: Graph, w: WitnessFamily, i: int, validate: bool = True) -> tuple[Graph, SplitPartition]:
    """The supergraph for class ``i`` (0-based) and its split partition."""
    if validate:
        _require_valid(g, w)
    cls = w.coloring[i]
    rest = sorted(set(range(g.n)) - set(cls))
    edges = list(g.edges())
    edges += [(v, x) for v, x_set in zip(cls, w.x_sets[i]) for x in x_set]
    edges += list(combinations(rest, 2))
    return new_graph(g.n, edges), SplitPartition(frozenset(cls), frozenset(rest))


@dataclass(frozen=True)
class SplitIntervalFamily:
    members: tuple[Graph, ...]
    partitions: tuple[SplitPartition, ...]
    witness: WitnessFamily
    premise: tuple[bool, ...]

    def __len__(self):
        return len(self.members)


def edge_intersection(n: int, members: Sequence[Graph]) -> set[tuple[int, int]]:
    if not members:
        return set(combinations(range(n), 2))
    common = set(members[0].edges())
    for h in members[1:]:
        common &= set(h.edges())
    return common


def build_family(g: Graph, w: WitnessFamily, validate: bool = True) -> SplitIntervalFamily:
    """Build every supergraph and verify split, interval and intersection.

    Any failed check raises ``WitnessError`` naming the member or the pair.
    With ``validate=False`` the witness conditions are not pre-checked, so a
    bad witness surfaces through the structural checks instead.
    """
    if validate:
        _require_valid(g, w)
    members, parts, premise = [], [], []
    for i in range(len(w.coloring)):
        h, p = build_h(g, w, i, validate=False)
        if not check_split_partition(h, p):
            raise WitnessError(f"member {i} is not split with partition (class {i}, rest)")
        interval = is_interval(h)
        nested = nested_neighborhood_premise(h, p)
        if not interval:
            raise WitnessError(f"member {i} is not an interval graph")
        if not nested:
            log.info("member %d is interval although the nested-neighbourhood premise fails", i)
        members.append(h)
        parts.append(p)
        premise.append(nested)
    common = edge_intersection(g.n, members)
    expected = set(g.edges())
    extra = sorted(common - expected)
    if extra:
        raise WitnessError(f"non-edge {extra[0]} survives in every member")
    missing = sorted(expected - common)
    if missing:
        raise WitnessError(f"edge {missing[0]} lost in the intersection")
    return SplitIntervalFamily(tuple(members), tuple(parts), w, tuple(premise))


# -- witnesses from neighbourhoods ------------------------------------------------

def _arrange_exhaustive(sets: Sequence[frozenset]) -> Optional[tuple[list[int], int]]:
    m = len(sets)
    for perm in permutations(range(m)):
        seq = [sets[p] for p in perm]
        desc = 1
        while desc < m and seq[desc - 1] >= seq[desc]:
            desc += 1
        asc = m - 1
        while asc > 0 and seq[asc - 1] <= seq[asc]:
            asc -= 1
        if asc <= desc:
            return list(perm), desc
    return None


def _arrange_two_chains(sets: Sequence[frozenset]) -> Optional[tuple[list[int], int]]:
    """Split into two inclusion chains via a 2-colouring of incomparability.

    Width <= 2 posets have triangle-free, hence bipartite, incomparability
    graphs, and each colour class is then a chain.
    """
    m = len(sets)
    incomparable = [[b for b in range(m) if not (sets[a] <= sets[b] or sets[b] <= sets[a])]
                    for a in range(m)]
    side = [-1] * m
    for s in range(m):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            a = stack.pop()
            for b in incomparable[a]:
                if side[b] < 0:
                    side[b] = 1 - side[a]
                    stack.append(b)
                elif side[b] == side[a]:
                    return None
    down = sorted((a for a in range(m) if side[a] == 0), key=lambda a: (-len(sets[a]), a))
    up = sorted((a for a in range(m) if side[a] == 1), key=lambda a: (len(sets[a]), a))
    return down + up, len(down)


def arrange_chain(sets: Sequence[frozenset], method: str = "auto") -> Optional[tuple[list[int], int]]:
    """Order ``sets`` as a descending chain then an ascending chain.

    Returns (permutation of indices, pivot) or None when impossible.
    """
    if not sets:
        return [], 0
    if method == "auto":
        method = "exhaustive" if len(sets) <= EXHAUSTIVE_CLASS_SIZE else "chains"
    if method == "exhaustive":
        return _arrange_exhaustive(sets)
    if method == "chains":
        return _arrange_two_chains(sets)
    raise ValueError(f"unknown method {method!r}")


def from_neighborhoods(g: Graph, c: ColorClasses, method: str = "auto") -> Optional[WitnessFamily]:
    """Witness with X(v) = N(v), reordering each class into two chains.

    Exclusion holds automatically here: for a non-edge uv, u is not in N(v).
    """
    if not verify_coloring(g, c):
        raise WitnessError("colour classes do not form a proper colouring")
    classes, pivots, x_sets = [], [], []
    for cls in c:
        arranged = arrange_chain([g.adj[v] for v in cls], method)
        if arranged is None:
            return None
        perm, pivot = arranged
        ordered = [cls[p] for p in perm]
        classes.append(ordered)
        pivots.append(pivot)
        x_sets.append([g.adj[v] for v in ordered])
    return WitnessFamily.of(classes, pivots, x_sets)
