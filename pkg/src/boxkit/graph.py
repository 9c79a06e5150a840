"""Simple undirected graphs on vertices ``0..n-1`` and a few generators.

Graphs are immutable.  Neighbourhoods are stored as frozensets; a bitmask
view (``Graph.masks``) is computed lazily for the hot loops in recognition
and the boxicity oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad ids, self-loops, bad params)."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def new_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a graph from an edge list; duplicate pairs are merged."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    adj = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def from_masks(masks: Sequence[int]) -> Graph:
    n = len(masks)
    return Graph(n, tuple(frozenset(u for u in range(n) if m >> u & 1) for m in masks))


def complement(g: Graph) -> Graph:
    full = set(range(g.n))
    return Graph(g.n, tuple(frozenset(full - g.adj[v] - {v}) for v in range(g.n)))


def non_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(range(g.n), 2) if v not in g.adj[u]]


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``s``, relabelled ``0..|s|-1`` in ascending order.

    Returns the subgraph and the map from original to new ids.
    """
    members = sorted(set(s))
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    relabel = {v: i for i, v in enumerate(members)}
    adj = tuple(frozenset(relabel[u] for u in g.adj[v] if u in relabel) for v in members)
    return Graph(len(members), adj), relabel


def add_edges(g: Graph, extra: Iterable[Sequence[int]]) -> Graph:
    return new_graph(g.n, [*g.edges(), *extra])


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return all(v in g.adj[u] for u, v in combinations(s, 2))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    return not any(v in g.adj[u] for u, v in combinations(s, 2))


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_cycle_graph(g: Graph) -> bool:
    """True iff ``g`` is a single cycle: connected, 2-regular, n >= 3."""
    if g.n < 3 or any(len(a) != 2 for a in g.adj):
        return False
    return len(connected_components(g)) == 1


# -- generators --------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return new_graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return new_graph(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def crown_graph(n: int) -> Graph:
    """K_{n,n} minus the perfect matching {(i, n+i)}; sides 0..n-1 and n..2n-1."""
    if n < 2:
        raise GraphError("crown side size must be at least 2")
    return new_graph(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


GENERATORS = {
    "complete": (complete_graph, 1),
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "crown": (crown_graph, 1),
}


def generate(kind: str, params: Sequence[int]) -> Graph:
    """Build a named graph.

    ``complete_multipartite`` takes the part sizes; every other kind takes a
    single size parameter.
    """
    params = [int(p) for p in params]
    if kind == "complete_multipartite":
        if not params:
            raise GraphError("complete_multipartite needs at least one part size")
        return complete_multipartite(params)
    if kind not in GENERATORS:
        raise GraphError(f"unknown generator {kind!r}")
    fn, arity = GENERATORS[kind]
    if len(params) != arity:
        raise GraphError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if params[0] < 0 or (kind == "path" and params[0] < 1):
        raise GraphError(f"invalid size for {kind}: {params[0]}")
    return fn(*params)
