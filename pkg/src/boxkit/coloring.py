"""Proper colourings, exact chromatic number and exact independence number."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, complement

MAX_EXACT_VERTICES = 40


class SizeGuardExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ColorClasses:
    """Ordered colour classes, each an ordered vertex list.

    Order matters: position ``j`` inside class ``i`` is the vertex's index
    in the witness machinery.
    """

    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, classes: Sequence[Sequence[int]]) -> "ColorClasses":
        return cls(tuple(tuple(int(v) for v in c) for c in classes))

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    def class_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}

    def position(self) -> dict[int, tuple[int, int]]:
        """Vertex -> (class index, position in class), both 0-based."""
        return {v: (i, j) for i, c in enumerate(self.classes) for j, v in enumerate(c)}

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.classes]


def verify_coloring(g: Graph, c: ColorClasses) -> bool:
    flat = [v for cls in c for v in cls]
    if sorted(flat) != list(range(g.n)):
        return False
    return all(g.adj[u].isdisjoint(cls) for cls in c for u in cls)


def greedy_coloring(g: Graph, order: Sequence[int]) -> ColorClasses:
    """First-fit colouring along ``order``; members listed in ascending id."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    color: dict[int, int] = {}
    for v in order:
        used = {color[u] for u in g.adj[v] if u in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    k = max(color.values(), default=-1) + 1
    return ColorClasses.of([sorted(v for v in color if color[v] == i) for i in range(k)])


def _greedy_clique(g: Graph) -> int:
    best = 0
    for s in range(g.n):
        clique = {s}
        for v in sorted(g.adj[s], key=lambda u: (-g.degree(u), u)):
            if clique <= g.adj[v]:
                clique.add(v)
        best = max(best, len(clique))
    return best


def _k_colorable(g: Graph, k: int, order: list[int]):
    color = [-1] * g.n

    def extend(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        banned = {color[u] for u in g.adj[v]}
        # a fresh colour is only tried as the next unused one (symmetry)
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            color[v] = c
            if extend(idx + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return color if extend(0, 0) else None


def chromatic_number(g: Graph, max_vertices: int = MAX_EXACT_VERTICES) -> tuple[int, ColorClasses]:
    """Exact chromatic number with a witness colouring.

    Tries k from a greedy clique bound upward; the first k that admits a
    colouring is optimal because every smaller k was refuted by exhaustive
    backtracking.
    """
    if g.n < 1:
        raise ValueError("chromatic number needs at least one vertex")
    if g.n > max_vertices:
        raise SizeGuardExceeded(f"{g.n} vertices exceed the exact-colouring guard {max_vertices}")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for k in range(max(1, _greedy_clique(g)), g.n + 1):
        color = _k_colorable(g, k, order)
        if color is not None:
            classes = [sorted(v for v in range(g.n) if color[v] == i) for i in range(k)]
            return k, ColorClasses.of(classes)
    raise AssertionError("unreachable: n colours always suffice")


def is_k_colorable(g: Graph, k: int) -> bool:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    return _k_colorable(g, k, order) is not None


def max_clique_size(g: Graph) -> int:
    """Branch and bound; greedy colouring of the candidate set gives the bound."""
    masks = g.masks
    best = 0

    def color_bound(cand: int) -> int:
        colors = 0
        rest = cand
        while rest:
            colors += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v) & ~masks[v]
                rest &= ~(1 << v)
        return colors

    def expand(size: int, cand: int):
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + color_bound(cand) <= best:
            return
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = (cand & -cand).bit_length() - 1
            expand(size + 1, cand & masks[v])
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


def independence_number(g: Graph, max_vertices: int = MAX_EXACT_VERTICES) -> int:
    if g.n > max_vertices:
        raise SizeGuardExceeded(f"{g.n} vertices exceed the exact search guard {max_vertices}")
    return max_clique_size(complement(g))
