"""Circulant graphs G(a, b) and their explicit colourings and witnesses.

G(a, b) has vertices 0..a-1 with u ~ v iff (u - v) mod a lies in [b, a - b].
Every run of b consecutive vertices is independent.  Writing a = nb + r,
the constructors below colour G(a, b) with consecutive runs and attach
witness sets X(v) = N(v) + Y(v), where Y(v) is a run in a neighbouring class.

Class and position arguments of ``vertex``-style helpers are 1-based, as in
the usual v_{i,j} notation; class indices wrap around the circle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import ColorClasses
from .graph import Graph, GraphError, new_graph
from .recognition import ATriple, at_paths, is_asteroidal
from .witness import WitnessFamily


@dataclass(frozen=True)
class CirculantParams:
    a: int
    b: int

    def __post_init__(self):
        if self.b < 1 or self.a < 2 * self.b:
            raise GraphError(f"need a >= 2b >= 2, got a={self.a}, b={self.b}")

    @property
    def n(self) -> int:
        return self.a // self.b

    @property
    def r(self) -> int:
        return self.a % self.b


def gen_circulant(a: int, b: int) -> Graph:
    CirculantParams(a, b)
    return new_graph(a, [(u, v) for u in range(a) for v in range(u + 1, a)
                         if b <= (v - u) % a <= a - b])


def _ceil_half(m: int) -> int:
    return (m + 1) // 2


class _Indexed:
    """1-based v_{i,j} lookup over wrapped colour classes."""

    def __init__(self, classes: list[list[int]]):
        self.classes = classes
        self.count = len(classes)

    def cls(self, i: int) -> list[int]:
        return self.classes[(i - 1) % self.count]

    def size(self, i: int) -> int:
        return len(self.cls(i))

    def run(self, i: int, lo: int, hi: int) -> set[int]:
        """{v_{i,lo}, ..., v_{i,hi}}; empty when lo > hi."""
        c = self.cls(i)
        return {c[t - 1] for t in range(max(lo, 1), min(hi, len(c)) + 1)}


def coloring_41(n: int, b: int) -> ColorClasses:
    if n < 2 or b < 1:
        raise GraphError(f"need n >= 2 and b >= 1, got n={n}, b={b}")
    return ColorClasses.of([[(i - 1) * b + j - 1 for j in range(1, b + 1)]
                            for i in range(1, n + 1)])


def witness_41(n: int, b: int) -> WitnessFamily:
    """Witness for G(nb, b) over ``coloring_41``.

    Pivot h = ceil(b/2).  For j <= h, Y = {v_{i-1,j}..v_{i-1,h}}; for j > h,
    Y = {v_{i+1,s}..v_{i+1,j}} with s = h+1 for even b and s = h for odd b.
    """
    c = coloring_41(n, b)
    g = gen_circulant(n * b, b)
    idx = _Indexed(c.as_lists())
    h = _ceil_half(b)
    start = h + 1 if b % 2 == 0 else h
    x_sets = []
    for i in range(1, n + 1):
        row = []
        for j, v in enumerate(idx.cls(i), start=1):
            y = idx.run(i - 1, j, h) if j <= h else idx.run(i + 1, start, j)
            row.append(g.adj[v] | y)
        x_sets.append(row)
    return WitnessFamily.of(c.as_lists(), [h] * n, x_sets)


def _check_42(n: int, b: int, r: int):
    if n < 2 or b < 2 or not 1 <= r < b or n < b - r - 1:
        raise GraphError(f"need n >= 2, b >= 2, 1 <= r < b, n >= b-r-1; got n={n}, b={b}, r={r}")


def coloring_42(n: int, b: int, r: int) -> ColorClasses:
    """n+1 runs: the first k = n-b+r+1 of length b, the rest of length b-1."""
    _check_42(n, b, r)
    k = n - b + r + 1
    classes = [[(i - 1) * b + j - 1 for j in range(1, b + 1)] for i in range(1, k + 1)]
    classes += [[(i - 1) * (b - 1) + j - 1 + k for j in range(1, b)]
                for i in range(k + 1, n + 2)]
    return ColorClasses.of(classes)


def witness_42(n: int, b: int, r: int) -> WitnessFamily:
    """Witness for G(nb + r, b) over ``coloring_42``.

    With m = |V_i| and h = ceil(m/2) (the pivot), for j <= h:
      Y = {v_{i-1,j}..v_{i-1,h}}               if |V_{i-1}| = b,
      Y = {v_{i-1,max(1,j-1)}..v_{i-1,h-1}}    if |V_{i-1}| = b-1;
    for j > h, Y = {v_{i+1,s}..v_{i+1,e}} where
      s = h+1 (m = b even), h+2 (m = b-1 even), h (m = b odd), h+1 (m = b-1 odd),
      e = min(j, |V_{i+1}|) if m = b, else min(j+1, |V_{i+1}|).
    """
    c = coloring_42(n, b, r)
    g = gen_circulant(n * b + r, b)
    idx = _Indexed(c.as_lists())
    x_sets, pivots = [], []
    for i in range(1, n + 2):
        m = idx.size(i)
        h = _ceil_half(m)
        full = m == b
        if m % 2 == 0:
            start = h + 1 if full else h + 2
        else:
            start = h if full else h + 1
        row = []
        for j, v in enumerate(idx.cls(i), start=1):
            if j <= h:
                if idx.size(i - 1) == b:
                    y = idx.run(i - 1, j, h)
                else:
                    y = idx.run(i - 1, max(1, j - 1), h - 1)
            else:
                end = min(j if full else j + 1, idx.size(i + 1))
                y = idx.run(i + 1, start, end)
            row.append(g.adj[v] | y)
        x_sets.append(row)
        pivots.append(h)
    return WitnessFamily.of(c.as_lists(), pivots, x_sets)


def at_witness(a: int, b: int) -> ATriple:
    """The triple (1, ceil(b/2), b) of G(a, b), checked to be asteroidal."""
    if b < 3 or a < 3 * b:
        raise GraphError(f"triple only claimed for a >= 3b and b >= 3, got a={a}, b={b}")
    g = gen_circulant(a, b)
    u, v, w = 1, _ceil_half(b), b
    if not is_asteroidal(g, u, v, w):
        raise AssertionError(f"({u}, {v}, {w}) is not asteroidal in G({a}, {b})")
    return ATriple(u, v, w, at_paths(g.n, g.masks, u, v, w))
