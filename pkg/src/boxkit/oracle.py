"""Exact boxicity for small graphs.

box(G) <= k iff there are k interval supergraphs of G on the same vertex set
whose edge sets intersect to E(G).  Record, for each interval supergraph H,
its *excluded set*: the non-edges of G that H leaves out.  Then k
supergraphs work iff their excluded sets cover every non-edge of G.
Enlarging an excluded set never hurts coverage, so it suffices to search
over the inclusion-maximal excluded sets, i.e. over the inclusion-minimal
interval completions.  That catalog is what ``interval_completions``
builds; ``boxicity_exact`` is a set cover over it.

Two enumeration routes produce the catalog:

* ``subsets`` tests every subset of non-edges (the definition, 2^m tests);
* ``branching`` repeatedly picks an obstruction (a chordless cycle or an
  asteroidal triple with its witness paths) and branches on which non-edge
  destroys it, forbidding earlier choices in later branches.  Every
  interval supergraph contains some leaf of that tree, so the minimal
  leaves are exactly the minimal completions.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional

from .graph import Graph, add_edges, crown_graph, non_edges
from .recognition import (
    _bits,
    at_paths,
    chordless_cycle,
    interval_mask,
    peo_mask,
    _at_triples,
)

DEFAULT_GUARD = 20


class GuardExceeded(RuntimeError):
    pass


def guard_limit(limit: Optional[int] = None) -> int:
    if limit is not None:
        return limit
    return int(os.environ.get("BOXKIT_GUARD", DEFAULT_GUARD))


@dataclass(frozen=True)
class CompletionCatalog:
    """Inclusion-maximal excluded sets of a graph, as bitmasks over ``pairs``."""

    graph: Graph
    pairs: tuple[tuple[int, int], ...]
    excluded: tuple[int, ...]

    def excluded_sets(self) -> list[list[tuple[int, int]]]:
        return [[self.pairs[i] for i in _bits(m)] for m in self.excluded]

    def supergraph(self, entry: int) -> Graph:
        """The interval completion whose excluded set is ``excluded[entry]``."""
        keep = self.excluded[entry]
        added = [p for i, p in enumerate(self.pairs) if not keep >> i & 1]
        return add_edges(self.graph, added)


def _with_pairs(masks, pairs, chosen: int) -> list[int]:
    out = list(masks)
    for i in _bits(chosen):
        u, v = pairs[i]
        out[u] |= 1 << v
        out[v] |= 1 << u
    return out


def _maximal(masks: list[int]) -> tuple[int, ...]:
    """Inclusion-maximal members, sorted by (size desc, value)."""
    ordered = sorted(set(masks), key=lambda m: (-bin(m).count("1"), m))
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(kept)


def _subset_catalog(g: Graph, pairs) -> list[int]:
    m = len(pairs)
    full = (1 << m) - 1
    found = []
    for added in range(1 << m):
        if interval_mask(g.n, _with_pairs(g.masks, pairs, added)):
            found.append(full & ~added)
    return found


def obstruction_candidates(n: int, masks, index: dict) -> Optional[list[int]]:
    """Non-edges (as indices) of which every interval supergraph adds one.

    Returns None when the graph is already interval.
    """
    if peo_mask(n, masks) is None:
        cyc = chordless_cycle(n, masks)
        k = len(cyc)
        return sorted(index[min(cyc[i], cyc[j]), max(cyc[i], cyc[j])]
                      for i, j in combinations(range(k), 2)
                      if (j - i) % k not in (1, k - 1))
    best = None
    for u, v, w in _at_triples(n, masks, find_all=True)[:32]:
        p_uv, p_vw, p_wu = at_paths(n, masks, u, v, w)
        cands = set()
        for third, path in ((w, p_uv), (u, p_vw), (v, p_wu)):
            for x in path:
                cands.add(index[min(x, third), max(x, third)])
        if best is None or len(cands) < len(best):
            best = cands
    return None if best is None else sorted(best)


def _branching_catalog(g: Graph, pairs) -> list[int]:
    index = {p: i for i, p in enumerate(pairs)}
    full = (1 << len(pairs)) - 1
    leaves = []
    stack = [(0, 0)]
    while stack:
        added, forbidden = stack.pop()
        masks = _with_pairs(g.masks, pairs, added)
        cands = obstruction_candidates(g.n, masks, index)
        if cands is None:
            leaves.append(added)
            continue
        blocked = forbidden
        children = []
        for c in cands:
            if forbidden >> c & 1:
                continue
            children.append((added | 1 << c, blocked))
            blocked |= 1 << c
        stack.extend(reversed(children))
    return [full & ~a for a in leaves]


def interval_completions(g: Graph, limit: Optional[int] = None,
                         method: str = "branching") -> CompletionCatalog:
    """Catalog of inclusion-maximal excluded sets over all interval supergraphs."""
    pairs = tuple(non_edges(g))
    if len(pairs) > guard_limit(limit):
        raise GuardExceeded(f"{len(pairs)} non-edges exceed the guard of {guard_limit(limit)}")
    if method == "subsets":
        found = _subset_catalog(g, pairs)
    elif method == "branching":
        found = _branching_catalog(g, pairs)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CompletionCatalog(g, pairs, _maximal(found))


def min_cover(universe: int, sets: tuple[int, ...], k: int) -> Optional[list[int]]:
    """Indices of at most ``k`` sets covering ``universe``, or None.

    Branches on the uncovered element contained in the fewest sets.
    """
    if universe == 0:
        return []
    if k == 0:
        return None
    best_elem, best_opts = None, None
    for e in _bits(universe):
        opts = [i for i, s in enumerate(sets) if s >> e & 1]
        if best_opts is None or len(opts) < len(best_opts):
            best_elem, best_opts = e, opts
            if len(opts) <= 1:
                break
    for i in best_opts:
        rest = min_cover(universe & ~sets[i], sets, k - 1)
        if rest is not None:
            return [i, *rest]
    return None


def boxicity_exact(g: Graph, k_max: Optional[int] = None, limit: Optional[int] = None,
                   catalog: Optional[CompletionCatalog] = None) -> int:
    """Exact boxicity by set cover over the completion catalog."""
    cat = catalog if catalog is not None else interval_completions(g, limit)
    universe = (1 << len(cat.pairs)) - 1
    if k_max is None:
        k_max = max(1, g.n // 2)
    for k in range(k_max + 1):
        if min_cover(universe, cat.excluded, k) is not None:
            return k
    raise RuntimeError(f"no cover with at most {k_max} interval supergraphs")


# -- crown graph search -----------------------------------------------------------

@dataclass
class CrownReport:
    side: int
    trials: int
    seed: int
    mode: str
    pool_size: int = 0
    best_coverage: int = 0
    total_non_edges: int = 0
    found: bool = False
    cover: Optional[list[list[list[int]]]] = None
    exhausted: bool = False
    catalog_size: Optional[int] = None
    orbit_representatives: Optional[int] = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "side": self.side, "mode": self.mode, "trials": self.trials, "seed": self.seed,
            "pool_size": self.pool_size, "best_coverage": self.best_coverage,
            "total_non_edges": self.total_non_edges, "found": self.found,
            "none_found": not self.found, "cover": self.cover,
            "exhausted": self.exhausted, "catalog_size": self.catalog_size,
            "orbit_representatives": self.orbit_representatives,
            "box_gt_2_proven": self.mode == "exhaustive" and self.exhausted and not self.found,
            "notes": self.notes,
        }


def random_minimal_completion(g: Graph, pairs, index, rng: random.Random) -> int:
    """Excluded set of a random interval completion.

    The completion is grown by random obstruction repair and then pruned one
    added edge at a time, so no single added edge can be dropped; it need not
    be inclusion-minimal, since interval graphs are not closed under edge
    deletion.
    """
    added = 0
    while True:
        cands = obstruction_candidates(g.n, _with_pairs(g.masks, pairs, added), index)
        if cands is None:
            break
        added |= 1 << rng.choice(cands)
    order = list(_bits(added))
    rng.shuffle(order)
    for c in order:
        trial = added & ~(1 << c)
        if interval_mask(g.n, _with_pairs(g.masks, pairs, trial)):
            added = trial
    return ((1 << len(pairs)) - 1) & ~added


def crown_automorphisms(side: int, pairs) -> list[list[int]]:
    """Automorphisms of the crown graph acting on non-edge indices."""
    index = {p: i for i, p in enumerate(pairs)}
    perms = []
    for sigma in permutations(range(side)):
        for swap in (False, True):
            def img(x, sigma=sigma, swap=swap):
                s, i = divmod(x, side)
                s = 1 - s if swap else s
                return s * side + sigma[i]
            perm = []
            for u, v in pairs:
                a, b = img(u), img(v)
                perm.append(index[min(a, b), max(a, b)])
            perms.append(perm)
    return perms


def _apply(perm, m: int) -> int:
    out = 0
    for i in _bits(m):
        out |= 1 << perm[i]
    return out


def _pool_sample(args) -> int:
    side, seed, i = args
    g = crown_graph(side)
    pairs = tuple(non_edges(g))
    index = {p: k for k, p in enumerate(pairs)}
    return random_minimal_completion(g, pairs, index, random.Random(f"{seed}:pool:{i}"))


def crown_search(side: int, trials: int = 100_000, seed: int = 0,
                 exhaustive: bool = False, pool: int = 256, jobs: int = 1) -> CrownReport:
    """Look for two interval supergraphs of the crown graph covering its non-edges.

    Sampling mode draws ``pool`` random minimal completions (each from its
    own counter-derived seed), then runs ``trials`` random pairings of them.
    Exhaustive mode enumerates every minimal completion and checks every
    pair, with the first member restricted to orbit representatives under
    the crown's automorphism group; finishing without a cover proves
    box > 2.
    """
    g = crown_graph(side)
    pairs = tuple(non_edges(g))
    full = (1 << len(pairs)) - 1
    report = CrownReport(side, trials, seed, "exhaustive" if exhaustive else "sampled",
                         total_non_edges=len(pairs))
    if side < 5:
        report.notes.append("side < 5: below the 10-vertex range of the known bound")

    def record(e1, e2):
        cov = bin(e1 | e2).count("1")
        if cov > report.best_coverage:
            report.best_coverage = cov
        if e1 | e2 == full and not report.found:
            report.found = True
            report.cover = [[list(pairs[i]) for i in _bits(e)] for e in (e1, e2)]

    if exhaustive:
        excluded = _maximal(_branching_catalog(g, pairs))
        report.catalog_size = len(excluded)
        perms = crown_automorphisms(side, pairs)
        reps = {min(_apply(p, e) for p in perms) for e in excluded}
        report.orbit_representatives = len(reps)
        for e1 in sorted(reps):
            need = full & ~e1
            for e2 in excluded:
                record(e1, e2)
                if e2 & need == need:
                    break
            if report.found:
                break
        report.exhausted = True
        report.pool_size = len(excluded)
        return report

    tasks = [(side, seed, i) for i in range(pool)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            samples = list(ex.map(_pool_sample, tasks))
    else:
        samples = [_pool_sample(t) for t in tasks]
    distinct = sorted(set(samples))
    report.pool_size = len(distinct)
    for t in range(trials):
        rng = random.Random(f"{seed}:trial:{t}")
        record(rng.choice(distinct), rng.choice(distinct))
    return report
