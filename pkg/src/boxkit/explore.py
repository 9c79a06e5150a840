"""Parameter sweep over circulant graphs G(a, b).

For each (a, b) the sweep records which certificate of box <= chi it can
produce: an explicit construction, a neighbourhood-chain witness, the cycle
shortcut, or the exact oracle.  Rows where none applies are marked ``open``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .circulant import coloring_41, coloring_42, gen_circulant, witness_41, witness_42
from .coloring import chromatic_number
from .graph import is_cycle_graph, non_edges
from .oracle import boxicity_exact, guard_limit
from .witness import from_neighborhoods, validate_witness

COLUMNS = ["a", "b", "n", "r", "lower_bound", "chi", "construction", "construction_classes",
           "construction_valid", "neighborhoods", "cycle", "box_exact", "status"]


def explore_one(a: int, b: int, chi_max: int = 15, oracle_guard: Optional[int] = None) -> dict:
    g = gen_circulant(a, b)
    n, r = divmod(a, b)
    lower = -(-a // b)
    row = {"a": a, "b": b, "n": n, "r": r, "lower_bound": lower, "chi": None,
           "construction": "none", "construction_classes": None, "construction_valid": None,
           "neighborhoods": None, "cycle": is_cycle_graph(g), "box_exact": None}
    coloring = None
    witness = None
    if r == 0 and n >= 2:
        row["construction"] = "runs"
        coloring, witness = coloring_41(n, b), witness_41(n, b)
    elif r > 0 and n >= 2 and b >= 2 and n >= b - r - 1:
        row["construction"] = "short_runs"
        coloring, witness = coloring_42(n, b, r), witness_42(n, b, r)
    if witness is not None:
        row["construction_classes"] = len(coloring)
        row["construction_valid"] = validate_witness(g, witness).ok
    chi = exact_col = None
    if a <= chi_max:
        chi, exact_col = chromatic_number(g)
        row["chi"] = chi
    cands = [c for c in (coloring, exact_col) if c is not None]
    row["neighborhoods"] = any(from_neighborhoods(g, c) is not None and len(c) <= (chi or lower)
                               for c in cands) if cands else None
    if len(non_edges(g)) <= guard_limit(oracle_guard):
        row["box_exact"] = boxicity_exact(g, limit=guard_limit(oracle_guard))

    if row["construction_valid"] and row["construction_classes"] == lower:
        status = "construction"
    elif row["neighborhoods"]:
        status = "neighborhoods"
    elif row["cycle"]:
        # a cycle has boxicity at most 2 and needs at least 2 colours
        status = "cycle"
    elif row["box_exact"] is not None and row["box_exact"] <= (chi or lower):
        status = "oracle"
    else:
        status = "open"
    row["status"] = status
    return row


def _explore_star(args):
    return explore_one(*args)


def explore(a_min: int, a_max: int, chi_max: int = 15, oracle_guard: Optional[int] = None,
            jobs: int = 1) -> list[dict]:
    """Rows for every 2 <= 2b <= a in [a_min, a_max], ordered by (a, b)."""
    tasks = [(a, b, chi_max, oracle_guard) for a in range(max(a_min, 2), a_max + 1)
             for b in range(1, a // 2 + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(_explore_star, tasks))
    return [explore_one(*t) for t in tasks]
