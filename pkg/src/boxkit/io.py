"""Graph, witness, realization and report serialization.

JSON output is compact with sorted keys so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .graph import Graph, GraphError, new_graph
from .realization import BoxRepresentation, IntervalRealization
from .witness import SplitIntervalFamily, WitnessFamily


class ParseError(ValueError):
    pass


class UnsupportedFormat(ValueError):
    pass


def _text(data: Union[bytes, str]) -> str:
    return data.decode("utf-8") if isinstance(data, bytes) else data


def dumps(obj: Any) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode()


# -- graphs ----------------------------------------------------------------------

def _parse_edgelist(text: str) -> Graph:
    lines = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list")
    no, head = lines[0]
    try:
        n, m = (int(t) for t in head.split())
    except ValueError:
        raise ParseError(f"line {no}: expected 'n m', got {head!r}") from None
    body = lines[1:]
    edges = []
    for no, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {no}: non-integer vertex in {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {no}: vertex out of range in {ln!r} (n={n})")
        if u == v:
            raise ParseError(f"line {no}: self-loop {ln!r}")
        edges.append((u, v))
    # line-level errors first; they are the more specific diagnosis
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    return new_graph(n, edges)


def _parse_json_graph(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError("graph JSON needs keys 'n' and 'edges'")
    try:
        return new_graph(int(doc["n"]), [tuple(e) for e in doc["edges"]])
    except (GraphError, TypeError, ValueError) as e:
        raise ParseError(str(e)) from None


def parse_graph(data: Union[bytes, str], fmt: str = "auto") -> Graph:
    text = _text(data)
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "edgelist"
    if fmt == "json":
        return _parse_json_graph(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise UnsupportedFormat(f"unknown graph format {fmt!r}")


def graph_doc(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_to_edgelist(g: Graph) -> bytes:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return ("\n".join(lines) + "\n").encode()


def graph_to_dot(g: Graph, name: str = "G") -> bytes:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


# -- witnesses, models, boxes ----------------------------------------------------------

def witness_doc(w: WitnessFamily) -> dict:
    return {
        "classes": w.coloring.as_lists(),
        "pivots": list(w.pivots),
        "x_sets": [[sorted(x) for x in row] for row in w.x_sets],
    }


def parse_witness(data: Union[bytes, str]) -> WitnessFamily:
    try:
        doc = json.loads(_text(data))
        return WitnessFamily.of(doc["classes"], doc["pivots"], doc["x_sets"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad witness document: {e}") from None


def realization_doc(r: IntervalRealization) -> dict:
    return {"intervals": {str(v): list(iv) for v, iv in enumerate(r.intervals)}}


def parse_realization(data: Union[bytes, str]) -> IntervalRealization:
    doc = json.loads(_text(data))
    iv = doc["intervals"]
    return IntervalRealization(tuple(tuple(iv[str(v)]) for v in range(len(iv))))


def boxes_doc(b: BoxRepresentation) -> dict:
    return {"k": b.k, "boxes": {str(v): [list(iv) for iv in box] for v, box in enumerate(b.boxes)}}


def parse_boxes(data: Union[bytes, str]) -> BoxRepresentation:
    doc = json.loads(_text(data))
    bx = doc["boxes"]
    return BoxRepresentation(int(doc["k"]),
                             tuple(tuple(tuple(iv) for iv in bx[str(v)]) for v in range(len(bx))))


def family_doc(g: Graph, fam: SplitIntervalFamily) -> dict:
    from .witness import edge_intersection

    common = edge_intersection(g.n, fam.members)
    return {
        "members": [
            {
                "graph": graph_doc(h),
                "independent_set": sorted(p.independent_set),
                "clique": sorted(p.clique),
                "nested_premise": ok,
            }
            for h, p, ok in zip(fam.members, fam.partitions, fam.premise)
        ],
        "certificate": {
            "dimension": len(fam.members),
            "intersection_equals_graph": common == set(g.edges()),
            "non_edges_excluded_by": {
                f"{u}-{v}": [i for i, h in enumerate(fam.members) if not h.has_edge(u, v)]
                for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)
            },
        },
    }


def emit(artifact: Any, fmt: str = "json") -> bytes:
    """Serialize an artifact; ``svg`` is only available for 1- and 2-dimensional boxes."""
    if isinstance(artifact, Graph):
        if fmt == "json":
            return dumps(graph_doc(artifact))
        if fmt == "edgelist":
            return graph_to_edgelist(artifact)
        if fmt == "dot":
            return graph_to_dot(artifact)
    elif isinstance(artifact, WitnessFamily):
        if fmt == "json":
            return dumps(witness_doc(artifact))
    elif isinstance(artifact, IntervalRealization):
        if fmt == "json":
            return dumps(realization_doc(artifact))
    elif isinstance(artifact, BoxRepresentation):
        if fmt == "json":
            return dumps(boxes_doc(artifact))
        if fmt == "svg":
            if artifact.k not in (1, 2):
                raise UnsupportedFormat(f"svg needs dimension 1 or 2, got {artifact.k}")
            from .plotting import boxes_svg
            return boxes_svg(artifact)
    elif isinstance(artifact, dict):
        if fmt == "json":
            return dumps(artifact)
    raise UnsupportedFormat(f"cannot emit {type(artifact).__name__} as {fmt!r}")
