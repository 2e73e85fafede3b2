"""Graph and complex file formats.

Graph file: JSON object {"vertices": [int...], "edges": [[int, int]...]}.
Complex file: JSON object {"facets": [[int...]...]}.
Parse failures raise ``InputError`` carrying line information.
"""

from __future__ import annotations

import json

from .simplicial import Graph, SimplicialComplex, complex_from_facets


class InputError(Exception):
    """Malformed input file or value; maps to CLI exit code 2."""


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    return doc


def load_graph(path: str) -> Graph:
    doc = _load_json(path)
    if "vertices" not in doc or "edges" not in doc:
        raise InputError(f"{path}: graph file needs 'vertices' and 'edges'")
    try:
        return Graph(doc["vertices"], doc["edges"])
    except (ValueError, TypeError, IndexError) as exc:
        raise InputError(f"{path}: {exc}")


def load_complex(path: str) -> SimplicialComplex:
    doc = _load_json(path)
    if "facets" not in doc:
        raise InputError(f"{path}: complex file needs 'facets'")
    try:
        return complex_from_facets(doc["facets"])
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}")


def graph_to_json(g: Graph) -> str:
    return json.dumps(
        {"vertices": list(g.vertices), "edges": sorted([a, b] for a, b in g.edges)},
        separators=(",", ":"),
    )


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(graph_to_json(g) + "\n")
