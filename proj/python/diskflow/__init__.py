"""Exact classification of flows on the disk with one boundary singular point."""

import json as _json

from ._diskflow import (
    CodeError,
    ModelError,
    are_equivalent,
    canonicalize,
    cell_config_count,
    count_flows,
    encode_json,
    enumerate_flows,
    is_realizable,
    plane_trees,
    render_diagram,
    render_tree,
    table_rows,
    validate,
)
from ._diskflow import decode_json as _decode_json
from ._diskflow import oracle_json as _oracle_json


def decode(code):
    """Distinguishing graph of ``code`` as a JSON-compatible dict."""
    return _json.loads(_decode_json(code))


def encode(graph):
    """Canonical code of a graph given as a dict or a JSON string."""
    if not isinstance(graph, str):
        graph = _json.dumps(graph)
    return encode_json(graph)


def oracle(n, extended=False):
    """Brute-force discrepancy report for ``n`` separatrices."""
    return _json.loads(_oracle_json(n, extended))


__all__ = [
    "CodeError",
    "ModelError",
    "are_equivalent",
    "canonicalize",
    "cell_config_count",
    "count_flows",
    "decode",
    "encode",
    "enumerate_flows",
    "is_realizable",
    "oracle",
    "plane_trees",
    "render_diagram",
    "render_tree",
    "table_rows",
    "validate",
]
