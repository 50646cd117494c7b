"""Divides, saddle/region diagrams and Milnor lattices."""

import json

from ._core import (
    Divide,
    DivideError,
    __version__,
    adapted_vectors,
    char_poly_and_order,
    gen_a,
    gen_depth1,
    gen_e6,
    ingest_polyline,
    invariants,
    lattice,
    parse_divide,
    pl_variation,
    report_json,
    seifert_matrix,
    validate,
    write_divide,
)


def report(divide, vertex_order=()):
    """Full pipeline report as a dict."""
    return json.loads(report_json(divide, list(vertex_order)))


__all__ = [
    "Divide",
    "DivideError",
    "__version__",
    "adapted_vectors",
    "char_poly_and_order",
    "gen_a",
    "gen_depth1",
    "gen_e6",
    "ingest_polyline",
    "invariants",
    "lattice",
    "parse_divide",
    "pl_variation",
    "report",
    "report_json",
    "seifert_matrix",
    "validate",
    "write_divide",
]
