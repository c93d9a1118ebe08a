"""Finite skew lattices and the set-theoretic solutions they induce."""

from ._core import (
    SkewLattice,
    SkewlatError,
    braid_check,
    chain,
    classify,
    d_classes,
    direct_product,
    dual,
    enumerate,
    fixed,
    holds,
    isomorphic,
    map_kinds,
    nc5_free,
    opposite,
    parse_algebra,
    read_algebra,
    rectangular,
    run_theorems,
    solution_report,
    structure_report,
    to_text,
    violations,
)

__all__ = [
    "SkewLattice",
    "SkewlatError",
    "braid_check",
    "chain",
    "classify",
    "d_classes",
    "direct_product",
    "dual",
    "enumerate",
    "fixed",
    "holds",
    "isomorphic",
    "map_kinds",
    "nc5_free",
    "opposite",
    "parse_algebra",
    "read_algebra",
    "rectangular",
    "run_theorems",
    "solution_report",
    "structure_report",
    "to_text",
    "violations",
]
