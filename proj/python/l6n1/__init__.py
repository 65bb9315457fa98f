"""Reduce, resolve and verify 3-component link shadows against L6n1."""

from ._l6n1 import (
    L6n1Error,
    check,
    enumerate,
    invariants,
    p1,
    p2,
    random_projection,
    reduce,
    reference_diagram,
    resolve,
    verify,
)

__all__ = [
    "L6n1Error",
    "check",
    "enumerate",
    "invariants",
    "p1",
    "p2",
    "random_projection",
    "reduce",
    "reference_diagram",
    "resolve",
    "verify",
]
