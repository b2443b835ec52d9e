"""Plane weighted trees: exact counts, explicit enumeration, and the
polynomial systems they solve.

The heavy lifting happens in the C++ extension ``wtrees._core``; this wrapper
just turns its decimal strings back into ints and its JSON text back into
dicts.
"""

import json as _json

from ._core import (  # noqa: F401
    census_json as _census_json,
    count_str as _count_str,
    enumerate_json as _enumerate_json,
    qpoly_text,
    solve_json as _solve_json,
    sweep_json as _sweep_json,
    system_json as _system_json,
    system_text,
)

DEFAULT_BUDGET = 100_000_000

__all__ = [
    "DEFAULT_BUDGET",
    "census",
    "count",
    "enumerate_trees",
    "qpoly_text",
    "solve",
    "sweep",
    "system",
    "system_text",
]


def count(type_literal, budget=DEFAULT_BUDGET, jobs=0):
    """Number of isotopy classes of plane weighted trees of this type.

    ``type_literal`` looks like ``"1,2,4|2,5"`` (white weights | black
    weights, fractions such as ``1/2`` allowed).
    """
    return int(_count_str(type_literal, budget, jobs))


def enumerate_trees(type_literal, budget=DEFAULT_BUDGET, jobs=0):
    """Every isotopy class, as dicts with vertices, edges and rotation."""
    return _json.loads(_enumerate_json(type_literal, budget, jobs))


def census(type_literal, budget=DEFAULT_BUDGET, jobs=0):
    """Class count broken down by automorphism (rotation) order."""
    doc = _json.loads(_census_json(type_literal, budget, jobs))
    doc["byOrder"] = {int(k): v for k, v in doc["byOrder"].items()}
    return doc


def system(type_literal):
    """The attached polynomial system as a dict (see also system_text)."""
    return _json.loads(_system_json(type_literal))


def solve(type_literal, starts=500, tol=1e-10, seed=0):
    """Numerically solve the attached system; points are [re, im] pairs."""
    return _json.loads(_solve_json(type_literal, starts, tol, seed))


def sweep(max_weight, budget=DEFAULT_BUDGET, jobs=0):
    """Cross-check formula counts against enumeration for all small types."""
    doc = _json.loads(_sweep_json(max_weight, budget, jobs))
    for row in doc["rows"]:
        row["formula"] = int(row["formula"])
    return doc
