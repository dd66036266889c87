"""Decide and witness direct-sum decompositions of Leavitt path algebras.

Thin wrapper over the compiled ``_core`` extension.
"""

import json

from ._core import (
    REPORT_SCHEMA,
    Algebra,
    ContractError,
    Element,
    Graph,
    InputError,
    InvariantViolation,
    ResourceError,
    __version__,
    breaking_vertices,
    compatible_split,
    decompose,
    hasse_dot,
    hereditary_saturated_sets,
    is_clopen,
    naive_check,
    pairs,
    selfcheck,
)
from ._core import analyze_json as _analyze_json


def analyze(graph):
    """Full analysis report as a dict (schema ``REPORT_SCHEMA``)."""
    return json.loads(_analyze_json(graph))


__all__ = [
    "REPORT_SCHEMA",
    "Algebra",
    "ContractError",
    "Element",
    "Graph",
    "InputError",
    "InvariantViolation",
    "ResourceError",
    "__version__",
    "analyze",
    "breaking_vertices",
    "compatible_split",
    "decompose",
    "hasse_dot",
    "hereditary_saturated_sets",
    "is_clopen",
    "naive_check",
    "pairs",
    "selfcheck",
]
