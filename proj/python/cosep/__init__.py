"""Python bindings for the cosep library."""

import json

from ._core import DEFAULT_BUDGET, DEFAULT_MAX_DEGREE, Coring, CosepError, fnv1a64
from ._core import run as _run

__all__ = ["Coring", "CosepError", "run", "fnv1a64", "DEFAULT_BUDGET", "DEFAULT_MAX_DEGREE"]


def run(command, text, n="regular", m="regular", max_degree=DEFAULT_MAX_DEGREE, budget=DEFAULT_BUDGET):
    """Run a CLI command on definition text; returns (exit_code, report dict)."""
    code, report = _run(command, text, n, m, max_degree, budget)
    return code, json.loads(report)
