"""Coloured Jordanian R-matrix, Hopf and RTT checks with exact arithmetic."""

import json

from ._jordanian import JordanianError, coloured_r, emit, emit_targets, simplify, suite_names
from ._jordanian import run_suite_json as _run_suite_json

__all__ = [
    "JordanianError",
    "coloured_r",
    "emit",
    "emit_targets",
    "run_suite",
    "simplify",
    "suite_names",
]


def run_suite(name, lambda_="", mu="", nu="", eta="", at="", max_sector_dim=0):
    """Run a verification suite and return its report as a list of dicts."""
    return json.loads(_run_suite_json(name, lambda_, mu, nu, eta, at, max_sector_dim))
