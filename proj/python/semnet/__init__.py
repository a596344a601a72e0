"""Structural analysis of semantic networks (Python bindings)."""

import json as _json

from ._core import (  # noqa: F401
    CalibrationError,
    Graph,
    UbcmError,
    UsageError,
    annd,
    calibrate,
    clustering,
    coefficients,
    degree_density,
    estimate_tail,
    estimate_tail_graph,
    extract_lcc,
    fit_ubcm,
    lcc_fraction,
    read_edge_list,
    rewire,
    write_edge_list,
)
from ._core import run as _run

__version__ = "0.1.0"


def run(command, config):
    """Run ingest/analyze/calibrate/inflection with a config dict; returns the exit code."""
    return _run(command, _json.dumps(config))
