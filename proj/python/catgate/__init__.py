"""Nonadiabatic geometric gates on Kerr-cat qubits.

Time is in microseconds and every frequency or rate in rad/us;
``two_pi_mhz(12.5)`` converts a 2pi x MHz figure.
"""

import json
import os

from ._core import (
    ConfigError,
    DegenerateFrameError,
    DimensionMismatchError,
    DomainError,
    Error,
    GateModel,
    InvalidSpaceError,
    NoSolutionError,
    NumericError,
    add_awgn,
    add_pink,
    circuit_map,
    effective_drive,
    gate_path,
    geometric_phase,
    ideal_unitary,
    kerr_cat_gap,
    noise_ensemble,
    property_suite,
    read_schedule_csv,
    scenario_ids,
    simulate_cnot,
    simulate_decoherence,
    simulate_gate,
    solve_lambda,
    squeeze_pipeline,
    squeeze_time,
    synthesize,
    two_pi_mhz,
    write_schedule_csv,
)
from . import _core

__version__ = "0.1.0"


def scenario_defaults(scenario_id):
    return json.loads(_core._scenario_defaults(scenario_id))


def run_scenario(scenario_id, output_dir, params=None, threads=0):
    """Run a canned scenario; returns the parsed summary.json."""
    summary = _core._run_scenario(scenario_id, json.dumps(params or {}), os.fspath(output_dir), threads)
    return json.loads(summary)
