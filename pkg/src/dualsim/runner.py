"""Shared orchestration for the CLI and the HTTP service.

Turns circuit text into the result payload::

    {paradigm, wires, cutoff?, method, shots?, seed, labels[], values[]}

(cutoff only for qumode registers, shots only for sampled read-out), and
renders payloads as JSON or CSV.  Also hosts the single-mode state specs and
grid evaluation behind the Wigner export.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from . import circuit as circuit_mod
from . import qumodes
from .wigner import wigner_grid

DEFAULT_SEED = 42


def run_circuit_text(text: str, seed: int = DEFAULT_SEED, shots: int | None = None):
    """Parse, validate, execute; returns (payload, warnings).

    ``shots`` overrides the sample count for 'measure sample' circuits and is
    ignored with a warning otherwise.  Raises :class:`~dualsim.circuit.CircuitError`
    on parse or validation failure.
    """
    parsed = circuit_mod.parse(text)
    warnings: list[str] = []
    if shots is not None:
        if parsed.measure.method == "sample":
            parsed = circuit_mod.with_shots(parsed, shots)
            problems = circuit_mod.validate(parsed)
            if problems:
                raise circuit_mod.CircuitError(problems)
        else:
            warnings.append(f"--shots ignored for 'measure {parsed.measure.method}'")
    result = circuit_mod.execute(parsed, seed)

    payload: dict = {"paradigm": parsed.register.paradigm, "wires": parsed.register.wires}
    if parsed.register.paradigm == circuit_mod.QUMODE:
        payload["cutoff"] = parsed.register.cutoff
    payload["method"] = result.method
    if result.shots is not None:
        payload["shots"] = result.shots
    payload["seed"] = int(seed)
    payload["labels"] = list(result.labels)
    if result.counts is not None:
        payload["values"] = [result.counts[label] for label in result.labels]
    else:
        payload["values"] = list(result.values)
    return payload, warnings


def check_circuit_text(text: str) -> list[circuit_mod.Diagnostic]:
    """Parse and validate only; empty list means ok."""
    try:
        circuit_mod.parse(text)
    except circuit_mod.CircuitError as err:
        return list(err.diagnostics)
    return []


def payload_to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def payload_to_csv(payload: dict) -> str:
    # qumode labels like "(0,1)" contain commas, so go through the csv writer
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["label", "count" if payload["method"] == "counts" else "value"])
    for label, value in zip(payload["labels"], payload["values"]):
        rendered = str(value) if isinstance(value, int) else format(float(value), ".17g")
        writer.writerow([label, rendered])
    return buffer.getvalue()


def parse_state_spec(tokens) -> np.ndarray:
    """Single-mode state from a spec: 'fock N CUTOFF' or 'squeeze Z CUTOFF'."""
    tokens = list(tokens)
    if len(tokens) != 3:
        raise ValueError("state spec must be 'fock N CUTOFF' or 'squeeze Z CUTOFF'")
    kind = tokens[0]
    if kind == "fock":
        try:
            n = int(tokens[1])
            cutoff = int(tokens[2])
        except ValueError as err:
            raise ValueError(f"invalid fock spec: {err}") from None
        if cutoff < 2 or cutoff > qumodes.MAX_CUTOFF:
            raise ValueError(f"cutoff must be in 2..{qumodes.MAX_CUTOFF}, got {cutoff}")
        if not 0 <= n < cutoff:
            raise ValueError(f"fock level must be in 0..{cutoff - 1}, got {n}")
        state = np.zeros(cutoff, dtype=complex)
        state[n] = 1.0
        return state
    if kind == "squeeze":
        try:
            z = float(tokens[1])
            cutoff = int(tokens[2])
        except ValueError as err:
            raise ValueError(f"invalid squeeze spec: {err}") from None
        if cutoff < 2 or cutoff > qumodes.MAX_CUTOFF:
            raise ValueError(f"cutoff must be in 2..{qumodes.MAX_CUTOFF}, got {cutoff}")
        return qumodes.prepare_squeezed_vacuum(z, cutoff)
    raise ValueError(f"unknown state spec '{kind}' (expected 'fock' or 'squeeze')")


def wigner_rows(state, xmin: float, xmax: float, pmin: float, pmax: float, resolution: int):
    """(x, p, w) rows over the grid, x-major; resolution 1 collapses to the center."""
    resolution = int(resolution)
    if resolution < 1:
        raise ValueError(f"resolution must be >= 1, got {resolution}")
    if xmax < xmin or pmax < pmin:
        raise ValueError("bad grid bounds: require xmin <= xmax and pmin <= pmax")
    if resolution == 1:
        xs = np.array([(xmin + xmax) / 2.0])
        ps = np.array([(pmin + pmax) / 2.0])
    else:
        xs = np.linspace(xmin, xmax, resolution)
        ps = np.linspace(pmin, pmax, resolution)
    grid = wigner_grid(state, xs, ps)
    rows = []
    for i, x in enumerate(xs):
        for j, p in enumerate(ps):
            rows.append((float(x), float(p), float(grid[i, j])))
    return rows


def wigner_rows_to_csv(rows) -> str:
    lines = ["x,p,w"]
    for x, p, w in rows:
        lines.append(f"{format(x, '.17g')},{format(p, '.17g')},{format(w, '.17g')}")
    return "\n".join(lines) + "\n"
