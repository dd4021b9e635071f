"""Paradigm-tagged circuit representation with a line-based text DSL.

Grammar (one statement per line, ``#`` comments, blank lines ignored,
LF or CRLF)::

    file          := register_line prep_line* gate_line* measure_line
    register_line := "register" ("qubit" COUNT | "qumode" COUNT "cutoff" COUNT)
    prep_line     := "prepare" "squeeze" WIRE FLOAT
    gate_line     := MNEMONIC WIRE+ FLOAT*
    measure_line  := "measure" ("probabilities" | "sample" COUNT
                     | ("expectation" | "variance")
                       ("number" | "paulix" | "pauliy" | "pauliz") ["product"])

Qubit gates: H X Y Z T, RX theta, P theta, CNOT c t, CP c t theta.
Qumode gates: S w re im, R w phi, D w re im, BS w1 w2 theta phi,
INTERF 0 1 .. m-1 followed by theta_j phi_j for each adjacent pair and one
rotation angle per mode.  Angles are radians; complex parameters are re/im
pairs.  Keywords and mnemonics are case sensitive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import linalg, measure, qubits, qumodes

QUBIT = "qubit"
QUMODE = "qumode"

# mnemonic -> (paradigm, wire count, parameter count); INTERF is special-cased
GATE_TABLE = {
    "H": (QUBIT, 1, 0),
    "X": (QUBIT, 1, 0),
    "Y": (QUBIT, 1, 0),
    "Z": (QUBIT, 1, 0),
    "T": (QUBIT, 1, 0),
    "RX": (QUBIT, 1, 1),
    "P": (QUBIT, 1, 1),
    "CNOT": (QUBIT, 2, 0),
    "CP": (QUBIT, 2, 1),
    "S": (QUMODE, 1, 2),
    "R": (QUMODE, 1, 1),
    "D": (QUMODE, 1, 2),
    "BS": (QUMODE, 2, 2),
    "INTERF": (QUMODE, None, None),
}

MEASURE_METHODS = ("probabilities", "sample", "expectation", "variance")

MAX_SHOTS = 10**8


@dataclass(frozen=True)
class Diagnostic:
    """One validation or parse finding, tied to a source line."""

    line: int
    reason: str

    def __str__(self) -> str:
        return f"line {self.line}: {self.reason}"


class CircuitError(ValueError):
    """Parse or validation failure; ``diagnostics`` lists every finding."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class Register:
    paradigm: str
    wires: int
    cutoff: int | None = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Preparation:
    """Squeezed-vacuum preparation of one mode."""

    wire: int
    z: float
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Instruction:
    mnemonic: str
    targets: tuple[int, ...]
    params: tuple[float, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MeasureDirective:
    method: str
    observable: str | None = None
    shots: int | None = None
    product: bool = False
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Circuit:
    register: Register
    preparations: tuple[Preparation, ...]
    instructions: tuple[Instruction, ...]
    measure: MeasureDirective


def _parse_int(token: str, what: str, line: int, errors: list) -> int | None:
    try:
        return int(token)
    except ValueError:
        errors.append(Diagnostic(line, f"invalid {what} '{token}'"))
        return None


def _parse_float(token: str, what: str, line: int, errors: list) -> float | None:
    try:
        return float(token)
    except ValueError:
        errors.append(Diagnostic(line, f"invalid {what} '{token}'"))
        return None


def _parse_register(tokens, line, errors) -> Register | None:
    if len(tokens) == 3 and tokens[1] == QUBIT:
        wires = _parse_int(tokens[2], "qubit count", line, errors)
        return None if wires is None else Register(QUBIT, wires, line=line)
    if len(tokens) == 5 and tokens[1] == QUMODE and tokens[3] == "cutoff":
        wires = _parse_int(tokens[2], "qumode count", line, errors)
        cutoff = _parse_int(tokens[4], "cutoff", line, errors)
        if wires is None or cutoff is None:
            return None
        return Register(QUMODE, wires, cutoff, line=line)
    errors.append(
        Diagnostic(line, "malformed register declaration (expected 'register qubit N' or 'register qumode M cutoff D')")
    )
    return None


def _parse_measure(tokens, line, errors) -> MeasureDirective | None:
    if len(tokens) < 2:
        errors.append(Diagnostic(line, "measure directive requires a method"))
        return None
    method = tokens[1]
    if method == "probabilities":
        if len(tokens) != 2:
            errors.append(Diagnostic(line, "measure probabilities takes no arguments"))
            return None
        return MeasureDirective("probabilities", line=line)
    if method == "sample":
        if len(tokens) != 3:
            errors.append(Diagnostic(line, "measure sample requires a shot count"))
            return None
        shots = _parse_int(tokens[2], "shot count", line, errors)
        if shots is None:
            return None
        return MeasureDirective("sample", shots=shots, line=line)
    if method in ("expectation", "variance"):
        rest = tokens[2:]
        product = False
        if rest and rest[-1] == "product":
            product = True
            rest = rest[:-1]
        if len(rest) != 1:
            errors.append(Diagnostic(line, f"measure {method} requires an observable"))
            return None
        obs = rest[0]
        if obs not in measure.OBSERVABLE_KINDS:
            errors.append(Diagnostic(line, f"unknown observable '{obs}'"))
            return None
        return MeasureDirective(method, observable=obs, product=product, line=line)
    errors.append(Diagnostic(line, f"unknown measurement method '{method}'"))
    return None


def _interf_arity(register: Register) -> tuple[int, int]:
    m = register.wires
    return m, 3 * m - 2


def _parse_gate(tokens, register: Register, line, errors) -> Instruction | None:
    mnemonic = tokens[0]
    if mnemonic not in GATE_TABLE:
        errors.append(Diagnostic(line, f"unknown gate '{mnemonic}'"))
        return None
    _, n_wires, n_params = GATE_TABLE[mnemonic]
    if mnemonic == "INTERF":
        n_wires, n_params = _interf_arity(register)
    args = tokens[1:]
    if len(args) != n_wires + n_params:
        errors.append(
            Diagnostic(line, f"arity mismatch for {mnemonic}: expected {n_wires} wire(s) and {n_params} parameter(s), got {len(args)} argument(s)")
        )
        return None
    targets = []
    for tok in args[:n_wires]:
        wire = _parse_int(tok, "wire index", line, errors)
        if wire is None:
            return None
        targets.append(wire)
    params = []
    for tok in args[n_wires:]:
        val = _parse_float(tok, "parameter", line, errors)
        if val is None:
            return None
        params.append(val)
    return Instruction(mnemonic, tuple(targets), tuple(params), line=line)


def parse(text: str) -> Circuit:
    """Parse DSL text into a validated Circuit.

    Raises :class:`CircuitError` carrying one line-numbered diagnostic per
    finding; never raises anything else on malformed input.
    """
    if not isinstance(text, str):
        raise TypeError("parse expects a string")
    errors: list[Diagnostic] = []
    register: Register | None = None
    preparations: list[Preparation] = []
    instructions: list[Instruction] = []
    directive: MeasureDirective | None = None
    seen_gate = False
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        tokens = stripped.split()
        head = tokens[0]

        if register is None:
            if head != "register":
                errors.append(Diagnostic(lineno, "missing register declaration"))
                raise CircuitError(errors)
            register = _parse_register(tokens, lineno, errors)
            if register is None:
                raise CircuitError(errors)
            continue

        if head == "register":
            errors.append(Diagnostic(lineno, "duplicate register declaration"))
            continue

        if directive is not None:
            errors.append(Diagnostic(lineno, "statement after measure directive"))
            continue

        if head == "prepare":
            if seen_gate:
                errors.append(Diagnostic(lineno, "preparation must precede gate instructions"))
                continue
            if len(tokens) != 4 or tokens[1] != "squeeze":
                errors.append(Diagnostic(lineno, "malformed preparation (expected 'prepare squeeze WIRE Z')"))
                continue
            wire = _parse_int(tokens[2], "wire index", lineno, errors)
            z = _parse_float(tokens[3], "squeeze parameter", lineno, errors)
            if wire is not None and z is not None:
                preparations.append(Preparation(wire, z, line=lineno))
            continue

        if head == "measure":
            directive = _parse_measure(tokens, lineno, errors)
            continue

        instruction = _parse_gate(tokens, register, lineno, errors)
        if instruction is not None:
            seen_gate = True
            instructions.append(instruction)

    if register is None:
        errors.append(Diagnostic(max(last_line, 1), "missing register declaration"))
        raise CircuitError(errors)
    if directive is None:
        errors.append(Diagnostic(max(last_line, 1), "missing measure directive"))
    if errors:
        raise CircuitError(errors)

    circuit = Circuit(register, tuple(preparations), tuple(instructions), directive)
    problems = validate(circuit)
    if problems:
        raise CircuitError(problems)
    return circuit


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def serialize(circuit: Circuit) -> str:
    """Canonical DSL text; parse(serialize(c)) is structurally equal to c.

    Floats are written with 17 significant digits so parameters round-trip
    bit-identically.
    """
    reg = circuit.register
    if reg.paradigm == QUBIT:
        lines = [f"register qubit {reg.wires}"]
    else:
        lines = [f"register qumode {reg.wires} cutoff {reg.cutoff}"]
    for prep in circuit.preparations:
        lines.append(f"prepare squeeze {prep.wire} {_fmt(prep.z)}")
    for ins in circuit.instructions:
        parts = [ins.mnemonic]
        parts.extend(str(t) for t in ins.targets)
        parts.extend(_fmt(p) for p in ins.params)
        lines.append(" ".join(parts))
    m = circuit.measure
    if m.method == "probabilities":
        lines.append("measure probabilities")
    elif m.method == "sample":
        lines.append(f"measure sample {m.shots}")
    else:
        suffix = " product" if m.product else ""
        lines.append(f"measure {m.method} {m.observable}{suffix}")
    return "\n".join(lines) + "\n"


def validate(circuit: Circuit) -> list[Diagnostic]:
    """Pure semantic checks; returns an empty list when the circuit is runnable."""
    errors: list[Diagnostic] = []
    reg = circuit.register

    if reg.paradigm == QUBIT:
        if not 1 <= reg.wires <= qubits.MAX_QUBITS:
            errors.append(Diagnostic(reg.line, f"qubit register capacity is 1..{qubits.MAX_QUBITS}, got {reg.wires}"))
        if reg.cutoff is not None:
            errors.append(Diagnostic(reg.line, "cutoff is only valid for qumode registers"))
        local_dim = 2
    elif reg.paradigm == QUMODE:
        wires_ok = 1 <= reg.wires <= qumodes.MAX_MODES
        if not wires_ok:
            errors.append(Diagnostic(reg.line, f"qumode register capacity is 1..{qumodes.MAX_MODES}, got {reg.wires}"))
        if reg.cutoff is None:
            errors.append(Diagnostic(reg.line, "qumode register requires a cutoff"))
            local_dim = 2
        else:
            if not 2 <= reg.cutoff <= qumodes.MAX_CUTOFF:
                errors.append(Diagnostic(reg.line, f"cutoff must be in 2..{qumodes.MAX_CUTOFF}, got {reg.cutoff}"))
            elif wires_ok and reg.cutoff**reg.wires > qumodes.MAX_BASIS_DIM:
                # only exponentiate once both factors are known to be small
                errors.append(
                    Diagnostic(reg.line, f"basis dimension {reg.cutoff}^{reg.wires} exceeds the {qumodes.MAX_BASIS_DIM} capacity")
                )
            local_dim = reg.cutoff
    else:
        errors.append(Diagnostic(reg.line, f"unknown paradigm '{reg.paradigm}'"))
        return errors
    if errors:
        return errors

    seen_prep_wires = set()
    for prep in circuit.preparations:
        if reg.paradigm != QUMODE:
            errors.append(Diagnostic(prep.line, "preparation requires a qumode register"))
            continue
        if not 0 <= prep.wire < reg.wires:
            errors.append(Diagnostic(prep.line, f"wire {prep.wire} out of range for {reg.wires} wire(s)"))
            continue
        if prep.wire in seen_prep_wires:
            errors.append(Diagnostic(prep.line, f"duplicate preparation for wire {prep.wire}"))
            continue
        if not math.isfinite(prep.z):
            errors.append(Diagnostic(prep.line, "non-finite squeeze parameter"))
            continue
        seen_prep_wires.add(prep.wire)

    for ins in circuit.instructions:
        entry = GATE_TABLE.get(ins.mnemonic)
        if entry is None:
            errors.append(Diagnostic(ins.line, f"unknown gate '{ins.mnemonic}'"))
            continue
        paradigm, n_wires, n_params = entry
        if paradigm != reg.paradigm:
            errors.append(Diagnostic(ins.line, f"gate '{ins.mnemonic}' requires a {paradigm} register"))
            continue
        if ins.mnemonic == "INTERF":
            n_wires, n_params = _interf_arity(reg)
            if ins.targets != tuple(range(reg.wires)):
                errors.append(Diagnostic(ins.line, "INTERF must list all wires in ascending order"))
                continue
        if len(ins.targets) != n_wires or len(ins.params) != n_params:
            errors.append(
                Diagnostic(ins.line, f"arity mismatch for {ins.mnemonic}: expected {n_wires} wire(s) and {n_params} parameter(s)")
            )
            continue
        if len(set(ins.targets)) != len(ins.targets):
            errors.append(Diagnostic(ins.line, f"duplicate target wires {ins.targets}"))
            continue
        bad = [w for w in ins.targets if not 0 <= w < reg.wires]
        if bad:
            errors.append(Diagnostic(ins.line, f"wire {bad[0]} out of range for {reg.wires} wire(s)"))
            continue
        if any(not math.isfinite(p) for p in ins.params):
            errors.append(Diagnostic(ins.line, f"non-finite parameter for {ins.mnemonic}"))
            continue

    m = circuit.measure
    if m.method not in MEASURE_METHODS:
        errors.append(Diagnostic(m.line, f"unknown measurement method '{m.method}'"))
    elif m.method == "sample":
        if m.shots is None or m.shots < 1:
            errors.append(Diagnostic(m.line, "sample requires shots >= 1"))
        elif m.shots > MAX_SHOTS:
            errors.append(Diagnostic(m.line, f"shot count exceeds the {MAX_SHOTS} capacity"))
    elif m.method in ("expectation", "variance"):
        if m.observable not in measure.OBSERVABLE_KINDS:
            errors.append(Diagnostic(m.line, f"unknown observable '{m.observable}'"))
        elif m.observable != "number" and local_dim != 2:
            errors.append(
                Diagnostic(m.line, f"observable '{m.observable}' requires local dimension 2, register has {local_dim}")
            )
    return errors


def _gate_matrix(ins: Instruction, reg: Register, cache: dict) -> np.ndarray:
    key = (ins.mnemonic, ins.params)
    cached = cache.get(key)
    if cached is not None:
        return cached
    if reg.paradigm == QUBIT:
        if ins.mnemonic == "CP":
            matrix = qubits.controlled_unitary(qubits.phase_gate(ins.params[0]))
        else:
            matrix = qubits.standard_gate(ins.mnemonic, ins.params).matrix
    else:
        d = reg.cutoff
        if ins.mnemonic == "S":
            matrix = qumodes.squeezer(complex(ins.params[0], ins.params[1]), d).matrix
        elif ins.mnemonic == "R":
            matrix = qumodes.rotation(ins.params[0], d).matrix
        elif ins.mnemonic == "D":
            matrix = qumodes.displacement(complex(ins.params[0], ins.params[1]), d).matrix
        elif ins.mnemonic == "BS":
            matrix = qumodes.beamsplitter(ins.params[0], ins.params[1], d).matrix
        else:  # INTERF
            m = reg.wires
            pairs = [(ins.params[2 * j], ins.params[2 * j + 1]) for j in range(m - 1)]
            rots = list(ins.params[2 * (m - 1):])
            matrix = qumodes.interferometer(pairs, rots, m, d)
    cache[key] = matrix
    return matrix


def _initial_state(circuit: Circuit) -> np.ndarray:
    reg = circuit.register
    if reg.paradigm == QUBIT:
        return qubits.zero_register(reg.wires).state.copy()
    prep_by_wire = {p.wire: p.z for p in circuit.preparations}
    parts = []
    for wire in range(reg.wires):
        if wire in prep_by_wire:
            parts.append(qumodes.prepare_squeezed_vacuum(prep_by_wire[wire], reg.cutoff))
        else:
            vac = np.zeros(reg.cutoff, dtype=linalg.CDTYPE)
            vac[0] = 1.0
            parts.append(vac)
    return linalg.multi_kron(*parts).ravel()


def execute(circuit: Circuit, seed: int) -> measure.MeasurementResult:
    """Run the circuit: prepare, apply instructions in order, measure.

    Deterministic given (circuit, seed).  Raises :class:`CircuitError` when
    validation fails.
    """
    problems = validate(circuit)
    if problems:
        raise CircuitError(problems)
    reg = circuit.register
    seed = int(seed)
    if reg.paradigm == QUBIT:
        dims = (2,) * reg.wires
        labels = measure.bit_labels(reg.wires)
    else:
        dims = (reg.cutoff,) * reg.wires
        labels = measure.occupation_labels(reg.wires, reg.cutoff)

    state = _initial_state(circuit)
    cache: dict = {}
    for ins in circuit.instructions:
        matrix = _gate_matrix(ins, reg, cache)
        if ins.mnemonic == "INTERF":
            state = matrix @ state
        else:
            state = linalg.apply_to_wires(state, matrix, ins.targets, dims)

    directive = circuit.measure
    if directive.method == "probabilities":
        probs = measure.probabilities(state)
        return measure.MeasurementResult(
            "probabilities", tuple(labels), values=tuple(float(p) for p in probs), seed=seed
        )
    if directive.method == "sample":
        counts = measure.sample(state, directive.shots, seed, labels)
        return measure.MeasurementResult(
            "counts", tuple(counts.keys()), counts=counts, shots=directive.shots, seed=seed
        )
    local_dim = 2 if reg.paradigm == QUBIT else reg.cutoff
    obs = measure.observable(directive.observable, local_dim)
    if directive.method == "expectation":
        values = measure.expectation_all(state, obs, dims)
    else:
        values = measure.variance_all(state, obs, dims)
    if directive.product:
        out = 1.0
        for v in values:
            out *= v
        return measure.MeasurementResult(directive.method, ("product",), values=(out,), seed=seed)
    wire_labels = tuple(str(w) for w in range(reg.wires))
    return measure.MeasurementResult(
        directive.method, wire_labels, values=tuple(float(v) for v in values), seed=seed
    )


def with_shots(circuit: Circuit, shots: int) -> Circuit:
    """Copy of the circuit with the sample shot count overridden."""
    if circuit.measure.method != "sample":
        raise ValueError("shot override applies only to 'measure sample' circuits")
    return replace(circuit, measure=replace(circuit.measure, shots=int(shots)))
