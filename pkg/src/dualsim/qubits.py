"""Discrete-variable statevector engine.

Gate matrices follow the usual conventions: H, X, Y, Z and P(theta) as
commonly printed, RX(theta) with the imaginary off-diagonal entries (the
real-valued variant sometimes seen in print is not unitary), T = P(pi/4).

Wire 0 is the leftmost tensor factor / most significant bit of the basis
label, so basis labels read left to right in wire order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .linalg import CDTYPE

#: dense statevectors only; 2^20 amplitudes is the desk-scale ceiling
MAX_QUBITS = 20


def hadamard() -> np.ndarray:
    return np.array([[1, 1], [1, -1]], dtype=CDTYPE) / math.sqrt(2.0)


def pauli_x() -> np.ndarray:
    return np.array([[0, 1], [1, 0]], dtype=CDTYPE)


def pauli_y() -> np.ndarray:
    return np.array([[0, -1j], [1j, 0]], dtype=CDTYPE)


def pauli_z() -> np.ndarray:
    return np.array([[1, 0], [0, -1]], dtype=CDTYPE)


def phase_gate(theta: float) -> np.ndarray:
    return np.array([[1, 0], [0, np.exp(1j * theta)]], dtype=CDTYPE)


def t_gate() -> np.ndarray:
    return phase_gate(math.pi / 4)


def rx_gate(theta: float) -> np.ndarray:
    c = math.cos(theta / 2)
    s = math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=CDTYPE)


def cnot_gate() -> np.ndarray:
    return np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=CDTYPE
    )


@dataclass(frozen=True)
class QubitGate:
    """Named gate with bound parameters and its unitary matrix."""

    name: str
    params: tuple
    matrix: np.ndarray


# name -> (parameter count, constructor)
_GATES = {
    "H": (0, hadamard),
    "X": (0, pauli_x),
    "Y": (0, pauli_y),
    "Z": (0, pauli_z),
    "T": (0, t_gate),
    "RX": (1, rx_gate),
    "P": (1, phase_gate),
    "CNOT": (0, cnot_gate),
}


def standard_gate(name: str, params=()) -> QubitGate:
    """Build a named standard gate; raises on unknown names or wrong arity."""
    if name not in _GATES:
        raise ValueError(f"unknown gate '{name}'")
    arity, ctor = _GATES[name]
    params = tuple(float(p) for p in params)
    if len(params) != arity:
        raise ValueError(f"gate '{name}' takes {arity} parameter(s), got {len(params)}")
    return QubitGate(name, params, ctor(*params))


def controlled_unitary(u) -> np.ndarray:
    """4x4 controlled-U: |0><0| (x) I + |1><1| (x) U, control on wire 0.

    Rejects non-unitary input, reporting the unitarity defect.
    """
    u = np.asarray(u, dtype=CDTYPE)
    if u.shape != (2, 2):
        raise ValueError(f"controlled_unitary expects a 2x2 matrix, got shape {u.shape}")
    defect = linalg.unitarity_defect(u)
    if defect >= linalg.UNITARY_TOL:
        raise ValueError(f"controlled_unitary requires a unitary matrix (defect {defect:.3e})")
    out = np.eye(4, dtype=CDTYPE)
    out[2:, 2:] = u
    return out


def embed_gate(gate, targets, n_qubits: int) -> np.ndarray:
    """Dense 2^n x 2^n operator acting as the gate on ``targets``, identity elsewhere."""
    matrix = gate.matrix if isinstance(gate, QubitGate) else gate
    return linalg.embed_operator(matrix, targets, (2,) * int(n_qubits))


@dataclass(frozen=True)
class QubitRegister:
    """Immutable n-qubit register holding a normalized statevector."""

    n_qubits: int
    state: np.ndarray

    def __post_init__(self):
        n = int(self.n_qubits)
        if not 1 <= n <= MAX_QUBITS:
            raise ValueError(f"register capacity is 1..{MAX_QUBITS} qubits, got {n}")
        state = np.asarray(self.state, dtype=CDTYPE).ravel()
        if state.size != 2**n:
            raise ValueError(f"state length {state.size} does not match 2^{n}")
        nrm = np.linalg.norm(state)
        if abs(nrm - 1.0) > linalg.UNITARY_TOL:
            raise ValueError(f"state is not normalized (norm {nrm!r})")
        state.setflags(write=False)
        object.__setattr__(self, "n_qubits", n)
        object.__setattr__(self, "state", state)


def zero_register(n_qubits: int) -> QubitRegister:
    """|00...0> on ``n_qubits`` wires."""
    state = np.zeros(2 ** int(n_qubits), dtype=CDTYPE)
    state[0] = 1.0
    return QubitRegister(n_qubits, state)


def apply(reg: QubitRegister, gate, targets) -> QubitRegister:
    """Apply a gate to the register, returning a new register.

    Uses an axis-contraction kernel rather than materializing the dense
    2^n operator; agrees with :func:`embed_gate` to within 1e-12.
    """
    matrix = gate.matrix if isinstance(gate, QubitGate) else gate
    state = linalg.apply_to_wires(reg.state, matrix, targets, (2,) * reg.n_qubits)
    return QubitRegister(reg.n_qubits, state)
