"""Born-rule read-out: probabilities, seeded shot sampling, expectations, variances.

Works for both paradigms; per-wire operations take the list of local wire
dimensions ((2,)*n for qubits, (d,)*m for qumodes).  Basis labels are bit
strings for qubits and occupation tuples "(k0,...)" for qumodes, both in
wire order 0-first (wire 0 is the most significant digit).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .linalg import CDTYPE
from .rng import Rng

OBSERVABLE_KINDS = ("paulix", "pauliy", "pauliz", "number")


@dataclass(frozen=True)
class Observable:
    """Hermitian single-wire observable."""

    kind: str
    matrix: np.ndarray


def observable(kind: str, dim: int = 2) -> Observable:
    """Build a named observable at the given local dimension.

    Pauli observables require dimension 2; ``number`` is diag(0..dim-1).
    """
    kind = kind.lower()
    dim = int(dim)
    if kind not in OBSERVABLE_KINDS:
        raise ValueError(f"unknown observable '{kind}'")
    if kind == "number":
        matrix = np.diag(np.arange(dim, dtype=np.float64)).astype(CDTYPE)
    else:
        if dim != 2:
            raise ValueError(f"observable '{kind}' requires local dimension 2, got {dim}")
        matrix = {
            "paulix": np.array([[0, 1], [1, 0]], dtype=CDTYPE),
            "pauliy": np.array([[0, -1j], [1j, 0]], dtype=CDTYPE),
            "pauliz": np.array([[1, 0], [0, -1]], dtype=CDTYPE),
        }[kind]
    return Observable(kind, matrix)


def probabilities(state) -> np.ndarray:
    """Born-rule outcome distribution |c_k|^2 / sum |c_j|^2.

    Normalizes explicitly, so unnormalized diagnostic states are accepted;
    the zero vector has no distribution and is rejected.
    """
    state = np.asarray(state, dtype=CDTYPE).ravel()
    weights = np.abs(state) ** 2
    total = float(weights.sum())
    if total == 0.0:
        raise ValueError("probabilities are undefined for the zero vector")
    return weights / total


def bit_labels(n_qubits: int) -> list[str]:
    """Basis labels b0 b1 ... for n qubits, wire 0 leftmost."""
    n = int(n_qubits)
    return [format(i, f"0{n}b") for i in range(2**n)]


def occupation_labels(m_modes: int, cutoff: int) -> list[str]:
    """Basis labels "(k0,k1,...)" for m qumodes at one cutoff, wire 0 first."""
    m = int(m_modes)
    d = int(cutoff)
    labels = []
    for i in range(d**m):
        digits = []
        rem = i
        for _ in range(m):
            rem, digit = divmod(rem, d)
            digits.append(digit)
        digits.reverse()
        labels.append("(" + ",".join(str(k) for k in digits) + ")")
    return labels


def sample(state, shots: int, seed: int, labels=None) -> dict[str, int]:
    """Multinomial counts from ``shots`` seeded Born-rule draws.

    Inverse-CDF sampling where shot ``i`` consumes draw ``i`` of the seeded
    stream (see :class:`~dualsim.rng.Rng` for the split rule), so results do
    not depend on how shots are scheduled.  Only observed outcomes appear in
    the map, keyed by ``labels`` (decimal indices when omitted); counts sum
    to ``shots`` exactly.
    """
    shots = int(shots)
    if shots < 1:
        raise ValueError("sample requires shots >= 1")
    probs = probabilities(state)
    if labels is None:
        labels = [str(i) for i in range(probs.size)]
    elif len(labels) != probs.size:
        raise ValueError(f"expected {probs.size} labels, got {len(labels)}")
    cdf = np.cumsum(probs)
    cdf[-1] = 1.0
    draws = Rng(seed).uniforms(shots)
    outcomes = np.searchsorted(cdf, draws, side="right")
    counts = np.bincount(outcomes, minlength=probs.size)
    return {labels[i]: int(c) for i, c in enumerate(counts) if c > 0}


def _check_wire(obs: Observable, wire: int, dims) -> tuple:
    dims = tuple(int(d) for d in dims)
    wire = int(wire)
    if not 0 <= wire < len(dims):
        raise ValueError(f"wire {wire} out of range for {len(dims)} wires")
    if obs.matrix.shape[0] != dims[wire]:
        raise ValueError(
            f"observable dimension {obs.matrix.shape[0]} does not match wire {wire} "
            f"local dimension {dims[wire]}"
        )
    return dims


def expectation(state, obs: Observable, wire: int, dims) -> float:
    """<psi| I ⊗ ... ⊗ A ⊗ ... ⊗ I |psi> with A on ``wire``."""
    dims = _check_wire(obs, wire, dims)
    state = np.asarray(state, dtype=CDTYPE).ravel()
    shifted = linalg.apply_to_wires(state, obs.matrix, (wire,), dims)
    return float(np.vdot(state, shifted).real)


def expectation_all(state, obs: Observable, dims) -> list[float]:
    """Per-wire expectation values, one per wire."""
    return [expectation(state, obs, w, dims) for w in range(len(tuple(dims)))]


def variance(state, obs: Observable, wire: int, dims) -> float:
    """Observable variance <A^2> - <A>^2; nonnegative up to a -1e-12 float floor."""
    dims = _check_wire(obs, wire, dims)
    state = np.asarray(state, dtype=CDTYPE).ravel()
    shifted = linalg.apply_to_wires(state, obs.matrix, (wire,), dims)
    mean = float(np.vdot(state, shifted).real)
    second = float(np.vdot(shifted, shifted).real)
    return second - mean * mean


def variance_all(state, obs: Observable, dims) -> list[float]:
    """Per-wire variances, one per wire."""
    return [variance(state, obs, w, dims) for w in range(len(tuple(dims)))]


def expectation_product(state, obs: Observable, dims) -> float:
    """Product of the per-wire expectation values (single scalar read-out)."""
    out = 1.0
    for value in expectation_all(state, obs, dims):
        out *= value
    return out


def counts_mean_variance(counts: dict[str, int], value_by_label) -> tuple[float, float]:
    """Sampled mean and variance of a per-label value over a counts map.

    Cross-validation path for the analytic :func:`variance` on diagonal
    observables: assign each basis label its eigenvalue and feed the counts
    from :func:`sample`.
    """
    total = sum(counts.values())
    if total == 0:
        raise ValueError("counts map is empty")
    mean = sum(value_by_label[label] * c for label, c in counts.items()) / total
    var = sum((value_by_label[label] - mean) ** 2 * c for label, c in counts.items()) / total
    return float(mean), float(var)


@dataclass(frozen=True)
class MeasurementResult:
    """Tagged measurement outcome.

    ``method`` is one of probabilities | counts | expectation | variance;
    ``values`` carries real vectors, ``counts`` the label -> count map for
    sampled read-out.
    """

    method: str
    labels: tuple[str, ...]
    values: tuple[float, ...] | None = None
    counts: dict[str, int] | None = field(default=None)
    shots: int | None = None
    seed: int | None = None
