"""Continuous-variable engine on a Fock basis truncated at a cutoff dimension.

Gate generators use the anti-Hermitian sign conventions

    squeezer      S(z) = exp((z* a^2 - z a^dag^2) / 2)
    rotation      R(phi) = exp(i phi n)
    displacement  D(alpha) = exp(alpha a^dag - alpha* a)
    beamsplitter  B(theta, phi) = exp(theta (e^{i phi} a^dag b - e^{-i phi} a b^dag))

so every gate is exactly unitary at the working cutoff.  Truncation still
distorts amplitudes near the cutoff boundary; :func:`leakage` quantifies how
much probability mass sits in that danger zone.

The squeezer spreads vacuum across many Fock levels, which makes the plain
truncated-generator exponential noticeably wrong near the boundary.  It is
therefore built at an enlarged internal cutoff and compressed back with a
QR re-orthonormalization, which keeps low-Fock columns accurate to the
untruncated operator while remaining exactly unitary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .linalg import CDTYPE

MAX_MODES = 4
MAX_CUTOFF = 64
#: total basis size cap shared with the qubit engine (2^20 amplitudes)
MAX_BASIS_DIM = 2**20


def _check_cutoff(cutoff: int) -> int:
    cutoff = int(cutoff)
    if cutoff < 2:
        raise ValueError(f"cutoff must be at least 2, got {cutoff}")
    return cutoff


@dataclass(frozen=True)
class LadderOps:
    """Creation, annihilation and number operators at one cutoff."""

    cutoff: int
    create: np.ndarray
    annihilate: np.ndarray
    number: np.ndarray


def ladder_ops(cutoff: int) -> LadderOps:
    """Ladder matrices with sqrt(1)..sqrt(cutoff-1) off-diagonals.

    annihilate|k> = sqrt(k)|k-1> (and |0> -> 0); create = annihilate†, so
    create|cutoff-1> = 0 under truncation; number is the exact integer
    diagonal diag(0..cutoff-1).
    """
    d = _check_cutoff(cutoff)
    annihilate = np.diag(np.sqrt(np.arange(1, d, dtype=np.float64)), 1).astype(CDTYPE)
    create = annihilate.conj().T.copy()
    number = np.diag(np.arange(d, dtype=np.float64)).astype(CDTYPE)
    return LadderOps(d, create, annihilate, number)


@dataclass(frozen=True)
class CvGate:
    """Named CV gate: matrix is d x d for single-mode gates, d^2 x d^2 for BS."""

    name: str
    params: tuple
    cutoff: int
    matrix: np.ndarray


def squeezer(z: complex, cutoff: int) -> CvGate:
    """Single-mode squeezer S(z) = exp((z* a^2 - z a^dag^2)/2).

    Built at twice the working cutoff and compressed back via column-wise QR
    so that the action on low Fock states matches the untruncated operator;
    exactly unitary at the working cutoff.
    """
    d = _check_cutoff(cutoff)
    z = complex(z)
    big = 2 * d
    ops = ladder_ops(big)
    a, adag = ops.annihilate, ops.create
    gen = (np.conj(z) * (a @ a) - z * (adag @ adag)) / 2.0
    block = linalg.expm(gen)[:d, :d]
    q, r = np.linalg.qr(block)
    diag = np.diagonal(r)
    phases = np.where(np.abs(diag) == 0, 1.0 + 0.0j, diag / np.abs(diag))
    matrix = np.ascontiguousarray(q * phases[np.newaxis, :])
    return CvGate("S", (z,), d, matrix)


def rotation(phi: float, cutoff: int) -> CvGate:
    """Phase-space rotation R(phi) = exp(i phi n): exact diagonal e^{i phi k}."""
    d = _check_cutoff(cutoff)
    phi = float(phi)
    matrix = np.diag(np.exp(1j * phi * np.arange(d))).astype(CDTYPE)
    return CvGate("R", (phi,), d, matrix)


def displacement(alpha: complex, cutoff: int) -> CvGate:
    """Displacement D(alpha) = exp(alpha a^dag - alpha* a)."""
    d = _check_cutoff(cutoff)
    alpha = complex(alpha)
    ops = ladder_ops(d)
    gen = alpha * ops.create - np.conj(alpha) * ops.annihilate
    return CvGate("D", (alpha,), d, linalg.expm(gen))


def beamsplitter(theta: float, phi: float, cutoff: int) -> CvGate:
    """Two-mode beamsplitter exp(theta (e^{i phi} a^dag b - e^{-i phi} a b^dag)).

    Mode ordering is (first ⊗ second); the generator conserves total photon
    number, so the matrix is block diagonal over photon-number sectors.
    """
    d = _check_cutoff(cutoff)
    theta = float(theta)
    phi = float(phi)
    ops = ladder_ops(d)
    a, adag = ops.annihilate, ops.create
    gen = theta * (
        np.exp(1j * phi) * np.kron(adag, a) - np.exp(-1j * phi) * np.kron(a, adag)
    )
    return CvGate("BS", (theta, phi), d, linalg.expm(gen))


def _series_coefficients(z: float, cutoff: int) -> np.ndarray:
    """Even-photon squeezed-vacuum amplitudes sqrt((2n)!)/(2^n n!) tanh^n z / sqrt(cosh z).

    Factorials are evaluated through log-gamma so the coefficients stay
    finite up to the largest supported cutoff.
    """
    z = float(z)
    t = math.tanh(z)
    c = np.zeros(cutoff, dtype=CDTYPE)
    for n in range((cutoff + 1) // 2):
        k = 2 * n
        if k >= cutoff:
            break
        log_mag = 0.5 * math.lgamma(k + 1) - n * math.log(2.0) - math.lgamma(n + 1)
        c[k] = math.exp(log_mag) * (t**n)
    return c / math.sqrt(math.cosh(z))


def prepare_squeezed_vacuum(z: float, cutoff: int) -> np.ndarray:
    """Squeezed vacuum from the analytic even-photon series, renormalized.

    Only |2n> terms appear, so odd amplitudes are exactly zero.  The series
    is truncated below ``cutoff`` and renormalized to a unit vector; the
    discarded mass is reported by :func:`squeezed_vacuum_deficit`.
    """
    d = _check_cutoff(cutoff)
    c = _series_coefficients(z, d)
    return c / np.linalg.norm(c)


def squeezed_vacuum_deficit(z: float, cutoff: int) -> float:
    """Probability mass of the analytic squeezed-vacuum series lost to truncation."""
    d = _check_cutoff(cutoff)
    c = _series_coefficients(z, d)
    return max(0.0, 1.0 - float(np.linalg.norm(c)) ** 2)


def interferometer(bs_params, rot_params, m_modes: int, cutoff: int) -> np.ndarray:
    """Mesh of m-1 adjacent-pair beamsplitters followed by m rotations.

    ``bs_params`` lists (theta, phi) for the beamsplitter on modes (j, j+1),
    applied in order j = 0 .. m-2; ``rot_params`` lists one rotation angle per
    mode, applied last.  Returns the dense d^m x d^m unitary.
    """
    m = int(m_modes)
    d = _check_cutoff(cutoff)
    bs_params = [(float(t), float(p)) for t, p in bs_params]
    rot_params = [float(p) for p in rot_params]
    if m < 1:
        raise ValueError("interferometer requires at least one mode")
    if len(bs_params) != m - 1:
        raise ValueError(f"expected {m - 1} beamsplitter parameter pairs, got {len(bs_params)}")
    if len(rot_params) != m:
        raise ValueError(f"expected {m} rotation angles, got {len(rot_params)}")
    if d**m > MAX_BASIS_DIM:
        raise ValueError(f"basis dimension {d}^{m} exceeds the {MAX_BASIS_DIM} capacity")
    dims = (d,) * m
    mesh = None
    for j, (theta, phi) in enumerate(bs_params):
        emb = linalg.embed_operator(beamsplitter(theta, phi, d).matrix, (j, j + 1), dims)
        mesh = emb if mesh is None else emb @ mesh
    rots = linalg.multi_kron(*(rotation(phi, d).matrix for phi in rot_params))
    return rots if mesh is None else rots @ mesh


@dataclass(frozen=True)
class QumodeRegister:
    """Immutable m-mode register at one cutoff, holding a normalized statevector."""

    m_modes: int
    cutoff: int
    state: np.ndarray

    def __post_init__(self):
        m = int(self.m_modes)
        d = int(self.cutoff)
        if not 1 <= m <= MAX_MODES:
            raise ValueError(f"register capacity is 1..{MAX_MODES} qumodes, got {m}")
        if not 2 <= d <= MAX_CUTOFF:
            raise ValueError(f"cutoff must be in 2..{MAX_CUTOFF}, got {d}")
        if d**m > MAX_BASIS_DIM:
            raise ValueError(f"basis dimension {d}^{m} exceeds the {MAX_BASIS_DIM} capacity")
        state = np.asarray(self.state, dtype=CDTYPE).ravel()
        if state.size != d**m:
            raise ValueError(f"state length {state.size} does not match {d}^{m}")
        nrm = np.linalg.norm(state)
        if abs(nrm - 1.0) > linalg.UNITARY_TOL:
            raise ValueError(f"state is not normalized (norm {nrm!r})")
        state.setflags(write=False)
        object.__setattr__(self, "m_modes", m)
        object.__setattr__(self, "cutoff", d)
        object.__setattr__(self, "state", state)


def vacuum_register(m_modes: int, cutoff: int) -> QumodeRegister:
    """|0...0> over ``m_modes`` modes at the given cutoff."""
    state = np.zeros(int(cutoff) ** int(m_modes), dtype=CDTYPE)
    state[0] = 1.0
    return QumodeRegister(m_modes, cutoff, state)


def leakage(reg: QumodeRegister, top_levels: int) -> float:
    """Probability mass where any mode occupation is >= cutoff - top_levels.

    Diagnoses whether the cutoff is adequate for the state at hand: values
    near zero mean the truncation boundary is essentially unoccupied.
    """
    top_levels = int(top_levels)
    if not 1 <= top_levels < reg.cutoff:
        raise ValueError(f"top_levels must be in 1..{reg.cutoff - 1}, got {top_levels}")
    probs = np.abs(reg.state) ** 2
    shaped = probs.reshape((reg.cutoff,) * reg.m_modes)
    safe = (slice(0, reg.cutoff - top_levels),) * reg.m_modes
    return float(probs.sum() - shaped[safe].sum())
