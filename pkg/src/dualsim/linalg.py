"""Dense complex linear algebra shared by the qubit and qumode engines.

Gates and operators are plain 2-D numpy arrays of complex128, states are
1-D arrays.  All functions are pure: they never mutate their arguments and
return freshly allocated arrays, so they are safe to call concurrently.

Wire convention used throughout the package: wire 0 is the leftmost tensor
factor, i.e. the most significant digit of the flattened basis index
(big-endian).
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

CDTYPE = np.complex128

#: tolerance for unitarity / normalization checks
UNITARY_TOL = 1e-10


def _as_complex(a) -> np.ndarray:
    return np.asarray(a, dtype=CDTYPE)


def _require_square(m, what: str) -> np.ndarray:
    m = _as_complex(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{what} requires a square matrix, got shape {m.shape}")
    return m


def dagger(m) -> np.ndarray:
    """Conjugate transpose."""
    return _as_complex(m).conj().T


def kron(a, b) -> np.ndarray:
    """Kronecker product of two matrices; also combines column vectors / states."""
    a = _as_complex(a)
    b = _as_complex(b)
    if a.size == 0 or b.size == 0:
        raise ValueError("kron requires non-empty operands")
    return np.kron(a, b)


def multi_kron(*operands) -> np.ndarray:
    """Left-to-right Kronecker product of several operands."""
    if not operands:
        raise ValueError("multi_kron requires at least one operand")
    out = _as_complex(operands[0])
    for op in operands[1:]:
        out = kron(out, op)
    return out


def expm(m) -> np.ndarray:
    """Matrix exponential via scaling-and-squaring with a Pade core."""
    m = _require_square(m, "expm")
    if not np.all(np.isfinite(m)):
        raise ValueError("expm requires finite entries")
    return scipy.linalg.expm(m)


def expm_taylor(m, terms: int) -> np.ndarray:
    """Partial Taylor sum of the matrix exponential with exactly ``terms`` terms.

    ``expm_taylor(m, k)`` returns I + m + m^2/2! + ... + m^(k-1)/(k-1)!.
    Kept as the definitional form of the truncated gate exponential and as a
    cross-check for :func:`expm`; raw Taylor is unstable for large norms, so
    prefer :func:`expm` in production paths.
    """
    m = _require_square(m, "expm_taylor")
    terms = int(terms)
    if terms < 1:
        raise ValueError("expm_taylor requires terms >= 1")
    acc = np.eye(m.shape[0], dtype=CDTYPE)
    term = np.eye(m.shape[0], dtype=CDTYPE)
    for k in range(1, terms):
        term = term @ m / k
        acc = acc + term
    return acc


def distance(x, y) -> float:
    """Euclidean distance sqrt(<x-y|x-y>) between two equal-length states."""
    x = _as_complex(x).ravel()
    y = _as_complex(y).ravel()
    if x.shape != y.shape:
        raise ValueError(f"distance requires equal dimensions, got {x.size} and {y.size}")
    return float(np.linalg.norm(x - y))


def angle(x, y) -> float:
    """Angle arccos(|<x|y>| / (|x||y|)) between two nonzero states.

    Uses the magnitude of the inner product so the result is well defined
    for complex amplitudes; lies in [0, pi/2].
    """
    x = _as_complex(x).ravel()
    y = _as_complex(y).ravel()
    if x.shape != y.shape:
        raise ValueError(f"angle requires equal dimensions, got {x.size} and {y.size}")
    nx = np.linalg.norm(x)
    ny = np.linalg.norm(y)
    if nx == 0.0 or ny == 0.0:
        raise ValueError("angle is undefined for the zero vector")
    c = abs(np.vdot(x, y)) / (nx * ny)
    return float(np.arccos(min(c, 1.0)))


def equal_up_to_global_phase(x, y, tol: float = UNITARY_TOL) -> bool:
    """True iff x = gamma * y for some |gamma| = 1, within ``tol``.

    The phase is aligned on the largest-magnitude amplitude of ``y``.
    """
    x = _as_complex(x).ravel()
    y = _as_complex(y).ravel()
    if x.shape != y.shape:
        raise ValueError(f"equal_up_to_global_phase requires equal dimensions, got {x.size} and {y.size}")
    k = int(np.argmax(np.abs(y)))
    overlap = x[k] * np.conj(y[k])
    mag = abs(overlap)
    gamma = overlap / mag if mag > 0.0 else 1.0
    return float(np.linalg.norm(x - gamma * y)) < tol


def unitarity_defect(u) -> float:
    """Max-norm deviation of u†u from the identity."""
    u = _require_square(u, "unitarity_defect")
    eye = np.eye(u.shape[0], dtype=CDTYPE)
    return float(np.max(np.abs(u.conj().T @ u - eye)))


def is_unitary(u, tol: float = UNITARY_TOL) -> bool:
    return unitarity_defect(u) < tol


def apply_to_wires(state, u, wires, dims) -> np.ndarray:
    """Apply operator ``u`` to the given wires of a multi-wire state.

    ``dims`` lists the local dimension of every wire; ``u`` must be square of
    dimension prod(dims[w] for w in wires).  Contracts along the wire axes
    instead of materializing the full operator, but agrees with
    :func:`embed_operator` followed by a matrix-vector product.
    """
    state = _as_complex(state).ravel()
    u = _as_complex(u)
    dims = tuple(int(d) for d in dims)
    wires = tuple(int(w) for w in wires)
    n = len(dims)
    if len(set(wires)) != len(wires):
        raise ValueError(f"duplicate wires {wires}")
    if any(w < 0 or w >= n for w in wires):
        raise ValueError(f"wire out of range in {wires} for {n} wires")
    local = tuple(dims[w] for w in wires)
    size = int(np.prod(local))
    if u.shape != (size, size):
        raise ValueError(f"operator shape {u.shape} does not match wires {wires} with dims {local}")
    k = len(wires)
    psi = state.reshape(dims)
    psi = np.tensordot(u.reshape(local + local), psi, axes=(tuple(range(k, 2 * k)), wires))
    psi = np.moveaxis(psi, tuple(range(k)), wires)
    return np.ascontiguousarray(psi).reshape(-1)


def embed_operator(u, wires, dims) -> np.ndarray:
    """Dense full-space operator acting as ``u`` on ``wires`` and identity elsewhere."""
    u = _as_complex(u)
    dims = tuple(int(d) for d in dims)
    wires = tuple(int(w) for w in wires)
    n = len(dims)
    if len(set(wires)) != len(wires):
        raise ValueError(f"duplicate wires {wires}")
    if any(w < 0 or w >= n for w in wires):
        raise ValueError(f"wire out of range in {wires} for {n} wires")
    local = tuple(dims[w] for w in wires)
    size = int(np.prod(local))
    if u.shape != (size, size):
        raise ValueError(f"operator shape {u.shape} does not match wires {wires} with dims {local}")
    rest = [i for i in range(n) if i not in wires]
    rest_dim = int(np.prod([dims[i] for i in rest])) if rest else 1
    full = np.kron(u, np.eye(rest_dim, dtype=CDTYPE))
    order = list(wires) + rest
    shaped = full.reshape([dims[i] for i in order] * 2)
    perm = [order.index(w) for w in range(n)]
    shaped = shaped.transpose(perm + [p + n for p in perm])
    total = int(np.prod(dims))
    return np.ascontiguousarray(shaped).reshape(total, total)
