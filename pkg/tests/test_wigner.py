"""Wigner function against the closed-form Laguerre oracle."""

import math

import numpy as np
import pytest

from dualsim import qumodes
from dualsim.wigner import hermite_functions, position_wavefunction, wigner, wigner_grid
from oracles import wigner_fock


def fock(k, cutoff):
    state = np.zeros(cutoff, dtype=complex)
    state[k] = 1.0
    return state


def test_vacuum_peak_value():
    assert abs(wigner(fock(0, 4), 0.0, 0.0) - 1.0 / math.pi) < 1e-6


def test_one_photon_negativity_at_origin():
    assert abs(wigner(fock(1, 4), 0.0, 0.0) + 1.0 / math.pi) < 1e-6


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_fock_states_match_laguerre_oracle(n):
    xs = np.linspace(-3.0, 3.0, 7)
    grid = wigner_grid(fock(n, 8), xs, xs)
    for i, x in enumerate(xs):
        for j, p in enumerate(xs):
            assert abs(grid[i, j] - wigner_fock(n, x, p)) < 1e-6


def test_vacuum_normalization_by_quadrature():
    nodes, weights = np.polynomial.legendre.leggauss(40)
    xs = nodes * 6.0
    grid = wigner_grid(fock(0, 4), xs, xs)
    integral = 36.0 * float(weights @ grid @ weights)
    assert abs(integral - 1.0) < 1e-4


def test_squeezed_state_is_real_and_normalized():
    state = qumodes.prepare_squeezed_vacuum(0.4, 24)
    nodes, weights = np.polynomial.legendre.leggauss(48)
    xs = nodes * 7.0
    grid = wigner_grid(state, xs, xs)
    integral = 49.0 * float(weights @ grid @ weights)
    assert abs(integral - 1.0) < 1e-4


def test_multimode_register_rejected():
    reg = qumodes.vacuum_register(2, 4)
    with pytest.raises(ValueError, match="single-mode"):
        wigner(reg, 0.0, 0.0)


def test_single_mode_register_accepted():
    reg = qumodes.vacuum_register(1, 4)
    assert abs(wigner(reg, 0.0, 0.0) - 1.0 / math.pi) < 1e-6


def test_hermite_functions_orthonormal():
    # Gauss-Legendre quadrature of phi_j phi_k over a wide window
    nodes, weights = np.polynomial.legendre.leggauss(256)
    u = nodes * 12.0
    phis = hermite_functions(u, 10)
    gram = 12.0 * (phis * weights) @ phis.T
    assert np.max(np.abs(gram - np.eye(10))) < 1e-10


def test_position_wavefunction_matches_gaussian_for_vacuum():
    u = np.linspace(-2.0, 2.0, 9)
    psi = position_wavefunction(fock(0, 3), u)
    expected = math.pi**-0.25 * np.exp(-u * u / 2.0)
    assert np.max(np.abs(psi - expected)) < 1e-14
