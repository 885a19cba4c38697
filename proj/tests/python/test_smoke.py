# Copyright 2026 The Optospin Authors
# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the python bindings: the heavy lifting is covered by the
C++ suites; here we check that the main operations are reachable and sane
through numpy."""

import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "..", "python"))

optospin = pytest.importorskip("optospin")


def test_version_and_dimensions():
    assert optospin.HILBERT_DIM == 20
    assert optospin.__version__


def test_spin_matrices_commutator():
    ops = optospin.spin_matrices(0.5)
    comm = ops.x @ ops.y - ops.y @ ops.x
    assert np.allclose(comm, 1j * ops.z, atol=1e-14)
    assert len(optospin.gell_mann_matrices()) == 8


def test_casimir_table():
    sx, sy, sz = optospin.total_spin_ops()
    s2 = sx @ sx + sy @ sy + sz @ sz
    idx_a = optospin.basis_index("T1", 1, 1, 2)
    idx_c = optospin.basis_index("T1", -1, -1, 2)
    assert s2[idx_a, idx_a].real == pytest.approx(6.0, abs=1e-12)
    assert s2[idx_c, idx_c].real == pytest.approx(2.0, abs=1e-12)


def test_liouvillian_and_propagation():
    params = optospin.ModelParams()
    params.j0 = optospin.units.to_internal(16.8, "K")
    params.j1 = params.j2 = optospin.units.to_internal(-10.0, "mT")
    params.b_field_mT = 350.0
    params.drive = 300.0
    params.pulse_on = 0.0
    params.pulse_off = 0.005
    rates = optospin.RateParams()
    rates.gamma_radical = 0.2
    rates.gamma_triplet = 0.3
    rates.k_st = 20.0
    rates.k_eg = 0.5

    liou = optospin.build_liouvillian(params, rates, optospin.Orientation(), 0.0)
    assert liou.matrix.shape == (400, 400)

    rho0 = optospin.initial_state_mixed_s0()
    times = [0.0, 0.01, 0.02, 0.05]
    traj = optospin.propagate(params, rates, optospin.Orientation(), rho0, times)
    for state in traj.states:
        assert np.trace(state).real == pytest.approx(1.0, abs=1e-9)

    rdm = optospin.reduce_to_radicals(traj.states[-1])
    assert np.trace(rdm).real == pytest.approx(1.0, abs=1e-9)
    pops = optospin.population_trace(traj, optospin.parse_t1_label("+1/2,+1,-1/2"))
    assert pops[0] == pytest.approx(0.0, abs=1e-15)
    assert pops[-1] > 0.0


def test_small_spectrum():
    params = optospin.ModelParams()
    params.b_field_mT = 350.0
    rates = optospin.RateParams()
    rates.gamma_radical = 0.5
    rates.gamma_triplet = 0.5

    grid = optospin.SpectrumGrid()
    grid.omegas = optospin.SpectrumGrid.linspace(55.0, 70.0, 9)
    grid.b_field_mT = params.b_field_mT
    grid.time = 0.0

    rho = np.eye(20, dtype=complex) / 20.0
    spec = optospin.spectrum_single(rho, params, rates, optospin.Orientation(1.0, 0.5), grid)
    assert len(spec.intensities) == 9
    assert all(v >= 0 and math.isfinite(v) for v in spec.intensities)


def test_exchange_golden():
    entries = {
        "a": optospin.Energy(-922.8, "K"),
        "b": optospin.Energy(-461.4, "K"),
        "c": optospin.Energy(0.0, "K"),
        "d": optospin.Energy(-461.4, "K"),
        "triplet": optospin.Energy(8.4, "K"),
        "broken_symmetry": optospin.Energy(0.0, "K"),
    }
    result = optospin.j123_from_energies(entries)
    assert result.j1.value.value == pytest.approx(-461.4, rel=1e-12)
    assert result.j1.sign == "FM"
    assert result.j0.value.value == pytest.approx(16.8, rel=1e-12)
    assert result.j0.sign == "AFM"
