"""Smoke tests for the python bindings."""

import numpy as np
import pytest

import anholonomy as anh


def test_gates_are_unitary():
    for lam in (0.0, 0.9, 4.2):
        u = anh.build_circuit(3, lam)
        assert u.shape == (8, 8)
        assert anh.unitarity_error(u) < 1e-12


def test_ket_y_is_the_minus_one_eigenvector_of_y():
    y = anh.ket_y()
    assert np.allclose(anh.pauli_y() @ y, -y)


def test_recursion_matches_d_op():
    lam = 1.3
    u1 = anh.build_circuit(1, lam)
    assert np.allclose(anh.d_op(u1), anh.build_circuit(2, lam))


def test_eig_unitary_matches_closed_form():
    lam = 2.7
    es = anh.eig_unitary(anh.build_circuit(3, lam))
    expected = sorted((2 * np.pi * m + lam) / 8 % (2 * np.pi) for m in range(8))
    assert np.allclose(es.angles, expected, atol=1e-10)
    assert es.residual < 1e-10
    assert not es.any_degenerate


def test_analytic_eigenvectors_diagonalize_the_circuit():
    lam = 0.8
    u = anh.build_circuit(2, lam)
    basis = anh.analytic_basis(2, lam)
    for m in range(4):
        theta = anh.eigenangle(2, m, lam)
        assert np.allclose(u @ basis[:, m], np.exp(1j * theta) * basis[:, m], atol=1e-10)


def test_permutation_and_windings():
    rec = anh.permutation_record(3)
    assert list(rec.image) == [1, 2, 3, 4, 5, 6, 7, 0]
    assert list(rec.windings) == [0] * 7 + [1]
    assert anh.successor(3, 7) == (0, 1)
    assert anh.successor_bitwise(3, 5) == (6, 0)


def test_gamma_mp_prediction():
    for n in range(1, 9):
        assert anh.predict_gamma_mp(n) == -1


def test_sweep_and_cycle_extraction():
    flow = anh.sweep(2, steps_per_cycle=128)
    cyc = anh.extract_cycle(flow)
    assert list(cyc.permutation) == [1, 2, 3, 0]
    assert abs(cyc.gamma_mp - (-1)) < 1e-6
    assert np.allclose(cyc.holonomy, anh.holonomy_analytic(2), atol=1e-6)


def test_one_body_holonomy_is_minus_iy():
    assert np.allclose(anh.holonomy_analytic(1), -1j * anh.pauli_y(), atol=1e-9)


def test_connection_is_y_over_4():
    conn = anh.connection_analytic(1)
    assert np.allclose(conn.matrix, anh.pauli_y() / 4)
    fd = anh.connection_fd(2, 1.1)
    assert np.allclose(fd.matrix, anh.connection_analytic(2).matrix, atol=1e-6)


def test_halfway_property():
    m = anh.holonomy_analytic(3)
    assert np.allclose(np.linalg.matrix_power(m, 8), -np.eye(8), atol=1e-6)


def test_negative_control_detects_degeneracy():
    result = anh.negative_control(2, 64)
    assert result.degeneracy_detected
    assert result.cycle is None


def test_custom_family_sweep():
    z2 = np.kron([[1, 0], [0, -1]], np.eye(2)).astype(complex)
    flow = anh.sweep_custom(lambda lam: z2, 2, steps_per_cycle=64, allow_degenerate=True)
    cyc = anh.extract_cycle(flow, ignore_degeneracy=True)
    assert list(cyc.permutation) == [0, 1, 2, 3]
    assert list(cyc.windings) == [0, 0, 0, 0]


def test_out_of_range_raises():
    with pytest.raises(ValueError):
        anh.build_circuit(0, 1.0)
    with pytest.raises(ValueError):
        anh.predict_gamma_mp(11)
