import math

import numpy as np
import pytest

import framecoh as fc


def test_builtin_goldens():
    rho = fc.builtin_state("qutrit136")
    assert fc.basis_coherence(fc.builtin_frame("canonical:3"), rho).value == 0.0
    assert fc.frame_coherence(fc.builtin_frame("tetra"), rho).value == pytest.approx(
        0.75, abs=1e-12
    )
    assert fc.basis_coherence(fc.builtin_frame("fourier:3"), rho).value == pytest.approx(
        1.0 / math.sqrt(3.0), abs=1e-12
    )
    assert fc.frame_coherence(
        fc.builtin_frame("coherent:3"), rho
    ).value == pytest.approx(1.259817246623392, abs=1e-12)


def test_frame_from_numpy():
    f = fc.Frame(2, [np.array([1.0, 0.0], dtype=complex), np.array([0.0, 1.0], dtype=complex)])
    assert f.tight
    assert len(f) == 2
    np.testing.assert_allclose(f.synthesis(), np.eye(2))
    assert fc.polygonal_frame(7).tightness.residual < 1e-12


def test_coherence_report_fields():
    rep = fc.frame_coherence(fc.polygonal_frame(3), fc.builtin_state("rho0"))
    assert rep.prefactor == pytest.approx(2.0 / 3.0)
    assert rep.dim == 2 and rep.n == 3
    assert rep.offdiag.shape == (3, 3)
    assert rep.value == pytest.approx(10.0 / 9.0, abs=1e-12)


def test_coherent_machinery():
    space = fc.symmetric_space(5)
    F = fc.fourier_operator(space)
    g = fc.vacuum_state(5)
    assert np.linalg.norm(F @ g - g) < 1e-10
    D = fc.displacement(space, 1, 2)
    np.testing.assert_allclose(D @ D.conj().T, np.eye(5), atol=1e-12)


def test_naimark_roundtrip():
    ext = fc.naimark_extend(fc.polygonal_frame(3))
    rep = fc.verify_extension(ext, fc.builtin_state("rho3"))
    assert rep.pass_
    probs = fc.povm_probabilities(
        fc.frame_to_povm(fc.polygonal_frame(3)), fc.builtin_state("rho1")
    )
    assert sum(probs) == pytest.approx(1.0, abs=1e-12)


def test_json_and_errors():
    rho = fc.builtin_state("rho3")
    again = fc.parse_state_json(fc.state_to_json(rho))
    np.testing.assert_array_equal(again.matrix, rho.matrix)
    with pytest.raises(fc.Error):
        fc.make_density(np.array([[1.0, 0.5], [0.0, 0.0]], dtype=complex))
    with pytest.raises(fc.Error):
        fc.builtin_frame("nonsense")
