import math

import numpy as np
import pytest

from hardy_noise import InvalidSpec, SchmidtSpec, hardy_state, observable, x_basis, y_basis
from hardy_noise.hardy import HARDY_MAX_PRODUCT, x_change_of_basis, y_change_of_basis

from conftest import random_spec, two_qubit_weight_grid


class TestSchmidtSpec:
    def test_hardy_max_preset(self, hardy_max):
        assert hardy_max.p1 * hardy_max.p2 == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-15)
        assert hardy_max.p1 ** 2 + hardy_max.p2 ** 2 == pytest.approx(1.0, abs=1e-15)
        assert hardy_max.p1 > hardy_max.p2

    def test_maximally_entangled_rejected(self):
        with pytest.raises(InvalidSpec) as exc:
            SchmidtSpec(2, 2, (1 / math.sqrt(2), 1 / math.sqrt(2)))
        assert exc.value.invariant == "p1 = p2"

    def test_degeneracy_guard_boundary(self):
        p1 = math.sqrt(0.5) + 2e-9
        SchmidtSpec.two_qubit(p1)
        with pytest.raises(InvalidSpec):
            SchmidtSpec.two_qubit(math.sqrt(0.5) + 2e-10)

    @pytest.mark.parametrize("d1, d2, weights", [
        (2, 2, (1.0,)),
        (1, 2, (0.8, 0.6)),
        (2, 2, (0.6, 0.6, 0.52915)),
        (3, 3, (0.8, 0.5)),
        (2, 2, (-0.8, 0.6)),
        (2, 2, (0.8, float("nan"))),
    ])
    def test_invalid(self, d1, d2, weights):
        with pytest.raises(InvalidSpec):
            SchmidtSpec(d1, d2, weights)

    def test_from_squared_fills_remainder(self):
        spec = SchmidtSpec.from_squared([0.8])
        assert spec.weights == pytest.approx((math.sqrt(0.8), math.sqrt(0.2)))
        spec3 = SchmidtSpec.from_squared([0.5, 0.3], 3, 3)
        assert len(spec3.weights) == 3
        assert spec3.weights[2] ** 2 == pytest.approx(0.2)


class TestHardyState:
    def test_hardy_max_amplitudes(self, hardy_max):
        psi = hardy_state(hardy_max)
        np.testing.assert_allclose(psi, [hardy_max.p1, 0, 0, hardy_max.p2], atol=1e-15)

    def test_direct_transcription(self):
        psi = hardy_state(SchmidtSpec.two_qubit(math.sqrt(0.8), math.sqrt(0.2)))
        np.testing.assert_allclose(psi, [0.894427190999916, 0, 0, 0.447213595499958], atol=1e-15)

    def test_schmidt_coefficients_recovered(self, rng):
        for _ in range(50):
            spec = random_spec(rng)
            sv = np.linalg.svd(hardy_state(spec).reshape(spec.d1, spec.d2), compute_uv=False)
            expected = np.zeros(min(spec.d1, spec.d2))
            expected[: len(spec.weights)] = sorted(spec.weights, reverse=True)
            np.testing.assert_allclose(sv, expected, atol=1e-10)


class TestBases:
    def test_x_symmetric(self):
        for v in x_basis(1 / math.sqrt(2), 1 / math.sqrt(2)):
            np.testing.assert_allclose(np.abs(v) ** 2, [0.5, 0.5], atol=1e-15)

    def test_x_orthogonal(self):
        for p1 in two_qubit_weight_grid(20):
            xp, xm = x_basis(p1, math.sqrt(1 - p1 * p1))
            assert abs(np.vdot(xp, xm)) < 1e-14

    def test_x_plus_overlap(self):
        p1, p2 = 0.9, math.sqrt(1 - 0.81)
        xp, _ = x_basis(p1, p2)
        assert abs(xp[0]) ** 2 == pytest.approx(p2 / (p1 + p2), abs=1e-15)

    def test_phases_verbatim(self):
        xp, xm = x_basis(0.8, 0.6)
        s = math.sqrt(1.4)
        np.testing.assert_allclose(xp, [math.sqrt(0.6) / s, -1j * math.sqrt(0.8) / s], atol=1e-15)
        np.testing.assert_allclose(xm, [-1j * math.sqrt(0.8) / s, math.sqrt(0.6) / s], atol=1e-15)
        yp, _ = y_basis(0.8, 0.6)
        n = math.sqrt((0.64 + 0.36 - 0.48) * 1.4)
        np.testing.assert_allclose(yp, [-1j * 0.6 * math.sqrt(0.6) / n, 0.8 * math.sqrt(0.8) / n], atol=1e-15)

    def test_y_normalized(self, rng):
        # also for weights with p1^2 + p2^2 < 1
        for p1, p2 in rng.uniform(0.01, 1.0, size=(50, 2)):
            for v in y_basis(p1, p2):
                assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-14)

    def test_y_symmetric(self):
        yp, _ = y_basis(1 / math.sqrt(2), 1 / math.sqrt(2))
        assert abs(yp[0]) ** 2 == pytest.approx(0.5, abs=1e-15)

    def test_hardy_event_amplitude_at_max(self, hardy_max):
        yp, _ = y_basis(hardy_max.p1, hardy_max.p2)
        amp = np.vdot(np.kron(yp, yp), hardy_state(hardy_max))
        assert abs(amp) ** 2 == pytest.approx(0.09, abs=1e-3)

    def test_change_of_basis_unitary(self, rng):
        for p1 in two_qubit_weight_grid(40):
            p2 = math.sqrt(1 - p1 * p1)
            for u in (x_change_of_basis(p1, p2), y_change_of_basis(p1, p2)):
                np.testing.assert_allclose(u @ u.conj().T, np.eye(2), atol=1e-12)

    def test_nonpositive_weight(self):
        with pytest.raises(ValueError):
            x_basis(0.0, 1.0)
        with pytest.raises(ValueError):
            y_basis(0.5, -0.1)


class TestObservable:
    def test_qubit(self, hardy_max):
        obs = observable(1, "X", hardy_max)
        assert set(obs.eigenvalues) == {+1, -1}
        np.testing.assert_allclose(obs.projectors[1] + obs.projectors[-1], np.eye(2), atol=1e-12)

    def test_qutrit_zero_sector(self):
        spec = SchmidtSpec.from_squared([0.7], 3, 3)
        obs = observable(2, "Y", spec)
        assert set(obs.eigenvalues) == {+1, -1, 0}
        np.testing.assert_array_equal(obs.projectors[0], np.diag([0, 0, 1]))

    def test_x_y_do_not_commute(self, hardy_max):
        X = observable(1, "X", hardy_max).projectors[1]
        Y = observable(1, "Y", hardy_max).projectors[1]
        assert np.linalg.norm(X @ Y - Y @ X) > 1e-3

    def test_projector_algebra_on_random_specs(self, rng):
        for _ in range(40):
            spec = random_spec(rng)
            for party in (1, 2):
                for kind in ("X", "Y"):
                    obs = observable(party, kind, spec)
                    d = spec.d1 if party == 1 else spec.d2
                    assert (0 in obs.eigenvalues) == (d > 2)
                    Ps = list(obs.projectors.values())
                    np.testing.assert_allclose(sum(Ps), np.eye(d), atol=1e-12)
                    for i, P in enumerate(Ps):
                        np.testing.assert_allclose(P @ P, P, atol=1e-12)
                        for Q in Ps[i + 1:]:
                            np.testing.assert_allclose(P @ Q, 0, atol=1e-12)

    def test_bad_arguments(self, hardy_max):
        with pytest.raises(ValueError):
            observable(3, "X", hardy_max)
        with pytest.raises(ValueError):
            observable(1, "Z", hardy_max)


def test_hardy_max_product_constant():
    assert HARDY_MAX_PRODUCT == pytest.approx(0.3819660112501051, abs=1e-15)
