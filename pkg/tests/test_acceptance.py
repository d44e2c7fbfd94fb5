"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the whole suite finishes in seconds.
"""

import math

import numpy as np

from polspin import (
    AngleSet,
    Attenuator,
    Gyrotropic,
    HalfWave,
    JonesAmpPhase,
    PhaseShifter,
    QuarterWave,
    Rotator,
    WaveState,
    angles_from_spinor,
    apply,
    apply_train_to_coherency,
    classify,
    coherency_from_stokes,
    eig_decompose,
    field_sample,
    matrix_circular,
    mueller_of_train,
    poincare_frame,
    spinor_from_angles,
    stokes_from_coherency,
    stokes_from_wave,
    su2_to_so3,
    wave_from_jones,
)
from polspin import kernels
from polspin.dsl import parse_train, serialize_train
from polspin.partial import apply_mueller
from polspin.pauli import SIGMA, U_BASIS, U_BASIS_INV

from .conftest import as_spinor, random_su2, random_unit_spinors, random_valid_stokes, stokes_vec
from .test_dsl import random_document
from .test_partial import random_elements
from .test_spinor import field_trig


def report(num, label):
    print(f"PASS  criterion {num:2d}: {label}")


def rot_about(axis, angle):
    n = np.asarray(axis, dtype=float)
    k = np.array([[0, -n[2], n[1]], [n[2], 0, -n[0]], [-n[1], n[0], 0]])
    return np.eye(3) + math.sin(angle) * k + (1 - math.cos(angle)) * (k @ k)


def test_criterion_01_pauli_permutation():
    for i, j in ((1, 3), (2, 1), (3, 2)):
        err = np.max(np.abs(U_BASIS @ SIGMA[i] @ U_BASIS_INV - SIGMA[j]))
        assert err <= 1e-15
    report(1, "U sigma_i U^-1 permutes the Pauli matrices to 1e-15")


def test_criterion_02_triad_suite(rng):
    spinors = random_unit_spinors(rng, 10_000)
    r, m_re, m_im = kernels.triads(spinors)
    norms = np.linalg.norm
    assert np.max(np.abs(norms(r, axis=1) - 1)) < 1e-12
    assert np.max(np.abs(norms(m_re, axis=1) - 1)) < 1e-12
    assert np.max(np.abs(norms(m_im, axis=1) - 1)) < 1e-12
    assert np.max(np.abs(np.sum(r * m_re, axis=1))) < 1e-12
    assert np.max(np.abs(np.sum(r * m_im, axis=1))) < 1e-12
    assert np.max(np.abs(np.sum(m_re * m_im, axis=1))) < 1e-12
    assert np.max(np.abs(np.cross(r, m_re) - m_im)) < 1e-12
    for row in spinors[:200]:
        ang = angles_from_spinor(as_spinor(row))
        expected = [
            math.sin(ang.theta) * math.cos(ang.phi),
            math.sin(ang.theta) * math.sin(ang.phi),
            math.cos(ang.theta),
        ]
        np.testing.assert_allclose(poincare_frame(as_spinor(row)).r, expected, atol=1e-12)
    report(2, "(r, m_re, m_im) right-handed orthonormal for 10^4 spinors; r matches angles")


def test_criterion_03_homomorphism(rng):
    worst = 0.0
    for _ in range(1000):
        q1, q2 = random_su2(rng), random_su2(rng)
        err = np.max(np.abs(su2_to_so3(q1 @ q2) - su2_to_so3(q1) @ su2_to_so3(q2)))
        worst = max(worst, err)
    assert worst < 1e-12
    q = random_su2(rng)
    assert np.max(np.abs(su2_to_so3(-q) - su2_to_so3(q))) < 1e-15
    report(3, f"SU(2)->SO(3) homomorphism on 1000 pairs (max err {worst:.2e}); a(-Q) = a(Q)")


def test_criterion_04_filter_geometry(rng):
    for delta in np.linspace(0.01, 2 * math.pi - 0.01, 100):
        a = su2_to_so3(matrix_circular(PhaseShifter(0.0, delta)).m)
        assert np.max(np.abs(a - rot_about([1, 0, 0], -delta))) < 1e-10
        c = classify(PhaseShifter(0.0, delta))
        np.testing.assert_allclose(c.axis, [1, 0, 0], atol=1e-10)
        assert (c.angle + delta) % (2 * math.pi) < 1e-10 or abs(
            (c.angle + delta) % (2 * math.pi) - 2 * math.pi
        ) < 1e-10
    for alpha in np.linspace(0.01, math.pi - 0.01, 50):
        a = su2_to_so3(matrix_circular(Rotator(alpha)).m)
        assert np.max(np.abs(a - rot_about([0, 0, 1], -2 * alpha))) < 1e-10
    for delta in np.linspace(0.01, 2 * math.pi - 0.01, 50):
        a = su2_to_so3(matrix_circular(Gyrotropic(0.0, delta)).m)
        assert np.max(np.abs(a - rot_about([0, 0, 1], -delta))) < 1e-10
    linear_x = wave_from_jones(JonesAmpPhase(1.0, 0.0, 0.0, 0.0))
    out = apply(QuarterWave(math.pi / 4), linear_x)
    assert abs(abs(poincare_frame(out.spinor).r[2]) - 1.0) < 1e-12
    for axis_angle in np.linspace(0, math.pi, 25):
        q = matrix_circular(QuarterWave(axis_angle)).m
        h = matrix_circular(HalfWave(axis_angle)).m
        assert np.max(np.abs(q @ q - h)) < 1e-14
    report(4, "shifter/rotator/gyro rotation axes and angles; QWP on linear-x; HWP = QWP^2")


def test_criterion_05_attenuator_boost(rng):
    stokes = random_valid_stokes(rng, 1000)
    for row in stokes:
        eta1, eta2 = rng.uniform(0, 3, 2)
        eta = eta2 - eta1
        s = stokes_vec(row)
        out = stokes_from_coherency(
            apply_train_to_coherency([Attenuator(eta1, eta2)], coherency_from_stokes(s))
        )
        factor = math.exp(-(eta1 + eta2))
        expected = factor * np.array(
            [
                s.s0 * math.cosh(eta) + s.s1 * math.sinh(eta),
                s.s1 * math.cosh(eta) + s.s0 * math.sinh(eta),
                s.s2,
                s.s3,
            ]
        )
        scale = max(1.0, float(np.max(np.abs(expected))))
        assert np.max(np.abs(out.as_array() - expected)) < 1e-12 * scale
        s_before = s.s0**2 - s.s1**2 - s.s2**2 - s.s3**2
        s_after = out.s0**2 - out.s1**2 - out.s2**2 - out.s3**2
        expected_s = s_before * math.exp(-2 * (eta1 + eta2))
        assert abs(s_after - expected_s) < 1e-12 * max(1.0, abs(s_before))
    report(5, "attenuator conjugation matches the closed-form boost; S scales by e^{-2(eta1+eta2)}")


def test_criterion_06_coherency_identities(rng):
    stokes = random_valid_stokes(rng, 10_000)
    det_c, tr_c, tr_c2 = kernels.coherency_invariants(stokes)
    s0 = stokes[:, 0]
    big_s = s0**2 - np.sum(stokes[:, 1:] ** 2, axis=1)
    scale = np.maximum(s0**2, 1.0)
    assert np.max(np.abs(det_c - big_s / 4) / scale) < 1e-12
    assert np.max(np.abs(tr_c - s0) / np.maximum(s0, 1.0)) < 1e-12
    assert np.max(np.abs(tr_c2 - (s0**2 - big_s / 2)) / scale) < 1e-12
    for row in stokes[:100]:
        s = stokes_vec(row)
        tilde = U_BASIS @ coherency_from_stokes(s).matrix @ U_BASIS.conj().T
        expected = 0.5 * np.array(
            [[s.s0 + s.s1, s.s2 - 1j * s.s3], [s.s2 + 1j * s.s3, s.s0 - s.s1]]
        )
        np.testing.assert_allclose(tilde, expected, atol=1e-14 * max(1.0, s.s0))
    report(6, "det C = S/4, tr C = s0, tr C^2 = s0^2 - S/2 for 10^4 Stokes; C-tilde entries")


def test_criterion_07_eigen_decomposition(rng):
    for row in random_valid_stokes(rng, 500):
        dec = eig_decompose(coherency_from_stokes(stokes_vec(row)))
        if not dec.degenerate:
            assert abs(dec.point_plus @ dec.point_minus + 1.0) < 1e-10
    for _ in range(100):
        e = random_elements(rng, 1)[0]
        if isinstance(e, Attenuator):
            e = PhaseShifter(rng.uniform(0, 2), rng.uniform(0, 2))
        s = stokes_vec(random_valid_stokes(rng, 1)[0])
        c = coherency_from_stokes(s)
        dec = eig_decompose(c)
        dec2 = eig_decompose(apply_train_to_coherency([e], c))
        if dec.degenerate:
            continue
        a = su2_to_so3(matrix_circular(e).m)
        np.testing.assert_allclose(dec2.point_plus, a @ dec.point_plus, atol=1e-10)
    for row in random_unit_spinors(rng, 100):
        w = WaveState(float(rng.uniform(0.5, 2.0)), as_spinor(row))
        dec = eig_decompose(coherency_from_stokes(stokes_from_wave(w)))
        assert abs(dec.lambda_plus - w.amplitude**2) < 1e-12 * w.amplitude**2
        assert abs(dec.lambda_minus) < 1e-12 * w.amplitude**2
        np.testing.assert_allclose(dec.point_plus, poincare_frame(w.spinor).r, atol=1e-10)
    report(7, "antipodal eigen-points, unitary covariance, pure-state spectrum (s0, 0)")


def test_criterion_08_field_consistency(rng):
    ts = np.linspace(-3, 3, 100)
    zs = np.linspace(-2, 2, 100)
    omega, k = 1.7, 0.6
    worst = 0.0
    for _ in range(20):
        theta = rng.uniform(0, math.pi)
        phi = rng.uniform(0, 2 * math.pi)
        chi = rng.uniform(0, 2 * math.pi)
        amp = rng.uniform(0.5, 2.0)
        w = WaveState(amp, spinor_from_angles(AngleSet(theta, phi, chi)))
        for t in ts:
            for z in zs:
                got = field_sample(w, omega, k, t, z)
                want = field_trig(amp, theta, phi, chi, omega * t - k * z)
                worst = max(worst, abs(got[0] - want[0]), abs(got[1] - want[1]))
    assert worst < 1e-12
    report(8, f"complex field form equals trig form on 100x100 grid, 20 waves (max err {worst:.2e})")


def test_criterion_09_mueller_coherency_equivalence(rng):
    for _ in range(100):
        train = random_elements(rng, int(rng.integers(1, 6)))
        s = stokes_vec(random_valid_stokes(rng, 1)[0])
        via_mueller = apply_mueller(mueller_of_train(train), s)
        via_coherency = stokes_from_coherency(
            apply_train_to_coherency(train, coherency_from_stokes(s))
        )
        assert np.max(np.abs(via_mueller.as_array() - via_coherency.as_array())) < 1e-10
    report(9, "Mueller route equals coherency route on 100 random (train, Stokes) pairs")


def test_criterion_10_dsl_round_trip(rng):
    for _ in range(100):
        doc = random_document(rng)
        reparsed = parse_train(serialize_train(doc))
        assert reparsed.ok
        assert reparsed.document.same_content(doc)
    source = "rotate alpha=1\nbogus\nqwp axis=0.2\nshifter d1=1\natten e1=-1 e2=0\nhwp axis=0.3\n"
    result = parse_train(source)
    assert [d.line for d in result.diagnostics] == [2, 4, 5]
    assert len(result.document.elements) == 3
    report(10, "parse/serialize round-trip on 100 documents; one diagnostic per bad line")
