"""Fully polarized plane waves: representations and exact conversions.

A monochromatic plane wave is carried by a positive amplitude and a unit
two-component spinor

    o = e^{-i chi/2} (e^{-i phi/2} cos(theta/2), e^{i phi/2} sin(theta/2)),

where (theta, phi) are spherical coordinates of the polarization point on
the Poincare sphere and chi/2 is the wave's phase.  The spinor determines
the sphere point r together with a tangent vector m_re encoding chi, the
Stokes parameters, the Jones components (after the basis change U), and
the sampled electric field.

Conventions fixed here:
  * chi is canonicalized to [0, 2pi); the spinor is recovered from angles
    only up to a global sign (the SU(2) double cover).
  * at the poles (circular polarization) phi is reported as 0.
  * the flux normalization is s0 = A^2.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    NonUnimodularError,
    NonUnitaryError,
    OrthogonalStatesError,
    ZeroFieldError,
)
from .pauli import EPSILON, SIGMA, U_BASIS, U_BASIS_INV

TWO_PI = 2.0 * math.pi


def _wrap_2pi(x):
    # x % TWO_PI can round up to TWO_PI itself for tiny negative x
    y = x % TWO_PI
    return 0.0 if y >= TWO_PI else y

# The Jones components are prefactor * e^{i(kz - wt)} * (U o) with
# prefactor = sqrt(2) e^{-i pi/4} A; this constant is the A = 1 value.
JONES_PREFACTOR_UNIT = math.sqrt(2.0) * cmath.exp(-0.25j * math.pi)


@dataclass(frozen=True)
class Spinor2:
    """Unit two-component spinor (c1, c2)."""

    c1: complex
    c2: complex

    def as_array(self):
        return np.array([self.c1, self.c2], dtype=complex)

    def norm(self):
        return math.hypot(abs(self.c1), abs(self.c2))

    def normalized(self):
        n = self.norm()
        return Spinor2(self.c1 / n, self.c2 / n)

    def require_unit(self, tol=1e-10):
        if abs(self.norm() - 1.0) > tol:
            raise ValueError(f"spinor is not unit-norm: |o| = {self.norm()}")
        return self


@dataclass(frozen=True)
class AngleSet:
    """Polar angle theta in [0, pi], azimuth phi in [0, 2pi), phase chi in [0, 2pi)."""

    theta: float
    phi: float
    chi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta out of [0, pi]: {self.theta}")
        if not 0.0 <= self.phi < TWO_PI:
            raise ValueError(f"phi out of [0, 2pi): {self.phi}")
        if not 0.0 <= self.chi < TWO_PI:
            raise ValueError(f"chi out of [0, 2pi): {self.chi}")


@dataclass(frozen=True)
class WaveState:
    """Amplitude A > 0 plus a unit spinor: one monochromatic plane wave."""

    amplitude: float
    spinor: Spinor2

    def __post_init__(self):
        if not self.amplitude > 0.0:
            raise ValueError(f"amplitude must be positive: {self.amplitude}")
        self.spinor.require_unit()


@dataclass(frozen=True)
class EllipseParams:
    """Major semiaxis a >= 0, signed minor semiaxis b, orientation phi/2."""

    a: float
    b: float
    orientation: float


@dataclass(frozen=True)
class StokesVector:
    s0: float
    s1: float
    s2: float
    s3: float

    def as_array(self):
        return np.array([self.s0, self.s1, self.s2, self.s3])

    def vec3(self):
        return np.array([self.s1, self.s2, self.s3])


@dataclass(frozen=True)
class JonesAmpPhase:
    """Real amplitudes and phases of the two linear Jones components."""

    a1: float
    a2: float
    phi1: float
    phi2: float

    def __post_init__(self):
        if self.a1 < 0.0 or self.a2 < 0.0:
            raise ValueError("Jones amplitudes must be nonnegative")


@dataclass
class PoincareFrame:
    """Sphere point r with tangent pair (m_re, m_im); right-handed orthonormal."""

    r: np.ndarray
    m_re: np.ndarray
    m_im: np.ndarray


def spinor_from_angles(angles):
    """Spinor e^{-i chi/2}(e^{-i phi/2} cos(theta/2), e^{i phi/2} sin(theta/2))."""
    half_t = 0.5 * angles.theta
    phase = cmath.exp(-0.5j * angles.chi)
    return Spinor2(
        phase * cmath.exp(-0.5j * angles.phi) * math.cos(half_t),
        phase * cmath.exp(0.5j * angles.phi) * math.sin(half_t),
    )


def angles_from_spinor(s):
    """Invert spinor_from_angles, up to the global-sign (chi + 2pi) ambiguity.

    At the poles (one component vanishing) phi is set to 0.
    """
    s.require_unit()
    a1, a2 = abs(s.c1), abs(s.c2)
    theta = 2.0 * math.atan2(a2, a1)
    pole_tol = 1e-15
    if a2 <= pole_tol:
        theta = 0.0
        return AngleSet(theta, 0.0, _wrap_2pi(-2.0 * cmath.phase(s.c1)))
    if a1 <= pole_tol:
        theta = math.pi
        return AngleSet(theta, 0.0, _wrap_2pi(-2.0 * cmath.phase(s.c2)))
    g1 = cmath.phase(s.c1)  # -chi/2 - phi/2  (mod 2pi)
    g2 = cmath.phase(s.c2)  # -chi/2 + phi/2  (mod 2pi)
    phi = _wrap_2pi(g2 - g1)
    chi = _wrap_2pi(-(g1 + g2))
    return AngleSet(theta, phi, chi)


def ellipse_from_wave(w):
    """Polarization-ellipse semiaxes; b > 0 for right-hand polarization."""
    ang = angles_from_spinor(w.spinor)
    half_t = 0.5 * ang.theta
    a = w.amplitude * (math.cos(half_t) + math.sin(half_t))
    b = w.amplitude * (math.cos(half_t) - math.sin(half_t))
    return EllipseParams(a, b, 0.5 * ang.phi)


def poincare_frame(s):
    """Vectors r_i = o^dag sigma_i o and M_i = o^t eps sigma_i o, M split re/im."""
    s.require_unit()
    o = s.as_array()
    r = np.array([(o.conj() @ SIGMA[i] @ o).real for i in (1, 2, 3)])
    m = np.array([o @ (EPSILON @ SIGMA[i]) @ o for i in (1, 2, 3)])
    return PoincareFrame(r, m.real.copy(), m.imag.copy())


def stokes_from_wave(w):
    """Stokes parameters with the flux normalization s0 = A^2."""
    s0 = w.amplitude**2
    r = poincare_frame(w.spinor).r
    return StokesVector(s0, s0 * r[0], s0 * r[1], s0 * r[2])


def wave_from_stokes(s, tol=1e-9):
    """WaveState for a pure Stokes vector (|s_vec| = s0); chi is set to 0."""
    from .errors import InvalidStokesError

    norm = float(np.linalg.norm(s.vec3()))
    if s.s0 <= 0.0:
        raise InvalidStokesError(f"s0 must be positive for a pure state: {s.s0}")
    if abs(norm - s.s0) > tol * s.s0:
        raise InvalidStokesError(
            f"Stokes vector is not pure: |s_vec| = {norm}, s0 = {s.s0}"
        )
    sxy = math.hypot(s.s1, s.s2)
    if sxy <= 1e-12 * norm:
        ang = AngleSet(0.0 if s.s3 > 0.0 else math.pi, 0.0, 0.0)
    else:
        theta = math.acos(max(-1.0, min(1.0, s.s3 / norm)))
        phi = _wrap_2pi(math.atan2(s.s2, s.s1))
        ang = AngleSet(theta, phi, 0.0)
    return WaveState(math.sqrt(s.s0), spinor_from_angles(ang))


def jones_from_wave(w):
    """Jones spinor o_tilde = U o and the prefactor sqrt(2) e^{-i pi/4} A.

    The physical Jones components are prefactor * e^{i(kz - wt)} * o_tilde;
    their real parts at t = z = 0 are the sampled field there.
    """
    o_tilde = U_BASIS @ w.spinor.as_array()
    return o_tilde, JONES_PREFACTOR_UNIT * w.amplitude


def wave_from_jones(j):
    """WaveState from linear-basis amplitudes/phases; inverse of jones_from_wave.

    The prefactor sqrt(2) e^{-i pi/4} A is divided out so round-trips are
    exact including the global phase.
    """
    if j.a1 == 0.0 and j.a2 == 0.0:
        raise ZeroFieldError("both Jones amplitudes are zero")
    amp = math.sqrt(0.5 * (j.a1**2 + j.a2**2))
    jones = np.array(
        [j.a1 * cmath.exp(1j * j.phi1), j.a2 * cmath.exp(1j * j.phi2)]
    )
    o = U_BASIS_INV @ (jones / (JONES_PREFACTOR_UNIT * amp))
    return WaveState(amp, Spinor2(o[0], o[1]).normalized())


def basis_permutation_check(tol=1e-15):
    """Library self-test: conjugation by U permutes sigma1->sigma3->sigma2->sigma1."""
    results = []
    for i, j in ((1, 3), (2, 1), (3, 2)):
        lhs = U_BASIS @ SIGMA[i] @ U_BASIS_INV
        results.append(bool(np.max(np.abs(lhs - SIGMA[j])) <= tol))
    return tuple(results)


def field_sample(w, omega, k, t, z):
    """Real field (E_x, E_y) via E_x + i E_y = A(e^{i tau} conj(c1) + e^{-i tau} c2)."""
    tau = omega * t - k * z
    e = w.amplitude * (
        cmath.exp(1j * tau) * w.spinor.c1.conjugate()
        + cmath.exp(-1j * tau) * w.spinor.c2
    )
    return e.real, e.imag


def su2_to_so3(q, tol=1e-10):
    """SO(3) image of Q in SU(2): a_ij = (1/2) tr(sigma_j Q^dag sigma_i Q).

    For o' = Q o the frame vectors transform as r' = a r and M' = a M.
    """
    q = np.asarray(q, dtype=complex)
    if np.max(np.abs(q.conj().T @ q - np.eye(2))) > tol:
        raise NonUnitaryError("matrix is not unitary")
    if abs(np.linalg.det(q) - 1.0) > tol:
        raise NonUnimodularError("matrix determinant is not 1")
    a = np.empty((3, 3))
    qdag = q.conj().T
    for i in range(3):
        conj_i = qdag @ SIGMA[i + 1] @ q
        for j in range(3):
            a[i, j] = 0.5 * np.trace(SIGMA[j + 1] @ conj_i).real
    return a


def pancharatnam_phase(s1, s2, tol=1e-12):
    """arg(s1^dag s2) in (-pi, pi]; zero means the waves are in phase."""
    inner = complex(s1.as_array().conj() @ s2.as_array())
    if abs(inner) < tol:
        raise OrthogonalStatesError(
            "states are orthogonal; relative phase undefined"
        )
    return cmath.phase(inner)


def mate(s):
    """Orthogonal unit spinor (-conj(c2), conj(c1)); its sphere point is antipodal."""
    return Spinor2(-s.c2.conjugate(), s.c1.conjugate())
