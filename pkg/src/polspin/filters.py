"""Optical elements as 2x2 matrix actions on spinors and Jones vectors.

Each element factors into (scale, m) with m unimodular, so the Poincare
rotation of the SU(2) part can always be read off m alone while phase and
attenuation prefactors live in scale.  Circular-basis matrices:

    phase shifter   scale e^{-i(d1+d2)/2},  m = exp(i (d/2) sigma1), d = d2-d1
    rotator         m = exp(i alpha sigma3)
    gyrotropic      scale e^{-i(d1+d2)/2},  m = exp(i (d/2) sigma3)
    quarter-wave    m = (1/sqrt 2)[1 - i cos(2a) sigma1 - i sin(2a) sigma2]
    half-wave       square of the quarter-wave matrix
    attenuator      scale e^{-(e1+e2)/2},   m = exp((e/2) sigma1),  e = e2-e1

Linear-basis matrices are U m U^-1 with the same scale.  Composition is in
propagation order: the first element of a train is the rightmost factor.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import EmptyTrainError, ExtinctionError
from .pauli import SIGMA0, SIGMA1, SIGMA2, SIGMA3, U_BASIS, U_BASIS_INV
from .spinor import Spinor2, WaveState, su2_to_so3


@dataclass(frozen=True)
class PhaseShifter:
    delta1: float
    delta2: float


@dataclass(frozen=True)
class Rotator:
    alpha: float


@dataclass(frozen=True)
class Gyrotropic:
    delta1: float
    delta2: float


@dataclass(frozen=True)
class QuarterWave:
    axis_angle: float


@dataclass(frozen=True)
class HalfWave:
    axis_angle: float


@dataclass(frozen=True)
class Attenuator:
    eta1: float
    eta2: float

    def __post_init__(self):
        if self.eta1 < 0.0 or self.eta2 < 0.0:
            raise ValueError("attenuation exponents must be nonnegative")


FilterElement = Union[
    PhaseShifter, Rotator, Gyrotropic, QuarterWave, HalfWave, Attenuator
]


@dataclass(frozen=True)
class ElementMatrix:
    """Unimodular 2x2 matrix m with the overall coefficient factored into scale."""

    m: np.ndarray
    scale: complex
    basis: str

    def full(self):
        return self.scale * self.m


@dataclass(frozen=True)
class PoincareRotation:
    axis: np.ndarray
    angle: float


@dataclass(frozen=True)
class ConformalMap:
    boost_axis: np.ndarray
    rapidity: float


def _qwp_matrix(axis_angle):
    c, s = math.cos(2.0 * axis_angle), math.sin(2.0 * axis_angle)
    return (SIGMA0 - 1j * c * SIGMA1 - 1j * s * SIGMA2) / math.sqrt(2.0)


def matrix_circular(e):
    """Circular-basis (scale, m) for one element."""
    if isinstance(e, PhaseShifter):
        d = e.delta2 - e.delta1
        m = math.cos(0.5 * d) * SIGMA0 + 1j * math.sin(0.5 * d) * SIGMA1
        return ElementMatrix(m, cmath.exp(-0.5j * (e.delta1 + e.delta2)), "circular")
    if isinstance(e, Rotator):
        m = np.diag([cmath.exp(1j * e.alpha), cmath.exp(-1j * e.alpha)])
        return ElementMatrix(m, 1.0 + 0.0j, "circular")
    if isinstance(e, Gyrotropic):
        d = e.delta2 - e.delta1
        m = np.diag([cmath.exp(0.5j * d), cmath.exp(-0.5j * d)])
        return ElementMatrix(m, cmath.exp(-0.5j * (e.delta1 + e.delta2)), "circular")
    if isinstance(e, QuarterWave):
        return ElementMatrix(_qwp_matrix(e.axis_angle), 1.0 + 0.0j, "circular")
    if isinstance(e, HalfWave):
        q = _qwp_matrix(e.axis_angle)
        return ElementMatrix(q @ q, 1.0 + 0.0j, "circular")
    if isinstance(e, Attenuator):
        h = 0.5 * (e.eta2 - e.eta1)
        m = math.cosh(h) * SIGMA0 + math.sinh(h) * SIGMA1
        return ElementMatrix(m, cmath.exp(-0.5 * (e.eta1 + e.eta2)), "circular")
    raise TypeError(f"not a filter element: {e!r}")


def matrix_linear(e):
    """Linear-basis matrix U m U^-1, same scale."""
    em = matrix_circular(e)
    return ElementMatrix(U_BASIS @ em.m @ U_BASIS_INV, em.scale, "linear")


def element_matrix(e, basis="circular"):
    if basis == "circular":
        return matrix_circular(e)
    if basis == "linear":
        return matrix_linear(e)
    raise ValueError(f"unknown basis tag: {basis!r}")


def apply(e, w):
    """Pass a wave through one element: v = scale * m * o, A' = A ||v||.

    The global phase of v is retained in the spinor components, so the
    Pancharatnam phase against the input reflects the element's phase.
    """
    em = matrix_circular(e)
    v = em.full() @ w.spinor.as_array()
    n = float(np.linalg.norm(v))
    if n < 1e-300:
        raise ExtinctionError("filter annihilated the state")
    return WaveState(w.amplitude * n, Spinor2(v[0] / n, v[1] / n))


def classify(e):
    """Rotation (axis, angle) for SU(2) elements; conformal map for attenuators.

    An SU(2) matrix exp(i (psi/2) n.sigma) rotates the Poincare sphere by
    -psi about n; the angle is reported with psi in [0, 2pi].
    """
    if isinstance(e, Attenuator):
        return ConformalMap(np.array([1.0, 0.0, 0.0]), e.eta2 - e.eta1)
    m = matrix_circular(e).m
    c = 0.5 * np.trace(m).real
    v = np.array([0.5 * np.trace(s @ m).imag for s in (SIGMA1, SIGMA2, SIGMA3)])
    vn = float(np.linalg.norm(v))
    psi = 2.0 * math.atan2(vn, c)
    if vn < 1e-15:
        axis = np.array([1.0, 0.0, 0.0])  # identity (or -I); axis arbitrary
    else:
        axis = v / vn
    return PoincareRotation(axis, -psi)


def rotation_matrix(e):
    """SO(3) action of an SU(2) element on sphere points."""
    return su2_to_so3(matrix_circular(e).m)


def compose(train, basis="circular"):
    """Matrix of a train, first element applied first (rightmost factor)."""
    if not train:
        raise EmptyTrainError("train has no elements")
    mats = [element_matrix(e, basis) for e in train]
    m = np.eye(2, dtype=complex)
    scale = 1.0 + 0.0j
    for em in mats:
        m = em.m @ m
        scale *= em.scale
    return ElementMatrix(m, scale, basis)
