"""Coherency-matrix handling of possibly partially polarized beams.

C = (1/2) sum_a s_a sigma_a is Hermitian positive semidefinite with
tr C = s0, det C = S/4 and tr C^2 = s0^2 - S/2, where S = s0^2 - |s_vec|^2
vanishes exactly for pure states.  Its eigenspinors mark two antipodal
points of the Poincare sphere; a filter acts by C -> (scale m) C (scale m)^dag.

In the linear basis the same Stokes parameters are read off with the
permuted Pauli set, giving C_tilde = U C U^dag =
(1/2)[[s0+s1, s2-i s3], [s2+i s3, s0-s1]].
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyTrainError, InvalidStokesError, ZeroFluxError
from .filters import compose, element_matrix
from .pauli import sigma_set
from .spinor import StokesVector

PSD_TOL = 1e-9


@dataclass(frozen=True)
class CoherencyMatrix:
    """2x2 Hermitian PSD matrix in flux-density units, with its basis tag."""

    matrix: np.ndarray
    basis: str = "circular"

    def __post_init__(self):
        c = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", c)
        scale = max(float(np.trace(c).real), 1.0e-30)
        if np.max(np.abs(c - c.conj().T)) > 1e-12 * scale:
            raise ValueError("coherency matrix is not Hermitian")
        lo = _min_eigenvalue(c)
        if lo < -PSD_TOL * scale:
            raise ValueError("coherency matrix is not positive semidefinite")

    def trace(self):
        return float(np.trace(self.matrix).real)

    def to_basis(self, basis):
        from .pauli import U_BASIS, U_BASIS_INV

        if basis == self.basis:
            return self
        if self.basis == "circular" and basis == "linear":
            m = U_BASIS @ self.matrix @ U_BASIS.conj().T
        elif self.basis == "linear" and basis == "circular":
            m = U_BASIS_INV @ self.matrix @ U_BASIS_INV.conj().T
        else:
            raise ValueError(f"unknown basis tag: {basis!r}")
        return CoherencyMatrix(m, basis)


@dataclass(frozen=True)
class PolarizationDecomposition:
    """Antipodal sphere points with their flux weights, larger first."""

    point_plus: np.ndarray
    point_minus: np.ndarray
    lambda_plus: float
    lambda_minus: float
    degenerate: bool


def _min_eigenvalue(c):
    # closed-form 2x2 Hermitian spectrum: (tr +- sqrt(tr^2 - 4 det)) / 2
    tr = np.trace(c).real
    det = np.linalg.det(c).real
    disc = max(tr * tr - 4.0 * det, 0.0)
    return 0.5 * (tr - math.sqrt(disc))


def coherency_from_stokes(s, basis="circular"):
    """C = (1/2) sum s_a sigma_a, using the Pauli set of the requested basis."""
    if s.s0 < 0.0:
        raise InvalidStokesError(f"s0 must be nonnegative: {s.s0}")
    excess = s.s1**2 + s.s2**2 + s.s3**2 - s.s0**2
    if excess > PSD_TOL * max(s.s0**2, 1e-30):
        raise InvalidStokesError(
            f"over-polarized Stokes vector: |s_vec|^2 - s0^2 = {excess}"
        )
    sig = sigma_set(basis)
    c = 0.5 * sum(s.as_array()[a] * sig[a] for a in range(4))
    return CoherencyMatrix(c, basis)


def stokes_from_coherency(c):
    """s_a = tr(C sigma_a); exact inverse of coherency_from_stokes."""
    sig = sigma_set(c.basis)
    vals = [float(np.trace(c.matrix @ sig[a]).real) for a in range(4)]
    return StokesVector(*vals)


def purity_invariant(s):
    """S = s0^2 - s1^2 - s2^2 - s3^2; zero for a completely polarized beam."""
    return s.s0**2 - s.s1**2 - s.s2**2 - s.s3**2


def degree_of_polarization(s):
    """|s_vec| / s0, in [0, 1]."""
    if s.s0 == 0.0:
        raise ZeroFluxError("degree of polarization undefined at s0 = 0")
    return float(np.linalg.norm(s.vec3())) / s.s0


def eig_decompose(c):
    """Closed-form eigen-decomposition into two antipodal sphere points.

    Eigenvalues are (s0 +- |s_vec|)/2.  For unpolarized light the
    eigenvectors are not unique; the points are fixed at +-(0, 0, 1) and
    the result is flagged degenerate.
    """
    s = stokes_from_coherency(c)
    svec = s.vec3()
    norm = float(np.linalg.norm(svec))
    lam_plus = 0.5 * (s.s0 + norm)
    lam_minus = 0.5 * (s.s0 - norm)
    if norm < 1e-12 * max(s.s0, 1e-30):
        return PolarizationDecomposition(
            np.array([0.0, 0.0, 1.0]),
            np.array([0.0, 0.0, -1.0]),
            lam_plus,
            lam_minus,
            True,
        )
    point = svec / norm
    return PolarizationDecomposition(point, -point, lam_plus, lam_minus, False)


def apply_filter_to_coherency(e, c):
    """C -> F C F^dag with F = scale * m taken in the matrix basis of c."""
    f = element_matrix(e, c.basis).full()
    return CoherencyMatrix(f @ c.matrix @ f.conj().T, c.basis)


def apply_train_to_coherency(train, c):
    f = compose(train, c.basis).full()
    return CoherencyMatrix(f @ c.matrix @ f.conj().T, c.basis)


def mueller_of_train(train, basis="circular"):
    """4x4 real Stokes-space matrix of a train.

    Column a is the Stokes image of the basis matrix (1/2) sigma_a under
    C -> F C F^dag.  The sigma probes are not physical coherency matrices,
    so the conjugation is done on raw arrays.
    """
    if not train:
        raise EmptyTrainError("train has no elements")
    f = compose(train, basis).full()
    sig = sigma_set(basis)
    mm = np.empty((4, 4))
    for col in range(4):
        image = f @ (0.5 * sig[col]) @ f.conj().T
        for row in range(4):
            mm[row, col] = np.trace(image @ sig[row]).real
    return mm


def apply_mueller(mm, s):
    out = mm @ s.as_array()
    return StokesVector(*out)
