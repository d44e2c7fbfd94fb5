"""Exception types shared across the package."""


class PolspinError(Exception):
    """Base class for all polspin errors."""


class NonUnitaryError(PolspinError):
    """Matrix expected to be unitary is not."""


class NonUnimodularError(PolspinError):
    """Matrix expected to have determinant 1 does not."""


class OrthogonalStatesError(PolspinError):
    """Relative phase requested between orthogonal (antipodal) states."""


class ZeroFieldError(PolspinError):
    """Jones amplitudes are both zero; no wave to construct."""


class ExtinctionError(PolspinError):
    """Filter annihilated the state; renormalization impossible."""


class EmptyTrainError(PolspinError):
    """Operation requires at least one optical element."""


class InvalidStokesError(PolspinError):
    """Stokes vector violates s0 >= 0 or s0^2 >= s1^2 + s2^2 + s3^2."""


class ZeroFluxError(PolspinError):
    """Degree of polarization undefined at zero total flux."""
