"""Beam JSON handling shared by the CLI and the train runner.

A beam JSON object takes exactly one of three forms:

    {"angles": {"theta": r, "phi": r, "chi": r, "amp": r}}
    {"stokes": [s0, s1, s2, s3]}
    {"jones": {"a1": r, "a2": r, "phi1": r, "phi2": r}}

Angles are radians.  A Stokes beam may be mixed (s0^2 > |s_vec|^2); the
other two forms always describe a pure wave.
"""

import json
from dataclasses import dataclass
from typing import Optional

from . import dsl
from .errors import InvalidStokesError, PolspinError
from .spinor import (
    AngleSet,
    JonesAmpPhase,
    StokesVector,
    WaveState,
    spinor_from_angles,
    stokes_from_wave,
    wave_from_jones,
    wave_from_stokes,
)

PURITY_TOL = 1e-12


@dataclass
class Beam:
    """Either a pure wave (wave set) or a mixed Stokes beam (wave None)."""

    stokes: StokesVector
    wave: Optional[WaveState] = None

    @property
    def pure(self):
        return self.wave is not None


class BeamFormatError(PolspinError):
    """Beam JSON does not match any accepted form."""


def _require_number(obj, key, where):
    v = obj.get(key)
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise BeamFormatError(f"{where}.{key} must be a number")
    return float(v)


def beam_from_wave(wave):
    return Beam(stokes_from_wave(wave), wave)


def beam_from_stokes(s, tol=PURITY_TOL):
    """Classify a Stokes vector as pure or mixed; reject over-polarized input."""
    from .partial import degree_of_polarization, purity_invariant

    if s.s0 < 0.0:
        raise InvalidStokesError(f"s0 must be nonnegative: {s.s0}")
    if purity_invariant(s) < -1e-9 * max(s.s0**2, 1e-30):
        raise InvalidStokesError("over-polarized Stokes vector")
    if s.s0 > 0.0 and degree_of_polarization(s) >= 1.0 - tol:
        return Beam(s, wave_from_stokes(s))
    return Beam(s, None)


def parse_beam_json(text, tol=PURITY_TOL):
    """Parse one beam JSON object into a Beam."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BeamFormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict) or len(obj) != 1:
        raise BeamFormatError(
            "beam JSON must be an object with exactly one of "
            "'angles', 'stokes', 'jones'"
        )
    (form, body), = obj.items()
    if form == "angles":
        if not isinstance(body, dict):
            raise BeamFormatError("'angles' must map to an object")
        vals = {k: _require_number(body, k, "angles") for k in ("theta", "phi", "chi", "amp")}
        try:
            ang = AngleSet(vals["theta"], vals["phi"], vals["chi"])
            wave = WaveState(vals["amp"], spinor_from_angles(ang))
        except ValueError as exc:
            raise BeamFormatError(str(exc)) from exc
        return beam_from_wave(wave)
    if form == "stokes":
        if not isinstance(body, list) or len(body) != 4 or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in body
        ):
            raise BeamFormatError("'stokes' must be a list of four numbers")
        return beam_from_stokes(StokesVector(*(float(v) for v in body)), tol)
    if form == "jones":
        if not isinstance(body, dict):
            raise BeamFormatError("'jones' must map to an object")
        vals = {k: _require_number(body, k, "jones") for k in ("a1", "a2", "phi1", "phi2")}
        try:
            wave = wave_from_jones(JonesAmpPhase(**vals))
        except (ValueError, PolspinError) as exc:
            raise BeamFormatError(str(exc)) from exc
        return beam_from_wave(wave)
    raise BeamFormatError(f"unknown beam form {form!r}")


def beam_from_decl(decl, tol=PURITY_TOL):
    """Beam from a parsed `.pol` beam declaration."""
    if isinstance(decl, dsl.AnglesBeam):
        ang = AngleSet(decl.theta, decl.phi, decl.chi)
        return beam_from_wave(WaveState(decl.amp, spinor_from_angles(ang)))
    if isinstance(decl, dsl.StokesBeam):
        return beam_from_stokes(
            StokesVector(decl.s0, decl.s1, decl.s2, decl.s3), tol
        )
    if isinstance(decl, dsl.JonesBeam):
        return beam_from_wave(
            wave_from_jones(JonesAmpPhase(decl.a1, decl.a2, decl.phi1, decl.phi2))
        )
    raise TypeError(f"not a beam declaration: {decl!r}")
