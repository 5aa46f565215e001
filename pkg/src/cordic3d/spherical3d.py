"""Spherical to Cartesian conversion with two cascaded 2-D CORDIC stages.

Stage 1 rotates ``(r, 0)`` by the inclination theta, giving
``(G r cos theta, G r sin theta)``. Stage 2 rotates ``(G r sin theta, 0)``
by the azimuth phi. The Cartesian triple is taken as::

    x, y = stage-2 outputs    (carry G**2)
    z    = stage-1 x output   (carries G)

In ``PAPER`` mode the caller pre-scales r by 1/G**2 and the z channel keeps
its residual 1/G factor, exactly as in the hardware. ``GAIN_CORRECTED``
mode does the pre-scaling itself and multiplies z by G once on the way out.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .cordic2d import CordicConfig, Rotation, _resolve, rotate2d, rotate2d_array
from .errors import RangeError
from .fixedpoint import MAG_SCALE, AngleCode, MagCode
from .tables import AtanLut, gain_constants


class GainMode(str, enum.Enum):
    PAPER = "paper-faithful"
    CORRECTED = "gain-corrected"


@dataclass(frozen=True)
class SphericalInput:
    r: MagCode
    theta: AngleCode  # inclination from the zenith
    phi: AngleCode  # azimuth

    def __post_init__(self):
        if self.r.raw < 0:
            raise RangeError(f"radius must be non-negative, got {self.r.raw}")

    @classmethod
    def from_hex(cls, r: str, theta: str, phi: str) -> SphericalInput:
        return cls(MagCode.from_hex(r), AngleCode.from_hex(theta), AngleCode.from_hex(phi))


class CartesianTriple(NamedTuple):
    x: MagCode
    y: MagCode
    z: MagCode

    def hex(self) -> str:
        return f"X={self.x.hex()} Y={self.y.hex()} Z={self.z.hex()}"

    def real(self) -> tuple[float, float, float]:
        return self.x.real, self.y.real, self.z.real


class Cascade(NamedTuple):
    r_in: MagCode  # radius fed to stage 1 (after any internal pre-scale)
    stage1: Rotation
    stage2: Rotation
    result: CartesianTriple


def _mul_round(a: int, b: int) -> int:
    # round-half-up(a * b / 10**4) in integers
    return (2 * a * b + MAG_SCALE) // (2 * MAG_SCALE)


def cascade(
    inp: SphericalInput,
    mode: GainMode = GainMode.PAPER,
    lut: AtanLut | None = None,
    cfg: CordicConfig | None = None,
) -> Cascade:
    """Run both stages and return every intermediate."""
    lut, cfg = _resolve(lut, cfg)
    mode = GainMode(mode)
    consts = gain_constants(cfg.n_iterations)
    r = inp.r
    if mode is GainMode.CORRECTED:
        r = MagCode(_mul_round(r.raw, consts.inv_gain_sq_code.raw))
    s1 = rotate2d(r, MagCode(0), inp.theta, lut, cfg)
    s2 = rotate2d(s1.y, MagCode(0), inp.phi, lut, cfg)
    z = s1.x
    if mode is GainMode.CORRECTED:
        z = MagCode(_mul_round(z.raw, consts.gain_code.raw))
    return Cascade(r, s1, s2, CartesianTriple(s2.x, s2.y, z))


def spherical_to_cartesian(
    inp: SphericalInput,
    mode: GainMode = GainMode.PAPER,
    lut: AtanLut | None = None,
    cfg: CordicConfig | None = None,
) -> CartesianTriple:
    return cascade(inp, mode, lut, cfg).result


def spherical_to_cartesian_array(r, theta, phi, mode=GainMode.PAPER, lut=None, cfg=None):
    """Vectorized conversion over raw code arrays; order-preserving, bit-identical to the scalar path."""
    lut, cfg = _resolve(lut, cfg)
    mode = GainMode(mode)
    consts = gain_constants(cfg.n_iterations)
    r = np.asarray(r, dtype=np.int64)
    if np.any(r < 0):
        raise RangeError("radius must be non-negative")
    if mode is GainMode.CORRECTED:
        r = (2 * r * consts.inv_gain_sq_code.raw + MAG_SCALE) // (2 * MAG_SCALE)
    a, b, _ = rotate2d_array(r, 0, theta, lut, cfg)
    x, y, _ = rotate2d_array(b, 0, phi, lut, cfg)
    if mode is GainMode.CORRECTED:
        a = (2 * a * consts.gain_code.raw + MAG_SCALE) // (2 * MAG_SCALE)
    return x, y, a


def latency(dims, cfg: CordicConfig | None = None) -> int:
    """Clock cycles from input to result, one per micro-rotation stage."""
    cfg = cfg or CordicConfig()
    stages = {2: 1, "2d": 1, "2-d": 1, 3: 2, "3d": 2, "3-d": 2}
    key = dims.lower() if isinstance(dims, str) else dims
    if key not in stages:
        raise ValueError(f"dims must be 2-D or 3-D, got {dims!r}")
    return stages[key] * cfg.n_iterations
