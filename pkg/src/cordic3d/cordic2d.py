"""Rotation-mode 2-D CORDIC on the 16-bit magnitude / extended angle datapath.

Each micro-rotation is a pair of shift-and-add updates plus one table
lookup::

    d  = +1 if z >= 0 else -1
    x' = x - d * (y >> i)
    y' = y + d * (x >> i)
    z' = z - d * atan_lut[i]

The per-iteration cosine factors are not applied inside the loop; the
outputs carry the aggregate gain ``G_N`` and callers pre-scale the input
vector by ``1/G_N`` when they want unscaled results (see :func:`sin_cos`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from .errors import DomainError, RangeError
from .fixedpoint import RAW_MAX, RAW_MIN, AngleCode, MagCode, angle_code_to_degrees
from .tables import AtanLut, build_atan_lut, cordic_gain, gain_constants

ShiftMode = Literal["truncate", "round"]
SHIFT_MODES = ("truncate", "round")

# Safety margin inside the sum of all table angles (~99.88 deg for N=16).
CONVERGENCE_LIMIT_DEG = 99.0


@dataclass(frozen=True)
class CordicConfig:
    n_iterations: int = 16
    frac_bits: int = 8
    shift_mode: ShiftMode = "truncate"
    range_check: bool = True

    def __post_init__(self):
        if self.shift_mode not in SHIFT_MODES:
            raise ValueError(f"shift_mode must be one of {SHIFT_MODES}, got {self.shift_mode!r}")

    def lut(self) -> AtanLut:
        return build_atan_lut(self.n_iterations, self.frac_bits)


DEFAULT_CONFIG = CordicConfig()


@dataclass(frozen=True)
class CordicState:
    x: int
    y: int
    z: int  # extended angle counts
    i: int = 0


class Rotation(NamedTuple):
    x: MagCode
    y: MagCode
    z: int  # residual angle, extended counts


def _shift(v: int, i: int, mode: str) -> int:
    if mode == "round" and i:
        return (v + (1 << (i - 1))) >> i
    return v >> i


def micro_rotation(s: CordicState, lut: AtanLut, shift_mode: ShiftMode = "truncate") -> CordicState:
    i = s.i
    if i >= lut.n_iterations:
        raise IndexError(f"iteration {i} exhausted; table has {lut.n_iterations} entries")
    d = 1 if s.z >= 0 else -1
    ys = _shift(s.y, i, shift_mode)
    xs = _shift(s.x, i, shift_mode)
    return CordicState(s.x - d * ys, s.y + d * xs, s.z - d * lut.entries[i], i + 1)


def _resolve(lut: AtanLut | None, cfg: CordicConfig | None) -> tuple[AtanLut, CordicConfig]:
    cfg = cfg or DEFAULT_CONFIG
    lut = lut or cfg.lut()
    if lut.n_iterations != cfg.n_iterations or lut.frac_bits != cfg.frac_bits:
        raise ValueError(
            f"table (n={lut.n_iterations}, F={lut.frac_bits}) does not match "
            f"config (n={cfg.n_iterations}, F={cfg.frac_bits})"
        )
    return lut, cfg


def max_safe_magnitude(n_iterations: int) -> int:
    """Largest input vector length (counts) whose gain-scaled orbit stays in 16 bits."""
    return math.floor((RAW_MAX - n_iterations) / cordic_gain(n_iterations))


def _check_inputs(x0: int, y0: int, z0: AngleCode, cfg: CordicConfig):
    if not cfg.range_check:
        return
    deg = angle_code_to_degrees(z0)
    if abs(deg) > CONVERGENCE_LIMIT_DEG:
        raise DomainError(
            f"angle {z0.hex()} ({deg:.4f} deg) outside convergence range "
            f"+/-{CONVERGENCE_LIMIT_DEG} deg"
        )
    limit = max_safe_magnitude(cfg.n_iterations)
    if math.hypot(x0, y0) > limit:
        raise RangeError(
            f"input vector ({x0}, {y0}) longer than {limit} counts would overflow the 16-bit datapath"
        )


def iterate(x0: int, y0: int, z0_ext: int, lut: AtanLut, shift_mode: ShiftMode = "truncate"):
    """Run every micro-rotation on raw integers; yields each intermediate state."""
    s = CordicState(x0, y0, z0_ext, 0)
    for _ in range(lut.n_iterations):
        s = micro_rotation(s, lut, shift_mode)
        if not (RAW_MIN <= s.x <= RAW_MAX and RAW_MIN <= s.y <= RAW_MAX):
            raise RangeError(f"datapath overflow at iteration {s.i - 1}: x={s.x}, y={s.y}")
        yield s


def rotate2d(
    x0: MagCode,
    y0: MagCode,
    z0: AngleCode,
    lut: AtanLut | None = None,
    cfg: CordicConfig | None = None,
) -> Rotation:
    """Rotate (x0, y0) by z0; outputs are scaled by the CORDIC gain."""
    lut, cfg = _resolve(lut, cfg)
    _check_inputs(x0.raw, y0.raw, z0, cfg)
    *_, s = iterate(x0.raw, y0.raw, z0.to_ext(cfg.frac_bits), lut, cfg.shift_mode)
    return Rotation(MagCode(s.x), MagCode(s.y), s.z)


def directions(z0: AngleCode, lut: AtanLut | None = None, cfg: CordicConfig | None = None) -> list[int]:
    """The +/-1 rotation directions chosen by the fixed-point loop for angle z0."""
    lut, cfg = _resolve(lut, cfg)
    z = z0.to_ext(cfg.frac_bits)
    out = []
    for a in lut.entries:
        d = 1 if z >= 0 else -1
        out.append(d)
        z -= d * a
    return out


def rotate_float(x0: float, y0: float, dirs) -> tuple[float, float]:
    """Real-arithmetic micro-rotations along a given direction sequence (no K_i)."""
    x, y = float(x0), float(y0)
    for i, d in enumerate(dirs):
        t = d * 2.0 ** -i
        x, y = x - y * t, y + x * t
    return x, y


def residual_bound(lut: AtanLut) -> int:
    """Upper bound on |z_n| after a full in-range run, in extended counts."""
    return lut.entries[-1] + lut.n_iterations


def sin_cos(theta: AngleCode, lut: AtanLut | None = None, cfg: CordicConfig | None = None) -> tuple[MagCode, MagCode]:
    """(cos, sin) of theta as MagCodes, by rotating (1/G, 0)."""
    lut, cfg = _resolve(lut, cfg)
    inv_gain = gain_constants(cfg.n_iterations).inv_gain_code
    x, y, _ = rotate2d(inv_gain, MagCode(0), theta, lut, cfg)
    return x, y


def polar_to_cartesian(
    r: MagCode, theta: AngleCode, lut: AtanLut | None = None, cfg: CordicConfig | None = None
) -> tuple[MagCode, MagCode]:
    """(G*r*cos(theta), G*r*sin(theta)); pass r pre-scaled by 1/G for unscaled output."""
    x, y, _ = rotate2d(r, MagCode(0), theta, lut, cfg)
    return x, y


def rotate2d_array(x0, y0, z0, lut: AtanLut | None = None, cfg: CordicConfig | None = None):
    """Vectorized :func:`rotate2d` over raw integer arrays; bit-identical to the scalar path.

    Returns ``(x, y, z)`` int64 arrays (z in extended counts).
    """
    lut, cfg = _resolve(lut, cfg)
    x, y, z = np.broadcast_arrays(
        np.asarray(x0, dtype=np.int64), np.asarray(y0, dtype=np.int64), np.asarray(z0, dtype=np.int64)
    )
    if cfg.range_check:
        deg = np.abs(z) * (720 / 65536)
        if np.any(deg > CONVERGENCE_LIMIT_DEG):
            bad = int(z[np.argmax(deg)])
            raise DomainError(f"angle {bad} counts outside convergence range +/-{CONVERGENCE_LIMIT_DEG} deg")
        if np.any(np.hypot(x, y) > max_safe_magnitude(cfg.n_iterations)):
            raise RangeError("input vector would overflow the 16-bit datapath")
    x, y = x.copy(), y.copy()
    z = z << cfg.frac_bits
    for i, a in enumerate(lut.entries):
        d = np.where(z >= 0, 1, -1)
        if cfg.shift_mode == "round" and i:
            h = 1 << (i - 1)
            ys, xs = (y + h) >> i, (x + h) >> i
        else:
            ys, xs = y >> i, x >> i
        x, y, z = x - d * ys, y + d * xs, z - d * a
        if x.size and (x.min() < RAW_MIN or x.max() > RAW_MAX or y.min() < RAW_MIN or y.max() > RAW_MAX):
            raise RangeError(f"datapath overflow at iteration {i}")
    return x, y, z
