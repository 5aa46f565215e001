"""Floating-point references and theoretical-vs-simulated error reports.

Reports follow the layout of a hardware verification table: one row per
input with a quantized theoretical value, the fixed-point engine's output
and the absolute deviation in counts (1 count = 1e-4 units) for each output
channel, followed by per-channel average deviations.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .cordic2d import CordicConfig, _resolve, rotate2d_array, sin_cos
from .errors import CordicError
from .fixedpoint import AngleCode, MagCode, degrees_to_angle_code, real_to_mag_code
from .spherical3d import GainMode, SphericalInput, spherical_to_cartesian
from .tables import AtanLut, cordic_gain, gain_constants

# Worked cases (r, theta deg, phi deg) with r = 1/G**2 in counts.
TABLE4_ANGLES = (90, 75, 60, 45, 30, 15, -15, -30, -45, -60, -75, -90)
TABLE5_CASES = ((0x0E68, 45, 45), (0x0E68, 60, 30))


def spherical_oracle(r: float, theta_deg: float, phi_deg: float) -> tuple[float, float, float]:
    t, p = math.radians(theta_deg), math.radians(phi_deg)
    st = math.sin(t)
    return r * st * math.cos(p), r * st * math.sin(p), r * math.cos(t)


def polar_oracle(r: float, theta_deg: float) -> tuple[float, float]:
    t = math.radians(theta_deg)
    return r * math.cos(t), r * math.sin(t)


def _angle(a) -> tuple[AngleCode, float]:
    """An AngleCode stands for its exact value; a number is a nominal angle in degrees."""
    if isinstance(a, AngleCode):
        return a, a.degrees
    return degrees_to_angle_code(a), float(a)


@dataclass(frozen=True)
class ErrorRow:
    label: str
    inputs: tuple[str, ...]
    theoretical: tuple[MagCode, ...] | None
    simulated: tuple[MagCode, ...] | None
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error

    @property
    def deviation(self) -> tuple[int, ...] | None:
        if not self.ok:
            return None
        return tuple(abs(t.raw - s.raw) for t, s in zip(self.theoretical, self.simulated))


@dataclass
class ErrorReport:
    channels: tuple[str, ...]
    input_names: tuple[str, ...]
    rows: list[ErrorRow] = field(default_factory=list)

    def deviations(self, channel: str) -> list[int]:
        k = self.channels.index(channel)
        return [r.deviation[k] for r in self.rows if r.ok]

    @property
    def averages(self) -> dict[str, Fraction | None]:
        """Mean deviation per channel (exact); None when no row succeeded."""
        out = {}
        for ch in self.channels:
            d = self.deviations(ch)
            out[ch] = Fraction(sum(d), len(d)) if d else None
        return out

    @property
    def maxima(self) -> dict[str, int | None]:
        return {ch: max(self.deviations(ch), default=None) for ch in self.channels}

    def header(self) -> list[str]:
        cols = ["label", *self.input_names]
        for ch in self.channels:
            cols += [f"{ch}_theoretical", f"{ch}_simulated", f"{ch}_deviation"]
        return cols + ["error"]

    def write_csv(self, fh) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(self.header())
        for r in self.rows:
            line = [r.label, *r.inputs]
            for k in range(len(self.channels)):
                if r.ok:
                    line += [r.theoretical[k].hex(), r.simulated[k].hex(), r.deviation[k]]
                else:
                    line += ["", "", ""]
            w.writerow(line + [r.error])

    def to_csv(self) -> str:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()

    def summary(self) -> str:
        parts = [f"rows={len(self.rows)}"]
        failed = sum(not r.ok for r in self.rows)
        if failed:
            parts.append(f"failed={failed}")
        for ch, avg in self.averages.items():
            if avg is None:
                parts.append(f"avg_{ch}=undefined")
            else:
                parts.append(f"avg_{ch}={float(avg):.4f} max_{ch}={self.maxima[ch]}")
        return " ".join(parts)


def report_2d(angles: Sequence, lut: AtanLut | None = None, cfg: CordicConfig | None = None) -> ErrorReport:
    """cos/sin report for ``sin_cos``.

    Each angle is either an AngleCode (theoretical from its exact value) or a
    number of degrees (theoretical from the nominal angle, as a data sheet
    would list it; the engine sees the floor-quantized code).
    """
    lut, cfg = _resolve(lut, cfg)
    rep = ErrorReport(("x", "y"), ("z_deg", "z_hex"))
    for a in angles:
        code, deg = _angle(a)
        inputs = (f"{deg:g}", code.hex())
        try:
            th = tuple(real_to_mag_code(v) for v in polar_oracle(1.0, deg))
            sim = sin_cos(code, lut, cfg)
        except CordicError as e:
            rep.rows.append(ErrorRow(f"{deg:g}", inputs, None, None, str(e)))
            continue
        rep.rows.append(ErrorRow(f"{deg:g}", inputs, th, tuple(sim)))
    return rep


def theoretical_3d(r: float, theta_deg: float, phi_deg: float, mode: GainMode, n_iterations: int):
    """Expected real-valued output of the cascade, including the mode's gain law."""
    x, y, z = spherical_oracle(r, theta_deg, phi_deg)
    if GainMode(mode) is GainMode.PAPER:
        g = cordic_gain(n_iterations)
        return x * g * g, y * g * g, z * g
    return x, y, z


def report_3d(
    cases: Sequence,
    mode: GainMode = GainMode.PAPER,
    lut: AtanLut | None = None,
    cfg: CordicConfig | None = None,
) -> ErrorReport:
    """x/y/z report for the cascade; cases are SphericalInput or (r, theta, phi) tuples.

    In a tuple, r is a MagCode or raw count and theta/phi follow the same
    AngleCode-vs-degrees convention as :func:`report_2d`.
    """
    lut, cfg = _resolve(lut, cfg)
    rep = ErrorReport(("x", "y", "z"), ("r_hex", "theta_deg", "theta_hex", "phi_deg", "phi_hex"))
    for case in cases:
        if isinstance(case, SphericalInput):
            r, theta, phi = case.r, case.theta, case.phi
        else:
            r, theta, phi = case
        r = r if isinstance(r, MagCode) else MagCode(int(r))
        (tc, td), (pc, pd) = _angle(theta), _angle(phi)
        label = f"{td:g}/{pd:g}"
        inputs = (r.hex(), f"{td:g}", tc.hex(), f"{pd:g}", pc.hex())
        try:
            th = tuple(real_to_mag_code(v) for v in theoretical_3d(r.real, td, pd, mode, cfg.n_iterations))
            sim = spherical_to_cartesian(SphericalInput(r, tc, pc), mode, lut, cfg)
        except CordicError as e:
            rep.rows.append(ErrorRow(label, inputs, None, None, str(e)))
            continue
        rep.rows.append(ErrorRow(label, inputs, th, tuple(sim)))
    return rep


def grid_cases(step: float = 5, lo: float = 5, hi: float = 85, r=None, mode=GainMode.PAPER, n_iterations=16):
    """(r, theta, phi) over a square grid of nominal degrees, theta-major."""
    if r is None:
        r = gain_constants(n_iterations).inv_gain_sq_code if GainMode(mode) is GainMode.PAPER else MagCode(10_000)
    ticks = np.arange(lo, hi + step / 2, step)
    return [(r, float(t), float(p)) for t in ticks for p in ticks]


def report_grid(step: float = 5, mode=GainMode.PAPER, lut=None, cfg=None, r=None) -> ErrorReport:
    lut, cfg = _resolve(lut, cfg)
    return report_3d(grid_cases(step, r=r, mode=mode, n_iterations=cfg.n_iterations), mode, lut, cfg)


def report_table4(lut=None, cfg=None) -> ErrorReport:
    return report_2d(TABLE4_ANGLES, lut, cfg)


def report_table5(mode=GainMode.PAPER, lut=None, cfg=None) -> ErrorReport:
    return report_3d(TABLE5_CASES, mode, lut, cfg)


class SweepResult(NamedTuple):
    count: int
    max_deviation: int
    mean_deviation: float
    worst_code: AngleCode
    max_x: int
    max_y: int


def sweep_2d(lo: int = -0x2000, hi: int = 0x2000, lut=None, cfg=None) -> SweepResult:
    """Exhaustive sin_cos check over every angle code in [lo, hi] against the quantized oracle."""
    lut, cfg = _resolve(lut, cfg)
    codes = np.arange(lo, hi + 1, dtype=np.int64)
    inv_gain = gain_constants(cfg.n_iterations).inv_gain_code.raw
    x, y, _ = rotate2d_array(inv_gain, 0, codes, lut, cfg)
    cos_ref = np.array([real_to_mag_code(math.cos(math.radians(a * 720 / 65536))).raw for a in codes.tolist()])
    sin_ref = np.array([real_to_mag_code(math.sin(math.radians(a * 720 / 65536))).raw for a in codes.tolist()])
    ex, ey = np.abs(x - cos_ref), np.abs(y - sin_ref)
    both = np.maximum(ex, ey)
    k = int(np.argmax(both))
    return SweepResult(
        count=len(codes),
        max_deviation=int(both.max()),
        mean_deviation=float((ex.sum() + ey.sum()) / (2 * len(codes))),
        worst_code=AngleCode(int(codes[k])),
        max_x=int(ex.max()),
        max_y=int(ey.max()),
    )
