"""16-bit fixed-point formats for angles and magnitudes.

Two formats are used everywhere in the model:

* ``AngleCode``: two's-complement, 65536 counts per 720 degrees, so
  ``0x2000`` is 90 degrees and one count is ~0.011 degrees.
* ``MagCode``: two's-complement, 10**4 counts per unit, so ``0x1388`` is 0.5.

The angle accumulator inside the CORDIC loop runs at a wider "extended"
scale of ``2**frac_bits`` sub-counts per AngleCode count.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

from .errors import RangeError

WORD_BITS = 16
RAW_MIN = -(1 << (WORD_BITS - 1))
RAW_MAX = (1 << (WORD_BITS - 1)) - 1

ANGLE_COUNTS = 1 << WORD_BITS  # counts per ANGLE_SPAN degrees
ANGLE_SPAN = 720
MAG_SCALE = 10_000


def _exact(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float) and not math.isfinite(v):
        raise RangeError(f"non-finite value {v!r}")
    return Fraction(v)


def round_half_up(q) -> int:
    """floor(q + 1/2), evaluated exactly."""
    return math.floor(_exact(q) + Fraction(1, 2))


def check_word(raw: int, what: str = "value") -> int:
    raw = int(raw)
    if not RAW_MIN <= raw <= RAW_MAX:
        raise RangeError(f"{what} {raw} outside 16-bit range [{RAW_MIN}, {RAW_MAX}]")
    return raw


def to_hex(raw: int) -> str:
    """4-digit uppercase two's-complement hex, no prefix (e.g. -1366 -> 'FAAA')."""
    return f"{check_word(raw) & 0xFFFF:04X}"


def from_hex(text: str) -> int:
    """Parse 1-4 hex digits (optional 0x prefix) as a 16-bit two's-complement word."""
    s = text.strip()
    if s[:2].lower() == "0x":
        s = s[2:]
    if not 1 <= len(s) <= 4:
        raise ValueError(f"expected 1-4 hex digits, got {text!r}")
    try:
        u = int(s, 16)
    except ValueError:
        raise ValueError(f"not a hex word: {text!r}") from None
    return u - (1 << WORD_BITS) if u & 0x8000 else u


@dataclass(frozen=True, order=True)
class AngleCode:
    """Angle in counts of 720/65536 degrees."""

    raw: int

    def __post_init__(self):
        object.__setattr__(self, "raw", check_word(self.raw, "angle code"))

    @classmethod
    def from_hex(cls, text: str) -> AngleCode:
        return cls(from_hex(text))

    @classmethod
    def from_degrees(cls, deg: Real) -> AngleCode:
        return degrees_to_angle_code(deg)

    @property
    def degrees(self) -> float:
        return angle_code_to_degrees(self)

    def hex(self) -> str:
        return to_hex(self.raw)

    def to_ext(self, frac_bits: int) -> int:
        """Widen to the extended accumulator scale."""
        return self.raw << frac_bits

    @classmethod
    def from_ext(cls, ext: int, frac_bits: int) -> AngleCode:
        """Narrow from the extended scale by dropping (flooring) the low bits."""
        return cls(ext >> frac_bits)

    def __int__(self):
        return self.raw

    def __neg__(self):
        return AngleCode(-self.raw)

    def __str__(self):
        return self.hex()


@dataclass(frozen=True, order=True)
class MagCode:
    """Magnitude in counts of 1e-4 units."""

    raw: int

    def __post_init__(self):
        object.__setattr__(self, "raw", check_word(self.raw, "magnitude code"))

    @classmethod
    def from_hex(cls, text: str) -> MagCode:
        return cls(from_hex(text))

    @classmethod
    def from_real(cls, v: Real) -> MagCode:
        return real_to_mag_code(v)

    @property
    def real(self) -> float:
        return mag_code_to_real(self)

    def hex(self) -> str:
        return to_hex(self.raw)

    def __int__(self):
        return self.raw

    def __neg__(self):
        return MagCode(-self.raw)

    def __str__(self):
        return self.hex()


def degrees_to_angle_code(deg: Real) -> AngleCode:
    """Quantize degrees with floor, e.g. 30 -> 0x0AAA and -15 -> 0xFAAA."""
    q = _exact(deg)
    if not -360 <= q < 360:
        raise RangeError(f"angle {deg} deg outside [-360, 360)")
    return AngleCode(math.floor(q * ANGLE_COUNTS / ANGLE_SPAN))


def angle_code_to_degrees(a: AngleCode) -> float:
    return a.raw * ANGLE_SPAN / ANGLE_COUNTS


def real_to_mag_code(v: Real) -> MagCode:
    """Quantize real units with round-half-up at 1e-4."""
    raw = round_half_up(_exact(v) * MAG_SCALE)
    if not RAW_MIN <= raw <= RAW_MAX:
        raise RangeError(f"magnitude {v} outside [{RAW_MIN / MAG_SCALE}, {RAW_MAX / MAG_SCALE}]")
    return MagCode(raw)


def mag_code_to_real(m: MagCode) -> float:
    return m.raw / MAG_SCALE


def ext_to_degrees(ext: int, frac_bits: int) -> float:
    return ext * ANGLE_SPAN / (ANGLE_COUNTS << frac_bits)
