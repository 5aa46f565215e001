"""Arctangent lookup table and CORDIC gain constants."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fixedpoint import ANGLE_COUNTS, ANGLE_SPAN, MagCode, real_to_mag_code, round_half_up

MAX_ITERATIONS = 32
MAX_FRAC_BITS = 12


@dataclass(frozen=True)
class AtanLut:
    """``entries[i]`` is arctan(2**-i) in extended angle counts."""

    entries: tuple[int, ...]
    n_iterations: int
    frac_bits: int

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def degrees(self, i: int) -> float:
        """Quantized entry ``i`` converted back to degrees."""
        return self.entries[i] * ANGLE_SPAN / (ANGLE_COUNTS << self.frac_bits)

    def total_degrees(self) -> float:
        return sum(self.entries) * ANGLE_SPAN / (ANGLE_COUNTS << self.frac_bits)


@dataclass(frozen=True)
class GainConstants:
    gain: float
    gain_code: MagCode
    inv_gain_code: MagCode
    inv_gain_sq_code: MagCode


@lru_cache(maxsize=None)
def build_atan_lut(n: int = 16, frac_bits: int = 8) -> AtanLut:
    if not 1 <= n <= MAX_ITERATIONS:
        raise ValueError(f"n must be in [1, {MAX_ITERATIONS}], got {n}")
    if not 0 <= frac_bits <= MAX_FRAC_BITS:
        raise ValueError(f"frac_bits must be in [0, {MAX_FRAC_BITS}], got {frac_bits}")
    scale = Fraction(ANGLE_COUNTS << frac_bits, ANGLE_SPAN)
    entries = tuple(
        round_half_up(Fraction(math.degrees(math.atan(2.0 ** -i))) * scale) for i in range(n)
    )
    return AtanLut(entries, n, frac_bits)


def cordic_gain(n: int) -> float:
    """prod_{i<n} sqrt(1 + 2**-2i); tends to 1.646760258..."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return math.prod(math.sqrt(1.0 + 4.0 ** -i) for i in range(n))


@lru_cache(maxsize=None)
def gain_constants(n: int = 16) -> GainConstants:
    g = cordic_gain(n)
    return GainConstants(
        gain=g,
        gain_code=real_to_mag_code(g),
        inv_gain_code=real_to_mag_code(1.0 / g),
        inv_gain_sq_code=real_to_mag_code(1.0 / (g * g)),
    )
