"""Arctangent table and gain constants.

Without fraction bits the last two table entries round to zero, which
turns iterations 14 and 15 into pure gain with no rotation. The default
model keeps 8 extra bits in the angle accumulator for that reason.
"""
from cordic3d import build_atan_lut, cordic_gain, gain_constants

for f in (0, 8):
    lut = build_atan_lut(16, f)
    print(f"frac_bits={f}:", [f"{e:X}" for e in lut.entries])
    print("  covers", round(lut.total_degrees(), 4), "deg")

for n in (1, 4, 8, 11, 16, 24):
    g = cordic_gain(n)
    print(f"N={n:>2}  G={g:.10f}  1/G={1 / g:.10f}")

g = gain_constants(16)
print("1/G   ->", g.inv_gain_code.hex())
print("1/G^2 ->", g.inv_gain_sq_code.hex())
