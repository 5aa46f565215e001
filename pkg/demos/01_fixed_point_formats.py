"""Angle and magnitude codes.

Angles are 16-bit words with 65536 counts per 720 degrees, so 90 degrees
is 0x2000 and negative angles wrap to two's complement. Magnitudes are
16-bit words in units of 1e-4.
"""
from cordic3d import AngleCode, MagCode, degrees_to_angle_code, real_to_mag_code

# 30 deg * 65536/720 = 2730.67, floored to 2730
for deg in (30, 45, 90, -15, -90):
    a = degrees_to_angle_code(deg)
    print(f"{deg:>5} deg -> {a.hex()}  (back to {a.degrees:.5f} deg)")

# one count of angle is ~0.011 degrees
print("LSB =", AngleCode(1).degrees, "deg")

# round-half-up at 1e-4
for v in (0.607253, 0.368756, 0.5, -0.5):
    print(f"{v:>9} -> {real_to_mag_code(v).hex()}")

print(MagCode.from_hex("EC78").real)
