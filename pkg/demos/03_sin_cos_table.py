"""sin/cos from a single 2-D stage and the resulting error table.

Feeding x0 = 1/G, y0 = 0 and z0 = theta leaves (cos theta, sin theta) in
the x and y registers after 16 micro-rotations.
"""
from cordic3d import CordicConfig, degrees_to_angle_code, report_2d, sin_cos
from cordic3d.oracle import TABLE4_ANGLES

c, s = sin_cos(degrees_to_angle_code(60))
print("60 deg:", c.hex(), s.hex(), "=", c.real, s.real)

rep = report_2d(TABLE4_ANGLES)
print(rep.to_csv())
print(rep.summary())

# the same table with rounding shifts
print(report_2d(TABLE4_ANGLES, cfg=CordicConfig(shift_mode="round")).summary())
