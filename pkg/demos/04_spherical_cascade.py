"""Two cascaded stages: spherical (r, theta, phi) to Cartesian (x, y, z).

With r = 1/G**2 = 0x0E68 the x and y outputs come out unscaled while z keeps
one residual factor of 1/G. That is why z for theta = 45 deg is 0.4294
rather than 0.7071.
"""
from cordic3d import GainMode, MagCode, SphericalInput, degrees_to_angle_code, spherical_to_cartesian
from cordic3d.spherical3d import cascade

for theta, phi in ((45, 45), (60, 30)):
    inp = SphericalInput(MagCode(0x0E68), degrees_to_angle_code(theta), degrees_to_angle_code(phi))
    c = cascade(inp)
    print(f"theta={theta} phi={phi}")
    print("  stage 1:", c.stage1.x.hex(), c.stage1.y.hex())
    print("  stage 2:", c.stage2.x.hex(), c.stage2.y.hex())
    print("  result :", c.result.hex())

# gain-corrected mode takes the true radius and returns true Cartesian values
inp = SphericalInput(MagCode(10_000), degrees_to_angle_code(60), degrees_to_angle_code(30))
x, y, z = spherical_to_cartesian(inp, GainMode.CORRECTED).real()
print(f"corrected: x={x:.4f} y={y:.4f} z={z:.4f}  |v|^2={x * x + y * y + z * z:.5f}")
