"""Exhaustive accuracy sweep and testbench vectors."""
from cordic3d import CordicConfig, sweep_2d
from cordic3d.vectors import format_vectors, generate

for shift in ("truncate", "round"):
    res = sweep_2d(cfg=CordicConfig(shift_mode=shift))
    print(f"{shift:>8}: max={res.max_deviation} mean={res.mean_deviation:.4f} worst at {res.worst_code.hex()}")

print(format_vectors(generate(5, seed=7)))
