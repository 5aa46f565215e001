"""Test-vector files for an HDL testbench.

One vector per line, six 4-digit hex words separated by spaces::

    # r theta phi x y z
    0E68 1000 1000 138A 1387 10C6

Lines starting with ``#`` are comments. The generator writes the config it
used as ``# key=value`` comment lines so a file can be replayed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cordic2d import CordicConfig, max_safe_magnitude
from .fixedpoint import from_hex, to_hex
from .spherical3d import GainMode, spherical_to_cartesian_array
from .tables import gain_constants

COLUMNS = ("r", "theta", "phi", "x", "y", "z")


@dataclass(frozen=True)
class VectorFile:
    rows: list[tuple[int, ...]]
    meta: dict[str, str]

    def config(self) -> tuple[GainMode, CordicConfig]:
        m = self.meta
        cfg = CordicConfig(
            n_iterations=int(m.get("iterations", 16)),
            frac_bits=int(m.get("frac_bits", 8)),
            shift_mode=m.get("shift", "truncate"),
        )
        return GainMode(m.get("mode", GainMode.PAPER.value)), cfg


def generate(count: int, seed: int, mode=GainMode.PAPER, cfg: CordicConfig | None = None) -> VectorFile:
    """Random in-range inputs with expected outputs from the fixed-point engine."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    cfg = cfg or CordicConfig()
    mode = GainMode(mode)
    rng = np.random.default_rng(seed)
    if mode is GainMode.PAPER:
        r_max = gain_constants(cfg.n_iterations).inv_gain_sq_code.raw
    else:
        r_max = 10_000
    r_max = min(r_max, max_safe_magnitude(cfg.n_iterations))
    r = rng.integers(0, r_max, size=count, endpoint=True)
    theta = rng.integers(-0x2000, 0x2000, size=count, endpoint=True)
    phi = rng.integers(-0x2000, 0x2000, size=count, endpoint=True)
    x, y, z = spherical_to_cartesian_array(r, theta, phi, mode, cfg=cfg)
    rows = [tuple(int(v) for v in t) for t in zip(r, theta, phi, x, y, z)]
    meta = {
        "mode": mode.value,
        "iterations": str(cfg.n_iterations),
        "frac_bits": str(cfg.frac_bits),
        "shift": cfg.shift_mode,
        "seed": str(seed),
        "count": str(count),
    }
    return VectorFile(rows, meta)


def format_vectors(vf: VectorFile) -> str:
    lines = ["# cordic3d spherical-to-cartesian test vectors"]
    lines += [f"# {k}={v}" for k, v in vf.meta.items()]
    lines.append("# " + " ".join(COLUMNS))
    lines += [" ".join(to_hex(v) for v in row) for row in vf.rows]
    return "\n".join(lines) + "\n"


def parse_vectors(text: str) -> VectorFile:
    rows, meta = [], {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body and " " not in body:
                k, v = body.split("=", 1)
                meta[k] = v
            continue
        fields = line.split()
        if len(fields) != len(COLUMNS):
            raise ValueError(f"line {n}: expected {len(COLUMNS)} fields, got {len(fields)}")
        rows.append(tuple(from_hex(f) for f in fields))
    return VectorFile(rows, meta)
