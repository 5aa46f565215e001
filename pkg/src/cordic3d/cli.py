"""Command-line front end.

Subcommands::

    convert   spherical (hex or degree flags) -> cartesian hex
    report    table4 | table5 | grid error reports as CSV
    vectors   random testbench vectors from the golden model
    lut       dump the arctangent table as CSV
    sweep     exhaustive 2-D angle sweep against the float oracle

Exit codes: 0 ok, 2 bad arguments, 3 value outside range or domain, 4 I/O failure.
"""
from __future__ import annotations

import argparse
import csv
import math
import sys

from .cordic2d import CONVERGENCE_LIMIT_DEG, SHIFT_MODES, CordicConfig
from .errors import CordicError, DomainError
from .fixedpoint import AngleCode, MagCode, degrees_to_angle_code, from_hex
from .oracle import report_grid, report_table4, report_table5, sweep_2d
from .spherical3d import GainMode, SphericalInput, spherical_to_cartesian
from .vectors import format_vectors, generate

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_IO = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _hex_word(text):
    try:
        return from_hex(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _add_config(p, mode=True):
    p.add_argument("--iterations", type=int, default=16, help="micro-rotations per stage (default 16)")
    p.add_argument("--frac-bits", type=int, default=8, help="extra angle accumulator bits (default 8)")
    p.add_argument("--shift", choices=SHIFT_MODES, default="truncate")
    p.add_argument("--no-range-check", action="store_true")
    if mode:
        p.add_argument("--mode", choices=[m.value for m in GainMode], default=GainMode.PAPER.value)


def _config(args) -> CordicConfig:
    return CordicConfig(args.iterations, args.frac_bits, args.shift, not args.no_range_check)


def _angle_arg(args, name):
    code, deg = getattr(args, name), getattr(args, f"{name}_deg")
    try:
        a = degrees_to_angle_code(deg) if deg is not None else AngleCode(code)
    except CordicError as e:
        raise type(e)(f"--{name}: {e}") from None
    if not args.no_range_check and abs(a.degrees) > CONVERGENCE_LIMIT_DEG:
        raise DomainError(
            f"--{name}: {a.hex()} ({a.degrees:.4f} deg) outside convergence range +/-{CONVERGENCE_LIMIT_DEG} deg"
        )
    return a


def cmd_convert(args, out):
    cfg = _config(args)
    try:
        r = MagCode(args.r)
        inp = SphericalInput(r, _angle_arg(args, "theta"), _angle_arg(args, "phi"))
    except CordicError as e:
        msg = str(e) if str(e).startswith("--") else f"--r: {e}"
        raise type(e)(msg) from None
    res = spherical_to_cartesian(inp, GainMode(args.mode), cfg=cfg)
    print(res.hex(), file=out)
    x, y, z = res.real()
    print(f"x={x:.4f} y={y:.4f} z={z:.4f}", file=out)


def cmd_report(args, out):
    cfg = _config(args)
    if args.table == "table4":
        rep = report_table4(cfg=cfg)
    elif args.table == "table5":
        rep = report_table5(args.mode, cfg=cfg)
    else:
        rep = report_grid(args.step, args.mode, cfg=cfg)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            rep.write_csv(fh)
        print(rep.summary(), file=out)
    else:
        rep.write_csv(out)
        print(rep.summary(), file=sys.stderr)


def cmd_vectors(args, out):
    vf = generate(args.count, args.seed, args.mode, _config(args))
    text = format_vectors(vf)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_lut(args, out):
    lut = CordicConfig(args.iterations, args.frac_bits).lut()
    fh = open(args.csv, "w", newline="") if args.csv else out
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["i", "tan", "degrees", "raw_hex"])
        for i, raw in enumerate(lut.entries):
            w.writerow([i, repr(2.0 ** -i), f"{math.degrees(math.atan(2.0 ** -i)):.5f}", f"{raw:04X}"])
    finally:
        if fh is not out:
            fh.close()


def cmd_sweep(args, out):
    res = sweep_2d(args.lo, args.hi, cfg=_config(args))
    print(
        f"codes={res.count} max={res.max_deviation} mean={res.mean_deviation:.4f} counts "
        f"(max_x={res.max_x} max_y={res.max_y} worst={res.worst_code.hex()})",
        file=out,
    )


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cordic3d", description="Fixed-point 3-D CORDIC golden model")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("convert", help="convert one spherical coordinate")
    c.add_argument("--r", type=_hex_word, required=True, help="radius, hex MagCode")
    for name in ("theta", "phi"):
        g = c.add_mutually_exclusive_group(required=True)
        g.add_argument(f"--{name}", type=_hex_word, help=f"{name}, hex AngleCode")
        g.add_argument(f"--{name}-deg", type=float, help=f"{name} in degrees")
    _add_config(c)
    c.set_defaults(func=cmd_convert)

    r = sub.add_parser("report", help="theoretical vs simulated error report")
    r.add_argument("table", choices=["table4", "table5", "grid"])
    r.add_argument("--csv", metavar="PATH")
    r.add_argument("--step", type=float, default=5.0, help="grid step in degrees")
    _add_config(r)
    r.set_defaults(func=cmd_report)

    v = sub.add_parser("vectors", help="emit testbench vectors")
    v.add_argument("--count", type=int, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", metavar="PATH")
    _add_config(v)
    v.set_defaults(func=cmd_vectors)

    t = sub.add_parser("lut", help="dump the arctangent table")
    t.add_argument("--iterations", type=int, default=16)
    t.add_argument("--frac-bits", type=int, default=8)
    t.add_argument("--csv", metavar="PATH")
    t.set_defaults(func=cmd_lut)

    s = sub.add_parser("sweep", help="exhaustive sin/cos sweep")
    s.add_argument("--lo", type=_hex_word, default=-0x2000)
    s.add_argument("--hi", type=_hex_word, default=0x2000)
    _add_config(s, mode=False)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_PARSE
    try:
        args.func(args, out)
    except CordicError as e:
        print(f"cordic3d: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as e:
        print(f"cordic3d: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"cordic3d: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
