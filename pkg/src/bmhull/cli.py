"""Command-line entry point: ``bmhull <subcommand> ...``.

Subcommands: constants, simulate, dist, mellin, verify.  Tables go to stdout
(or ``--output``) as CSV or JSON with 17 significant digits.
Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from bmhull import constants, exitdist, mc
from bmhull.geom import AngleSet


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    if rows:
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(rows[0].keys())
        for r in rows:
            w.writerow(_fmt(v) for v in r.values())
    return buf.getvalue()


def _emit(rows: list[dict], args, out) -> None:
    text = render(rows, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def parse_omega(text: str) -> tuple[str, AngleSet]:
    try:
        p = constants.OmegaPreset(text)
        return p.value, p.angle_set
    except ValueError:
        pass
    try:
        degrees = [float(d) for d in text.split(",")]
    except ValueError:
        valid = ", ".join(p.value for p in constants.OmegaPreset)
        raise UsageError(f"unknown omega {text!r}; use a preset ({valid}) or comma-separated degrees") from None
    return text, AngleSet.from_degrees(degrees)


def _positive(kind):
    def conv(text):
        v = kind(text)
        if not v > 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return v

    return conv


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", help="write the table here instead of stdout")

    p = _Parser(prog="bmhull", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("constants", parents=[common], help="analytic ell for the eight presets")

    s = sub.add_parser("simulate", parents=[common], help="Monte Carlo estimate of ell")
    s.add_argument("--omega", default="one", help="preset name or comma-separated degrees")
    s.add_argument("--steps", type=_positive(int), default=mc.DEFAULT_STEPS)
    s.add_argument("--paths", type=int, default=mc.DEFAULT_PATHS)
    s.add_argument("--seed", type=int, default=mc.DEFAULT_SEED)
    s.add_argument("--time", type=_positive(float), default=1.0)
    s.add_argument("--method", choices=("hull", "support"), default="hull")
    s.add_argument("--threads", type=_positive(int))

    d = sub.add_parser("dist", parents=[common], help="exit-time law on a linear grid")
    d.add_argument("--shape", required=True, help="halfplane|strip|cone60|triangle-unit|triangle-pomega|bessel3=<a>|disk")
    d.add_argument("--quantity", choices=("survival", "density", "laplace"), default="survival")
    d.add_argument("--from", dest="start", type=float, required=True)
    d.add_argument("--to", dest="stop", type=float, required=True)
    d.add_argument("--points", type=_positive(int), default=50)

    m = sub.add_parser("mellin", parents=[common], help="E[T^s] for the unit-triangle exit time")
    m.add_argument("--s", type=float, action="append", required=True, help="repeatable")

    v = sub.add_parser("verify", parents=[common], help="Monte Carlo gate over all presets")
    v.add_argument("--steps", type=_positive(int), default=mc.DEFAULT_STEPS)
    v.add_argument("--paths", type=int, default=mc.DEFAULT_PATHS)
    v.add_argument("--seed", type=int, default=mc.DEFAULT_SEED)
    v.add_argument("--tol", type=float, default=mc.DEFAULT_REL_TOL)
    v.add_argument("--threads", type=_positive(int))
    return p


def _cmd_constants(args) -> tuple[list[dict], int]:
    rows = []
    for p, ev in constants.all_analytic().items():
        rows.append({"preset": p.value, "value": ev.value, "route": ev.route, "est_abs_error": ev.est_abs_error})
    return rows, 0


def _cmd_simulate(args) -> tuple[list[dict], int]:
    label, omega = parse_omega(args.omega)
    if args.paths < 2:
        raise UsageError("--paths must be >= 2")
    if args.method == "support" and omega.full_circle:
        raise UsageError("--method support needs a finite omega; use --method hull for circle")
    fn = mc.estimate_ell_hull if args.method == "hull" else mc.estimate_ell_support
    est = fn(omega, args.steps, args.paths, args.seed, args.time, args.threads)
    return [{"omega": label, "method": args.method, "mean": est.mean, "std_error": est.std_error,
             "n_paths": est.n_paths, "n_steps": est.n_steps, "total_time": est.total_time}], 0


def _cmd_dist(args) -> tuple[list[dict], int]:
    law = exitdist.ExitLaw.parse(args.shape)
    if args.stop < args.start:
        raise UsageError("--to must not be below --from")
    fn = {"survival": exitdist.survival, "density": exitdist.density, "laplace": exitdist.laplace_transform}[args.quantity]
    var = "lambda" if args.quantity == "laplace" else "t"
    grid = np.linspace(args.start, args.stop, args.points) if args.points > 1 else np.array([args.start])
    return [{var: float(x), "value": fn(law, float(x))} for x in grid], 0


def _cmd_mellin(args) -> tuple[list[dict], int]:
    return [{"s": s, "value": exitdist.mellin_triangle(s)} for s in args.s], 0


def _cmd_verify(args) -> tuple[list[dict], int]:
    if args.paths < 2:
        raise UsageError("--paths must be >= 2")
    rep = mc.verify_all(args.steps, args.paths, args.seed, args.tol, args.threads)
    return rep.records(), 0 if rep.passed else 1


_COMMANDS = {
    "constants": _cmd_constants,
    "simulate": _cmd_simulate,
    "dist": _cmd_dist,
    "mellin": _cmd_mellin,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        rows, code = _COMMANDS[args.command](args)
    except UsageError as e:
        err.write(f"{e}\n")
        return 2
    except (ValueError, ArithmeticError) as e:
        err.write(f"bmhull: error: {e}\n")
        return 2
    _emit(rows, args, out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
