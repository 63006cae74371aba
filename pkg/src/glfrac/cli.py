"""Command line front end.

Subcommands: ``weights``, ``phi-curve``, ``noise-table``, ``simulate``,
``identify`` and ``experiment``. Failures exit nonzero after printing one line
``error: <category>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import io as gio
from .errors import GLError
from .experiment import TABLE_ORDERS, TABLE_SEEDS, ExperimentConfig, noise_table, run_experiment
from .fode import simulate
from .gl_engine import MemoryConfig, gl_coefficients
from .ident import SCHEMES, IdentificationSpec, identify
from .phi_analysis import DEFAULT_STEP, NEGATIVE_RANGE, PhiContext, sample_phi_curve
from .signals import unit_step


class UsageError(Exception):
    category = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _positive(name: str, value: float):
    if not value > 0:
        raise UsageError(f"{name} must be > 0, got {value}")


def _emit(text: str, out) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_weights(args) -> None:
    _positive("--h", args.h)
    table = gl_coefficients(args.alpha, args.n, args.h)
    rows = [(j, b, p) for j, (b, p) in enumerate(zip(table.b, table.phi))]
    _emit(gio.csv_text(["j", "b_j", "phi_j"], [(str(j), b, p) for j, b, p in rows]), args.out)


def cmd_phi_curve(args) -> None:
    if not args.n:
        raise UsageError("--n needs at least one degree")
    curve = sample_phi_curve(args.n, args.alpha_min, args.alpha_max, args.step, PhiContext(args.h))
    header = ["alpha"] + [f"n={n}" for n in curve.n_values]
    rows = ([a, *curve.values[:, j]] for j, a in enumerate(curve.alpha_grid))
    _emit(gio.csv_text(header, rows), args.out)


def cmd_noise_table(args) -> None:
    _positive("--dt", args.dt)
    table = noise_table(args.emax, args.seeds, args.orders, args.duration, args.dt, args.memory)
    header = ["seed"] + [f"alpha={a:g}" for a in args.orders]
    rows = ([str(s), *row] for s, row in zip(args.seeds, table))
    _emit(gio.csv_text(header, rows), args.out)


def cmd_simulate(args) -> None:
    _positive("--dt", args.dt)
    model = gio.read_model(args.model)
    r = unit_step(args.duration, args.dt)
    mem = None if args.memory is None else MemoryConfig(args.memory)
    c = simulate(model, r, mem)
    _emit(gio.csv_text(["time", "value"], zip(c.times, c.values)), args.out)


def cmd_identify(args) -> None:
    y = gio.read_signal(args.measured)
    r = gio.read_signal(args.input) if args.input else unit_step(y.duration, y.h)
    mem = None if args.memory is None else MemoryConfig(args.memory)
    k0 = None if args.t0 is None else y.index_of(args.t0)
    spec = IdentificationSpec(args.orders, args.scheme, args.shifts, k0, mem)
    res = identify(r, y, spec, args.truth)
    doc = {"orders": spec.orders, "scheme": spec.scheme, "shifts": spec.shifts, **res.to_dict()}
    _emit(gio.dumps_report(doc), args.out)


def cmd_experiment(args) -> None:
    cfg = ExperimentConfig.from_doc(gio.load_json(args.config))
    _emit(gio.dumps_report(run_experiment(cfg)), args.out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="glfrac", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def out(sp):
        sp.add_argument("-o", "--out", help="output file (default: stdout)")

    sp = sub.add_parser("weights", help="print b_j and Phi_j(alpha) for j = 0..n")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--h", "--dt", dest="h", type=float, default=1e-3)
    out(sp)
    sp.set_defaults(func=cmd_weights)

    sp = sub.add_parser("phi-curve", help="tabulate Phi_n(alpha) over an order grid")
    sp.add_argument("--n", type=_ints, required=True, help="comma-separated degrees")
    sp.add_argument("--alpha-min", type=float, default=NEGATIVE_RANGE[0])
    sp.add_argument("--alpha-max", type=float, default=NEGATIVE_RANGE[1])
    sp.add_argument("--step", type=float, default=DEFAULT_STEP)
    sp.add_argument("--h", "--dt", dest="h", type=float, default=1e-3)
    out(sp)
    sp.set_defaults(func=cmd_phi_curve)

    sp = sub.add_parser("noise-table", help="D^alpha e(t) for several noise seeds")
    sp.add_argument("--emax", type=float, default=0.01)
    sp.add_argument("--seeds", type=_ints, default=list(TABLE_SEEDS))
    sp.add_argument("--orders", type=_floats, default=list(TABLE_ORDERS))
    sp.add_argument("--duration", type=float, default=10.0)
    sp.add_argument("--dt", "--h", dest="dt", type=float, default=1e-3)
    sp.add_argument("--memory", type=float)
    out(sp)
    sp.set_defaults(func=cmd_noise_table)

    sp = sub.add_parser("simulate", help="unit-step response of a model document")
    sp.add_argument("--model", required=True, help='JSON {"terms": [{"coeff": .., "order": ..}]}')
    sp.add_argument("--duration", type=float, default=10.0)
    sp.add_argument("--dt", "--h", dest="dt", type=float, default=1e-3)
    sp.add_argument("--memory", type=float)
    out(sp)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("identify", help="estimate coefficients from measured signals")
    sp.add_argument("--orders", type=_floats, required=True)
    sp.add_argument("--measured", required=True, help="time,value CSV of the output")
    sp.add_argument("--input", help="time,value CSV of the input (default: unit step)")
    sp.add_argument("--truth", type=_floats, help="true coefficients, for error reporting")
    sp.add_argument("--scheme", choices=SCHEMES, default="transformed")
    sp.add_argument("--shifts", type=_ints)
    sp.add_argument("--t0", type=float)
    sp.add_argument("--memory", type=float)
    out(sp)
    sp.set_defaults(func=cmd_identify)

    sp = sub.add_parser("experiment", help="clean and noisy identification runs from a config")
    sp.add_argument("--config", required=True)
    out(sp)
    sp.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except (GLError, UsageError) as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, UsageError) else 1
    except OSError as exc:
        print(f"error: io: {exc.filename}: {exc.strerror}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
