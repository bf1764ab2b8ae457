"""Command-line front end.

Subcommands: ``probs``, ``thresholds``, ``lhv-check`` and ``sweep``.
Exit codes: 0 ok, 2 invalid input, 3 internal consistency failure. Errors are
reported as one line ``error: <kind>: <reason>`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .errors import ConsistencyError, InvalidInput, InvalidSpec
from .hardy import SchmidtSpec, outcome_set
from .lhv import BehaviorConstraints, hardy_inequality, lhv_feasible
from .noise import NoiseKind, mix
from .probabilities import XX, YY, behavior_table, closed_form, compare_with_born
from .sweep import SCHEMA_VERSION, SweepRequest, parse_grid, run_sweep, to_csv, to_json
from .thresholds import report

EXIT_OK, EXIT_INVALID, EXIT_CONSISTENCY = 0, 2, 3
AGREEMENT_ATOL = 1e-12


class CliInputError(InvalidInput):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _error("usage", message)
        raise SystemExit(EXIT_INVALID)


def _number(text: str) -> float:
    """Float or exact fraction such as ``1/3``."""
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _fmt(x: float | None, digits: int | None) -> str:
    if x is None:
        return "n/a (requires 2x2)"
    return format(x, ".17g") if digits is None else f"{x:.{digits}f}"


def spec_from_args(args) -> SchmidtSpec:
    if args.hardy_max:
        return SchmidtSpec.hardy_max()
    if args.weights:
        raw = [_number(w) for w in args.weights.split(",")]
        norm = math.sqrt(math.fsum(w * w for w in raw))
        if norm == 0:
            raise InvalidSpec("weights must be strictly positive")
        if abs(norm - 1.0) > 1e-12:
            print(f"warning: weights renormalized by 1/{norm:.17g}", file=sys.stderr)
        return SchmidtSpec(args.d1, args.d2, tuple(w / norm for w in raw))
    if args.p1sq is None:
        raise CliInputError("give --hardy-max, --p1sq or --weights")
    squared = [args.p1sq] if args.p2sq is None else [args.p1sq, args.p2sq]
    return SchmidtSpec.from_squared(squared, args.d1, args.d2)


def _spec_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    g = parent.add_argument_group("Hardy state")
    g.add_argument("--d1", type=int, default=2)
    g.add_argument("--d2", type=int, default=2)
    g.add_argument("--p1sq", type=_number, help="squared first Schmidt weight")
    g.add_argument("--p2sq", type=_number, help="squared second weight (default: remainder)")
    g.add_argument("--weights", help="comma-separated raw weights, renormalized")
    g.add_argument("--hardy-max", action="store_true",
                   help="two-qubit preset with p1 p2 = (3 - sqrt 5)/2, p1 > p2")
    g.add_argument("--digits", type=int, default=None)
    return parent


def _noise_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--noise", choices=[k.value for k in NoiseKind], default="white")
    parent.add_argument("--p", type=_number, default=1.0, help="weight of the pure state")
    return parent


def cmd_probs(args, out) -> int:
    spec = spec_from_args(args)
    state = mix(spec, args.noise, args.p)
    quartet = closed_form(state)
    compared = compare_with_born(state, quartet)
    rows = [(str(pair), cf, born, diff) for pair, cf, born, diff in compared]
    if quartet.a is not None:
        born = {pair: b for pair, _, b, _ in compared}
        # P(X1=+1, X2=+1) is eps in every white family
        born_a = born[YY] - born[XX]
        rows.append(("a", quartet.a, born_a, abs(quartet.a - born_a)))
    worst = max(r[3] for r in rows)

    if args.format == "json":
        obj = {"schema": SCHEMA_VERSION, "variant": quartet.variant.value,
               "rows": [{"event": e, "closed_form": c, "born": b, "difference": d} for e, c, b, d in rows]}
        out.write(json.dumps(obj, indent=2) + "\n")
    elif args.format == "csv":
        out.write("event,closed_form,born,difference\n")
        for e, c, b, d in rows:
            out.write(f"\"{e}\",{_fmt(c, args.digits)},{_fmt(b, args.digits)},{format(d, '.3g')}\n")
    else:
        out.write(f"# {quartet.variant.value}, d1={spec.d1} d2={spec.d2}, p={args.p:.17g}\n")
        out.write(f"{'event':<18} {'closed_form':>24} {'born':>24} {'difference':>11}\n")
        for e, c, b, d in rows:
            out.write(f"{e:<18} {_fmt(c, args.digits):>24} {_fmt(b, args.digits):>24} {d:>11.3g}\n")
    if worst > AGREEMENT_ATOL:
        raise ConsistencyError(f"closed form and Born rule differ by {worst:.3e}")
    return EXIT_OK


def cmd_thresholds(args, out) -> int:
    spec = spec_from_args(args)
    rep = report(spec)
    if args.format == "json":
        obj = {
            "schema": SCHEMA_VERSION,
            "request": {"d1": spec.d1, "d2": spec.d2, "weights": list(spec.weights)},
            "thresholds": rep.as_dict(),
            "eta_bound": rep.eta_bound,
            "orderings": list(rep.orderings),
        }
        out.write(json.dumps(obj, indent=2) + "\n")
        return EXIT_OK
    for name, value in rep.as_dict().items():
        out.write(f"{name:<10} {_fmt(value, args.digits)}\n")
    out.write(f"{'eta_bound':<10} {_fmt(rep.eta_bound, args.digits)}\n")
    out.write("orderings: " + ("; ".join(rep.orderings) or "none") + "\n")
    return EXIT_OK


def cmd_lhv_check(args, out) -> int:
    spec = spec_from_args(args)
    state = mix(spec, args.noise, args.p)
    quartet = closed_form(state)
    ineq = hardy_inequality(quartet)
    o1, o2 = outcome_set(spec.d1), outcome_set(spec.d2)
    born = {pair: born for pair, _, born, _ in compare_with_born(state, quartet)}
    lp = lhv_feasible(BehaviorConstraints.from_mapping(born), o1, o2)

    if ineq.boundary:
        agreement = "boundary"
    else:
        agreement = "yes" if lp.feasible == (ineq.slack > 0) else "NO"
    sign = "slack >= 0" if ineq.slack >= 0 else "slack < 0"
    verdict = f"{'feasible' if lp.feasible else 'infeasible'}, {sign}"
    lines = {
        "family": quartet.variant.value,
        "slack": _fmt(ineq.slack, args.digits),
        "inequality": "satisfied" if ineq.satisfied else "violated",
        "lp": "feasible" if lp.feasible else "infeasible",
        "max_violation": format(lp.max_violation, ".3e"),
        "agreement": agreement,
        "verdict": verdict,
    }
    if args.full:
        full = lhv_feasible(BehaviorConstraints.from_mapping(behavior_table(state), full=True), o1, o2)
        lines["full_behavior_lp"] = "feasible" if full.feasible else "infeasible"
    if args.format == "json":
        out.write(json.dumps({"schema": SCHEMA_VERSION, **lines, "slack": ineq.slack}, indent=2) + "\n")
    else:
        for k, v in lines.items():
            out.write(f"{k}: {v}\n")
    if agreement == "NO":
        raise ConsistencyError(f"LP verdict disagrees with inequality slack {ineq.slack:.3e}")
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    start, stop, steps = parse_grid(args.grid)
    if args.p2 is not None and args.p2sq is not None:
        raise CliInputError("give only one of --p2, --p2sq")
    if args.p2 is None and args.p2sq is None:
        raise CliInputError("sweep needs --p2 or --p2sq")
    p2 = args.p2 if args.p2 is not None else math.sqrt(args.p2sq)
    req = SweepRequest(args.d1, args.d2, p2, start, stop, steps)
    result = run_sweep(req)
    out.write(to_csv(result, args.digits) if args.format == "csv" else to_json(result, args.digits))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hardy-noise", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    spec_p, noise_p = _spec_parent(), _noise_parent()

    p = sub.add_parser("probs", parents=[spec_p, noise_p], help="closed-form vs Born-rule probabilities")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_probs)

    p = sub.add_parser("thresholds", parents=[spec_p], help="all noise thresholds and their orderings")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("lhv-check", parents=[spec_p, noise_p], help="inequality slack vs LP feasibility")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--full", action="store_true", help="also test the full behavior table")
    p.set_defaults(func=cmd_lhv_check)

    p = sub.add_parser("sweep", help="threshold curves 1 - p versus p1 at fixed p2")
    p.add_argument("--d1", type=int, default=2)
    p.add_argument("--d2", type=int, default=3)
    p.add_argument("--p2", type=_number)
    p.add_argument("--p2sq", type=_number)
    p.add_argument("--grid", required=True, help="start:stop:steps (inclusive, evenly spaced)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--digits", type=int, default=None)
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_sweep)
    return parser


def _error(kind: str, exc: Exception) -> None:
    msg = " ".join(str(exc).split())
    print(f"error: {kind}: {msg}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if not exc.code else EXIT_INVALID
    out = sys.stdout
    path = getattr(args, "output", None)
    try:
        if path:
            with open(path, "w", newline="\n") as fh:
                return args.func(args, fh)
        return args.func(args, out)
    except InvalidSpec as exc:
        _error("invalid-spec", exc)
        return EXIT_INVALID
    except InvalidInput as exc:
        _error("invalid-input", exc)
        return EXIT_INVALID
    except ConsistencyError as exc:
        _error("consistency", exc)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
