"""Command-line runner.

Subcommands:

    figure <id>      predefined sweep for panel id in {3,4,5,7,8,9} -> CSV
    loschmidt        echo-state sweep over a fold template -> CSV
    precursor        precursor-state sweep over a fold template -> CSV
    harmonic         harmonic-control sweep of the single kick time -> CSV
    analytic-terms   dump the enumerated leading-order term list -> CSV
    switchback       print t_T, t_star and the switchback complexity

Fold templates are comma lists of linear expressions in the sweep variable
t, e.g. ``--times "t,t/2"`` or ``--times "20,t,20,t"``; `analytic-terms` and
`switchback` take plain numbers. A key=value config file (one pair per line,
``#`` comments, keys = long flag names) can preload any flag; explicit flags
override the file.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import hp
from .analytic import (
    loschmidt_terms,
    precursor_terms,
    scrambling_time,
    switchback_complexity,
    total_folded_time,
)
from .errors import MultifoldError
from .experiments import (
    Grid,
    Scenario,
    TimeExpr,
    figure_scenario,
    run_scenario,
    time_expr,
    write_csv,
)
from .gaussian import OscillatorParams
from .states import TimeFold

def parse_time_expr(text: str) -> TimeExpr:
    """Parse a linear expression in t: 'a*t+b', 't/2', '-t', '5', ..."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty time expression")
    coeff = Fraction(0)
    offset = Fraction(0)
    for sign, term in re.findall(r"([+-]?)([^+-]+(?:[eE][+-]?[0-9]+)?)", s):
        factor = Fraction(-1 if sign == "-" else 1)
        if "t" in term:
            body = term.replace("t", "", 1)
            if body in ("", "*"):
                c = Fraction(1)
            elif body.startswith("*"):
                c = Fraction(body[1:])
            elif body.startswith("/"):
                c = 1 / Fraction(body[1:])
            elif body.endswith("*"):
                c = Fraction(body[:-1])
            else:
                raise ValueError(f"cannot parse time expression {text!r}")
            coeff += factor * c
        else:
            offset += factor * Fraction(term)
    return TimeExpr(
        hp.mpf(coeff.numerator) / coeff.denominator,
        hp.mpf(offset.numerator) / offset.denominator,
    )


def parse_times(text: str) -> tuple:
    if not text.strip():
        return ()
    return tuple(parse_time_expr(part) for part in text.split(","))


def parse_grid(text: str) -> Grid:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("grid must be start:stop:step")
    return Grid(*parts)


def load_config(path: str) -> dict:
    """key=value pairs, one per line; '#' starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = line.split("=", 1)
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--omega", default="1", help="frequency (default 1)")
    p.add_argument("--delta-ratio", default="1e-3",
                   help="delta_omega / omega (default 1e-3)")
    p.add_argument("--mass", default="1", help="mass (default 1)")
    p.add_argument("--gate-scale", default="1", help="gate scale g (default 1)")
    p.add_argument("--precision", type=int, default=40,
                   help="working precision in decimal digits (default 40)")
    p.add_argument("--out", default="-", help="output path (default stdout)")
    p.add_argument("--config", default=None,
                   help="key=value file preloading any flag")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="multifold",
        description="exact vs leading-order multifold complexity curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    registry = {}

    p_fig = sub.add_parser("figure", help="run a predefined figure scenario")
    p_fig.add_argument("id", type=int, choices=(3, 4, 5, 7, 8, 9))
    p_fig.add_argument("--grid", default="0.05:20:0.05", help="start:stop:step")
    add_common_flags(p_fig)
    registry["figure"] = p_fig

    for name, help_text in (
        ("loschmidt", "echo-state sweep"),
        ("precursor", "precursor-state sweep"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--times", default="t",
                       help="comma list of linear expressions in t")
        p.add_argument("--ts", default="0", help="start offset t_s (expression)")
        p.add_argument("--tf", default="0", help="final offset t_f (expression)")
        p.add_argument("--grid", default="0.05:20:0.05", help="start:stop:step")
        add_common_flags(p)
        registry[name] = p

    p_h = sub.add_parser("harmonic", help="harmonic-control sweep of t1")
    p_h.add_argument("--grid", default="0.05:20:0.05", help="start:stop:step")
    add_common_flags(p_h)
    registry["harmonic"] = p_h

    p_t = sub.add_parser("analytic-terms", help="dump the leading-order terms")
    p_t.add_argument("--kind", choices=("loschmidt", "precursor"),
                     default="loschmidt")
    p_t.add_argument("--times", default="", help="comma list of numbers")
    p_t.add_argument("--ts", default="0")
    p_t.add_argument("--tf", default="0")
    add_common_flags(p_t)
    registry["analytic-terms"] = p_t

    p_s = sub.add_parser("switchback", help="print t_T, t_star, complexity")
    p_s.add_argument("--times", default="", help="comma list of numbers")
    p_s.add_argument("--ts", default="0")
    p_s.add_argument("--tf", default="0")
    add_common_flags(p_s)
    registry["switchback"] = p_s

    return parser, registry


def _params_from(args) -> OscillatorParams:
    return OscillatorParams.from_ratio(
        delta_ratio=args.delta_ratio, omega=args.omega,
        m=args.mass, g=args.gate_scale,
    )


def _const_times(text: str) -> tuple:
    if not text.strip():
        return ()
    return tuple(hp.mpf(part.strip()) for part in text.split(","))


def _open_out(args):
    if args.out in ("-", ""):
        return sys.stdout, False
    return open(args.out, "w", encoding="utf-8", newline=""), True


def _emit_rows(args, scenario: Scenario) -> None:
    rows = run_scenario(scenario)
    out, close = _open_out(args)
    try:
        write_csv(out, scenario, rows)
    finally:
        if close:
            out.close()


def _scenario_from_args(args, kind: str) -> Scenario:
    params = _params_from(args)
    grid = parse_grid(args.grid)
    if kind == "harmonic-control":
        times = (time_expr("1"),)
        ts = tf = time_expr()
        label = "harmonic-control (single kick, sweep t1)"
    else:
        times = parse_times(args.times)
        ts = parse_time_expr(args.ts)
        tf = parse_time_expr(args.tf)
        label = f"{kind} sweep"
    return Scenario(
        kind=kind, params=params, times=times, t_s=ts, t_f=tf,
        grid=grid, digits=int(args.precision), label=label,
    )


def cmd_figure(args) -> int:
    scenario = figure_scenario(
        args.id,
        delta_ratio=args.delta_ratio,
        omega=args.omega,
        mass=args.mass,
        gate_scale=args.gate_scale,
        grid=parse_grid(args.grid),
        digits=int(args.precision),
    )
    _emit_rows(args, scenario)
    return 0


def cmd_sweep(args, kind: str) -> int:
    _emit_rows(args, _scenario_from_args(args, kind))
    return 0


def cmd_analytic_terms(args) -> int:
    params = _params_from(args)
    fold = TimeFold(times=_const_times(args.times),
                    t_s=hp.mpf(args.ts), t_f=hp.mpf(args.tf))
    terms = (loschmidt_terms if args.kind == "loschmidt" else precursor_terms)(
        fold, params
    )
    out, close = _open_out(args)
    try:
        out.write("# kind = %s\n" % args.kind)
        out.write("n,subset,pattern,sigma,exponent_arg,log_value\n")
        for t in terms:
            subset = ";".join(str(j) for j in t.subset)
            pattern = "".join("+" if s == 1 else "-" for s in t.pattern)
            out.write(
                f"{len(t.subset)},{subset},{pattern},{t.sigma},"
                f"{hp.format_sci(t.exponent_arg, 12)},"
                f"{hp.format_sci(t.log_value, 12)}\n"
            )
    finally:
        if close:
            out.close()
    return 0


def cmd_switchback(args) -> int:
    params = _params_from(args)
    fold = TimeFold(times=_const_times(args.times),
                    t_s=hp.mpf(args.ts), t_f=hp.mpf(args.tf))
    t_total = total_folded_time(fold)
    t_star = scrambling_time(params)
    c = switchback_complexity(fold, params)
    out, close = _open_out(args)
    try:
        out.write(f"t_T = {hp.format_sci(t_total, 12)}\n")
        out.write(f"t_star = {hp.format_sci(t_star, 12)}\n")
        out.write(f"C = {hp.format_sci(c, 12)}\n")
    finally:
        if close:
            out.close()
    return 0


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, registry = build_parser()

    # first pass only to locate --config; file values become defaults that
    # explicit flags then override
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config", default=None)
    probed, _ = probe.parse_known_args(argv)
    if probed.config:
        try:
            overrides = load_config(probed.config)
        except (OSError, ValueError) as exc:
            parser.error(f"cannot read config file: {exc}")
        subcommand = next((tok for tok in argv if tok in registry), None)
        if subcommand is not None:
            sub_parser = registry[subcommand]
            known = {a.dest for a in sub_parser._actions}
            unknown = set(overrides) - known
            if unknown:
                parser.error(
                    f"unknown config keys: {', '.join(sorted(unknown))}"
                )
            sub_parser.set_defaults(**overrides)

    args = parser.parse_args(argv)
    hp.set_digits(int(args.precision))
    try:
        if args.command == "figure":
            return cmd_figure(args)
        if args.command == "loschmidt":
            return cmd_sweep(args, "loschmidt")
        if args.command == "precursor":
            return cmd_sweep(args, "precursor")
        if args.command == "harmonic":
            return cmd_sweep(args, "harmonic-control")
        if args.command == "analytic-terms":
            return cmd_analytic_terms(args)
        return cmd_switchback(args)
    except (MultifoldError, ValueError) as exc:
        print(f"multifold: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
