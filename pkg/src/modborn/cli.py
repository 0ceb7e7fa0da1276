"""Command-line interface.

Exit codes: 0 success, 1 internal error or failed verification,
2 usage or out-of-range input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import analysis
from .boxgen import bell_closed_form, joint_distribution
from .core import BehaviorBox, MeasurementConfig, OutOfRange, ProbabilityRule, TwoQubitState
from .oracle import GENERATOR_NAME, born_oracle, mc_sampler

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_PI_RE = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*(?P<num>\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+(?:\.\d*)?))?\s*$",
    re.IGNORECASE,
)

NAMED_TARGETS = {
    "trivial-cc": analysis.TRIVIAL_CC_THRESHOLD,
    "tsirelson": analysis.TSIRELSON,
}


class UsageError(ValueError):
    pass


def parse_angle(token: str) -> float:
    """Radians from a decimal literal or a rational multiple of pi (``11pi/8``)."""
    m = _PI_RE.match(token)
    if m:
        num = Fraction(m["num"]) if m["num"] else Fraction(1)
        den = Fraction(m["den"]) if m["den"] else Fraction(1)
        if den == 0:
            raise argparse.ArgumentTypeError(f"zero denominator in {token!r}")
        value = float(num) * math.pi / float(den)
        return -value if m["sign"] == "-" else value
    try:
        value = float(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {token!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite: {token!r}")
    return value


def parse_rule(token: str) -> ProbabilityRule:
    try:
        return ProbabilityRule.parse(token)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_power(token: str) -> float:
    return parse_rule(token).power


def parse_grid(text: str, item) -> list[float]:
    """Comma list of values, or ``start:stop:count`` (endpoints included)."""
    text = text.strip()
    if not text:
        return []
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"range must be start:stop:count, got {text!r}")
        start, stop = item(parts[0]), item(parts[1])
        count = int(parts[2])
        if count < 0 or not (math.isfinite(start) and math.isfinite(stop)):
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        return [float(v) for v in np.linspace(start, stop, count)]
    return [item(t) for t in text.split(",")]


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _power_json(rule: ProbabilityRule):
    return "inf" if rule.is_limit else rule.power


# -- generate ----------------------------------------------------------------


def summarize(box: BehaviorBox, tol: float) -> dict:
    ns = analysis.no_signaling_report(box, tol)
    chsh = analysis.chsh_value(box)
    return {
        "no_signaling": {
            "status": "NO-SIGNALING" if ns.passed else "SIGNALING",
            "passed": ns.passed,
            "tol": tol,
            "max_violation_alice_to_bob": ns.max_violation_alice_to_bob,
            "max_violation_bob_to_alice": ns.max_violation_bob_to_alice,
            "residuals": [
                {"party": r.party, "output": r.output, "setting": r.setting, "residual": r.residual}
                for r in ns.residuals
            ],
        },
        "chsh": {
            "value": chsh.value,
            "correlators": chsh.correlators.tolist(),
            "minus_cell": list(chsh.minus_cell),
        },
        "isotropic": analysis.isotropy_check(box),
        "pr_distance": analysis.pr_distance(box),
    }


def cmd_generate(args: argparse.Namespace) -> int:
    if args.bell:
        state = TwoQubitState.bell()
    else:
        try:
            state = TwoQubitState.from_weight(args.alpha2, args.phase)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    cfg = MeasurementConfig(args.theta, args.theta_tilde)
    box = joint_distribution(state, cfg, args.n)
    summary = summarize(box, args.tol)
    if args.csv:
        document = box.to_csv()
        lines = [
            f"no_signaling={summary['no_signaling']['status']}",
            f"max_violation={fmt(max(summary['no_signaling']['max_violation_alice_to_bob'], summary['no_signaling']['max_violation_bob_to_alice']))}",
            f"chsh={fmt(summary['chsh']['value'])}",
            "minus_cell={},{}".format(*summary["chsh"]["minus_cell"]),
            f"isotropic={summary['isotropic']}",
            f"pr_distance={fmt(summary['pr_distance'])}",
        ]
        print("\n".join(lines), file=sys.stderr)
    else:
        doc = box.to_dict()
        doc.update(
            {
                "state": {
                    "alpha": [state.alpha.real, state.alpha.imag],
                    "beta": [state.beta.real, state.beta.imag],
                },
                "theta": cfg.theta,
                "theta_tilde": cfg.theta_tilde,
                "n": _power_json(args.n),
            }
        )
        doc.update(summary)
        document = json.dumps(doc, indent=2) + "\n"
    _emit(document, args.out)
    return EXIT_OK


# -- sweeps ------------------------------------------------------------------


def _csv_rows(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def cmd_sweep_n(args: argparse.Namespace) -> int:
    rules = [ProbabilityRule(n) for n in parse_grid(args.grid, parse_power)]
    rows = analysis.chsh_vs_power(args.theta, args.theta_tilde, rules, args.mode)
    _emit(_csv_rows(["n", "chsh"], rows), args.out)
    return EXIT_OK


def cmd_sweep_angle(args: argparse.Namespace) -> int:
    grid = parse_grid(args.grid, parse_angle)
    rows = analysis.chsh_vs_angle(args.theta, grid, args.n)
    _emit(_csv_rows(["theta_tilde", "chsh"], rows), args.out)
    return EXIT_OK


# -- solve -------------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    token = args.target.strip().lower()
    if token in NAMED_TARGETS:
        target = NAMED_TARGETS[token]
    else:
        try:
            target = float(token)
        except ValueError:
            raise UsageError(f"target must be a number or one of {sorted(NAMED_TARGETS)}") from None
    n = analysis.solve_power_for_chsh(target)
    print(fmt(n))
    return EXIT_OK


# -- verify ------------------------------------------------------------------

SCENARIOS = {
    # name: (state, theta, theta_tilde, power)
    "bell": (TwoQubitState.bell(), math.pi / 4, 11 * math.pi / 8, 4.0),
    "born": (TwoQubitState.bell(), math.pi / 2, 3 * math.pi / 2, 2.0),
    "signaling": (TwoQubitState.from_weight(0.8), math.pi / 2, 3 * math.pi / 2, 4.0),
}

ORACLE_TOL = 1e-10
MC_SIGMAS = 5.0


def cmd_verify(args: argparse.Namespace) -> int:
    state, theta, theta_tilde, power = SCENARIOS[args.scenario]
    cfg = MeasurementConfig(theta, theta_tilde)
    rule = ProbabilityRule(power)
    checks: list[tuple[str, float, float]] = []

    born_dev = joint_distribution(state, cfg, ProbabilityRule.born()).max_deviation(
        born_oracle(state, cfg)
    )
    checks.append(("born_oracle_vs_sequential_n2", born_dev, ORACLE_TOL))

    is_bell = abs(state.alpha - state.beta) < 1e-15
    seq = joint_distribution(state, cfg, rule)
    if is_bell:
        ref = bell_closed_form(theta, theta_tilde, rule)
        checks.append(("sequential_vs_closed_form", seq.max_deviation(ref), ORACLE_TOL))
    else:
        ref = seq

    sample = mc_sampler(state, cfg, rule, args.shots, args.seed)
    # floor on sigma keeps cells with an empirical frequency of 0 or 1 testable
    sigma = np.maximum(sample.stderr, 1.0 / args.shots)
    z = float(np.max(np.abs(sample.box.table - ref.table) / sigma))
    checks.append(("mc_sampler_max_z", z, MC_SIGMAS))

    print(f"scenario={args.scenario} shots={args.shots} seed={args.seed} rng={GENERATOR_NAME}")
    ok = True
    for name, value, limit in checks:
        passed = value <= limit
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name} {fmt(value)} <= {fmt(limit)}")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


# -- plumbing ----------------------------------------------------------------


def _emit(document: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(document)
    else:
        Path(out).write_text(document)


def _positive_int(token: str) -> int:
    try:
        v = int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {token!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _seed(token: str) -> int:
    v = int(token)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modborn",
        description="Behavior boxes from two-qubit states under a power-law outcome rule.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build one box and analyze it")
    state = g.add_mutually_exclusive_group(required=True)
    state.add_argument("--bell", action="store_true", help="alpha = beta = 1/sqrt(2)")
    state.add_argument("--alpha2", type=float, help="|alpha|^2 of the shared state")
    g.add_argument("--phase", type=parse_angle, default=0.0, help="relative phase of beta")
    g.add_argument("--theta", type=parse_angle, required=True)
    g.add_argument("--theta-tilde", type=parse_angle, required=True)
    g.add_argument("--n", type=parse_rule, required=True, help="rule power, or 'inf'")
    g.add_argument("--csv", action="store_true", help="emit the box as CSV (summary on stderr)")
    g.add_argument("--tol", type=float, default=analysis.DEFAULT_NS_TOL)
    g.add_argument("--out", type=Path)
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("sweep-n", help="CHSH value against the rule power")
    s.add_argument("--theta", type=parse_angle, default=math.pi / 4)
    s.add_argument("--theta-tilde", type=parse_angle, default=11 * math.pi / 8)
    s.add_argument("--grid", required=True, help="'2,4,inf' or 'start:stop:count'")
    s.add_argument("--mode", choices=["bell", "chsh-observables"], default="bell")
    s.add_argument("--out", type=Path)
    s.set_defaults(func=cmd_sweep_n)

    a = sub.add_parser("sweep-angle", help="CHSH value against Bob's y=1 angle")
    a.add_argument("--theta", type=parse_angle, required=True)
    a.add_argument("--grid", required=True, help="'pi/2,pi' or 'start:stop:count'")
    a.add_argument("--n", type=parse_rule, required=True)
    a.add_argument("--out", type=Path)
    a.set_defaults(func=cmd_sweep_angle)

    v = sub.add_parser("solve", help="power reaching a CHSH target")
    v.add_argument("--target", required=True, help="number in (0, 4), 'trivial-cc' or 'tsirelson'")
    v.set_defaults(func=cmd_solve)

    c = sub.add_parser("verify", help="cross-check against the oracles")
    c.add_argument("--shots", type=_positive_int, default=100_000)
    c.add_argument("--seed", type=_seed, default=0)
    c.add_argument("--scenario", choices=sorted(SCENARIOS), default="bell")
    c.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OutOfRange, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
