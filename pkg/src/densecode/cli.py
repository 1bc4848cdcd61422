"""Command-line surface: capacity, threshold, sweep and protocol runs.

Everything prints JSON to stdout except ``sweep``, which writes a CSV or
JSON file suitable for external plotting.  Exit codes: 0 success, 2 bad
arguments, 3 numerical failure (eigensolver stall or missing bracket).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from .measures import dense_coding_capacity, is_steerable
from .protocols import ControlBasis, controlled_dense_coding_run, superdense_run
from .states import StateFamily, isotropic_family, werner_family
from .thresholds import find_dense_coding_threshold

SWEEP_OUTPUTS = ("chi", "S_B", "S_AB", "steerable", "dense_codeable")
_MAX_STEPS = 100_000


@dataclass(frozen=True)
class SweepSpec:
    """A parameter grid over one family and the columns to report."""

    family: StateFamily
    p_min: float = 0.0
    p_max: float = 1.0
    steps: int = 1000
    outputs: tuple[str, ...] = field(default=SWEEP_OUTPUTS)

    def __post_init__(self):
        if not 0.0 <= self.p_min < self.p_max <= 1.0:
            raise ValueError("need 0 <= p_min < p_max <= 1")
        if not 2 <= self.steps <= _MAX_STEPS:
            raise ValueError(f"steps must be in [2, {_MAX_STEPS}]")
        unknown = set(self.outputs) - set(SWEEP_OUTPUTS)
        if unknown:
            raise ValueError(f"unknown sweep outputs: {sorted(unknown)}")


def run_sweep(spec: SweepSpec) -> list[dict]:
    rows = []
    for p in np.linspace(spec.p_min, spec.p_max, spec.steps):
        p = float(p)
        report = dense_coding_capacity(spec.family.evaluate(p), p)
        verdict = is_steerable(spec.family, p)
        rows.append(
            {
                "p": p,
                "chi": report.chi,
                "S_B": report.S_B,
                "S_AB": report.S_AB,
                "steerable": verdict.steerable,
                "dense_codeable": report.dense_codeable,
            }
        )
    return rows


def render_sweep_csv(rows: list[dict]) -> str:
    lines = ["p,chi,S_B,S_AB,steerable,dense_codeable"]
    for r in rows:
        lines.append(
            f"{r['p']:.9g},{r['chi']:.9g},{r['S_B']:.9g},{r['S_AB']:.9g},"
            f"{int(r['steerable'])},{int(r['dense_codeable'])}"
        )
    return "\n".join(lines) + "\n"


def render_sweep_json(rows: list[dict], outputs: tuple[str, ...] = SWEEP_OUTPUTS) -> str:
    kept = [{"p": r["p"], **{k: r[k] for k in SWEEP_OUTPUTS if k in outputs}} for r in rows]
    return json.dumps(kept, indent=2) + "\n"


def _family_from_args(args) -> StateFamily:
    if args.family == "werner":
        if args.d != 2:
            raise ValueError("the werner family is defined for d = 2 only")
        return werner_family()
    return isotropic_family(args.d)


def _cmd_capacity(args) -> dict:
    family = _family_from_args(args)
    report = dense_coding_capacity(family.evaluate(args.p), args.p)
    return {
        "family": family.name,
        "d": family.d,
        "p": args.p,
        "chi": report.chi,
        "S_B": report.S_B,
        "S_AB": report.S_AB,
        "log2_dA": report.log2_dA,
        "dense_codeable": report.dense_codeable,
    }


def _cmd_threshold(args) -> dict:
    family = _family_from_args(args)
    result = find_dense_coding_threshold(family, tol=args.tol, bracket=(args.p_min, args.p_max))
    verdict = is_steerable(family, 1.0)  # carries the family's rule and threshold
    steer = verdict.threshold
    return {
        "family": family.name,
        "d": family.d,
        "dense_coding_p_star": result.p_star,
        "tolerance": result.tolerance,
        "iterations": result.iterations,
        "steerability_threshold": steer,
        "steerability_rule": verdict.rule,
        "gap": result.p_star - steer,
    }


def _cmd_sweep(args) -> None:
    spec = SweepSpec(
        family=_family_from_args(args), p_min=args.p_min, p_max=args.p_max, steps=args.steps
    )
    rows = run_sweep(spec)
    text = render_sweep_csv(rows) if args.format == "csv" else render_sweep_json(rows)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _cmd_protocol(args) -> dict:
    if args.protocol == "superdense":
        if args.p is None:
            raise ValueError("superdense needs --p (channel parameter)")
        family = _family_from_args(args)
        if family.d != 2:
            raise ValueError("superdense coding needs a two-qubit channel state")
        out = superdense_run(family.evaluate(args.p))
        return {
            "protocol": "superdense",
            "family": family.name,
            "d": family.d,
            "p": args.p,
            "per_message_success": list(out.per_message_success),
            "success_probability": out.success_probability,
        }
    if args.theta is None:
        raise ValueError("controlled needs --theta (basis angle)")
    out = controlled_dense_coding_run(ControlBasis(args.theta))
    return {
        "protocol": "controlled",
        "theta": args.theta,
        "per_message_success": list(out.per_message_success),
        "success_probability": out.success_probability,
        "branch_probabilities": out.branch_probabilities,
    }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="densecode",
        description="Dense-coding capacity, steerability thresholds and protocol runs "
        "for the Werner and isotropic state families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_flags(p):
        p.add_argument("--family", choices=("werner", "isotropic"), required=True)
        p.add_argument("--d", type=int, default=2, help="local dimension (isotropic)")

    cap = sub.add_parser("capacity", help="capacity report at one parameter value")
    add_family_flags(cap)
    cap.add_argument("--p", type=float, required=True)

    thr = sub.add_parser("threshold", help="dense-coding and steerability thresholds")
    add_family_flags(thr)
    thr.add_argument("--tol", type=float, default=1e-6)
    thr.add_argument("--p-min", type=float, default=0.0, help="bisection bracket start")
    thr.add_argument("--p-max", type=float, default=1.0, help="bisection bracket end")

    swp = sub.add_parser("sweep", help="write a parameter-grid CSV/JSON file")
    add_family_flags(swp)
    swp.add_argument("--p-min", type=float, default=0.0)
    swp.add_argument("--p-max", type=float, default=1.0)
    swp.add_argument("--steps", type=int, default=1000)
    swp.add_argument("--out", required=True, help="output file path")
    swp.add_argument("--format", choices=("csv", "json"), default="csv")

    pro = sub.add_parser("protocol", help="simulate a dense-coding protocol")
    pro.add_argument("--protocol", choices=("superdense", "controlled"), required=True)
    pro.add_argument("--family", choices=("werner", "isotropic"), default="werner")
    pro.add_argument("--d", type=int, default=2)
    pro.add_argument("--p", type=float, default=None, help="channel parameter (superdense)")
    pro.add_argument("--theta", type=float, default=None, help="basis angle (controlled)")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            _cmd_sweep(args)
        else:
            handler = {
                "capacity": _cmd_capacity,
                "threshold": _cmd_threshold,
                "protocol": _cmd_protocol,
            }[args.command]
            print(json.dumps(handler(args), indent=2))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
