"""Command line front end.

    hawking-battery capacity --region A1B1 --p 0.3 --eta-a 0 --eta-b 30deg
    hawking-battery sweep --axis p:0:1:51 --axis eta_a:0:1.5708:51 --out sweep.csv
    hawking-battery verify --density 25 --json report.json
    hawking-battery figures fig2 fig6 --out-dir figures/

Exit status: 0 success, 1 usage error, 2 verification failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .analytic import Noise
from .battery import evaluate
from .channels import ChannelSpec
from .linalg import clamp_for_report
from .relativistic import DEFAULT_ETA_B, DEFAULT_P, ETA_PHYSICAL_MAX, Region, Scenario
from .sweep import FIGURE_IDS, Axis, SweepSpec, figure_files, run_sweep
from .verify import run_verify

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def angle(text: str) -> float:
    """Radians, or degrees with a ``deg``/``d``/``°`` suffix."""
    t = text.strip().lower()
    for suffix in ("deg", "°", "d"):
        if t.endswith(suffix):
            try:
                return math.radians(float(t[: -len(suffix)]))
            except ValueError:
                break
    try:
        return float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None


def axis(text: str) -> Axis:
    try:
        name, start, stop, count = text.split(":")
        if name == "eta_a":
            return Axis(name, angle(start), angle(stop), int(count))
        return Axis(name, float(start), float(stop), int(count))
    except (ValueError, argparse.ArgumentTypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad axis {text!r} (want name:start:stop:count): {exc}") from None


def regions(text: str) -> tuple[Region, ...]:
    if text == "all":
        return tuple(Region)
    try:
        return tuple(Region(r.strip()) for r in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"regions must be 'all' or a comma list of "
                                         f"{[r.value for r in Region]}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hawking-battery", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def physics(p, with_eta_a=True):
        p.add_argument("--p", type=float, default=DEFAULT_P, help="isotropic mixing weight")
        if with_eta_a:
            p.add_argument("--eta-a", type=angle, default=0.0, help="Alice's Hawking angle")
        p.add_argument("--eta-b", type=angle, default=DEFAULT_ETA_B, help="Bob's Hawking angle")
        p.add_argument("--k", type=float, default=0.0, help="decay probability")
        p.add_argument("--noise", choices=[n.value for n in Noise], default="none")

    cap = sub.add_parser("capacity", help="evaluate one scenario")
    cap.add_argument("--region", choices=[r.value for r in Region], required=True)
    physics(cap)
    cap.add_argument("--json", action="store_true", help="print the record as JSON")

    sw = sub.add_parser("sweep", help="capacity over a 1D or 2D grid, as CSV")
    sw.add_argument("--axis", type=axis, action="append", required=True,
                    help="name:start:stop:count with name in p, eta_a, k (give once or twice)")
    physics(sw)
    sw.add_argument("--regions", type=regions, default=tuple(Region))
    sw.add_argument("--out", required=True)

    ver = sub.add_parser("verify", help="analytic vs pipeline cross-check")
    ver.add_argument("--density", type=int, default=25)
    ver.add_argument("--noise", action="append", choices=[n.value for n in Noise],
                     help="restrict to these noise settings (repeatable)")
    ver.add_argument("--eta-b", type=angle, default=DEFAULT_ETA_B)
    ver.add_argument("--erratum-points", type=int, default=51)
    ver.add_argument("--json", metavar="PATH", help="write the full report as JSON")

    fig = sub.add_parser("figures", help="CSV data behind the figures")
    fig.add_argument("ids", nargs="+", choices=FIGURE_IDS)
    fig.add_argument("--out-dir", default="figures")
    fig.add_argument("--grid", type=int, default=101)
    fig.add_argument("--eta-b", type=angle, default=DEFAULT_ETA_B)
    return parser


def cmd_capacity(args) -> int:
    channel = None if args.noise == "none" else ChannelSpec(args.noise, args.k)
    scenario = Scenario(Region(args.region), args.p, args.eta_a, args.eta_b, channel)
    rec = evaluate(scenario)
    extrapolated = max(scenario.eta_a, scenario.eta_b) >= ETA_PHYSICAL_MAX
    if args.json:
        print(json.dumps({
            "region": scenario.region.value, "noise": args.noise, "p": scenario.p,
            "eta_a": scenario.eta_a, "eta_b": scenario.eta_b, "k": args.k,
            "eigenvalues": [float(x) for x in rec.spectrum],
            "capacity_pipeline": rec.capacity, "capacity_analytic": rec.analytic_capacity,
            "residual": rec.residual, "physical_range": not extrapolated,
        }))
        return EXIT_OK
    shown = clamp_for_report(rec.spectrum)
    print(f"region {scenario.region.value} ({scenario.region.label})  noise {args.noise}  "
          f"p {scenario.p:g}  eta_a {scenario.eta_a:.6f}  eta_b {scenario.eta_b:.6f}  k {args.k:g}")
    print("eigenvalues " + " ".join(f"{x:.6f}" for x in shown))
    print(f"capacity {rec.capacity:.6f}")
    print(f"capacity_analytic {rec.analytic_capacity:.6f}")
    print(f"residual {rec.residual:.3e}")
    if extrapolated:
        print("range extrapolated beyond physical Hawking range (eta >= pi/4)")
    else:
        print("range physical")
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = SweepSpec(axes=tuple(args.axis), p=args.p, eta_a=args.eta_a, eta_b=args.eta_b,
                     k=args.k, regions=args.regions, noise=Noise(args.noise))
    n = run_sweep(spec, args.out)
    print(f"wrote {n} rows to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    noises = tuple(args.noise) if args.noise else tuple(Noise)
    report = run_verify(args.density, noises, eta_b=args.eta_b, erratum_points=args.erratum_points)
    print(report.summary())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_dict(), fh, indent=1, sort_keys=True)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_figures(args) -> int:
    for fig in args.ids:
        for path in figure_files(fig, args.out_dir, n=args.grid, eta_b=args.eta_b):
            print(f"wrote {path}")
    return EXIT_OK


COMMANDS = {"capacity": cmd_capacity, "sweep": cmd_sweep, "verify": cmd_verify, "figures": cmd_figures}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except OSError as exc:
        print(f"hawking-battery: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"hawking-battery: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
