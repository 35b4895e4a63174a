"""Command-line interface.

Subcommands cover the whole pipeline: generate instances, orient a
quadruplet, replace omnidirectional antennas, assign power along a tour,
verify a configuration against its instance, and render SVG pictures.

Exit codes: 0 success, 1 a verification check failed, 2 usage or I/O
error.  The ``ANTENNA_SEED`` environment variable overrides ``--seed``
for ``gen``, which is handy for sweeping experiments without editing
command lines.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional, Sequence

from . import fileio
from .generators import FAMILIES, GenSpec, gen
from .geometry import plane_coverage_verify
from .orientation import orient_quadruplet
from .power import PowerAssignment, cost_chain_check, orient_and_assign, tsp_tour_approx
from .render import render_svg
from .replacement import build_udg, replace, verify_hop_spanner
from .scg import AntennaConfig, build_scg, is_connected

_DEFAULT_STRETCH = {"replace-basic": 9, "replace-refined": 8, "replace-small": 5}


def cmd_generate(args: argparse.Namespace) -> int:
    seed = int(os.environ.get("ANTENNA_SEED", args.seed))
    spec = GenSpec(
        family=args.family,
        n=args.n,
        seed=seed,
        side=args.side,
        gap=args.gap,
        case=args.case,
        clusters=args.clusters,
    )
    inst = gen(spec)
    meta = dict(inst.metadata)
    meta["family"] = spec.family
    meta["seed"] = seed
    text = fileio.write_instance(inst.points, args.out, metadata=meta)
    if args.out is None:
        sys.stdout.write(text)
    return 0


def cmd_orient4(args: argparse.Namespace) -> int:
    points, _ = fileio.read_instance(args.instance)
    if len(points) != 4:
        raise ValueError("orient4 needs an instance with exactly 4 points")
    assignment = orient_quadruplet(points)
    configs = [
        AntennaConfig(p, ang, assignment.aperture) for p, ang in assignment.entries
    ]
    text = fileio.write_config(configs, "orient4", args.out, metadata={"case": assignment.case})
    if args.out is None:
        sys.stdout.write(text)
    return 0


def cmd_replace(args: argparse.Namespace) -> int:
    points, _ = fileio.read_instance(args.instance)
    origin = tuple(args.origin) if args.origin else None
    result = replace(points, mode=args.mode, origin=origin)
    meta = {"grid_origin": list(result.grid.origin)}
    text = fileio.write_config(result.configs, f"replace-{result.mode}", args.out, metadata=meta)
    if args.out is None:
        sys.stdout.write(text)
    return 0


def cmd_power(args: argparse.Namespace) -> int:
    points, _ = fileio.read_instance(args.instance)
    pa = orient_and_assign(points, args.beta)
    text = fileio.write_config(pa.configs(), "power", args.out, metadata={"beta": args.beta})
    if args.out is None:
        sys.stdout.write(text)
    return 0


def _check_connected(configs, mode, instance_points, metadata, limit):
    return {"passed": is_connected(build_scg(configs))}


def _check_coverage(configs, mode, instance_points, metadata, limit):
    if any(math.isfinite(c.range) for c in configs):
        raise ValueError("coverage check needs unbounded ranges")
    report = plane_coverage_verify([c.wedge() for c in configs])
    out: dict = {"passed": report.covered}
    if report.witness_point is not None:
        out["witness_point"] = [report.witness_point.x, report.witness_point.y]
    if report.witness_direction is not None:
        out["witness_direction"] = report.witness_direction
    return out


def _check_stretch(configs, mode, instance_points, metadata, limit):
    if instance_points is None:
        raise ValueError("stretch check needs --instance")
    if [c.location for c in configs] != instance_points:
        raise ValueError("config antennas do not match the instance points")
    if limit is None:
        limit = _DEFAULT_STRETCH.get(mode)
    if limit is None:
        raise ValueError(f"no default hop limit for mode {mode!r}; pass --limit")
    udg = build_udg(instance_points)
    scg = build_scg(configs)
    rep = verify_hop_spanner(udg, scg, limit)
    out = {"passed": rep.ok, "max_hops": rep.max_hops, "limit": limit}
    if rep.worst_edge is not None:
        out["worst_edge"] = [list(rep.worst_edge[0].as_tuple()), list(rep.worst_edge[1].as_tuple())]
    return out


def _check_cost_chain(configs, mode, instance_points, metadata, limit):
    if instance_points is None:
        raise ValueError("cost-chain check needs --instance")
    beta = metadata.get("beta")
    if beta is None:
        raise ValueError("config metadata lacks beta")
    pa = PowerAssignment(
        beta, tuple((c.location, c.orientation, c.range) for c in configs)
    )
    tour = tsp_tour_approx(instance_points)
    rep = cost_chain_check(pa, tour)
    return {
        "passed": rep.ok,
        "cost": rep.cost,
        "cost_over_tour": rep.cost_over_tour,
        "cost_over_mst": rep.cost_over_mst,
        "max_index_gap": rep.max_index_gap,
    }


_CHECKS = {
    "connected": _check_connected,
    "coverage": _check_coverage,
    "stretch": _check_stretch,
    "cost-chain": _check_cost_chain,
}

_DEFAULT_CHECKS = {
    "orient4": ["connected", "coverage"],
    "replace-basic": ["connected", "stretch"],
    "replace-refined": ["connected", "stretch"],
    "replace-small": ["connected", "stretch"],
    "power": ["connected", "cost-chain"],
}


def cmd_verify(args: argparse.Namespace) -> int:
    configs, mode, metadata = fileio.read_config(args.config)
    instance_points = None
    if args.instance:
        instance_points, _ = fileio.read_instance(args.instance)
    names = (
        [s.strip() for s in args.checks.split(",") if s.strip()]
        if args.checks
        else _DEFAULT_CHECKS.get(mode, ["connected"])
    )
    for name in names:
        if name not in _CHECKS:
            raise ValueError(f"unknown check: {name!r}")
    report = {"mode": mode, "checks": {}}
    for name in names:
        report["checks"][name] = _CHECKS[name](
            configs, mode, instance_points, metadata, args.limit
        )
    report["ok"] = all(c["passed"] for c in report["checks"].values())
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return 0 if report["ok"] else 1


def cmd_render(args: argparse.Namespace) -> int:
    configs, mode, metadata = fileio.read_config(args.config)
    grid_origin = None
    if mode.startswith("replace") and "grid_origin" in metadata:
        grid_origin = tuple(metadata["grid_origin"])
    svg = render_svg(configs, grid_origin=grid_origin)
    if args.out is None:
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sectornet",
        description="Orientation and power assignment for quarter-wedge sector antennas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a point instance")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--side", type=float, default=100.0)
    p.add_argument("--gap", type=float, default=10.0)
    p.add_argument("--case", type=int, choices=(1, 2), default=None)
    p.add_argument("--clusters", type=int, default=5)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("orient4", help="orient a four-point instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_orient4)

    p = sub.add_parser("replace", help="replace unit disks by wedges")
    p.add_argument("--instance", required=True)
    p.add_argument("--mode", choices=("basic", "refined"), default="refined")
    p.add_argument("--origin", type=float, nargs=2, default=None, metavar=("OX", "OY"))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_replace)

    p = sub.add_parser("power", help="orient and assign transmission ranges")
    p.add_argument("--instance", required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("verify", help="check a configuration")
    p.add_argument("--config", required=True)
    p.add_argument("--instance", default=None)
    p.add_argument("--checks", default=None, help="comma separated subset of: connected, coverage, stretch, cost-chain")
    p.add_argument("--limit", type=float, default=None, help="hop limit for the stretch check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a configuration as SVG")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
