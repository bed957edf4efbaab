"""Command-line front door.

Grammar: ``helly <linear|disks|gen> <subcommand> [flags]``. Exit codes
form the complete contract: 0 success/consistent, 1 inconsistent or
violating family, 2 input error. Reports mirror the library types
one-to-one so downstream tooling can parse certificates.

``HELLY_THREADS`` caps internal parallelism; the current implementation
executes serially, which respects any cap (0 means serial explicitly).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import instances
from .disks import CommonPoint, intersect_region, minimalist_helly_check
from .linear import Consistent, LinearSystem, helly_certify, sample_consistency
from .radicals import point_bounds, point_float, quad_float
from .separation import separating_line
from .svg import render_disks

DEFAULT_PRECISION = 53


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _read_threads_cap() -> int | None:
    raw = os.environ.get("HELLY_THREADS")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"HELLY_THREADS must be an integer, got {raw!r}")
    if cap < 0:
        raise ValueError("HELLY_THREADS must be nonnegative")
    return cap


def _load(path: str, want_kind: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = instances.parse_instance(fh.read())
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror or exc}")
    if want_kind == "linear" and not isinstance(payload, LinearSystem):
        raise ValueError(f"{path} holds a disks instance, expected linear")
    if want_kind == "disks" and isinstance(payload, LinearSystem):
        raise ValueError(f"{path} holds a linear instance, expected disks")
    return payload


def _rat_pair(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def _witness_doc(witness) -> dict:
    return {
        "point": [_rat_pair(x) for x in witness.point],
        "nullspace": [[_rat_pair(x) for x in vec] for vec in witness.basis],
    }


def _cmd_linear_certify(args) -> int:
    system = _load(args.path, "linear")
    cert = helly_certify(system)
    if isinstance(cert, Consistent):
        if args.format == "json":
            print(json.dumps({"verdict": "consistent", "witness": _witness_doc(cert.witness)}))
        else:
            pt = ", ".join(str(x) for x in cert.witness.point)
            print(f"consistent; witness point ({pt}), solution set dimension {cert.witness.dim}")
        return 0
    if args.format == "json":
        print(json.dumps({"verdict": "inconsistent", "subsystem": list(cert.subsystem)}))
    else:
        idx = ", ".join(str(i) for i in cert.subsystem)
        print(f"inconsistent; smallest inconsistent subsystem: equations {{{idx}}}")
    return 1


def _cmd_linear_sample(args) -> int:
    system = _load(args.path, "linear")
    if args.size > system.n:
        raise ValueError(f"sample size {args.size} exceeds equation count {system.n}")
    report = sample_consistency(system, args.size, args.trials, args.seed)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "samples_drawn": report.samples_drawn,
                    "subsystem_size": report.subsystem_size,
                    "inconsistent_samples": report.inconsistent_samples,
                    "first_hit": list(report.first_hit) if report.first_hit else None,
                    "seed": report.seed,
                    "generator": report.generator,
                }
            )
        )
    else:
        print(
            f"drew {report.samples_drawn} subsystems of size {report.subsystem_size}: "
            f"{report.inconsistent_samples} inconsistent"
            + (f"; first hit {set(report.first_hit)}" if report.first_hit else "")
            + f" (seed {report.seed}, generator {report.generator})"
        )
    return 0


def _enclosure_doc(point, bits: int) -> dict:
    (xlo, xhi), (ylo, yhi) = point_bounds(point, bits)
    return {
        "x": {"low": _rat_pair(xlo), "high": _rat_pair(xhi)},
        "y": {"low": _rat_pair(ylo), "high": _rat_pair(yhi)},
        "precision_bits": bits,
    }


def _cmd_disks_check(args) -> int:
    family = _load(args.path, "disks")
    if len(family) < 3:
        raise ValueError("disk check requires at least three disks")
    verdict = minimalist_helly_check(family)
    if isinstance(verdict, CommonPoint):
        if args.format == "json":
            print(
                json.dumps(
                    {"verdict": "common-point", "point": _enclosure_doc(verdict.point, args.precision)}
                )
            )
        else:
            fx, fy = point_float(verdict.point)
            print(f"common point exists; certified near ({fx:.6f}, {fy:.6f})")
        return 0
    if args.format == "json":
        print(json.dumps({"verdict": "violating-triple", "triple": list(verdict.indices)}))
    else:
        print(f"no common point; disks {set(verdict.indices)} already have none")
    return 1


def _cmd_disks_svg(args) -> int:
    family = _load(args.path, "disks")
    segment = line = None
    query = args.query
    if query is not None:
        if query < 0 or query >= len(family):
            raise ValueError(f"query index {query} out of range")
        rest = [d for i, d in enumerate(family) if i != query]
        if not rest:
            raise ValueError("query needs at least one other disk")
        region = intersect_region(rest)
        if region.is_empty:
            raise ValueError("the other disks have empty intersection; nothing to separate")
        try:
            sep = separating_line(family[query], region)
        except ValueError as exc:
            raise ValueError(f"query disk is not disjoint from the region: {exc}")
        on_g = point_float(sep.point)
        (tx_lo, tx_hi), (ty_lo, ty_hi) = sep.closest.on_t(args.precision)
        on_t = (float((tx_lo + tx_hi) / 2), float((ty_lo + ty_hi) / 2))
        segment = (on_t, on_g)
        nx, ny = quad_float(sep.normal[0]), quad_float(sep.normal[1])
        norm = max((nx * nx + ny * ny) ** 0.5, 1e-12)
        # the line runs perpendicular to the normal, well past the scene
        span = 4 * max(float(d.r) for d in family) + 10
        dx, dy = -ny / norm * span, nx / norm * span
        line = ((on_g[0] - dx, on_g[1] - dy), (on_g[0] + dx, on_g[1] + dy))
        # region arcs index into `rest`, which is a prefix of the drawn family
        doc = render_disks(rest + [family[query]], region=region, query=len(rest), segment=segment, line=line)
    else:
        region = intersect_region(family)
        doc = render_disks(family, region=region)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(doc)
    print(f"wrote {args.out}")
    return 0


def _cmd_gen(args) -> int:
    kind = args.kind
    if kind == "tetrahedron":
        text = instances.dumps_linear(instances.tetrahedral_system())
    elif kind == "random-linear":
        text = instances.dumps_linear(instances.gen_random_linear(args.n, args.k, args.seed))
    elif kind == "consistent-linear":
        text = instances.dumps_linear(instances.gen_consistent_linear(args.n, args.k, args.seed))
    elif kind == "random-disks":
        text = instances.dumps_disks(instances.gen_random_disks(args.n, args.seed))
    elif kind == "helly-disks":
        text = instances.dumps_disks(instances.gen_helly_disks(args.n, args.seed))
    else:  # argparse choices already reject this
        raise ValueError(f"unknown generator kind {kind!r}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="helly",
        description="Exact feasibility certificates for linear systems and disk families.",
    )
    top = parser.add_subparsers(dest="group", required=True)

    linear = top.add_parser("linear", help="overdetermined linear systems")
    lin_sub = linear.add_subparsers(dest="command", required=True)
    certify = lin_sub.add_parser("certify", help="consistency verdict with certificate")
    certify.add_argument("path")
    certify.add_argument("--format", choices=("text", "json"), default="text")
    certify.set_defaults(func=_cmd_linear_certify)
    sample = lin_sub.add_parser("sample", help="randomized subsystem sampling")
    sample.add_argument("path")
    sample.add_argument("--size", type=int, required=True)
    sample.add_argument("--trials", type=int, required=True)
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument("--format", choices=("text", "json"), default="text")
    sample.set_defaults(func=_cmd_linear_sample)

    disks = top.add_parser("disks", help="planar disk families")
    disk_sub = disks.add_subparsers(dest="command", required=True)
    check = disk_sub.add_parser("check", help="common point or violating triple")
    check.add_argument("path")
    check.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.set_defaults(func=_cmd_disks_check)
    svg = disk_sub.add_parser("svg", help="draw the family and its intersection")
    svg.add_argument("path")
    svg.add_argument("--out", required=True)
    svg.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    svg.add_argument("--query", type=int, default=None)
    svg.set_defaults(func=_cmd_disks_svg)

    gen = top.add_parser("gen", help="write instance files")
    gen.add_argument(
        "kind",
        choices=("tetrahedron", "random-linear", "consistent-linear", "random-disks", "helly-disks"),
    )
    gen.add_argument("--n", type=int, default=8)
    gen.add_argument("--k", type=int, default=3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=_cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _read_threads_cap()
        return args.func(args)
    except ValueError as exc:
        return _fail(str(exc))


def entry() -> None:
    sys.exit(main())
