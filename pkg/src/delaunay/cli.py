"""Command-line front end: ``delaunay <command> ...``.

Exit status is 0 on success, 1 when a computation fails (no convergence,
an assembly gap, a failed invariant) and 2 for invalid arguments.
"""

from __future__ import annotations

import argparse
import contextlib
import dataclasses
import json
import logging
import math
import os
import sys
from typing import Sequence

from .checks import run_checks
from .conics import ConicKind, ConicSpec
from .errors import DelaunayError, ValidationError
from .export import ProfileSample, sample_profile, write_obj, write_profile_csv
from .mesh import assemble_composite_nodoid, tessellate
from .roulettes import RouletteKind, family_constant_length
from .solver import FitKind, FitRequest, FitResult, constant_volume_family, fit
from .surfgeom import PatchDomain, SurfaceSpec, curvatures_closed_form

log = logging.getLogger("delaunay")

ROULETTE_KINDS = [k.value for k in RouletteKind]
FIT_KINDS = [k.value for k in FitKind]


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(f"{self.prog}: {message}")


@contextlib.contextmanager
def _open_sink(path: str):
    if path == "-":
        yield sys.stdout.buffer
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            yield fh


def _surface(args) -> SurfaceSpec:
    return SurfaceSpec.of(args.kind, args.a, args.b, getattr(args, "t_origin", 0.0))


def _conic_dict(conic: ConicSpec) -> dict:
    return {"kind": conic.kind.value, "a": conic.a, "b": conic.b}


def fit_result_dict(result: FitResult) -> dict:
    return {
        "kind": result.kind.value,
        "conic": _conic_dict(result.conic),
        "t0": result.t0,
        "residuals": list(result.residuals),
        "iterations": result.iterations,
        "converged": result.converged,
    }


def _cmd_profile(args) -> int:
    samples = sample_profile(_surface(args), args.t_min, args.t_max, args.samples, args.sampling)
    with _open_sink(args.out) as sink:
        write_profile_csv(samples, sink)
    return 0


def _cmd_mesh(args) -> int:
    patch = PatchDomain(args.t_min, args.t_max, args.v_min, args.v_max)
    mesh = tessellate(_surface(args), patch, args.nt, args.nv, args.sampling)
    with _open_sink(args.out) as sink:
        write_obj(mesh, sink)
    return 0


def _cmd_curvature(args) -> int:
    bundle = curvatures_closed_form(_surface(args), args.t)
    print(json.dumps(dataclasses.asdict(bundle), indent=2))
    return 0


def _cmd_check(args) -> int:
    results = run_checks(_surface(args), seed=args.seed, samples=args.samples)
    ok = all(r.passed for r in results)
    report = {"kind": args.kind, "a": args.a, "b": args.b, "seed": args.seed, "passed": ok,
              "checks": [r.as_dict() for r in results]}
    print(json.dumps(report, indent=2))
    if not ok:
        failed = ", ".join(r.name for r in results if not r.passed)
        print(f"error: failed checks: {failed}", file=sys.stderr)
    return 0 if ok else 1


def _cmd_fit(args) -> int:
    result = fit(FitRequest(args.kind, args.volume, args.radius, args.t0))
    print(json.dumps(fit_result_dict(result), indent=2))
    return 0


_FAMILY_HEADER = "member,kind,status,a,b,t0,t,g,f,H,K\n"


def _family_rows(index: int, spec: SurfaceSpec, status: str, t0, samples: list[ProfileSample]) -> str:
    conic = spec.roulette.conic
    head = [str(index), spec.roulette.kind.value, status,
            "" if conic.a is None else "%.17g" % conic.a, "%.17g" % conic.b,
            "" if t0 is None else "%.17g" % t0]
    return "".join(
        ",".join(head + ["%.17g" % (x + 0.0) for x in (s.t, s.g, s.f, s.H, s.K)]) + "\n" for s in samples
    )


def _write_member_obj(obj_dir, index, spec, t1, t2, nt, nv):
    mesh = tessellate(spec, PatchDomain(t1, t2), nt, nv)
    name = os.path.join(obj_dir, f"member_{index:03d}_{spec.roulette.kind.value}.obj")
    with open(name, "wb") as fh:
        write_obj(mesh, fh)


def _cmd_family(args) -> int:
    if args.obj_dir:
        os.makedirs(args.obj_dir, exist_ok=True)
    chunks = [_FAMILY_HEADER]
    failures = 0
    index = 0
    if args.type == "constant-length":
        if args.a is None:
            raise ValidationError("constant-length families need --a")
        for pair in family_constant_length(args.a, args.count_ellipse, args.count_hyperbola):
            lo, hi = pair.t_range
            t1, t2 = max(lo, -args.t_max), min(hi, args.t_max)
            for rspec in (pair.first, pair.second):
                spec = SurfaceSpec(rspec)
                chunks.append(_family_rows(index, spec, "ok", None,
                                           sample_profile(spec, t1, t2, args.samples, args.sampling)))
                if args.obj_dir:
                    _write_member_obj(args.obj_dir, index, spec, t1, t2, args.nt, args.nv)
                index += 1
    else:
        if args.volume is None or args.radius is None or not args.t0:
            raise ValidationError("constant-volume families need --volume, --radius and --t0")
        for entry in constant_volume_family(args.volume, args.radius, args.t0):
            if entry.result is None:
                failures += 1
                log.warning("%s at t0=%s failed: %s", entry.kind, entry.t0, entry.message)
                chunks.append(f"{index},{entry.kind},failed,,,{'' if entry.t0 is None else '%.17g' % entry.t0},,,,,\n")
            else:
                spec = SurfaceSpec(entry.result.roulette)
                t0 = entry.result.t0
                status = "cylinder" if entry.kind == "cylinder" else "ok"
                chunks.append(_family_rows(index, spec, status, t0,
                                           sample_profile(spec, -t0, t0, args.samples, args.sampling)))
                if args.obj_dir:
                    _write_member_obj(args.obj_dir, index, spec, -t0, t0, args.nt, args.nv)
            index += 1
    with _open_sink(args.out) as sink:
        sink.write("".join(chunks).encode("ascii"))
    if failures:
        print(f"warning: {failures} family member(s) did not converge", file=sys.stderr)
    return 0


def _cmd_composite(args) -> int:
    conic = ConicSpec(ConicKind.HYPERBOLA, args.a, args.b)
    mesh = assemble_composite_nodoid(conic, args.T, args.periods, args.closed, args.join_tol,
                                     args.nt, args.nv, args.sampling)
    with _open_sink(args.out) as sink:
        write_obj(mesh, sink)
    return 0


def _add_surface_args(p, t_range=True):
    p.add_argument("--kind", required=True, choices=ROULETTE_KINDS)
    p.add_argument("--a", type=float, default=None, help="semi-axis a (unused for catenary)")
    p.add_argument("--b", type=float, required=True)
    if t_range:
        p.add_argument("--t-min", type=float, required=True)
        p.add_argument("--t-max", type=float, required=True)
        p.add_argument("--sampling", choices=["uniform", "arclength"], default="uniform")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="delaunay", description="Delaunay surfaces from conic roulettes.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("profile", help="meridian samples as CSV")
    _add_surface_args(p)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("mesh", help="surface patch as OBJ")
    _add_surface_args(p)
    p.add_argument("--v-min", type=float, default=0.0)
    p.add_argument("--v-max", type=float, default=2.0 * math.pi)
    p.add_argument("--nt", type=int, default=64)
    p.add_argument("--nv", type=int, default=64)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_mesh)

    p = sub.add_parser("curvature", help="curvature bundle at one parameter, as JSON")
    _add_surface_args(p, t_range=False)
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(func=_cmd_curvature)

    p = sub.add_parser("check", help="run the invariant suite, JSON report")
    _add_surface_args(p, t_range=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("fit", help="fit a surface to volume and boundary radius")
    p.add_argument("--kind", required=True, choices=FIT_KINDS)
    p.add_argument("--volume", type=float, required=True)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--t0", type=float, default=None)
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("family", help="constant-length or constant-volume family as CSV")
    p.add_argument("--type", required=True, choices=["constant-length", "constant-volume"])
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--count-ellipse", type=int, default=4)
    p.add_argument("--count-hyperbola", type=int, default=4)
    p.add_argument("--t-max", type=float, default=4.0, help="clip for unbounded parameter ranges")
    p.add_argument("--volume", type=float, default=None)
    p.add_argument("--radius", type=float, default=None)
    p.add_argument("--t0", type=float, nargs="+", default=None)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--sampling", choices=["uniform", "arclength"], default="uniform")
    p.add_argument("--obj-dir", default=None)
    p.add_argument("--nt", type=int, default=48)
    p.add_argument("--nv", type=int, default=48)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("composite", help="chained nodoid as OBJ")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--periods", type=int, default=1)
    p.add_argument("--closed", action="store_true")
    p.add_argument("--join-tol", type=float, default=1e-5)
    p.add_argument("--nt", type=int, default=64)
    p.add_argument("--nv", type=int, default=32)
    p.add_argument("--sampling", choices=["uniform", "arclength"], default="uniform")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_composite)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DelaunayError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
