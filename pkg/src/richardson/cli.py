"""Command line interface.

Subcommands: construct, verify, render, enumerate, classify, crossvalidate.
JSON on stdout is the machine interface (top-level ``"schema": 1``).
Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify, cross_validate
from .diagram import assemble, render_dot, render_text
from .dimvec import DimensionVector, is_proper, make_dimvec, normalize, proper_dimvecs
from .kinds import Kind
from .partitions import Partition, is_valid
from .verify import full_report

SCHEMA = 1
KIND_CHOICES = ["orth", "symp", "orthogonal", "symplectic"]


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _emit(payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **payload}, indent=2))


def _dimvec_from_args(args) -> tuple[DimensionVector, DimensionVector | None]:
    kind = Kind.parse(args.kind)
    try:
        if args.dimvec is not None:
            if args.half is not None or args.N is not None:
                raise UsageError("give either --dimvec or --half/--N, not both")
            d = DimensionVector.of(kind, _ints(args.dimvec))
        elif args.N is not None:
            d = make_dimvec(kind, _ints(args.half or ""), args.N)
        else:
            raise UsageError("need --dimvec or --N (with optional --half)")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    original = None
    if not args.no_normalize and not is_proper(d):
        original, d = d, normalize(d)
    if kind is Kind.ORTHOGONAL and d.N < 3:
        raise UsageError(f"orthogonal groups need N >= 3, got {d.N}")
    if kind is Kind.SYMPLECTIC and d.N < 2:
        raise UsageError(f"symplectic groups need N >= 2, got {d.N}")
    return d, original


def _add_dimvec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", required=True, choices=KIND_CHOICES)
    p.add_argument("--dimvec", help="full vector, e.g. 3,4,2,4,3")
    p.add_argument("--half", help="d_1,...,d_s (with --N)")
    p.add_argument("--N", type=int, help="dimension of the natural module")
    p.add_argument("--no-normalize", action="store_true", help="use a non-proper vector as given")


def _summary(report) -> str:
    d = report.dimvec
    lines = [
        f"{d.kind.value} d={d} N={d.N}",
        "pieces: " + " + ".join(str(p) for p in report.pieces),
        f"partition: {report.jordan}  expected: {report.expected}",
        f"dim u={report.parabolic.dim_u}  dim l={report.parabolic.dim_levi}  dim C(x)={report.centralizer_dim}",
        f"|Gamma|={len(report.support)}  type: {report.type}  nice: {report.nice}",
    ]
    lines += [f"{name}: {value}" for name, value in report.flags().items()]
    return "\n".join(lines)


def cmd_construct(args) -> int:
    d, original = _dimvec_from_args(args)
    report = full_report(d)
    if args.render:
        _print_diagram(assemble(d), args.render)
    elif args.format == "text":
        print(_summary(report))
    else:
        payload = report.to_json()
        if original is not None:
            payload["normalized_from"] = list(original.entries)
        payload["diagram"] = report.diagram.to_json()
        _emit(payload)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    d, original = _dimvec_from_args(args)
    report = full_report(d)
    if args.format == "text":
        print(_summary(report))
    else:
        payload = {
            "dimvec": d.to_json(),
            "partition": report.jordan.to_json(),
            "expected_partition": report.expected.to_json(),
            "dense": report.dense,
            "flags": report.flags(),
            "ok": report.ok,
        }
        if original is not None:
            payload["normalized_from"] = list(original.entries)
        _emit(payload)
    return 0 if report.ok else 1


def _print_diagram(D, fmt: str) -> None:
    if fmt == "text":
        sys.stdout.write(render_text(D))
    elif fmt == "dot":
        sys.stdout.write(render_dot(D))
    else:
        _emit({"diagram": D.to_json()})


def cmd_render(args) -> int:
    d, _ = _dimvec_from_args(args)
    _print_diagram(assemble(d), args.format)
    return 0


def _sizes(kind: Kind, args) -> list[int]:
    if args.N is not None:
        return [args.N]
    lo = 3 if kind is Kind.ORTHOGONAL else 2
    step = 1 if kind is Kind.ORTHOGONAL else 2
    return list(range(lo, args.max_N + 1, step))


def cmd_enumerate(args) -> int:
    kinds = [Kind.parse(args.kind)] if args.kind else [Kind.ORTHOGONAL, Kind.SYMPLECTIC]
    results = []
    failures = []
    checked = 0
    for kind in kinds:
        for N in _sizes(kind, args):
            partitions = set()
            for d in proper_dimvecs(kind, N):
                report = full_report(d)
                partitions.add(report.jordan)
                if args.check == "all":
                    checked += 1
                    if not report.ok:
                        bad = [k for k, v in report.flags().items() if not v]
                        failures.append({"kind": kind.value, "dimvec": list(d.entries), "failed": bad})
            entry = {
                "kind": kind.value,
                "N": N,
                "partitions": [p.to_json() for p in sorted(partitions, key=lambda p: p.parts, reverse=True)],
            }
            if args.check == "all":
                cv = cross_validate(kind, N)
                entry["crossvalidate_ok"] = cv.ok
                if not cv.ok:
                    failures.append({"kind": kind.value, "N": N, "missing": [p.to_json() for p in cv.missing],
                                     "extra": [p.to_json() for p in cv.extra]})
            results.append(entry)
    if args.format == "text":
        for entry in results:
            print(f"{entry['kind']} N={entry['N']}: {len(entry['partitions'])} Richardson partitions")
        if args.check == "all":
            print(f"checked {checked} dimension vectors, {len(failures)} failures")
    else:
        payload = {"results": results}
        if args.check == "all":
            payload.update(checked=checked, failures=failures, ok=not failures)
        _emit(payload)
    return 1 if failures else 0


def cmd_classify(args) -> int:
    kind = Kind.parse(args.kind)
    try:
        a = Partition.from_parts(_ints(args.partition))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not is_valid(a, kind):
        raise UsageError(f"{a} is not a {kind.name.lower()} partition")
    witness = classify(a, kind)
    if args.format == "text":
        print(f"{a}: polarizable={witness is not None}")
        if witness is not None:
            for tag, seg in witness.segments:
                print(f"  {tag}: {seg}")
    else:
        _emit({
            "kind": kind.value,
            "partition": a.to_json(),
            "polarizable": witness is not None,
            "witness": witness.to_json() if witness is not None else None,
        })
    return 0


def cmd_crossvalidate(args) -> int:
    kind = Kind.parse(args.kind)
    if args.N < (3 if kind is Kind.ORTHOGONAL else 2) or (kind is Kind.SYMPLECTIC and args.N % 2):
        raise UsageError(f"invalid N={args.N} for {kind.value}")
    cv = cross_validate(kind, args.N)
    if args.format == "text":
        if cv.ok:
            print(f"OK: {len(cv.enumerated)} partitions matched")
        else:
            print(f"MISMATCH: missing {[str(p) for p in cv.missing]} extra {[str(p) for p in cv.extra]}")
    else:
        _emit(cv.to_json())
    return 0 if cv.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="richardson", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build x for P(d) and verify it")
    _add_dimvec_args(p)
    p.add_argument("--render", choices=["text", "dot", "json"], help="print the diagram instead of the report")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run every check on the construction for d")
    _add_dimvec_args(p)
    p.add_argument("--json", dest="format", action="store_const", const="json")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw the line diagram")
    _add_dimvec_args(p)
    p.add_argument("--format", choices=["text", "dot", "json"], default="text")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate", help="Richardson partitions over all parabolics")
    p.add_argument("--kind", choices=KIND_CHOICES)
    p.add_argument("--N", type=int)
    p.add_argument("--max-N", type=int, default=12)
    p.add_argument("--check", choices=["none", "all"], default="none")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="is the orbit of a partition polarizable?")
    p.add_argument("--kind", required=True, choices=KIND_CHOICES)
    p.add_argument("--partition", required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("crossvalidate", help="classifier vs. enumeration for one N")
    p.add_argument("--kind", required=True, choices=KIND_CHOICES)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_crossvalidate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"richardson {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
