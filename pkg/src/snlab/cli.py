"""Command-line interface.

Subcommands: ``invariants`` (records for .sgl input), ``classify``
(unicyclic nullity cases), ``verify`` (exhaustive campaign with report
file), ``generate`` (extremal family construction), ``sachs``
(combinatorial coefficients against the exact characteristic polynomial).

Exit codes are a stable contract: 0 success, 1 usage error, 2 theorem
violation (a counterexample artifact is written), 3 capacity exceeded,
4 parse error.

Campaign reports contain no timing data, so identical configurations
produce byte-identical files; wall time goes to stderr. Report schema:
without ``--emit-all`` a single JSON object with keys ``config``,
``totals``, ``histogram`` (slack counts keyed by "n,c"), ``violations``
and ``upper_check``; with ``--emit-all`` JSON-lines, one object per
(graph, signature) with keys ``graph6``, ``negatives``, ``n``, ``m``,
``c``, ``eta``, ``balanced``, ``lower``, ``upper``, ``s``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .errors import CapacityError, ParseError, TheoremViolation
from .formats import read_graph6, read_sgl, write_sgl
from .generation import effective_vertex_cap
from .linalg import (SACHS_VERTEX_CAP, char_poly_exact, nullity,
                     sachs_coefficients, signed_adjacency)
from .matching import matching_number
from .theorems import (FamilyParams, classify_unicyclic, gap_scan, generate_family,
                       invariant_record, unicyclic_case)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_CAPACITY = 3
EXIT_PARSE = 4


class UsageError(Exception):
    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad usage; this contract needs 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _dump_line(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _open_out(path: Optional[str]):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="ascii"), True


def cmd_invariants(args) -> int:
    records = read_sgl(args.input)
    out, close = _open_out(args.out)
    try:
        for sg in records:
            rec = invariant_record(sg, check=False)
            out.write(_dump_line(rec.to_json_dict()) + "\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_classify(args) -> int:
    records = read_sgl(args.input)
    out, close = _open_out(args.out)
    disagreed = False
    try:
        for i, sg in enumerate(records):
            try:
                offset = classify_unicyclic(sg)
            except ValueError as exc:
                out.write(_dump_line({"index": i, "error": str(exc)}) + "\n")
                continue
            n = sg.n
            m = matching_number(sg.graph)
            predicted = n - 2 * m + offset
            eta = nullity(sg)
            agree = predicted == eta
            disagreed = disagreed or not agree
            out.write(_dump_line({
                "index": i, "case": unicyclic_case(offset),
                "predicted_eta": predicted, "computed_eta": eta,
                "agreement": agree}) + "\n")
    finally:
        if close:
            out.close()
    return EXIT_VIOLATION if disagreed else EXIT_OK


def cmd_verify(args) -> int:
    source = None
    label = "internal"
    if args.source != "internal":
        path = args.source[len("graph6:"):]
        source = list(read_graph6(path))
        label = f"graph6:{path}"
    started = time.monotonic()
    report = gap_scan(n_max=args.n_max, c_max=args.c_max, source=source,
                      source_label=label, workers=args.workers,
                      emit_all=args.emit_all, cap=effective_vertex_cap())
    elapsed = time.monotonic() - started

    if args.emit_all:
        assert report.records is not None
        body = "".join(_dump_line(r) + "\n" for r in report.records)
    else:
        body = json.dumps(report.to_json_dict(), sort_keys=True, indent=2) + "\n"
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(body)

    bad = report.violations + report.upper_check["disagreements"]
    if bad:
        cpath = args.out + ".counterexamples.json"
        with open(cpath, "w", encoding="ascii") as fh:
            for rec in bad:
                fh.write(_dump_line(rec) + "\n")
        print(f"{len(bad)} violation(s); counterexamples in {cpath}",
              file=sys.stderr)
    print(f"scanned {report.totals['graphs']} graphs, "
          f"{report.totals['signatures']} signatures in {elapsed:.2f}s; "
          f"violations: {len(report.violations)}, "
          f"upper-bound disagreements: "
          f"{len(report.upper_check['disagreements'])}",
          file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_generate(args) -> int:
    try:
        params = FamilyParams(args.triangles, args.hexagons, args.tailed_squares)
    except ValueError as exc:
        raise UsageError(str(exc))
    sg, pred = generate_family(params)
    write_sgl([sg], args.out)
    rec = invariant_record(sg, check=False)
    rows = [("n", pred.n, rec.n), ("m", pred.m, rec.m), ("c", pred.c, rec.c),
            ("eta", pred.eta, rec.eta), ("s", pred.s, rec.s)]
    ok = True
    print("quantity  predicted  computed")
    for name, want, got in rows:
        ok = ok and want == got
        print(f"{name:<9} {want:>9}  {got:>8}")
    print(f"written to {args.out}; match: {ok}")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_sachs(args) -> int:
    records = read_sgl(args.input)
    out, close = _open_out(args.out)
    mismatched = False
    try:
        for i, sg in enumerate(records):
            if sg.n > SACHS_VERTEX_CAP:
                raise CapacityError(
                    f"coefficient check is capped at {SACHS_VERTEX_CAP} "
                    f"vertices, got {sg.n}")
            coeffs = sachs_coefficients(sg)
            oracle = char_poly_exact(signed_adjacency(sg))
            agree = coeffs == oracle
            mismatched = mismatched or not agree
            out.write(_dump_line({"index": i, "coefficients": list(coeffs),
                                  "agrees_char_poly": agree}) + "\n")
    finally:
        if close:
            out.close()
    return EXIT_VIOLATION if mismatched else EXIT_OK


def _build_parser() -> _Parser:
    p = _Parser(prog="snlab",
                description="Signed-graph nullity invariants and exhaustive "
                            "verification campaigns.")
    sub = p.add_subparsers(dest="command", required=True)

    pi = sub.add_parser("invariants", help="invariant records for .sgl input")
    pi.add_argument("input", help=".sgl file")
    pi.add_argument("--out", help="output path (default stdout)")
    pi.set_defaults(func=cmd_invariants)

    pc = sub.add_parser("classify",
                        help="nullity case of unbalanced unicyclic graphs")
    pc.add_argument("input", help=".sgl file")
    pc.add_argument("--out", help="output path (default stdout)")
    pc.set_defaults(func=cmd_classify)

    pv = sub.add_parser("verify", help="exhaustive verification campaign")
    pv.add_argument("--n-max", type=int, required=True,
                    help="largest vertex count to sweep")
    pv.add_argument("--c-max", type=int, default=None,
                    help="largest cycle-space dimension to keep")
    pv.add_argument("--source", default="internal",
                    help="'internal' or 'graph6:<path>'")
    pv.add_argument("--workers", type=int, default=1, help="parallel workers")
    pv.add_argument("--emit-all", action="store_true",
                    help="write one JSON line per (graph, signature)")
    pv.add_argument("--out", required=True, help="report path")
    pv.set_defaults(func=cmd_verify)

    pg = sub.add_parser("generate", help="build an extremal family member")
    pg.add_argument("triangles", type=int,
                    help="number of balanced 3-cycle blocks")
    pg.add_argument("hexagons", type=int,
                    help="number of unbalanced 6-cycle blocks")
    pg.add_argument("tailed_squares", type=int,
                    help="number of tailed 4-cycle blocks")
    pg.add_argument("--out", required=True, help=".sgl output path")
    pg.set_defaults(func=cmd_generate)

    ps = sub.add_parser("sachs",
                        help="combinatorial coefficients vs characteristic "
                             "polynomial")
    ps.add_argument("input", help=".sgl file")
    ps.add_argument("--out", help="output path (default stdout)")
    ps.set_defaults(func=cmd_sachs)
    return p


def _validate(args) -> None:
    if getattr(args, "n_max", None) is not None and args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    if getattr(args, "workers", None) is not None and args.workers < 1:
        raise UsageError("--workers must be at least 1")
    src = getattr(args, "source", None)
    if src is not None and src != "internal" and not src.startswith("graph6:"):
        raise UsageError("--source must be 'internal' or 'graph6:<path>'")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(args)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
