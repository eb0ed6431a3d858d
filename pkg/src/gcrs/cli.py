"""Command-line front end: parsing, engine, and reports wired end to end.

Exit codes: 0 computation completed and all asserted checks passed;
1 completed with a failed check (sequence not regular, unresolved scan
classes, failed claims, search found nothing); 2 usage or parse error;
3 resource cap exceeded.

stdout is byte-identical across repeated runs and --jobs settings; timings
and engine statistics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .claims import load_manifest, run_claims
from .errors import (
    AlgebraError,
    DegreeCapExceededError,
    EnumerationTooLargeError,
)
from .graded import (
    DEFAULT_ENUM_CAP,
    component_size,
    hilbert_function,
    krull_dimension,
)
from .ideals import QuotientRing, annihilator
from .presentations import (
    base_change,
    parse_presentation,
    permute_generators,
    serialize_presentation,
)
from .regular import (
    exhaustive_regular_scan,
    search_regular_sequence,
    verify_sequence,
    witness_scan,
)

FORMAT_VERSION = 1

_USAGE_ERRORS = AlgebraError  # anything the user can fix counts as usage
_CAP_ERRORS = (EnumerationTooLargeError, DegreeCapExceededError)


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker count; affects wall-clock only, never output")
    common.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP, metavar="N",
                        help="abort component enumerations larger than N vectors")
    common.add_argument("--degree-cap", type=int, default=None, metavar="D",
                        help="abort basis computations needing degree above D")
    common.add_argument("--gen-order", default=None, metavar="NAMES",
                        help="comma-separated permutation of the generators")

    parser = argparse.ArgumentParser(
        prog="gcrs",
        description="Groebner computations in graded algebras over small finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file", help="presentation in .gcr format")
        return p

    cmd("check", "parse and validate a presentation")
    cmd("gb", "reduced Groebner basis of the relation ideal")
    p = cmd("hilbert", "dimensions of the graded components of R/I")
    p.add_argument("--max-degree", type=int, required=True, metavar="N")
    p = cmd("ann", "annihilator of a residue class")
    p.add_argument("--element", required=True, metavar="EXPR")
    p.add_argument("--mod-out", default=None, metavar="EXPR",
                   help="work in R/I further quotiented by EXPR")
    p = cmd("regtest", "verify a candidate regular sequence")
    p.add_argument("--seq", required=True, metavar="'E1; E2; ...'")
    p = cmd("scan", "first-annihilating-witness scan over a degree range")
    p.add_argument("--witnesses", required=True, metavar="'W1; W2; ...'")
    p.add_argument("--degrees", required=True, metavar="A..B")
    p = cmd("regscan", "exhaustively list the regular classes of one degree")
    p.add_argument("--degree", type=int, required=True, metavar="D")
    p.add_argument("--mod-out", default=None, metavar="EXPR")
    p = cmd("search", "depth-first search for a regular sequence by degree bounds")
    p.add_argument("--degrees", required=True, metavar="'8,2'")
    p.add_argument("--seed-first", default=None, metavar="EXPR",
                   help="pin the first element instead of enumerating its level")
    p.add_argument("--mod-out", default=None, metavar="EXPR")
    p.add_argument("--budget", type=int, default=None, metavar="N",
                   help="stop after N candidate regularity tests")
    p = cmd("basechange", "extend scalars to F_{p^r} and emit the presentation")
    p.add_argument("--ext", type=int, required=True, metavar="R")
    p.add_argument("-o", "--output", default=None, metavar="OUT",
                   help="output path (default: stdout)")
    cmd("dim", "Krull dimension of R/I")
    p = cmd("counterexample", "run every claim in the manifest and report verdicts")
    p.add_argument("--claims", default=None, metavar="PATH",
                   help="claim manifest (default: presentation path with .claims suffix)")
    return parser


def _load(args):
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise AlgebraError(f"cannot read {args.file}: {exc}") from None
    pres = parse_presentation(text)
    if args.gen_order:
        names = tuple(n.strip() for n in args.gen_order.split(","))
        pres = permute_generators(pres, names)
    return pres


def _quotient(pres, args, mod_out=None):
    quotient = QuotientRing.from_presentation(pres, degree_cap=args.degree_cap)
    if mod_out:
        quotient = quotient.mod_out([pres.ring.parse(mod_out)])
    return quotient


def _split_exprs(raw):
    return [piece.strip() for piece in raw.split(";") if piece.strip()]


def _emit_json(payload):
    payload = {"format_version": FORMAT_VERSION, **payload}
    print(json.dumps(payload, indent=2, sort_keys=True))


def _cmd_check(args):
    pres = _load(args)
    degrees = ",".join(str(d) for d in pres.degrees)
    if args.format == "json":
        _emit_json({
            "command": "check",
            "field": {"p": pres.field.p, "r": pres.field.r,
                      "modulus": list(pres.field.modulus)},
            "generators": list(pres.names),
            "degrees": list(pres.degrees),
            "relations": len(pres.relations),
            "meta": pres.meta,
        })
    else:
        print(f"ok: {len(pres.names)} generators over {pres.field}, "
              f"{len(pres.relations)} relations")
        print(f"degrees: {degrees}")
        for key, value in pres.meta.items():
            print(f"meta {key}: {value}")
    return 0


def _cmd_gb(args):
    pres = _load(args)
    quotient = _quotient(pres, args)
    gb = quotient.gb
    print(f"# stats: {gb.stats.as_dict()}", file=sys.stderr)
    if args.format == "json":
        _emit_json({
            "command": "gb",
            "order": pres.ring.order.describe(),
            "generators": list(pres.names),
            "basis": [str(p) for p in gb.polys],
            "stats": gb.stats.as_dict(),
        })
    else:
        sys.stdout.write(gb.dump())
    return 0


def _cmd_hilbert(args):
    pres = _load(args)
    quotient = _quotient(pres, args)
    table = hilbert_function(quotient, args.max_degree)
    if args.format == "json":
        _emit_json({"command": "hilbert", "max_degree": table.max_degree,
                    "counts": list(table.counts)})
    else:
        sys.stdout.write(table.to_text())
    return 0


def _cmd_ann(args):
    pres = _load(args)
    quotient = _quotient(pres, args, mod_out=args.mod_out)
    element = pres.ring.parse(args.element)
    ideal = annihilator(quotient, element)
    gens = [(str(g), g.degree()) for g in ideal.gens]
    if args.format == "json":
        _emit_json({
            "command": "ann",
            "element": args.element,
            "mod_out": args.mod_out,
            "generators": [{"poly": s, "degree": d} for s, d in gens],
        })
    else:
        print(f"# annihilator of {args.element} in {quotient.label}: "
              f"{len(gens)} generators")
        for s, d in gens:
            print(f"degree {d}: {s}")
    return 0


def _cmd_regtest(args):
    pres = _load(args)
    quotient = _quotient(pres, args)
    elements = [pres.ring.parse(e) for e in _split_exprs(args.seq)]
    report = verify_sequence(quotient, elements)
    for i, st in enumerate(report.stage_stats):
        print(f"# stage {i + 1}: wall={st['wall_seconds']:.3f}s "
              f"pairs={st['pairs_processed']}", file=sys.stderr)
    if args.format == "json":
        _emit_json({"command": "regtest", **report.as_dict()})
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.overall else 1


def _cmd_scan(args):
    pres = _load(args)
    quotient = _quotient(pres, args)
    witnesses = [pres.ring.parse(w) for w in _split_exprs(args.witnesses)]
    lo, _, hi = args.degrees.partition("..")
    try:
        bounds = (int(lo), int(hi if hi else lo))
    except ValueError:
        raise AlgebraError(f"malformed degree range {args.degrees!r}; want A..B") from None
    report = witness_scan(quotient, witnesses, bounds, cap=args.enum_cap)
    if args.format == "json":
        _emit_json({"command": "scan", **report.as_dict()})
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.overall else 1


def _cmd_regscan(args):
    pres = _load(args)
    quotient = _quotient(pres, args, mod_out=args.mod_out)
    found = exhaustive_regular_scan(quotient, args.degree, cap=args.enum_cap)
    candidates = component_size(quotient, args.degree)
    if args.format == "json":
        _emit_json({
            "command": "regscan",
            "degree": args.degree,
            "mod_out": args.mod_out,
            "candidates": candidates,
            "regular": [str(f) for f in found],
        })
    else:
        print(f"# degree-{args.degree} classes of {quotient.label}: "
              f"{candidates} candidates")
        if found:
            for f in found:
                print(f"regular: {f}")
        else:
            print(f"none regular (full enumeration of {candidates} candidates)")
    return 0


def _cmd_search(args):
    pres = _load(args)
    quotient = _quotient(pres, args, mod_out=args.mod_out)
    try:
        bounds = [int(d.strip()) for d in args.degrees.split(",") if d.strip()]
    except ValueError:
        raise AlgebraError(f"malformed degree list {args.degrees!r}; want '8,2'") from None
    seeds = [pres.ring.parse(args.seed_first)] if args.seed_first else None
    outcome = search_regular_sequence(quotient, bounds, seeds=seeds,
                                      cap=args.enum_cap, budget=args.budget)
    if args.format == "json":
        _emit_json({"command": "search", **outcome.as_dict()})
    else:
        sys.stdout.write(outcome.to_text())
    return 0 if outcome.found else 1


def _cmd_basechange(args):
    pres = _load(args)
    extended = base_change(pres, args.ext)
    text = serialize_presentation(extended)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_dim(args):
    pres = _load(args)
    quotient = _quotient(pres, args)
    dim = krull_dimension(quotient)
    if args.format == "json":
        _emit_json({"command": "dim", "dimension": dim})
    else:
        print(dim)
    return 0


def _cmd_counterexample(args):
    pres = _load(args)
    claims_path = Path(args.claims) if args.claims else Path(args.file).with_suffix(".claims")
    try:
        manifest_text = claims_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise AlgebraError(f"cannot read claim manifest {claims_path}: {exc}") from None
    claims = load_manifest(manifest_text)
    results = list(run_claims(pres, claims, enum_cap=args.enum_cap))
    if args.format == "json":
        _emit_json({
            "command": "counterexample",
            "claims": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                       for r in results],
            "overall": all(r.passed for r in results),
        })
    else:
        for r in results:
            print(r.line())
        print("OVERALL "
              + ("PASS" if all(r.passed for r in results) else "FAIL")
              + f" ({sum(r.passed for r in results)}/{len(results)} claims)")
    return 0 if all(r.passed for r in results) else 1


_HANDLERS = {
    "check": _cmd_check,
    "gb": _cmd_gb,
    "hilbert": _cmd_hilbert,
    "ann": _cmd_ann,
    "regtest": _cmd_regtest,
    "scan": _cmd_scan,
    "regscan": _cmd_regscan,
    "search": _cmd_search,
    "basechange": _cmd_basechange,
    "dim": _cmd_dim,
    "counterexample": _cmd_counterexample,
}


def run(argv):
    """Run one CLI invocation; returns the exit code without exiting."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return _HANDLERS[args.command](args)
    except _CAP_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
