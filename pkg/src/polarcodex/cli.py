"""Command-line surface: JSON reports on stdout, diagnostics on stderr.

Exit codes: 0 success, 2 parse error, 3 empty/full code, 4 engine
disagreement, 5 request not covered by the constructions, 6 region size
cap exceeded, 7 theorem verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .betti import invariants
from .codes import NeuralCode
from .constructions import RealizationRequest, realize
from .errors import (
    CodeParseError,
    EmptyCodeError,
    EngineMismatchError,
    FullCodeError,
)
from .explorer import MAX_REGION_NEURONS, enumerate_region, verify_theorems
from .homology import FieldSpec
from .ideal import canonical_form, classify_type

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_ENGINE_MISMATCH = 4
EXIT_NOT_COVERED = 5
EXIT_REGION_CAP = 6
EXIT_VERIFY_FAILED = 7


def _parse_words(lines, source):
    words = []
    width = None
    for lineno, raw in lines:
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        if width is None:
            width = len(text)
        elif len(text) != width:
            raise CodeParseError(
                f"{source}:{lineno}: expected {width} characters, got {len(text)}",
                line=lineno,
            )
        if any(ch not in "01" for ch in text):
            raise CodeParseError(
                f"{source}:{lineno}: invalid codeword {text!r}", line=lineno
            )
        words.append(text)
    if not words:
        raise CodeParseError(f"{source}: no codewords found", line=None)
    return NeuralCode.from_strings(words)


def load_code_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = list(enumerate(fh, start=1))
    except OSError as exc:
        raise CodeParseError(f"{path}: {exc}", line=None) from exc
    return _parse_words(lines, path)


def load_inline(text):
    parts = [p.strip() for p in text.split(",")]
    return _parse_words(list(enumerate(parts, start=1)), "--inline")


def _code_from_args(args):
    if args.inline is not None:
        return load_inline(args.inline)
    if args.codefile is None:
        raise CodeParseError("a code file or --inline word list is required", line=None)
    return load_code_file(args.codefile)


def _report(command, inputs, outputs):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
    }


def _emit(report):
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _inputs(n=None, field=None, method=None, seed=None):
    return {"n": n, "field": field, "method": method, "seed": seed}


def cmd_cf(args):
    code = _code_from_args(args)
    cf = canonical_form(code)
    out = [
        {
            "sigma": list(f.sigma_indices),
            "tau": list(f.tau_indices),
            "type": int(classify_type(f)),
        }
        for f in cf
    ]
    _emit(_report("cf", _inputs(n=code.n), {"cf": out}))
    return EXIT_OK


def cmd_invariants(args):
    code = _code_from_args(args)
    fieldspec = FieldSpec(args.field)
    pair, table = invariants(code, fieldspec, method=args.method)
    gens = []
    if not code.is_empty:
        from .ideal import polarized_ideal

        gens = list(polarized_ideal(code).generator_strings())
    outputs = {
        "generators": gens,
        "betti": table.rows(),
        "pd": pair.pd,
        "reg": pair.reg,
    }
    _emit(_report("invariants", _inputs(n=code.n, field=args.field, method=args.method), outputs))
    return EXIT_OK


def cmd_realize(args):
    fieldspec = FieldSpec(args.field)
    result = realize(RealizationRequest(args.n, args.pd, args.reg), fieldspec)
    inputs = _inputs(n=args.n, field=args.field)
    inputs["pd"] = args.pd
    inputs["reg"] = args.reg
    if result is None:
        _emit(_report("realize", inputs, {"covered": False, "route": None, "code": None}))
        print("not covered by the constructive families", file=sys.stderr)
        return EXIT_NOT_COVERED
    outputs = {
        "covered": True,
        "route": result.route,
        "code": list(result.code.to_strings()),
        "pd": result.pair.pd,
        "reg": result.pair.reg,
    }
    _emit(_report("realize", inputs, outputs))
    return EXIT_OK


def _ascii_grid(pairs):
    if not pairs:
        return ""
    max_pd = max(p for p, _ in pairs)
    max_reg = max(r for _, r in pairs)
    achieved = set(pairs)
    lines = ["reg"]
    for reg in range(max_reg, 0, -1):
        cells = " ".join(
            "●" if (pd, reg) in achieved else "·" for pd in range(max_pd + 1)
        )
        lines.append(f"{reg:3d} | {cells}")
    lines.append("    +" + "-" * (2 * max_pd + 2))
    lines.append("      " + " ".join(str(pd) for pd in range(max_pd + 1)) + "  pd")
    return "\n".join(lines)


def cmd_region(args):
    if args.n > MAX_REGION_NEURONS:
        print(
            f"region enumeration is exhaustive and capped at n={MAX_REGION_NEURONS}; "
            "use sampling for larger n",
            file=sys.stderr,
        )
        return EXIT_REGION_CAP
    fieldspec = FieldSpec(args.field)
    report = enumerate_region(
        args.n, fieldspec, use_symmetry=not args.no_symmetry, jobs=args.jobs
    )
    witnesses = [
        {
            "pd": pd,
            "reg": reg,
            "code": list(report.witnesses[(pd, reg)].to_strings()),
        }
        for pd, reg in report.pairs
    ]
    grid = _ascii_grid(report.pairs) if args.ascii else None
    outputs = {
        "pairs": [list(pair) for pair in report.pairs],
        "witnesses": witnesses,
        "codes_scanned": report.codes_scanned,
        "orbits_scanned": report.orbits_scanned,
        "use_symmetry": report.use_symmetry,
        "ascii_grid": grid,
    }
    _emit(_report("region", _inputs(n=args.n, field=args.field), outputs))
    if grid:
        print(grid, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args):
    fieldspec = FieldSpec(args.field)
    report = verify_theorems(args.n, fieldspec, samples=args.samples, seed=args.seed)
    checks = [
        {
            "name": c.name,
            "passed": c.passed,
            "failures": c.failures,
            "counterexample": list(c.counterexample.to_strings()) if c.counterexample else None,
            "detail": c.detail if not c.passed else "",
        }
        for c in report.checks.values()
    ]
    outputs = {
        "mode": report.mode,
        "codes_checked": report.codes_checked,
        "all_passed": report.all_passed,
        "checks": checks,
    }
    _emit(_report("verify", _inputs(n=args.n, field=args.field, seed=report.seed), outputs))
    if not report.all_passed:
        print("theorem verification failed; this indicates an implementation bug", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _add_code_input(parser):
    parser.add_argument("codefile", nargs="?", help="path to a code file (one word per line)")
    parser.add_argument("--inline", help="comma-separated codewords, e.g. 00,10,11")


def _default_jobs():
    try:
        return max(1, int(os.environ.get("POLAR_CODEX_JOBS", "1")))
    except ValueError:
        return 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polarcodex",
        description="Homological invariants of polarized ideals of neural codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", help="canonical form of a code's ideal")
    _add_code_input(p)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("invariants", help="Betti table, pd, and reg of a code")
    _add_code_input(p)
    p.add_argument("--field", type=int, default=2, help="prime field characteristic")
    p.add_argument(
        "--method",
        choices=["auto", "hochster", "lcm", "taylor", "cross"],
        default="auto",
    )
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("realize", help="construct a code with requested (pd, reg)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pd", type=int, required=True)
    p.add_argument("--reg", type=int, required=True)
    p.add_argument("--field", type=int, default=2)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("region", help="enumerate achievable (pd, reg) pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", type=int, default=2)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--ascii", action="store_true", help="include an ASCII region plot")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("verify", help="check the classification theorems and bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", type=int, default=2)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CodeParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (EmptyCodeError, FullCodeError) as exc:
        print(f"degenerate code: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except EngineMismatchError as exc:
        print(f"engine cross-check failed: {exc}", file=sys.stderr)
        return EXIT_ENGINE_MISMATCH
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
