"""Command line front end.

Subcommands:

* ``shift``   -- exterior shift of a complex read from a file or stdin
* ``op``      -- constructions and combinatorial shift rules
* ``verify``  -- run a named property suite
* ``explore`` -- randomized scan of the suspension-order conjecture

A complex file holds one facet per line as whitespace-separated positive
integers; ``#`` starts a comment line, the literal word ``empty`` is the
empty facet, and an optional ``n=<count>`` line fixes the ambient vertex
count (default: the largest label used).  ``shift`` and ``op`` print the
same format back, so commands pipe into each other.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import Face, SimplicialComplex, vertex_tuple
from .engine import ValidationFailure, exterior_shift
from .field import (
    DEFAULT_PRIME,
    BlockGenericSpec,
    ExplicitSpec,
    GenericSpec,
    check_prime,
)
from .homology import betti_direct, betti_from_shifted
from .operators import clique_sum_shift, combine, disjoint_union_shift, lex_compare
from .operators import shifted_union_recursive
from .suites import SUITES, conjecture_scan

SAFE_N = 16

_UNARY_OPS = ("cone", "suspension")
_BINARY_OPS = ("disjoint-union", "intersection", "join", "union")
_CENTERED_OPS = ("antistar", "link")
_RULE_OPS = ("clique-sum", "dushift", "sqcup")
_REPORT_OPS = ("betti", "compare")


# ----------------------------------------------------------------------
# complex file format


def parse_complex_text(text: str, name: str = "<input>") -> SimplicialComplex:
    facets = []
    ambient = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("n="):
            try:
                ambient = int(line[2:])
            except ValueError:
                raise ValueError(f"{name}:{lineno}: bad ambient count {line!r}")
            continue
        if line == "empty":
            facets.append(Face(0))
            continue
        try:
            labels = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"{name}:{lineno}: not a facet line: {line!r}")
        if any(v < 1 for v in labels):
            raise ValueError(f"{name}:{lineno}: labels must be positive")
        if len(set(labels)) != len(labels):
            raise ValueError(f"{name}:{lineno}: repeated label in facet")
        facets.append(Face.from_vertices(labels))
    if not facets:
        raise ValueError(f"{name}: no facets found")
    top = max((f.max_vertex for f in facets if f), default=0)
    if ambient is None:
        ambient = top
    elif ambient < top:
        raise ValueError(f"{name}: n={ambient} is below the largest label {top}")
    return SimplicialComplex.from_facets(ambient, facets)


def read_complex(path: str) -> SimplicialComplex:
    if path == "-":
        return parse_complex_text(sys.stdin.read(), "<stdin>")
    with open(path, encoding="utf-8") as fh:
        return parse_complex_text(fh.read(), path)


def format_complex(K: SimplicialComplex, comments: list | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"n={K.n}")
    for f in K.facets():
        lines.append(" ".join(map(str, vertex_tuple(f))) or "empty")
    return "\n".join(lines) + "\n"


def _face_lists(K: SimplicialComplex) -> list:
    return [list(vertex_tuple(f)) for f in K.facets()]


def _parse_face(text: str) -> Face:
    return Face.from_vertices(int(tok) for tok in text.replace(",", " ").split())


def _parse_matrix(text: str, seed: int):
    if text == "generic":
        return GenericSpec(seed)
    if text.startswith("block:"):
        parts = text[len("block:"):].split(",")
        if len(parts) != 2:
            raise ValueError("block spec must be block:<k>,<l>")
        return BlockGenericSpec(int(parts[0]), int(parts[1]), seed)
    if text.startswith("explicit:"):
        path = text[len("explicit:"):]
        rows = []
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                rows.append([int(tok) for tok in line.split()])
        return ExplicitSpec.from_rows(rows)
    raise ValueError(f"unknown matrix spec {text!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------------
# subcommands


def _cmd_shift(args: argparse.Namespace) -> int:
    p = check_prime(args.prime)
    K = read_complex(args.input)
    spec = _parse_matrix(args.matrix, args.seed)
    res = exterior_shift(K, spec, p=p, max_retries=args.retries)
    D = res.shifted
    if args.json:
        report = {
            "schema": 1,
            "command": "shift",
            "seed": res.seed_used,
            "prime": p,
            "n": D.n,
            "facets": _face_lists(D),
            "f_vector": list(D.f_vector),
            "betti": list(betti_from_shifted(D)) if D.is_shifted() else None,
            "validated": {
                "is_shifted": res.validated.is_shifted,
                "f_vector_preserved": res.validated.f_vector_preserved,
            },
            "retries": res.retries,
        }
        _emit(json.dumps(report, indent=2) + "\n", args.out)
    else:
        comments = [
            f"shift of {args.input} (matrix={args.matrix}, seed={res.seed_used})",
            f"f_vector={D.f_vector}",
            f"shifted={res.validated.is_shifted} retries={res.retries}",
        ]
        if D.is_shifted():
            comments.append(f"betti={betti_from_shifted(D)}")
        _emit(format_complex(D, comments), args.out)
    return 0


def _cmd_op(args: argparse.Namespace) -> int:
    p = check_prime(args.prime)
    kind = args.kind
    if len(args.inputs) > 2:
        raise ValueError("op takes at most two complexes")
    K = read_complex(args.inputs[0])
    L = read_complex(args.inputs[1]) if len(args.inputs) > 1 else None
    binary = kind in _BINARY_OPS or kind in _RULE_OPS or kind == "compare"
    if binary and L is None:
        raise ValueError(f"{kind} needs two complexes")
    if not binary and L is not None:
        raise ValueError(f"{kind} takes one complex")

    if kind == "betti":
        betti = betti_direct(K, p)
        if args.json:
            report = {
                "schema": 1,
                "command": "op",
                "kind": kind,
                "prime": p,
                "n": K.n,
                "f_vector": list(K.f_vector),
                "betti": list(betti),
            }
            _emit(json.dumps(report, indent=2) + "\n", args.out)
        else:
            _emit(f"f_vector: {K.f_vector}\nbetti: {betti}\n", args.out)
        return 0
    if kind == "compare":
        rel = lex_compare(K, L)
        if args.json:
            report = {"schema": 1, "command": "op", "kind": kind, "relation": rel}
            _emit(json.dumps(report, indent=2) + "\n", args.out)
        else:
            _emit(f"relation: {rel}\n", args.out)
        return 0

    if kind in _UNARY_OPS:
        R = combine(kind, K)
    elif kind in _BINARY_OPS:
        R = combine(kind.replace("-", "_"), K, L)
    elif kind in _CENTERED_OPS:
        if args.face is None:
            raise ValueError(f"{kind} needs --face")
        R = combine(kind, K, face=_parse_face(args.face))
    elif kind == "dushift":
        R = disjoint_union_shift(K, L)
    elif kind == "sqcup":
        R = shifted_union_recursive(K, L)
    else:  # clique-sum
        if args.dim is None:
            raise ValueError("clique-sum needs --dim")
        R = clique_sum_shift(K, L, args.dim)

    if args.json:
        report = {
            "schema": 1,
            "command": "op",
            "kind": kind,
            "n": R.n,
            "facets": _face_lists(R),
            "f_vector": list(R.f_vector),
        }
        _emit(json.dumps(report, indent=2) + "\n", args.out)
    else:
        _emit(format_complex(R, [f"{kind} result", f"f_vector={R.f_vector}"]), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    p = check_prime(args.prime)
    if args.max_n > SAFE_N and not args.force:
        raise ValueError(f"--max-n {args.max_n} exceeds {SAFE_N}; pass --force")
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r} (try one of {', '.join(sorted(SUITES))})")
    all_ok = True
    reports = []
    for name in names:
        checks = SUITES[name](trials=args.trials, max_n=args.max_n, seed=args.seed, p=p)
        passed = sum(1 for c in checks if c.ok)
        ok = passed == len(checks)
        all_ok = all_ok and ok
        if args.json:
            reports.append(
                {
                    "suite": name,
                    "ok": ok,
                    "passed": passed,
                    "total": len(checks),
                    "checks": [
                        {"label": c.label, "ok": c.ok, "detail": c.detail}
                        for c in checks
                    ],
                }
            )
        else:
            for c in checks:
                if not c.ok or args.verbose:
                    mark = "ok  " if c.ok else "FAIL"
                    print(f"{mark} {name}/{c.label}  {c.detail}")
            print(f"suite {name}: {passed}/{len(checks)} ok")
    if args.json:
        report = {
            "schema": 1,
            "command": "verify",
            "seed": args.seed,
            "prime": p,
            "trials": args.trials,
            "max_n": args.max_n,
            "ok": all_ok,
            "suites": reports,
        }
        print(json.dumps(report, indent=2))
    return 0 if all_ok else 2


def _cmd_explore(args: argparse.Namespace) -> int:
    p = check_prime(args.prime)
    if args.max_n > SAFE_N and not args.force:
        raise ValueError(f"--max-n {args.max_n} exceeds {SAFE_N}; pass --force")
    scan = conjecture_scan(trials=args.trials, max_n=args.max_n, seed=args.seed, p=p)
    if args.json:
        report = {"schema": 1, "command": "explore", "seed": args.seed, "prime": p}
        report.update(scan)
        print(json.dumps(report, indent=2))
    else:
        print(f"trials: {scan['trials']} (n <= {scan['max_n']})")
        for rel, count in scan["tallies"].items():
            print(f"  {rel}: {count}")
        print(f"violations: {scan['violations']}")
        for w in scan["witnesses"]:
            print(f"  witness facets: {w}")
    return 0 if not scan["violations"] else 2


# ----------------------------------------------------------------------
# parser


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=0, help="base RNG seed")
    sub.add_argument(
        "--prime", type=int, default=DEFAULT_PRIME, help="field modulus (prime < 2^62)"
    )
    sub.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftkit", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    sh = sub.add_parser("shift", help="exterior shift of a complex")
    sh.add_argument("input", help="complex file, or - for stdin")
    sh.add_argument(
        "--matrix",
        default="generic",
        help="generic | block:<k>,<l> | explicit:<file>",
    )
    sh.add_argument("--retries", type=int, default=3, help="reseeds before giving up")
    sh.add_argument("--out", help="write here instead of stdout")
    _add_common(sh)

    op = sub.add_parser("op", help="constructions and shift rules")
    op.add_argument(
        "kind",
        choices=sorted(_UNARY_OPS + _BINARY_OPS + _CENTERED_OPS + _RULE_OPS + _REPORT_OPS),
    )
    op.add_argument("inputs", nargs="+", help="one or two complex files")
    op.add_argument("--face", help="center face for link/antistar, e.g. '1 3'")
    op.add_argument("--dim", type=int, help="shared simplex dimension for clique-sum")
    op.add_argument("--out", help="write here instead of stdout")
    _add_common(op)

    ve = sub.add_parser("verify", help="run a named property suite")
    ve.add_argument("suite", help="suite name or 'all': " + ", ".join(sorted(SUITES)))
    ve.add_argument("--trials", type=int, default=10)
    ve.add_argument("--max-n", type=int, default=8, dest="max_n")
    ve.add_argument("--force", action="store_true", help="allow --max-n beyond 16")
    ve.add_argument("--verbose", action="store_true", help="print passing checks too")
    _add_common(ve)

    ex = sub.add_parser("explore", help="scan the suspension-order conjecture")
    ex.add_argument("--trials", type=int, default=50)
    ex.add_argument("--max-n", type=int, default=8, dest="max_n")
    ex.add_argument("--force", action="store_true", help="allow --max-n beyond 16")
    _add_common(ex)

    return parser


def main(argv: list | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    handlers = {
        "shift": _cmd_shift,
        "op": _cmd_op,
        "verify": _cmd_verify,
        "explore": _cmd_explore,
    }
    try:
        return handlers[args.cmd](args)
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
