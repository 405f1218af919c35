"""Command line: ``liefol {check,analyze,quotient,curvature,corpus}``.

Exit codes: 0 pass, 1 expectation or theorem failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .analysis import EntryResult, analyze, render_corpus, render_structured, render_text, run_corpus
from .curvature import curvature_summary, quotient_structure
from .errors import InvalidAlgebra, LieFolError, NotAnIdeal
from .fileformat import dump, from_algebra, load
from .foliation import is_riemannian, make_split
from .lie import validate_jacobi
from .linalg import Mat

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


def _load(path):
    try:
        return load(path)
    except (LieFolError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return None


def _jacobi_ok(af) -> bool:
    bad = validate_jacobi(af.algebra())
    for v in bad:
        print(f"Jacobi violation {v}", file=sys.stderr)
    return not bad


def cmd_check(args) -> int:
    af = _load(args.file)
    if af is None:
        return EXIT_INVALID
    try:
        ok = _jacobi_ok(af)
    except LieFolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not ok:
        return EXIT_INVALID
    print(f"{af.name}: antisymmetry and Jacobi identity hold (dim {af.dim})")
    return EXIT_OK


def cmd_analyze(args) -> int:
    af = _load(args.file)
    if af is None:
        return EXIT_INVALID
    try:
        report = analyze(af)
    except InvalidAlgebra as exc:
        print(f"error: {exc}", file=sys.stderr)
        for v in exc.violations:
            print(f"Jacobi violation {v}", file=sys.stderr)
        return EXIT_INVALID
    except LieFolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(render_structured(report) if args.format == "structured" else render_text(report))
    result = EntryResult(
        af.name, str(args.file), True, True,
        comparisons=report["expectations"], theorems=report["theorems"], annotations=af.annotations,
    )  # fmt: skip
    for f in result.failures:
        print(f"FAIL {af.name}: {f}", file=sys.stderr)
    return EXIT_OK if result.passed else EXIT_FAIL


def _split_or_error(af):
    if not _jacobi_ok(af):
        return None
    if not af.vertical:
        print("error: file declares no vertical subalgebra", file=sys.stderr)
        return None
    return make_split(af.algebra(), af.gram, af.vertical)


def cmd_quotient(args) -> int:
    af = _load(args.file)
    if af is None:
        return EXIT_INVALID
    try:
        s = _split_or_error(af)
        if s is None:
            return EXIT_INVALID
        if not is_riemannian(s):
            print("error: foliation is not Riemannian; no quotient metric", file=sys.stderr)
            return EXIT_INVALID
        q = quotient_structure(s)
    except NotAnIdeal:
        print("error: vertical subalgebra is not an ideal; the quotient is not a Lie group", file=sys.stderr)
        return EXIT_INVALID
    except LieFolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    out = from_algebra(q, Mat.diagonal(s.horizontal_weights), name=q.name or f"{af.name}/k")
    sys.stdout.write(dump(out))
    return EXIT_OK


def cmd_curvature(args) -> int:
    af = _load(args.file)
    if af is None:
        return EXIT_INVALID
    try:
        if not _jacobi_ok(af):
            return EXIT_INVALID
        rep = curvature_summary(af.algebra(), gram=af.metric())
    except LieFolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(f"{af.name}: flat={str(rep.flat).lower()} constant_curvature={rep.constant_curvature}")
    for (a, b), k in rep.sectional.items():
        print(f"  K({a},{b}) = {k}")
    return EXIT_OK


def cmd_corpus(args) -> int:
    result = run_corpus(args.dir, jobs=args.jobs)
    sys.stdout.write(render_corpus(result))
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liefol", description="Exact analysis of Lie algebra foliations.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", help="validate antisymmetry and the Jacobi identity")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)
    a = sub.add_parser("analyze", help="classification, foliation flags, curvature and theorem checks")
    a.add_argument("file")
    a.add_argument("--format", choices=("text", "structured"), default="text")
    a.set_defaults(func=cmd_analyze)
    q = sub.add_parser("quotient", help="emit the quotient algebra g/k in the same file format")
    q.add_argument("file")
    q.set_defaults(func=cmd_quotient)
    k = sub.add_parser("curvature", help="curvature of the file's left-invariant metric")
    k.add_argument("file")
    k.set_defaults(func=cmd_curvature)
    r = sub.add_parser("corpus", help="run every .lie file in a directory (default: bundled corpus)")
    r.add_argument("dir", nargs="?", default=None)
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
