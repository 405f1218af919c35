"""Whole-file analysis, expectation checking and corpus runs.

The structured report is a JSON tree with sorted keys; every rational is a
string ``"p"`` or ``"p/q"`` so that the output is exact and byte-stable.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .curvature import curvature_summary, quotient_geometry, quotient_structure, submersion_quotient_geometry
from .errors import InvalidAlgebra, LieFolError
from .fileformat import TYPO_ADJUSTED, AlgebraFile, format_comb, load
from .foliation import analyze_split, make_split, verify_theorems
from .lie import classify, killing_form, radical, validate_jacobi

log = logging.getLogger(__name__)


def bundled_corpus_dir() -> Path:
    return Path(str(resources.files("liefol") / "corpus"))


def _q(x) -> str | None:
    return None if x is None else str(Fraction(x))


def _vec(labels, v) -> str:
    return format_comb(labels, v)


def _curv(rep) -> dict:
    return {
        "flat": rep.flat,
        "constant_curvature": _q(rep.constant_curvature),
        "sectional": {f"{a},{b}": _q(v) for (a, b), v in rep.sectional.items()},
    }


def _brackets(g) -> dict:
    out = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            if any(g.c[i][j]):
                out[f"{g.labels[i]},{g.labels[j]}"] = _vec(g.labels, g.c[i][j])
    return out


def analyze(af: AlgebraFile) -> dict:
    """Full report for one file. Raises InvalidAlgebra when the Jacobi identity fails."""
    g = af.algebra()
    bad = validate_jacobi(g)
    if bad:
        raise InvalidAlgebra(f"Jacobi identity fails on {len(bad)} triple(s)", bad)
    labels = g.labels
    flags = classify(g)
    rad = radical(g)
    report: dict = {
        "name": af.name,
        "dim": g.dim,
        "basis": list(labels),
        "annotations": list(af.annotations),
        "jacobi": {"ok": True, "violations": []},
        "classification": {
            "abelian": flags.is_abelian,
            "nilpotent": flags.is_nilpotent,
            "solvable": flags.is_solvable,
            "semisimple": flags.is_semisimple,
            "perfect": flags.is_perfect,
            "radical_dim": flags.radical_dim,
            "radical_basis": [_vec(labels, v) for v in rad.vectors],
            "killing_form": [[_q(x) for x in row] for row in killing_form(g).entries],
            "killing_signature": list(flags.killing_signature),
        },
        "curvature": _curv(curvature_summary(g, gram=af.metric())),
        "foliation": None,
        "quotient": None,
        "theorems": [],
    }
    if af.vertical:
        s = make_split(g, af.gram, af.vertical)
        r = analyze_split(s)
        report["foliation"] = {
            "vertical": list(s.vertical_labels),
            "horizontal": list(s.horizontal_labels),
            "vertical_basis": [_vec(labels, v) for v in s.vertical_basis],
            "horizontal_basis": [_vec(labels, v) for v in s.horizontal_basis],
            "codim": s.codim,
            "vertical_semisimple": r.vertical_semisimple,
            "conformal": r.conformal,
            "dilation": None if r.dilation is None else [_q(x) for x in r.dilation],
            "conformal_vector": None if r.conformal_vector is None else _vec(labels, r.conformal_vector),
            "riemannian": r.riemannian,
            "mean_curvature": _vec(labels, r.mean_curvature),
            "mean_curvature_convention": "unnormalized trace of B^V",
            "minimal": r.minimal,
            "totally_geodesic": r.totally_geodesic,
            "normal": r.normal,
            "horizontally_integrable": r.horizontally_integrable,
            "harmonic_morphisms": r.produces_harmonic_morphisms,
            "harmonic_mode": r.harmonic_mode,
            "biinvariant": r.biinvariant,
            "biinvariance_scalars": [
                {"block": list(block), "lambda": _q(lam)} for block, lam in r.biinvariance_scalars
            ],
            "killing_diagonal": r.killing_diagonal,
            "killing_diagonal_entries": [_q(x) for x in r.killing_diagonal_entries],
            "trace_identity": r.trace_identity,
            "witnesses": {k: list(v) for k, v in sorted(r.witnesses.items())},
        }
        report["theorems"] = [
            {"claim": t.claim, "applicable": t.applicable, "holds": t.holds} for t in verify_theorems(s, r)
        ]
        if r.riemannian:
            leaf = submersion_quotient_geometry(s)
            q: dict = {"method": "leaf space (integrability tensor)", **_curv(leaf)}
            if r.normal:
                qa = quotient_structure(s)
                qg = quotient_geometry(s)
                q["method"] = "quotient algebra"
                q.update(_curv(qg))
                q["algebra"] = _brackets(qa)
                q["routes_agree"] = qg.riemann == leaf.riemann
            report["quotient"] = q
        else:
            report["quotient"] = {"unavailable": "foliation is not Riemannian"}
    report["expectations"] = [
        {"key": k, "expected": _render_expected(labels, e), "computed": _render_expected(labels, c), "ok": ok}
        for k, e, c, ok in compare_expectations(af, report, rad)
    ]
    return report


def _render_expected(labels, v):
    if isinstance(v, Fraction):
        return _q(v)
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, list):
        return [_vec(labels, x) if isinstance(x, tuple) else x for x in v]
    return str(v)


def _computed(key: str, report: dict):
    cl, fol, cu, qu = report["classification"], report["foliation"], report["curvature"], report["quotient"]
    if key in ("abelian", "nilpotent", "solvable", "semisimple", "perfect", "radical_dim"):
        return cl[key]
    if key == "killing_positive":
        return cl["killing_signature"][0]
    if key == "killing_negative":
        return cl["killing_signature"][1]
    if key == "flat":
        return cu["flat"]
    if key == "constant_curvature":
        return None if cu["constant_curvature"] is None else Fraction(cu["constant_curvature"])
    if key in ("quotient_flat", "quotient_constant_curvature"):
        if not qu or "unavailable" in qu:
            return None
        if key == "quotient_flat":
            return qu["flat"]
        return None if qu["constant_curvature"] is None else Fraction(qu["constant_curvature"])
    if fol is None:
        return None
    return fol[key]


def compare_expectations(af: AlgebraFile, report: dict, rad=None) -> list[tuple]:
    """(key, expected, computed, ok) per expectation, in file order."""
    out = []
    for key, expected in af.expectations.items():
        if key == "radical_contains":
            if rad is None:
                rad = radical(af.algebra())
            missing = [v for v in expected if not rad.contains(v)]
            computed = [v for v in rad.vectors]
            out.append((key, expected, computed, not missing))
            continue
        computed = _computed(key, report)
        if isinstance(expected, bool) or isinstance(computed, bool):
            ok = isinstance(computed, bool) and isinstance(expected, bool) and computed == expected
        else:
            ok = computed is not None and Fraction(computed) == Fraction(expected)
        out.append((key, expected, computed, ok))
    return out


@dataclass
class EntryResult:
    name: str
    path: str
    parsed: bool
    jacobi_ok: bool
    comparisons: list = field(default_factory=list)  # (key, expected, computed, ok) as rendered strings
    theorems: list = field(default_factory=list)
    error: str | None = None
    violations: list = field(default_factory=list)
    annotations: tuple = ()

    @property
    def non_blocking(self) -> bool:
        """A hand-corrected table that still is not a Lie algebra is reported but does not fail the run."""
        return TYPO_ADJUSTED in self.annotations and self.parsed and not self.jacobi_ok

    @property
    def disputed_keys(self) -> set:
        return {a.split(":", 1)[1] for a in self.annotations if a.startswith("disputed:")}

    @property
    def disputed(self) -> list[str]:
        """Mismatches on expectations the file itself marks as disputed; reported, never blocking."""
        keys = self.disputed_keys
        return [
            f"{c['key']}: expected {c['expected']}, computed {c['computed']} (disputed)"
            for c in self.comparisons
            if not c["ok"] and c["key"] in keys
        ]

    @property
    def failures(self) -> list[str]:
        out = []
        if not self.parsed:
            out.append(f"parse error: {self.error}")
        elif not self.jacobi_ok:
            out.append(f"invalid algebra: {self.error}")
        keys = self.disputed_keys
        out += [
            f"{c['key']}: expected {c['expected']}, computed {c['computed']}"
            for c in self.comparisons
            if not c["ok"] and c["key"] not in keys
        ]
        # strict: a disputed expectation that now matches means the annotation is stale
        out += [
            f"{c['key']}: marked disputed but expected value {c['expected']} now matches"
            for c in self.comparisons
            if c["ok"] and c["key"] in keys
        ]
        out += [f"counterexample to {t['claim']}" for t in self.theorems if t["applicable"] and not t["holds"]]
        return out

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class CorpusResult:
    entries: list
    warnings: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed or e.non_blocking for e in self.entries)

    @property
    def has_invalid_input(self) -> bool:
        return any((not e.parsed or not e.jacobi_ok) and not e.non_blocking for e in self.entries)

    @property
    def exit_code(self) -> int:
        if self.passed:
            return 0
        return 2 if self.has_invalid_input else 1


def run_entry(path) -> EntryResult:
    path = Path(path)
    try:
        af = load(path)
    except (LieFolError, UnicodeDecodeError) as exc:
        return EntryResult(path.stem, str(path), False, False, error=str(exc))
    try:
        report = analyze(af)
    except InvalidAlgebra as exc:
        return EntryResult(
            af.name, str(path), True, False, error=str(exc),
            violations=[str(v) for v in exc.violations], annotations=af.annotations,
        )  # fmt: skip
    except LieFolError as exc:
        return EntryResult(af.name, str(path), True, True, error=str(exc), annotations=af.annotations,
                           comparisons=[{"key": "analysis", "expected": "ok", "computed": str(exc), "ok": False}])
    return EntryResult(
        af.name, str(path), True, True,
        comparisons=report["expectations"], theorems=report["theorems"], annotations=af.annotations,
    )  # fmt: skip


def run_corpus(directory=None, jobs: int = 1) -> CorpusResult:
    directory = Path(directory) if directory is not None else bundled_corpus_dir()
    files = sorted(directory.glob("*.lie"))
    warnings = []
    if not files:
        warnings.append(f"no .lie files in {directory}")
        log.warning(warnings[-1])
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(run_entry, files))
    else:
        entries = [run_entry(f) for f in files]
    entries.sort(key=lambda e: (e.name, e.path))
    return CorpusResult(entries, warnings)


def render_structured(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def render_text(report: dict) -> str:
    out = [f"algebra {report['name']} (dim {report['dim']}, basis {' '.join(report['basis'])})"]
    cl = report["classification"]
    kinds = [k for k in ("abelian", "nilpotent", "solvable", "semisimple", "perfect") if cl[k]]
    out.append(f"  classification: {', '.join(kinds) or 'none of abelian/nilpotent/solvable/semisimple/perfect'}")
    out.append(f"  radical: dim {cl['radical_dim']}" + (f", basis {'; '.join(cl['radical_basis'])}" if cl["radical_basis"] else ""))
    p, n, z = cl["killing_signature"]
    out.append(f"  Killing signature: (+{p}, -{n}, 0:{z})")
    cu = report["curvature"]
    out.append(f"  curvature: {_curv_line(cu)}")
    fol = report["foliation"]
    if fol:
        out.append(f"  foliation by span{{{', '.join(fol['vertical'])}}}, codimension {fol['codim']}:")
        for key in (
            "conformal", "riemannian", "minimal", "totally_geodesic", "normal", "horizontally_integrable",
            "harmonic_morphisms", "biinvariant", "killing_diagonal", "vertical_semisimple", "trace_identity",
        ):  # fmt: skip
            line = f"    {key}: {str(fol[key]).lower()}"
            if key in fol["witnesses"]:
                line += f"  (witness {', '.join(fol['witnesses'][key])})"
            out.append(line)
        if fol["dilation"] is not None:
            out.append(f"    dilation: {', '.join(fol['dilation'])}; conformal vector: {fol['conformal_vector']}")
        out.append(f"    mean curvature: {fol['mean_curvature']}")
        out.append(f"    harmonic morphism test: {fol['harmonic_mode']}")
        for b in fol["biinvariance_scalars"]:
            out.append(f"    g = -Lambda B on {{{', '.join(b['block'])}}}: Lambda = {b['lambda']}")
        q = report["quotient"]
        if "unavailable" in q:
            out.append(f"  quotient: unavailable ({q['unavailable']})")
        else:
            out.append(f"  quotient ({q['method']}): {_curv_line(q)}")
            if "algebra" in q:
                out.append("    brackets: " + ("; ".join(f"[{k}] = {v}" for k, v in q["algebra"].items()) or "abelian"))
        for t in report["theorems"]:
            status = "n/a" if not t["applicable"] else ("holds" if t["holds"] else "COUNTEREXAMPLE")
            out.append(f"  theorem {t['claim']}: {status}")
    for e in report["expectations"]:
        out.append(f"  expect {e['key']} = {e['expected']}: {'ok' if e['ok'] else 'MISMATCH (computed ' + str(e['computed']) + ')'}")
    return "\n".join(out) + "\n"


def _curv_line(cu: dict) -> str:
    if cu["flat"]:
        return "flat"
    if cu["constant_curvature"] is not None:
        return f"constant sectional curvature {cu['constant_curvature']}"
    return "sectional " + ", ".join(f"K({k})={v}" for k, v in cu["sectional"].items())


def render_corpus(result: CorpusResult) -> str:
    out = [f"warning: {w}" for w in result.warnings]
    for e in result.entries:
        if e.passed and not e.disputed:
            status = "PASS"
        elif e.passed:
            status = "PASS*"
        elif e.non_blocking:
            status = "WARN"
        else:
            status = "FAIL"
        out.append(f"{status} {e.name}")
        for f in e.failures + e.disputed:
            out.append(f"    {f}")
        for v in e.violations[:5]:
            out.append(f"    Jacobi violation {v}")
    n_pass = sum(e.passed for e in result.entries)
    out.append(f"{n_pass}/{len(result.entries)} entries pass; overall {'PASS' if result.passed else 'FAIL'}")
    return "\n".join(out) + "\n"
