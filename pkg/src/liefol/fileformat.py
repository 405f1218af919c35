"""Line-oriented algebra files (``*.lie``).

Grammar, one statement per line, ``#`` starts a comment::

    algebra "<name>"
    dim <m>
    basis <id>+
    param <id> = <rat>
    vertical <id>+
    metric orthonormal
    metric gram            # followed by m rows of m rationals
    bracket [<id>,<id>] = <linear-comb>
    expect <key> = <true|false|rat|[comb, comb, ...]>
    annotate <word>+

    linear-comb ::= 0 | ['-'] term (('+'|'-') term)*
    term        ::= [coef ['*']] id
    coef        ::= digits ['/' digits] | param-name

Unstated brackets are zero; ``[B,A]`` is filled in from ``[A,B]``.
Parameters are substituted at parse time and must be declared before use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import DuplicateBracket, ParseError, UnboundParam, UnknownLabel
from .lie import LieAlgebra
from .linalg import Mat, Vector

EXPECT_KEYS = {
    # classification of the ambient algebra
    "abelian", "nilpotent", "solvable", "semisimple", "perfect", "radical_dim", "radical_contains",
    "killing_positive", "killing_negative",
    # curvature of the ambient metric
    "flat", "constant_curvature",
    # foliation by the vertical subalgebra
    "codim", "vertical_semisimple", "conformal", "riemannian", "minimal", "totally_geodesic", "normal",
    "horizontally_integrable", "harmonic_morphisms", "biinvariant", "killing_diagonal",
    # leaf space
    "quotient_flat", "quotient_constant_curvature",
}  # fmt: skip

TYPO_ADJUSTED = "paper-typo-adjusted"

_ID = r"[A-Za-z_][A-Za-z0-9_]*"
_TOKEN = re.compile(rf"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<id>{_ID})|(?P<op>[+\-*]))")
_RAT = re.compile(r"-?\d+(?:/\d+)?$")


@dataclass
class AlgebraFile:
    name: str
    labels: tuple
    params: dict = field(default_factory=dict)
    brackets: dict = field(default_factory=dict)  # (label, label) -> coefficient vector
    gram: Mat | None = None  # None: declared basis is orthonormal
    vertical: tuple | None = None
    expectations: dict = field(default_factory=dict)
    annotations: tuple = ()
    path: str | None = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    def algebra(self) -> LieAlgebra:
        return LieAlgebra.from_brackets(self.labels, self.brackets, self.name)

    def metric(self) -> Mat:
        return self.gram if self.gram is not None else Mat.identity(self.dim)

    @property
    def typo_adjusted(self) -> bool:
        return TYPO_ADJUSTED in self.annotations


class _Parser:
    def __init__(self, text: str):
        self.lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
        self.name = None
        self.dim = None
        self.dim_line = None
        self.labels = None
        self.params: dict = {}
        self.brackets: dict = {}
        self.seen_pairs: set = set()
        self.gram = None
        self.vertical = None
        self.expect: dict = {}
        self.annotations: list = []

    def fail(self, cls, msg, lineno, col=None):
        raise cls(msg, lineno, col)

    def need_labels(self, lineno):
        if self.labels is None:
            self.fail(ParseError, "'basis' must come first", lineno, 1)

    def parse_rat(self, tok: str, lineno: int, col: int) -> Fraction:
        tok = tok.strip()
        if _RAT.match(tok):
            return Fraction(tok)
        neg = tok.startswith("-")
        name = tok[1:] if neg else tok
        if re.fullmatch(_ID, name):
            if name not in self.params:
                self.fail(UnboundParam, f"unbound parameter '{name}'", lineno, col)
            v = self.params[name]
            return -v if neg else v
        self.fail(ParseError, f"expected a rational, got '{tok}'", lineno, col)

    def parse_comb(self, text: str, lineno: int, col0: int) -> Vector:
        """col0: 1-based column of text[0] in the source line."""
        n = len(self.labels)
        idx = {lab: i for i, lab in enumerate(self.labels)}
        toks = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m or m.end() == pos:
                self.fail(ParseError, f"unexpected character '{stripped[pos:].strip()[:1]}'", lineno, col0 + pos)
            kind = m.lastgroup
            toks.append((kind, m.group(kind), col0 + m.start(kind)))
            pos = m.end()
        if not toks:
            self.fail(ParseError, "empty right-hand side", lineno, col0)
        out = [Fraction(0)] * n
        if len(toks) == 1 and toks[0][:2] == ("num", "0"):
            return tuple(out)
        k = 0
        sign = 1
        first = True
        while k < len(toks):
            kind, val, col = toks[k]
            if kind == "op" and val in "+-":
                sign = -1 if val == "-" else 1
                k += 1
                if k == len(toks):
                    self.fail(ParseError, "dangling sign", lineno, col)
                kind, val, col = toks[k]
            elif not first:
                self.fail(ParseError, f"expected '+' or '-' before '{val}'", lineno, col)
            first = False
            coef = Fraction(1)
            nxt = toks[k + 1] if k + 1 < len(toks) else None
            if kind == "num" or (kind == "id" and nxt is not None and (nxt[0] == "id" or nxt[1] == "*")):
                if kind == "num":
                    coef = Fraction(val)
                elif val in self.params:
                    coef = self.params[val]
                elif val in idx:
                    self.fail(ParseError, f"label '{val}' used as a coefficient", lineno, col)
                else:
                    self.fail(UnboundParam, f"unbound parameter '{val}'", lineno, col)
                k += 1
                if k < len(toks) and toks[k][1] == "*":
                    k += 1
                if k == len(toks):
                    self.fail(ParseError, "coefficient without a basis label", lineno, col)
                kind, val, col = toks[k]
            if kind != "id":
                self.fail(ParseError, f"expected a basis label, got '{val}'", lineno, col)
            if val not in idx:
                if val in self.params:
                    self.fail(ParseError, f"parameter '{val}' used without a basis label", lineno, col)
                self.fail(UnknownLabel, f"unknown label '{val}'", lineno, col)
            out[idx[val]] += sign * coef
            sign = 1
            k += 1
        return tuple(out)

    def parse_value(self, text: str, lineno: int, col: int):
        t = text.strip()
        if t in ("true", "false"):
            return t == "true"
        if t.startswith("["):
            if not t.endswith("]"):
                self.fail(ParseError, "unterminated list", lineno, col)
            inner = t[1:-1]
            vals = []
            offset = text.index("[") + 1
            for part in inner.split(","):
                if part.strip():
                    vals.append(self.parse_comb(part, lineno, col + offset))
                offset += len(part) + 1
            return vals
        return self.parse_rat(t, lineno, col)

    def run(self) -> AlgebraFile:
        lines = self.lines
        i = 0
        while i < len(lines):
            lineno = i + 1
            raw = lines[i]
            line = raw.split("#", 1)[0].rstrip()
            i += 1
            if not line.strip():
                continue
            lead = len(line) - len(line.lstrip())
            body = line.strip()
            word, _, rest = body.partition(" ")
            rest_col = lead + len(word) + 2
            if word == "algebra":
                m = re.fullmatch(r'"([^"]*)"', rest.strip())
                if not m:
                    self.fail(ParseError, 'expected algebra "<name>"', lineno, rest_col)
                self.name = m.group(1)
            elif word == "dim":
                if not rest.strip().isdigit():
                    self.fail(ParseError, "dim needs a non-negative integer", lineno, rest_col)
                self.dim, self.dim_line = int(rest.strip()), lineno
            elif word == "basis":
                labs = rest.split()
                if self.labels is not None:
                    self.fail(ParseError, "basis declared twice", lineno, 1)
                for lab in labs:
                    if not re.fullmatch(_ID, lab):
                        self.fail(ParseError, f"bad label '{lab}'", lineno, rest_col)
                if len(set(labs)) != len(labs):
                    self.fail(ParseError, "duplicate basis labels", lineno, rest_col)
                if not labs:
                    self.fail(ParseError, "empty basis", lineno, rest_col)
                self.labels = tuple(labs)
            elif word == "param":
                m = re.fullmatch(rf"\s*({_ID})\s*=\s*(\S+)\s*", rest)
                if not m:
                    self.fail(ParseError, "expected param <id> = <rat>", lineno, rest_col)
                if self.labels and m.group(1) in self.labels:
                    self.fail(ParseError, f"parameter '{m.group(1)}' shadows a basis label", lineno, rest_col)
                self.params[m.group(1)] = self.parse_rat(m.group(2), lineno, rest_col + m.start(2))
            elif word == "vertical":
                self.need_labels(lineno)
                labs = rest.split()
                for lab in labs:
                    if lab not in self.labels:
                        self.fail(UnknownLabel, f"unknown label '{lab}'", lineno, rest_col + rest.index(lab))
                if not labs or len(set(labs)) != len(labs):
                    self.fail(ParseError, "vertical needs distinct labels", lineno, rest_col)
                self.vertical = tuple(labs)
            elif word == "metric":
                kind = rest.strip()
                if kind == "orthonormal":
                    self.gram = None
                elif kind == "gram":
                    self.need_labels(lineno)
                    rows = []
                    while len(rows) < len(self.labels):
                        if i >= len(lines):
                            self.fail(ParseError, "missing Gram matrix rows", lineno)
                        r = lines[i].split("#", 1)[0]
                        i += 1
                        if not r.strip():
                            continue
                        toks = r.replace(",", " ").split()
                        if len(toks) != len(self.labels):
                            self.fail(ParseError, f"Gram row needs {len(self.labels)} entries", i, 1)
                        rows.append([self.parse_rat(t, i, 1) for t in toks])
                    self.gram = Mat.of(rows)
                else:
                    self.fail(ParseError, "metric must be 'orthonormal' or 'gram'", lineno, rest_col)
            elif word.startswith("bracket"):
                self.need_labels(lineno)
                m = re.fullmatch(rf"bracket\s*\[\s*({_ID})\s*,\s*({_ID})\s*\]\s*=(.*)", body)
                if not m:
                    self.fail(ParseError, "expected bracket [<id>,<id>] = <linear-comb>", lineno, lead + 1)
                a, b = m.group(1), m.group(2)
                for lab, g in ((a, 1), (b, 2)):
                    if lab not in self.labels:
                        self.fail(UnknownLabel, f"unknown label '{lab}'", lineno, lead + 1 + m.start(g))
                if a == b:
                    self.fail(ParseError, f"[{a},{a}] is zero by antisymmetry", lineno, lead + 1)
                pair = frozenset((a, b))
                if pair in self.seen_pairs:
                    self.fail(DuplicateBracket, f"bracket [{a},{b}] stated twice", lineno, lead + 1)
                self.seen_pairs.add(pair)
                self.brackets[(a, b)] = self.parse_comb(m.group(3), lineno, lead + 1 + m.start(3))
            elif word == "expect":
                m = re.fullmatch(rf"\s*({_ID})\s*=\s*(.+)", rest)
                if not m:
                    self.fail(ParseError, "expected expect <key> = <value>", lineno, rest_col)
                key = m.group(1)
                if key not in EXPECT_KEYS:
                    self.fail(ParseError, f"unknown expectation key '{key}'", lineno, rest_col)
                if key in self.expect:
                    self.fail(ParseError, f"expectation '{key}' stated twice", lineno, rest_col)
                if key == "radical_contains":
                    self.need_labels(lineno)
                self.expect[key] = self.parse_value(m.group(2), lineno, rest_col + m.start(2))
            elif word == "annotate":
                self.annotations.extend(rest.split())
            else:
                self.fail(ParseError, f"unknown statement '{word}'", lineno, lead + 1)
        if self.labels is None:
            raise ParseError("no basis declared")
        if self.dim is not None and self.dim != len(self.labels):
            raise ParseError(f"dim {self.dim} but {len(self.labels)} basis labels", self.dim_line, 1)
        if self.gram is not None and not self.gram.is_symmetric():
            raise ParseError("Gram matrix is not symmetric")
        return AlgebraFile(
            name=self.name if self.name is not None else "",
            labels=self.labels,
            params=dict(self.params),
            brackets=dict(self.brackets),
            gram=self.gram,
            vertical=self.vertical,
            expectations=dict(self.expect),
            annotations=tuple(self.annotations),
        )


def parse_algebra(text: str) -> AlgebraFile:
    return _Parser(text).run()


def load(path) -> AlgebraFile:
    path = Path(path)
    af = parse_algebra(path.read_bytes().decode("utf-8"))
    af.path = str(path)
    if not af.name:
        af.name = path.stem
    return af


def format_comb(labels, v: Vector) -> str:
    """Canonical, re-parseable linear combination."""
    parts = []
    for lab, x in zip(labels, v):
        if x == 0:
            continue
        mag = abs(x)
        term = lab if mag == 1 else f"{mag}*{lab}"
        parts.append(("-" if x < 0 else "+", term))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


def _format_value(labels, v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(format_comb(labels, x) for x in v) + "]"
    return str(v)


def dump(af: AlgebraFile) -> str:
    """Serialize; parameters are written for reference but coefficients are already instantiated."""
    out = []
    if af.name:
        out.append(f'algebra "{af.name}"')
    out.append(f"dim {af.dim}")
    out.append("basis " + " ".join(af.labels))
    for p, v in af.params.items():
        out.append(f"param {p} = {v}")
    if af.vertical:
        out.append("vertical " + " ".join(af.vertical))
    if af.gram is None:
        out.append("metric orthonormal")
    else:
        out.append("metric gram")
        for r in af.gram.entries:
            out.append("  " + " ".join(str(x) for x in r))
    for (a, b), v in af.brackets.items():
        out.append(f"bracket [{a},{b}] = {format_comb(af.labels, v)}")
    for k, v in af.expectations.items():
        out.append(f"expect {k} = {_format_value(af.labels, v)}")
    if af.annotations:
        out.append("annotate " + " ".join(af.annotations))
    return "\n".join(out) + "\n"


def from_algebra(g: LieAlgebra, gram: Mat | None = None, vertical=None, name: str | None = None) -> AlgebraFile:
    """Wrap an algebra as a file, stating every nonzero bracket [e_i,e_j] with i < j once."""
    brackets = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            if any(g.c[i][j]):
                brackets[(g.labels[i], g.labels[j])] = g.c[i][j]
    if gram is not None and gram == Mat.identity(g.dim):
        gram = None
    return AlgebraFile(
        name=name if name is not None else g.name,
        labels=g.labels,
        brackets=brackets,
        gram=gram,
        vertical=tuple(vertical) if vertical else None,
    )
