"""Finite-dimensional Lie algebras given by rational structure constants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionMismatch, InvalidAlgebra, NotAComplement, NotAnIdeal, NotASubalgebra
from .linalg import Mat, Subspace, Vector, add, is_zero, kernel, rank, rat, signature, unit_vec, vec


@dataclass(frozen=True)
class LieAlgebra:
    """Structure tensor ``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k``.

    Antisymmetry is checked on construction. The Jacobi identity is not; use
    :func:`validate_jacobi` so that broken tables can be diagnosed.
    """

    labels: tuple
    c: tuple
    name: str = ""

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise InvalidAlgebra(f"duplicate basis labels in {self.labels}")
        if len(self.c) != n or any(len(ci) != n or any(len(cij) != n for cij in ci) for ci in self.c):
            raise DimensionMismatch(f"structure tensor is not {n}x{n}x{n}")
        for i in range(n):
            for j in range(i, n):
                for k in range(n):
                    if self.c[i][j][k] != -self.c[j][i][k]:
                        raise InvalidAlgebra(
                            f"antisymmetry fails at [{self.labels[i]},{self.labels[j]}] component {self.labels[k]}"
                        )

    @classmethod
    def from_tensor(cls, labels: Sequence[str], c, name: str = "") -> "LieAlgebra":
        return cls(tuple(labels), tuple(tuple(vec(cij) for cij in ci) for ci in c), name)

    @classmethod
    def from_brackets(cls, labels: Sequence[str], brackets: Mapping, name: str = "") -> "LieAlgebra":
        """Build from ``{("A", "B"): {"C": 2}}`` (or a coefficient vector); mirrors are filled in."""
        labels = tuple(labels)
        n = len(labels)
        idx = {lab: i for i, lab in enumerate(labels)}
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (a, b), rhs in brackets.items():
            i, j = idx[a], idx[b]
            if isinstance(rhs, Mapping):
                v = [Fraction(0)] * n
                for lab, coef in rhs.items():
                    v[idx[lab]] += rat(coef)
            else:
                v = list(vec(rhs))
            for k in range(n):
                c[i][j][k] = v[k]
                c[j][i][k] = -v[k]
        return cls.from_tensor(labels, c, name)

    @classmethod
    def abelian(cls, labels: Sequence[str], name: str = "") -> "LieAlgebra":
        return cls.from_brackets(labels, {}, name)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def e(self, label_or_index) -> Vector:
        i = label_or_index if isinstance(label_or_index, int) else self.index(label_or_index)
        return unit_vec(self.dim, i)

    def span(self, *labels: str) -> Subspace:
        return Subspace.span([self.e(lab) for lab in labels], self.dim)

    def structure_vector(self, i: int, j: int) -> Vector:
        return self.c[i][j]


def format_vector(labels: Sequence[str], v: Vector) -> str:
    """Render a coordinate vector as a linear combination, e.g. ``-Y - Z`` or ``1/2 A + C``."""
    parts = []
    for lab, x in zip(labels, v):
        if x == 0:
            continue
        sign = "-" if x < 0 else "+"
        mag = abs(x)
        term = lab if mag == 1 else f"{mag} {lab}" if mag.denominator != 1 else f"{mag}{lab}"
        parts.append((sign, term))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


def _check_vec(g: LieAlgebra, v) -> Vector:
    v = vec(v)
    if len(v) != g.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in a {g.dim}-dimensional algebra")
    return v


def bracket(g: LieAlgebra, v, w) -> Vector:
    v, w = _check_vec(g, v), _check_vec(g, w)
    n = g.dim
    out = [Fraction(0)] * n
    for i in range(n):
        if not v[i]:
            continue
        for j in range(n):
            s = v[i] * w[j]
            if s:
                cij = g.c[i][j]
                for k in range(n):
                    if cij[k]:
                        out[k] += s * cij[k]
    return tuple(out)


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple  # basis labels
    residual: Vector

    def __str__(self):
        return f"({', '.join(self.triple)}): residual {self.residual_text}"

    @property
    def residual_text(self) -> str:
        return "(" + ", ".join(str(x) for x in self.residual) + ")"


def validate_jacobi(g: LieAlgebra) -> list[JacobiViolation]:
    """Triples i<j<l whose cyclic Jacobi sum is nonzero, with the exact residual."""
    out = []
    basis = [g.e(i) for i in range(g.dim)]
    for i, j, l in itertools.combinations(range(g.dim), 3):
        a, b, c = basis[i], basis[j], basis[l]
        r = add(add(bracket(g, a, bracket(g, b, c)), bracket(g, b, bracket(g, c, a))), bracket(g, c, bracket(g, a, b)))
        if not is_zero(r):
            out.append(JacobiViolation((g.labels[i], g.labels[j], g.labels[l]), r))
    return out


def require_lie(g: LieAlgebra) -> None:
    bad = validate_jacobi(g)
    if bad:
        raise InvalidAlgebra(f"Jacobi identity fails on {len(bad)} triple(s), first {bad[0]}", bad)


def ad_matrix(g: LieAlgebra, v) -> Mat:
    """Matrix of w -> [v, w]; column j holds [v, e_j]."""
    v = _check_vec(g, v)
    cols = [bracket(g, v, g.e(j)) for j in range(g.dim)]
    return Mat.of(cols, g.dim).T if g.dim else Mat(0, 0, ())


def killing_form(g: LieAlgebra) -> Mat:
    ads = [ad_matrix(g, g.e(i)) for i in range(g.dim)]
    n = g.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = (ads[i] @ ads[j]).trace()
    return Mat.of(rows, n)


def bracket_span(g: LieAlgebra, s: Subspace, t: Subspace) -> Subspace:
    """[s, t] = span of brackets of basis vectors."""
    return Subspace.span([bracket(g, u, v) for u in s.vectors for v in t.vectors], g.dim)


def derived_algebra(g: LieAlgebra) -> Subspace:
    whole = Subspace.whole(g.dim)
    return bracket_span(g, whole, whole)


def derived_series(g: LieAlgebra, start: Subspace | None = None) -> list[Subspace]:
    """[s,s], [[s,s],[s,s]], ... for s = ``start`` (default g), until it stabilises."""
    cur = start if start is not None else Subspace.whole(g.dim)
    out = []
    while True:
        nxt = bracket_span(g, cur, cur)
        if out and nxt == out[-1]:
            return out
        out.append(nxt)
        if nxt == cur:
            return out
        cur = nxt


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    whole = Subspace.whole(g.dim)
    cur = whole
    out = []
    while True:
        nxt = bracket_span(g, whole, cur)
        if out and nxt == cur:
            return out
        out.append(nxt)
        if nxt == cur:
            return out
        cur = nxt


def is_subalgebra(g: LieAlgebra, s: Subspace) -> bool:
    if s.ambient_dim != g.dim:
        raise DimensionMismatch("subspace lives in a different ambient space")
    return bracket_span(g, s, s).issubset(s)


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    if s.ambient_dim != g.dim:
        raise DimensionMismatch("subspace lives in a different ambient space")
    return bracket_span(g, Subspace.whole(g.dim), s).issubset(s)


def is_solvable_subalgebra(g: LieAlgebra, s: Subspace) -> bool:
    return derived_series(g, s)[-1].dim == 0


def radical(g: LieAlgebra) -> Subspace:
    """Maximal solvable ideal, via Cartan's criterion rad(g) = [g,g]^perp under the Killing form."""
    rad = derived_algebra(g).orthogonal_complement(killing_form(g))
    if not (is_ideal(g, rad) and is_solvable_subalgebra(g, rad)):
        raise InvalidAlgebra("Killing-orthogonal of [g,g] is not a solvable ideal; is the Jacobi identity satisfied?")
    return rad


def center(g: LieAlgebra) -> Subspace:
    rows = []
    for j in range(g.dim):
        # [v, e_j] = 0 for all j: stack the transposed ad columns
        for k in range(g.dim):
            rows.append(tuple(g.c[i][j][k] for i in range(g.dim)))
    return kernel(Mat.of(rows, g.dim)) if rows else Subspace.zero(0)


@dataclass(frozen=True)
class ClassificationFlags:
    is_abelian: bool
    is_nilpotent: bool
    is_solvable: bool
    is_semisimple: bool
    is_perfect: bool
    radical_dim: int
    killing_signature: tuple  # (positive, negative, zero)


def classify(g: LieAlgebra) -> ClassificationFlags:
    require_lie(g)
    kf = killing_form(g)
    derived = derived_series(g)
    lower = lower_central_series(g)
    rad = radical(g)
    semisimple = rank(kf) == g.dim
    if semisimple != (rad.dim == 0):
        raise InvalidAlgebra("Killing nondegeneracy disagrees with the radical")
    return ClassificationFlags(
        is_abelian=all(is_zero(g.c[i][j]) for i in range(g.dim) for j in range(g.dim)),
        is_nilpotent=lower[-1].dim == 0,
        is_solvable=derived[-1].dim == 0,
        is_semisimple=semisimple,
        is_perfect=derived[0].dim == g.dim,
        radical_dim=rad.dim,
        killing_signature=signature(kf),
    )


def _default_labels(g: LieAlgebra, vectors: Sequence[Vector], prefix: str) -> tuple:
    labels = []
    for n, v in enumerate(vectors):
        nz = [i for i, x in enumerate(v) if x]
        if len(nz) == 1 and v[nz[0]] == 1:
            labels.append(g.labels[nz[0]])
        else:
            labels.append(f"{prefix}{n + 1}")
    if len(set(labels)) != len(labels):
        labels = [f"{prefix}{n + 1}" for n in range(len(vectors))]
    return tuple(labels)


def restrict(g: LieAlgebra, vectors: Sequence[Vector], labels: Sequence[str] | None = None, name: str = "") -> LieAlgebra:
    """The subalgebra spanned by ``vectors``, written in that (ordered) basis."""
    vectors = [_check_vec(g, v) for v in vectors]
    s = Subspace.span(vectors, g.dim)
    if s.dim != len(vectors):
        raise DimensionMismatch("restriction basis is linearly dependent")
    labels = tuple(labels) if labels is not None else _default_labels(g, vectors, "V")
    n = len(vectors)
    c = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            coords = s.coordinates(bracket(g, vectors[i], vectors[j]), vectors)
            if coords is None:
                raise NotASubalgebra(f"[{labels[i]},{labels[j]}] leaves the span")
            c[i][j] = coords
    return LieAlgebra.from_tensor(labels, c, name)


def change_basis(g: LieAlgebra, vectors: Sequence[Vector], labels: Sequence[str] | None = None) -> LieAlgebra:
    if len(vectors) != g.dim:
        raise DimensionMismatch("a change of basis needs dim(g) vectors")
    return restrict(g, vectors, labels, g.name)


def quotient_algebra(
    g: LieAlgebra,
    k: Subspace,
    complement,
    labels: Sequence[str] | None = None,
    name: str = "",
) -> LieAlgebra:
    """g/k written on an explicit complement: structure constants are the
    complement-components of brackets of complement vectors."""
    comp_vecs = complement.vectors if isinstance(complement, Subspace) else [vec(v) for v in complement]
    comp = Subspace.span(comp_vecs, g.dim)
    if not is_ideal(g, k):
        raise NotAnIdeal("quotient needs an ideal")
    if comp.dim != len(comp_vecs) or not comp.is_complement_of(k):
        raise NotAComplement("complement does not complete the ideal to a basis")
    labels = tuple(labels) if labels is not None else _default_labels(g, comp_vecs, "U")
    full = k.vectors + comp_vecs
    whole = Subspace.whole(g.dim)
    d, n = k.dim, len(comp_vecs)
    c = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            coords = whole.coordinates(bracket(g, comp_vecs[i], comp_vecs[j]), full)
            c[i][j] = coords[d:]
    q = LieAlgebra.from_tensor(labels, c, name or (g.name + "/k" if g.name else ""))
    require_lie(q)
    return q
