"""Left-invariant foliations generated by a subalgebra of a metric Lie algebra.

Conventions.  A :class:`MetricSplit` carries an *adapted* basis
``V_1..V_d, X_1..X_n``: vertical vectors spanning the subalgebra, horizontal
vectors spanning its orthogonal complement, all pairwise orthogonal but not
necessarily unit length.  ``w`` denotes the squared lengths ("weights").  With
an orthonormal input basis every weight is 1 and the formulas below reduce to
the textbook ones.

In the adapted basis::

    [V_a, V_b] = sum_g c[a][b][g] V_g
    [X_i, V_a] = sum_g x[i][a][g] V_g + sum_k y[i][a][k] X_k
    [X_i, X_j] = sum_g theta[i][j][g] V_g + sum_k rho[i][j][k] X_k
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import (
    DegenerateSplit,
    DimensionMismatch,
    NotASubalgebra,
    NotConformal,
    NotHorizontal,
    NotPositiveDefinite,
    NotVertical,
)
from .lie import (
    ClassificationFlags,
    LieAlgebra,
    ad_matrix,
    bracket,
    change_basis,
    classify,
    is_ideal,
    is_subalgebra,
    killing_form,
    require_lie,
)
from .linalg import (
    Mat,
    Subspace,
    Vector,
    is_positive_definite,
    is_zero,
    lincomb,
    orthogonalize,
    scale,
    vec,
    zero_vec,
)

ZERO = Fraction(0)


@lru_cache(maxsize=512)
def _classify_cached(g: LieAlgebra) -> ClassificationFlags:
    return classify(g)


def _adapted_labels(g: LieAlgebra, vectors: Sequence[Vector], prefix: str, taken: set) -> list[str]:
    out = []
    for n, v in enumerate(vectors):
        nz = [i for i, x in enumerate(v) if x]
        if len(nz) == 1 and v[nz[0]] == 1 and g.labels[nz[0]] not in taken:
            lab = g.labels[nz[0]]
        else:
            lab = f"{prefix}{n + 1}"
            while lab in taken or lab in g.labels:
                lab += "'"
        taken.add(lab)
        out.append(lab)
    return out


@dataclass(frozen=True)
class MetricSplit:
    algebra: LieAlgebra
    gram: Mat
    vertical: Subspace
    horizontal: Subspace
    vertical_basis: tuple
    horizontal_basis: tuple
    vertical_weights: tuple
    horizontal_weights: tuple
    adapted: LieAlgebra = field(repr=False)

    @property
    def d(self) -> int:
        return len(self.vertical_basis)

    @property
    def n(self) -> int:
        return len(self.horizontal_basis)

    @property
    def codim(self) -> int:
        return self.n

    @property
    def weights(self) -> tuple:
        return self.vertical_weights + self.horizontal_weights

    @property
    def vertical_labels(self) -> tuple:
        return self.adapted.labels[: self.d]

    @property
    def horizontal_labels(self) -> tuple:
        return self.adapted.labels[self.d :]

    @property
    def adapted_basis(self) -> tuple:
        return self.vertical_basis + self.horizontal_basis

    def g(self, u: Vector, v: Vector) -> Fraction:
        """The metric on ambient coordinate vectors."""
        return self.gram.bilinear(u, v)

    def V(self, a: int) -> Vector:
        return self.vertical_basis[a]

    def X(self, i: int) -> Vector:
        return self.horizontal_basis[i]

    def vertical_combination(self, coeffs: Sequence) -> Vector:
        return lincomb(coeffs, self.vertical_basis, self.algebra.dim)

    def horizontal_combination(self, coeffs: Sequence) -> Vector:
        return lincomb(coeffs, self.horizontal_basis, self.algebra.dim)

    @cached_property
    def tensors(self) -> "SplitTensors":
        return split_tensors(self)

    @cached_property
    def vertical_algebra(self) -> LieAlgebra:
        """The subalgebra as a standalone algebra on the adapted vertical basis."""
        t = self.tensors
        return LieAlgebra.from_tensor(self.vertical_labels, t.c, name="k")

    @cached_property
    def vertical_flags(self) -> ClassificationFlags:
        return _classify_cached(self.vertical_algebra)

    @cached_property
    def ambient_flags(self) -> ClassificationFlags:
        return _classify_cached(self.algebra)


def make_split(g: LieAlgebra, gram: Mat | None, vertical) -> MetricSplit:
    """Split g into a subalgebra (given as a Subspace or a list of labels) and its orthogonal complement.

    ``gram=None`` means the declared basis is orthonormal.
    """
    m = g.dim
    if gram is None:
        gram = Mat.identity(m)
    if (gram.rows, gram.cols) != (m, m):
        raise DimensionMismatch(f"Gram matrix must be {m}x{m}")
    if not is_positive_definite(gram):
        raise NotPositiveDefinite("metric is not symmetric positive definite")
    if not isinstance(vertical, Subspace):
        vertical = g.span(*vertical)
    if vertical.ambient_dim != m:
        raise DimensionMismatch("vertical subspace lives in another space")
    if vertical.dim == 0 or vertical.dim == m:
        raise DegenerateSplit(f"vertical dimension {vertical.dim} leaves nothing to foliate")
    if not is_subalgebra(g, vertical):
        raise NotASubalgebra("vertical subspace is not closed under the bracket")
    horizontal = vertical.orthogonal_complement(gram)
    vb = orthogonalize(vertical, gram)
    hb = orthogonalize(horizontal, gram)
    taken: set = set()
    labels = _adapted_labels(g, vb, "V", taken) + _adapted_labels(g, hb, "H", taken)
    adapted = change_basis(g, vb + hb, labels)
    return MetricSplit(
        algebra=g,
        gram=gram,
        vertical=vertical,
        horizontal=horizontal,
        vertical_basis=tuple(vb),
        horizontal_basis=tuple(hb),
        vertical_weights=tuple(gram.bilinear(v, v) for v in vb),
        horizontal_weights=tuple(gram.bilinear(v, v) for v in hb),
        adapted=adapted,
    )


@dataclass(frozen=True)
class SplitTensors:
    c: tuple  # [a][b][g]
    x: tuple  # [i][a][g]
    y: tuple  # [i][a][k]
    rho: tuple  # [i][j][k]
    theta: tuple  # [i][j][g]

    @property
    def d(self) -> int:
        return len(self.c)

    @property
    def n(self) -> int:
        return len(self.rho)


def split_tensors(s: MetricSplit) -> SplitTensors:
    C = s.adapted.c
    d, n = s.d, s.n
    V, H = range(d), range(n)
    return SplitTensors(
        c=tuple(tuple(tuple(C[a][b][g] for g in V) for b in V) for a in V),
        x=tuple(tuple(tuple(C[d + i][a][g] for g in V) for a in V) for i in H),
        y=tuple(tuple(tuple(C[d + i][a][d + k] for k in H) for a in V) for i in H),
        rho=tuple(tuple(tuple(C[d + i][d + j][d + k] for k in H) for j in H) for i in H),
        theta=tuple(tuple(tuple(C[d + i][d + j][g] for g in V) for j in H) for i in H),
    )


def reassemble(s: MetricSplit, t: SplitTensors) -> LieAlgebra:
    """Rebuild the ambient algebra, in its original basis, from the five split tensors."""
    d, n = t.d, t.n
    m = d + n
    C = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    for a in range(d):
        for b in range(d):
            for g in range(d):
                C[a][b][g] = t.c[a][b][g]
    for i in range(n):
        for a in range(d):
            for g in range(d):
                C[d + i][a][g] = t.x[i][a][g]
                C[a][d + i][g] = -t.x[i][a][g]
            for k in range(n):
                C[d + i][a][d + k] = t.y[i][a][k]
                C[a][d + i][d + k] = -t.y[i][a][k]
        for j in range(n):
            for g in range(d):
                C[d + i][d + j][g] = t.theta[i][j][g]
            for k in range(n):
                C[d + i][d + j][d + k] = t.rho[i][j][k]
    adapted = LieAlgebra.from_tensor(s.adapted.labels, C, s.algebra.name)
    # original basis vectors written in adapted coordinates
    whole = Subspace.whole(m)
    coords = [whole.coordinates(s.algebra.e(i), s.adapted_basis) for i in range(m)]
    return change_basis(adapted, coords, s.algebra.labels)


# --- second fundamental forms -------------------------------------------------------------


def _require_in(s: MetricSplit, v, space: Subspace, err):
    v = vec(v)
    if len(v) != s.algebra.dim:
        raise DimensionMismatch("vector length")
    if not space.contains(v):
        raise err(f"{v} is not in the required distribution")
    return v


def second_fundamental_form_vertical(s: MetricSplit, u, v) -> Vector:
    """B^V(u, v) = 1/2 sum_k (g([X_k,u],v) + g([X_k,v],u)) X_k / |X_k|^2, as an ambient vector."""
    u = _require_in(s, u, s.vertical, NotVertical)
    v = _require_in(s, v, s.vertical, NotVertical)
    g = s.algebra
    coeffs = [
        (s.g(bracket(g, Xk, u), v) + s.g(bracket(g, Xk, v), u)) / (2 * wk)
        for Xk, wk in zip(s.horizontal_basis, s.horizontal_weights)
    ]
    return s.horizontal_combination(coeffs)


def second_fundamental_form_horizontal(s: MetricSplit, u, v) -> Vector:
    """B^H(u, v) = 1/2 sum_g (g([V_g,u],v) + g([V_g,v],u)) V_g / |V_g|^2, as an ambient vector."""
    u = _require_in(s, u, s.horizontal, NotHorizontal)
    v = _require_in(s, v, s.horizontal, NotHorizontal)
    g = s.algebra
    coeffs = [
        (s.g(bracket(g, Vg, u), v) + s.g(bracket(g, Vg, v), u)) / (2 * wg)
        for Vg, wg in zip(s.vertical_basis, s.vertical_weights)
    ]
    return s.vertical_combination(coeffs)


def bv_coefficients(s: MetricSplit, a: int, b: int) -> tuple:
    """Horizontal coordinates of B^V(V_a, V_b) through the x tensor."""
    x, wv, wh = s.tensors.x, s.vertical_weights, s.horizontal_weights
    return tuple((x[k][a][b] * wv[b] + x[k][b][a] * wv[a]) / (2 * wh[k]) for k in range(s.n))


def bh_coefficients(s: MetricSplit, i: int, j: int) -> tuple:
    """Vertical coordinates of B^H(X_i, X_j) through the y tensor, using g([V,X_i],X_j) = -y[i][.][j] |X_j|^2."""
    y, wv, wh = s.tensors.y, s.vertical_weights, s.horizontal_weights
    return tuple(-(y[i][g][j] * wh[j] + y[j][g][i] * wh[i]) / (2 * wv[g]) for g in range(s.d))


# --- flags -----------------------------------------------------------------------------------


@dataclass(frozen=True)
class Conformality:
    conformal: bool
    dilation: tuple | None  # rho(V_g) per adapted vertical vector
    conformal_vector: Vector | None  # V with B^H = g (x) V
    witness: tuple | None  # horizontal label pair


def conformality(s: MetricSplit) -> Conformality:
    n, wh = s.n, s.horizontal_weights
    bh = [[bh_coefficients(s, i, j) for j in range(n)] for i in range(n)]
    witness = None
    for i, j in itertools.combinations(range(n), 2):
        same_diag = all(p / wh[i] == q / wh[j] for p, q in zip(bh[i][i], bh[j][j]))
        if any(bh[i][j]) or not same_diag:
            witness = (s.horizontal_labels[i], s.horizontal_labels[j])
            break
    if witness is not None:
        return Conformality(False, None, None, witness)
    y = s.tensors.y
    # rho(V_g) = 2 g([V_g, X_1], X_1) / |X_1|^2
    dilation = tuple(-2 * y[0][g][0] for g in range(s.d))
    V = s.vertical_combination([r / (2 * w) for r, w in zip(dilation, s.vertical_weights)])
    assert V == s.vertical_combination([q / wh[0] for q in bh[0][0]])
    return Conformality(True, dilation, V, None)


def riemannian_witness(s: MetricSplit) -> tuple | None:
    """First (X_i, V_g, X_j) with g([V_g,X_i],X_j) + g([V_g,X_j],X_i) != 0."""
    y, wh = s.tensors.y, s.horizontal_weights
    for i in range(s.n):
        for g in range(s.d):
            for j in range(i, s.n):
                if y[i][g][j] * wh[j] + y[j][g][i] * wh[i] != 0:
                    return (s.horizontal_labels[i], s.vertical_labels[g], s.horizontal_labels[j])
    return None


def is_riemannian(s: MetricSplit) -> bool:
    return riemannian_witness(s) is None


def mean_curvature_coefficients(s: MetricSplit) -> tuple:
    x = s.tensors.x
    return tuple(sum((x[i][a][a] for a in range(s.d)), ZERO) / s.horizontal_weights[i] for i in range(s.n))


def mean_curvature(s: MetricSplit) -> Vector:
    """Unnormalised trace of B^V: sum_i (sum_a x[i][a][a]) X_i / |X_i|^2."""
    return s.horizontal_combination(mean_curvature_coefficients(s))


def is_minimal(s: MetricSplit) -> bool:
    return is_zero(mean_curvature(s))


def totally_geodesic_witness(s: MetricSplit) -> tuple | None:
    x, w = s.tensors.x, s.vertical_weights
    for i in range(s.n):
        for a in range(s.d):
            for b in range(a, s.d):
                if x[i][a][b] * w[b] + x[i][b][a] * w[a] != 0:
                    return (s.horizontal_labels[i], s.vertical_labels[a], s.vertical_labels[b])
    return None


def is_totally_geodesic(s: MetricSplit) -> bool:
    return totally_geodesic_witness(s) is None


def is_normal(s: MetricSplit) -> bool:
    return is_ideal(s.algebra, s.vertical)


def horizontal_integrability_witness(s: MetricSplit) -> tuple | None:
    th = s.tensors.theta
    for i, j in itertools.combinations(range(s.n), 2):
        for g in range(s.d):
            if th[i][j][g]:
                return (s.horizontal_labels[i], s.horizontal_labels[j], s.vertical_labels[g])
    return None


def is_horizontally_integrable(s: MetricSplit) -> bool:
    return horizontal_integrability_witness(s) is None


@dataclass(frozen=True)
class HarmonicMorphismTest:
    value: bool
    closed: bool  # <mu, [E, F]> = 0 for all basis E, F
    minimal: bool
    mode: str  # "semisimple-equivalence" or "closedness only"
    witness: tuple | None  # basis pair with <mu, [E,F]> != 0

    @property
    def consistent(self) -> bool:
        return self.mode != "semisimple-equivalence" or self.closed == self.minimal


def produces_harmonic_morphisms(s: MetricSplit) -> HarmonicMorphismTest:
    """Closedness of the dual of the mean curvature, compared with minimality.

    For left-invariant fields d(mu^flat)(E, F) = -<mu, [E, F]>, so closedness
    is a finite check on basis brackets.
    """
    if not conformality(s).conformal:
        raise NotConformal("harmonic morphism test needs a conformal foliation")
    g = s.algebra
    mu = mean_curvature(s)
    witness = None
    for a, b in itertools.combinations(range(g.dim), 2):
        if s.g(mu, g.c[a][b]) != 0:
            witness = (g.labels[a], g.labels[b])
            break
    closed = witness is None
    minimal = is_zero(mu)
    if s.vertical_flags.is_semisimple:
        return HarmonicMorphismTest(minimal, closed, minimal, "semisimple-equivalence", witness)
    return HarmonicMorphismTest(closed, closed, minimal, "closedness only", witness)


@dataclass(frozen=True)
class Biinvariance:
    biinvariant: bool
    scalars: tuple  # ((labels of block), Lambda or None) per block, when k is semisimple
    witness: tuple | None


def _bracket_blocks(k: LieAlgebra) -> list[list[int]]:
    """Connected components of basis vectors linked by nonzero structure constants."""
    parent = list(range(k.dim))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(k.dim):
        for b in range(k.dim):
            for g in range(k.dim):
                if k.c[a][b][g]:
                    parent[find(b)] = find(a)
                    parent[find(g)] = find(a)
    blocks: dict[int, list[int]] = {}
    for a in range(k.dim):
        blocks.setdefault(find(a), []).append(a)
    return sorted(blocks.values())


def is_biinvariant_restriction(s: MetricSplit) -> Biinvariance:
    """ad-invariance of the metric on the vertical algebra: g([Z,U],W) + g(U,[Z,W]) = 0.

    When the vertical algebra is semisimple, also reports, per bracket-connected
    block of the adapted basis, the scalar Lambda with g = -Lambda * B_k on that
    block (None where no single scalar fits).
    """
    c, w, d = s.tensors.c, s.vertical_weights, s.d
    witness = None
    for z in range(d):
        for a in range(d):
            for b in range(a, d):
                if c[z][a][b] * w[b] + c[z][b][a] * w[a] != 0:
                    witness = (s.vertical_labels[z], s.vertical_labels[a], s.vertical_labels[b])
                    break
            if witness:
                break
        if witness:
            break
    scalars = ()
    if s.vertical_flags.is_semisimple:
        kf = killing_form(s.vertical_algebra)
        found = []
        for block in _bracket_blocks(s.vertical_algebra):
            lam = None
            a0 = block[0]
            if kf[a0, a0] != 0:
                cand = -w[a0] / kf[a0, a0]
                ok = all(
                    (w[a] if a == b else ZERO) == -cand * kf[a, b] for a in block for b in block
                )
                lam = cand if ok else None
            found.append((tuple(s.vertical_labels[a] for a in block), lam))
        scalars = tuple(found)
    return Biinvariance(witness is None, scalars, witness)


def is_killing_diagonal(s: MetricSplit) -> tuple[bool, tuple]:
    """Killing form of the standalone vertical algebra is diagonal with nonzero entries in the adapted basis."""
    kf = killing_form(s.vertical_algebra)
    entries = kf.diag()
    return kf.is_diagonal() and all(entries), entries


# --- trace identity ----------------------------------------------------------------------


def trace_split(s: MetricSplit, v) -> tuple[Fraction, Fraction, Fraction]:
    """(trace ad_v, vertical diagonal part, horizontal diagonal part), computed in the adapted basis."""
    v = vec(v)
    total = ad_matrix(s.algebra, v).trace()
    whole = Subspace.whole(s.algebra.dim)
    vpart = hpart = ZERO
    for idx, b in enumerate(s.adapted_basis):
        coords = whole.coordinates(bracket(s.algebra, v, b), s.adapted_basis)
        if idx < s.d:
            vpart += coords[idx]
        else:
            hpart += coords[idx]
    return total, vpart, hpart


def trace_identity_check(s: MetricSplit) -> bool:
    """trace(ad X_i) = sum_g x[i][g][g] + sum_k g([X_i,X_k],X_k)/|X_k|^2 for every horizontal X_i."""
    t = s.tensors
    for i in range(s.n):
        total = ad_matrix(s.algebra, s.X(i)).trace()
        xs = sum((t.x[i][g][g] for g in range(s.d)), ZERO)
        hs = sum(
            (s.g(bracket(s.algebra, s.X(i), s.X(k)), s.X(k)) / s.horizontal_weights[k] for k in range(s.n)),
            ZERO,
        )
        if total != xs + hs or hs != sum((t.rho[i][k][k] for k in range(s.n)), ZERO):
            return False
    return True


# --- report -------------------------------------------------------------------------------


@dataclass(frozen=True)
class FoliationReport:
    conformal: bool
    dilation: tuple | None
    conformal_vector: Vector | None
    riemannian: bool
    mean_curvature: Vector
    minimal: bool
    totally_geodesic: bool
    normal: bool
    horizontally_integrable: bool
    produces_harmonic_morphisms: bool
    harmonic_mode: str
    biinvariant: bool
    biinvariance_scalars: tuple
    killing_diagonal: bool
    killing_diagonal_entries: tuple
    vertical_semisimple: bool
    trace_identity: bool
    witnesses: dict


def analyze_split(s: MetricSplit) -> FoliationReport:
    conf = conformality(s)
    rw = riemannian_witness(s)
    riem = rw is None
    if riem and not conf.conformal:
        raise AssertionError("Riemannian but not conformal: inconsistent tensors")
    mu = mean_curvature(s)
    tgw = totally_geodesic_witness(s)
    hiw = horizontal_integrability_witness(s)
    bi = is_biinvariant_restriction(s)
    kd, kd_entries = is_killing_diagonal(s)
    witnesses = {}
    if not conf.conformal:
        witnesses["conformal"] = conf.witness
        hm = None
    else:
        hm = produces_harmonic_morphisms(s)
        if hm.witness:
            witnesses["harmonic_morphisms"] = hm.witness
    if rw:
        witnesses["riemannian"] = rw
    if not is_zero(mu):
        nz = next(i for i, x in enumerate(mean_curvature_coefficients(s)) if x)
        witnesses["minimal"] = (s.horizontal_labels[nz],)
    if tgw:
        witnesses["totally_geodesic"] = tgw
    if hiw:
        witnesses["horizontally_integrable"] = hiw
    if bi.witness:
        witnesses["biinvariant"] = bi.witness
    normal = is_normal(s)
    if not normal:
        g = s.algebra
        for a, b in itertools.product(range(g.dim), range(s.d)):
            if not s.vertical.contains(bracket(g, g.e(a), s.V(b))):
                witnesses["normal"] = (g.labels[a], s.vertical_labels[b])
                break
    return FoliationReport(
        conformal=conf.conformal,
        dilation=conf.dilation,
        conformal_vector=conf.conformal_vector,
        riemannian=riem,
        mean_curvature=mu,
        minimal=is_zero(mu),
        totally_geodesic=tgw is None,
        normal=normal,
        horizontally_integrable=hiw is None,
        produces_harmonic_morphisms=bool(hm and hm.value),
        harmonic_mode=hm.mode if hm else "not conformal",
        biinvariant=bi.biinvariant,
        biinvariance_scalars=bi.scalars,
        killing_diagonal=kd,
        killing_diagonal_entries=kd_entries,
        vertical_semisimple=s.vertical_flags.is_semisimple,
        trace_identity=trace_identity_check(s),
        witnesses=witnesses,
    )


def report_invariant_violations(r: FoliationReport) -> list[str]:
    out = []
    if r.totally_geodesic and not r.minimal:
        out.append("totally geodesic but not minimal")
    if r.minimal != is_zero(r.mean_curvature):
        out.append("minimal flag disagrees with mean curvature")
    if r.riemannian and not (r.conformal and not any(r.dilation)):
        out.append("Riemannian without zero dilation")
    if r.conformal and not r.riemannian and not any(r.dilation):
        out.append("zero dilation but not Riemannian")
    return out


# --- theorem harness ----------------------------------------------------------------------

CLAIMS = {
    "semisimple_conformal_is_riemannian": "conformal + semisimple vertical => Riemannian",
    "harmonic_iff_minimal": "conformal + semisimple vertical => (closed mean-curvature form <=> minimal)",
    "normal_semisimple_is_minimal": "conformal + semisimple + normal => Riemannian and minimal",
    "biinvariant_normal_is_totally_geodesic": "conformal + semisimple + normal + biinvariant => totally geodesic",
    "killing_diagonal_normal_is_minimal": "conformal + semisimple + normal + Killing-diagonal => minimal",
    "codim3_not_perfect_is_normal": "codimension 3 + conformal + semisimple + ambient not perfect => normal",
}


@dataclass(frozen=True)
class TheoremRow:
    claim: str
    applicable: bool
    holds: bool

    @property
    def counterexample(self) -> bool:
        return self.applicable and not self.holds


def verify_theorems(s: MetricSplit, report: FoliationReport | None = None) -> list[TheoremRow]:
    r = report if report is not None else analyze_split(s)
    ss = r.vertical_semisimple
    base = r.conformal and ss
    if r.conformal:
        hm = produces_harmonic_morphisms(s)
        harmonic_consistent = hm.closed == hm.minimal
    else:
        harmonic_consistent = True
    rows = [
        ("semisimple_conformal_is_riemannian", base, r.riemannian),
        ("harmonic_iff_minimal", base, harmonic_consistent),
        ("normal_semisimple_is_minimal", base and r.normal, r.riemannian and r.minimal),
        ("biinvariant_normal_is_totally_geodesic", base and r.normal and r.biinvariant, r.totally_geodesic),
        ("killing_diagonal_normal_is_minimal", base and r.normal and r.killing_diagonal, r.minimal),
        (
            "codim3_not_perfect_is_normal",
            base and s.codim == 3 and not s.ambient_flags.is_perfect,
            r.normal,
        ),
    ]
    return [TheoremRow(c, bool(a), bool(h)) for c, a, h in rows]


def closed_label_subsets(g: LieAlgebra) -> list[tuple]:
    """All proper nonempty label subsets whose span is a subalgebra."""
    require_lie(g)
    out = []
    for r in range(1, g.dim):
        for combo in itertools.combinations(g.labels, r):
            if is_subalgebra(g, g.span(*combo)):
                out.append(combo)
    return out
