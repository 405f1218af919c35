"""Levi-Civita connection and curvature of left-invariant metrics.

Everything is computed on an orthogonal basis ``e_i`` with squared lengths
``w_i`` (the "weights"); a general Gram matrix is first orthogonalised.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonPositiveWeight, NotAnIdeal, NotPositiveDefinite, NotRiemannian
from .foliation import MetricSplit, is_normal, riemannian_witness
from .lie import LieAlgebra, change_basis, quotient_algebra
from .linalg import Mat, is_positive_definite, orthogonalize, vec

ZERO = Fraction(0)


@dataclass(frozen=True)
class ConnectionCoeffs:
    """``gamma[i][j][k]``: nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k."""

    algebra: LieAlgebra
    weights: tuple
    gamma: tuple


def levi_civita(g: LieAlgebra, weights: Sequence | None = None) -> ConnectionCoeffs:
    """Koszul formula on an orthogonal basis:
    2 w_k gamma[i][j][k] = w_k c[i][j][k] - w_i c[j][k][i] + w_j c[k][i][j]."""
    n = g.dim
    w = vec(weights) if weights is not None else (Fraction(1),) * n
    if len(w) != n:
        raise NonPositiveWeight(f"need {n} weights, got {len(w)}")
    if any(x <= 0 for x in w):
        raise NonPositiveWeight("weights must be positive")
    c = g.c
    gamma = tuple(
        tuple(
            tuple((w[k] * c[i][j][k] - w[i] * c[j][k][i] + w[j] * c[k][i][j]) / (2 * w[k]) for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )
    return ConnectionCoeffs(g, tuple(w), gamma)


def torsion_violations(conn: ConnectionCoeffs) -> list[tuple]:
    c, G, n = conn.algebra.c, conn.gamma, conn.algebra.dim
    return [(i, j, k) for i, j, k in itertools.product(range(n), repeat=3) if G[i][j][k] - G[j][i][k] != c[i][j][k]]


def metric_violations(conn: ConnectionCoeffs) -> list[tuple]:
    G, w, n = conn.gamma, conn.weights, conn.algebra.dim
    return [
        (i, j, k) for i, j, k in itertools.product(range(n), repeat=3) if w[k] * G[i][j][k] + w[j] * G[i][k][j] != 0
    ]


def riemann(g: LieAlgebra, conn: ConnectionCoeffs) -> tuple:
    """``R[i][j][k][l]``: component along e_l of
    R(e_i,e_j)e_k = nabla_i nabla_j e_k - nabla_j nabla_i e_k - nabla_[e_i,e_j] e_k."""
    n, G, c = g.dim, conn.gamma, g.c
    R = [[[[ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                out = [ZERO] * n
                for p in range(n):
                    a, b, s = G[j][k][p], G[i][k][p], c[i][j][p]
                    if a:
                        for l in range(n):
                            out[l] += a * G[i][p][l]
                    if b:
                        for l in range(n):
                            out[l] -= b * G[j][p][l]
                    if s:
                        for l in range(n):
                            out[l] -= s * G[p][k][l]
                R[i][j][k] = out
                R[j][i][k] = [-x for x in out]
    return tuple(tuple(tuple(tuple(r) for r in Rij) for Rij in Ri) for Ri in R)


def lower(R, weights) -> tuple:
    """<R(e_i,e_j)e_k, e_l> from the (1,3) tensor."""
    n = len(weights)
    return tuple(
        tuple(tuple(tuple(R[i][j][k][l] * weights[l] for l in range(n)) for k in range(n)) for j in range(n))
        for i in range(n)
    )


def sectional(g: LieAlgebra, conn: ConnectionCoeffs, i: int, j: int, R=None) -> Fraction:
    """<R(e_i,e_j)e_j, e_i> / (w_i w_j)."""
    if R is None:
        R = riemann(g, conn)
    w = conn.weights
    return R[i][j][j][i] * w[i] / (w[i] * w[j])


@dataclass(frozen=True)
class CurvatureReport:
    labels: tuple
    weights: tuple
    sectional: dict  # (label_i, label_j) with i < j -> Fraction
    constant_curvature: Fraction | None
    flat: bool
    riemann: tuple  # lowered, <R(e_i,e_j)e_k, e_l>


def report_from_lowered(labels: Sequence[str], weights: Sequence, Rlow) -> CurvatureReport:
    n = len(labels)
    w = tuple(weights)
    sec = {}
    for i, j in itertools.combinations(range(n), 2):
        sec[(labels[i], labels[j])] = Rlow[i][j][j][i] / (w[i] * w[j])
    flat = all(Rlow[i][j][k][l] == 0 for i, j, k, l in itertools.product(range(n), repeat=4))
    const = None
    if flat:
        const = ZERO
    elif n >= 2:
        kappa = sec[(labels[0], labels[1])]

        def model(i, j, k, l):
            # kappa (<e_j,e_k><e_i,e_l> - <e_i,e_k><e_j,e_l>)
            return kappa * ((w[j] if j == k else 0) * (w[i] if i == l else 0) - (w[i] if i == k else 0) * (w[j] if j == l else 0))

        if all(Rlow[i][j][k][l] == model(i, j, k, l) for i, j, k, l in itertools.product(range(n), repeat=4)):
            const = kappa
    return CurvatureReport(tuple(labels), w, sec, const, flat, Rlow)


def orthogonal_frame(g: LieAlgebra, gram: Mat) -> tuple[LieAlgebra, tuple]:
    """Rewrite g on a gram-orthogonal basis (Gram-Schmidt of the declared basis); returns the algebra and weights."""
    if not is_positive_definite(gram):
        raise NotPositiveDefinite("metric is not positive definite")
    if gram.is_diagonal():
        return g, gram.diag()
    basis = orthogonalize([g.e(i) for i in range(g.dim)], gram)
    labels = [lab if b == g.e(lab) else f"{lab}~" for lab, b in zip(g.labels, basis)]
    return change_basis(g, basis, labels), tuple(gram.bilinear(b, b) for b in basis)


def curvature_summary(g: LieAlgebra, weights: Sequence | None = None, gram: Mat | None = None) -> CurvatureReport:
    if gram is not None:
        g, weights = orthogonal_frame(g, gram)
    conn = levi_civita(g, weights)
    return report_from_lowered(g.labels, conn.weights, lower(riemann(g, conn), conn.weights))


def quotient_geometry(s: MetricSplit) -> CurvatureReport:
    """Curvature of G/K for a normal K: the quotient algebra on the horizontal basis with the inherited weights."""
    if riemannian_witness(s) is not None:
        raise NotRiemannian("quotient metric needs a Riemannian foliation")
    if not is_normal(s):
        raise NotAnIdeal("vertical subalgebra is not an ideal; use submersion_quotient_geometry")
    q = quotient_algebra(s.algebra, s.vertical, s.horizontal_basis, s.horizontal_labels)
    return curvature_summary(q, s.horizontal_weights)


def quotient_structure(s: MetricSplit) -> LieAlgebra:
    if not is_normal(s):
        raise NotAnIdeal("vertical subalgebra is not an ideal")
    name = f"{s.algebra.name}/k" if s.algebra.name else ""
    return quotient_algebra(s.algebra, s.vertical, s.horizontal_basis, s.horizontal_labels, name)


def submersion_quotient_geometry(s: MetricSplit) -> CurvatureReport:
    """Curvature of the leaf space G/K of a Riemannian foliation at the base point,
    from the ambient curvature and the integrability tensor A_X Y = 1/2 V[X,Y]:

        <Rq(X,Y)Z,W> = <R(X,Y)Z,W> - 2<A_X Y, A_Z W> + <A_Y Z, A_X W> - <A_X Z, A_Y W>

    Works whether or not K is normal; G/K is homogeneous, so one point suffices.
    """
    if riemannian_witness(s) is not None:
        raise NotRiemannian("leaf space metric needs a Riemannian foliation")
    g, w, d, n = s.adapted, s.weights, s.d, s.n
    conn = levi_civita(g, w)
    Rlow = lower(riemann(g, conn), w)
    theta, wv = s.tensors.theta, s.vertical_weights

    def aa(a, b, c, e):
        # <A_{X_a} X_b, A_{X_c} X_e>
        return sum((theta[a][b][t] * theta[c][e][t] * wv[t] for t in range(d)), ZERO) / 4

    H = range(n)
    Rq = tuple(
        tuple(
            tuple(
                tuple(
                    Rlow[d + a][d + b][d + c][d + e] - 2 * aa(a, b, c, e) + aa(b, c, a, e) - aa(a, c, b, e)
                    for e in H
                )
                for c in H
            )
            for b in H
        )
        for a in H
    )
    return report_from_lowered(s.horizontal_labels, s.horizontal_weights, Rq)
