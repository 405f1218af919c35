"""Exact rational vectors, matrices and subspaces.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples of
Fractions.  Nothing here ever rounds, so every comparison is an equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateForm, DimensionMismatch

Rat = Fraction
Vector = tuple  # tuple[Fraction, ...]


def rat(x) -> Fraction:
    """Coerce ints, strings like ``"-3/4"`` and Fractions to a Fraction.

    Floats are refused: they would smuggle rounding error into exact code.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact scalar {x!r}")
    return Fraction(x)


def vec(values: Iterable) -> Vector:
    return tuple(rat(v) for v in values)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def _check_len(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"length {len(u)} vs {len(v)}")


def add(u: Vector, v: Vector) -> Vector:
    _check_len(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    _check_len(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(s, v: Vector) -> Vector:
    s = rat(s)
    return tuple(s * a for a in v)


def dot(u: Vector, v: Vector) -> Fraction:
    _check_len(u, v)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def lincomb(coeffs: Sequence, vectors: Sequence[Vector], n: int | None = None) -> Vector:
    if n is None:
        n = len(vectors[0])
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def is_zero(v: Vector) -> bool:
    return not any(v)


@dataclass(frozen=True)
class Mat:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("entry grid does not match rows x cols")

    @classmethod
    def of(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        entries = tuple(vec(r) for r in rows)
        if cols is None:
            if not entries:
                raise DimensionMismatch("column count needed for an empty matrix")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, tuple(unit_vec(n, i) for i in range(n)))

    @classmethod
    def zeros(cls, r: int, c: int) -> "Mat":
        return cls(r, c, tuple(zero_vec(c) for _ in range(r)))

    @classmethod
    def diagonal(cls, values: Sequence) -> "Mat":
        n = len(values)
        return cls.of([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows, tuple(self.col(j) for j in range(self.cols)))

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
            cols = [other.col(j) for j in range(other.cols)]
            return Mat(self.rows, other.cols, tuple(tuple(dot(r, c) for c in cols) for r in self.entries))
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ vector of length {len(v)}")
        return tuple(dot(r, v) for r in self.entries)

    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch")
        return Mat(self.rows, self.cols, tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scaled(-1)

    def scaled(self, s) -> "Mat":
        return Mat(self.rows, self.cols, tuple(scale(s, r) for r in self.entries))

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_diagonal(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def diag(self) -> Vector:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def bilinear(self, u: Vector, v: Vector) -> Fraction:
        """u^T M v."""
        return dot(u, self @ v)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        return Mat(len(rows), len(cols), tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def det(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        a = [list(r) for r in self.entries]
        n = self.rows
        sign = 1
        result = Fraction(1)
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            if p != k:
                a[k], a[p] = a[p], a[k]
                sign = -sign
            piv = a[k][k]
            result *= piv
            for i in range(k + 1, n):
                f = a[i][k] / piv
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        return sign * result

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries)


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row-echelon form and the pivot columns."""
    a = [list(r) for r in m.entries]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Mat(m.rows, m.cols, tuple(tuple(row) for row in a)), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel(m: Mat) -> "Subspace":
    """Null space {v : m v = 0}."""
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r, f]
        basis.append(tuple(v))
    return Subspace.span(basis, m.cols)


def solve(m: Mat, b: Vector) -> Vector | None:
    """One exact solution of m x = b, or None when the system is inconsistent.

    Free variables are set to zero, so for injective m the answer is unique.
    """
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side length")
    aug = Mat(m.rows, m.cols + 1, tuple(r + (bb,) for r, bb in zip(m.entries, vec(b))))
    red, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = red[r, m.cols]
    return tuple(x)


def inverse(m: Mat) -> Mat:
    if not m.is_square():
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.rows
    aug = Mat(n, 2 * n, tuple(r + unit_vec(n, i) for i, r in enumerate(m.entries)))
    red, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ZeroDivisionError("singular matrix")
    return Mat(n, n, tuple(r[n:] for r in red.entries))


def is_positive_definite(form: Mat) -> bool:
    """Sylvester's criterion on a symmetric matrix: all leading minors > 0."""
    if not form.is_symmetric():
        return False
    return all(form.submatrix(range(k), range(k)).det() > 0 for k in range(1, form.rows + 1))


def signature(form: Mat) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a symmetric form, by congruence."""
    if not form.is_symmetric():
        raise DimensionMismatch("signature needs a symmetric matrix")
    a = [list(r) for r in form.entries]
    n = form.rows
    pos = neg = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if a[i][i] != 0), None)
        if p is None:
            # no usable diagonal pivot; fold an off-diagonal entry onto the diagonal
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            p = i
        if p != k:
            a[k], a[p] = a[p], a[k]
            for row in a:
                row[k], row[p] = row[p], row[k]
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / piv
            if f:
                for t in range(k, n):
                    a[i][t] -= f * a[k][t]
                for t in range(k, n):
                    a[t][i] -= f * a[t][k]
        k += 1
    return pos, neg, n - pos - neg


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n, stored by its canonical RREF basis."""

    ambient_dim: int
    basis: Mat

    @classmethod
    def span(cls, vectors: Iterable[Vector], ambient_dim: int) -> "Subspace":
        rows = [vec(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
        if not rows:
            return cls(ambient_dim, Mat(0, ambient_dim, ()))
        red, pivots = rref(Mat(len(rows), ambient_dim, tuple(rows)))
        return cls(ambient_dim, Mat(len(pivots), ambient_dim, red.entries[: len(pivots)]))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls.span([], n)

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, Mat.identity(n))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> list[Vector]:
        return list(self.basis.entries)

    def contains(self, v: Vector) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length")
        return Subspace.span(self.vectors + [v], self.ambient_dim).dim == self.dim

    def __contains__(self, v) -> bool:
        return self.contains(vec(v))

    def issubset(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimension")
        return (self + other).dim == other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimension")
        return Subspace.span(self.vectors + other.vectors, self.ambient_dim)

    def coordinates(self, v: Vector, basis: Sequence[Vector] | None = None) -> Vector | None:
        """Coefficients of v in ``basis`` (default: the canonical basis), or None if v is outside."""
        basis = self.vectors if basis is None else list(basis)
        if not basis:
            return () if is_zero(v) else None
        return solve(Mat.of(basis, self.ambient_dim).T, v)

    def orthogonal_complement(self, form: Mat) -> "Subspace":
        """{v : form(b, v) = 0 for every basis vector b}."""
        if not self.vectors:
            return Subspace.whole(self.ambient_dim)
        rows = [form.T @ b for b in self.vectors]  # b^T F v = (F^T b) . v
        return kernel(Mat.of(rows, self.ambient_dim))

    def is_complement_of(self, other: "Subspace") -> bool:
        return self.dim + other.dim == self.ambient_dim and (self + other).dim == self.ambient_dim


def orthogonalize(vectors, form: Mat) -> list[Vector]:
    """Gram-Schmidt without normalisation, so the output stays rational.

    Accepts a :class:`Subspace` or a sequence of linearly independent vectors.
    Raises DegenerateForm when a nonzero residual is isotropic.
    """
    if isinstance(vectors, Subspace):
        vectors = vectors.vectors
    out: list[Vector] = []
    norms: list[Fraction] = []
    for v in vectors:
        v = vec(v)
        u = v
        for w, nw in zip(out, norms):
            c = form.bilinear(v, w) / nw
            if c:
                u = sub(u, scale(c, w))
        if is_zero(u):
            continue
        nu = form.bilinear(u, u)
        if nu == 0:
            raise DegenerateForm(f"isotropic residual vector {tuple(str(x) for x in u)}")
        out.append(u)
        norms.append(nu)
    return out
