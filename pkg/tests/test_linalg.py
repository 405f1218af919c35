import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liefol.errors import DegenerateForm
from liefol.linalg import (
    Mat,
    Subspace,
    inverse,
    is_positive_definite,
    kernel,
    orthogonalize,
    rank,
    rat,
    rref,
    signature,
    solve,
)

from oracles import corpus_algebra

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    ).map(Mat.of)


def leibniz_det(rows):
    n = len(rows)
    total = F(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a, b in itertools.combinations(range(n), 2) if perm[a] > perm[b])
        term = F(-1) ** inv
        for i, p in enumerate(perm):
            term *= rows[i][p]
        total += term
    return total


def minor_rank(m: Mat) -> int:
    """Largest k with a nonzero k x k minor."""
    for k in range(min(m.rows, m.cols), 0, -1):
        for rs in itertools.combinations(range(m.rows), k):
            for cs in itertools.combinations(range(m.cols), k):
                if leibniz_det([[m[r, c] for c in cs] for r in rs]):
                    return k
    return 0


def test_rat_refuses_floats():
    with pytest.raises(TypeError):
        rat(0.5)
    assert rat("3/4") == F(3, 4)


def test_rref_of_identity_is_identity():
    r, piv = rref(Mat.identity(3))
    assert r == Mat.identity(3) and piv == (0, 1, 2)


def test_rref_dependent_rows():
    r, piv = rref(Mat.of([[1, 2, 3], [2, 4, 6], [1, 0, 1]]))
    assert piv == (0, 1)
    assert r.entries == ((1, 0, 1), (0, 1, 1), (0, 0, 0))


def test_kernel_cases():
    assert kernel(Mat.identity(3)).dim == 0
    assert kernel(Mat.zeros(2, 3)).dim == 3
    k = kernel(Mat.of([[1, 1, 0], [0, 0, 1]]))
    assert k.vectors == [(1, -1, 0)]  # canonical RREF basis


def test_ad_matrix_rank_matches_minor_oracle():
    from liefol.lie import ad_matrix

    g = corpus_algebra("intro_su2_not_normal")
    m = ad_matrix(g, g.e("A"))
    # columns 2C, -2B, -B+2Z, A+C-2X are independent; the rest vanish
    assert minor_rank(m) == 4
    assert rank(m) == 4


def test_solve_and_inverse():
    m = Mat.of([[2, 1], [1, 1]])
    assert solve(m, (F(3), F(2))) == (1, 1)
    assert inverse(m) @ m == Mat.identity(2)
    assert solve(Mat.of([[1, 1], [1, 1]]), (F(1), F(2))) is None


def test_positive_definite_and_signature():
    assert is_positive_definite(Mat.of([[2, 1], [1, 2]]))
    assert not is_positive_definite(Mat.of([[1, 2], [2, 1]]))
    assert signature(Mat.diagonal([8, 8, -8])) == (2, 1, 0)
    assert signature(Mat.of([[0, 1], [1, 0]])) == (1, 1, 0)
    assert signature(Mat.diagonal([0, -1, 0])) == (0, 1, 2)


def test_orthogonalize_identity_and_gram():
    vs = [(F(1), F(1), F(0)), (F(1), F(0), F(0))]
    out = orthogonalize(vs, Mat.identity(3))
    assert out[0] == (1, 1, 0)
    assert out[1] == (F(1, 2), F(-1, 2), 0)
    g = Mat.of([[2, 1, 0], [1, 2, 0], [0, 0, 1]])
    out = orthogonalize([(F(1), F(0), F(0)), (F(0), F(1), F(0))], g)
    assert g.bilinear(out[0], out[1]) == 0


def test_orthogonalize_rejects_isotropic():
    with pytest.raises(DegenerateForm):
        orthogonalize([(F(1), F(1))], Mat.of([[1, 0], [0, -1]]))


def test_subspace_complement_and_coordinates():
    s = Subspace.span([(F(1), F(1), F(0))], 3)
    perp = s.orthogonal_complement(Mat.identity(3))
    assert perp.dim == 2 and perp.is_complement_of(s)
    basis = [(F(1), F(1), F(0)), (F(1), F(-1), F(0)), (F(0), F(0), F(1))]
    assert Subspace.whole(3).coordinates((F(2), F(0), F(5)), basis) == (1, 1, 5)


@given(matrices())
def test_rref_is_idempotent(m):
    r, piv = rref(m)
    assert rref(r) == (r, piv)


@given(matrices())
def test_rank_equals_transpose_rank(m):
    assert rank(m) == rank(m.T)


@given(matrices(rows=st.integers(1, 3), cols=st.integers(1, 3)))
def test_rank_matches_minor_oracle(m):
    assert rank(m) == minor_rank(m)


@given(matrices())
def test_kernel_is_annihilated(m):
    k = kernel(m)
    assert k.dim == m.cols - rank(m)
    for v in k.vectors:
        assert all(x == 0 for x in m @ v)


@given(matrices(rows=st.just(3), cols=st.just(3)))
def test_det_matches_leibniz(m):
    assert m.det() == leibniz_det([list(r) for r in m.entries])


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=3))
def test_orthogonalize_spans_and_is_orthogonal(rows):
    vs = [tuple(r) for r in rows]
    form = Mat.of([[3, 1, 0], [1, 2, 0], [0, 0, 1]])
    out = orthogonalize(vs, form)
    assert Subspace.span(out, 3) == Subspace.span(vs, 3)
    for u, v in itertools.combinations(out, 2):
        assert form.bilinear(u, v) == 0
