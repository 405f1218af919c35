import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liefol.errors import InvalidAlgebra, NotAComplement, NotAnIdeal, NotASubalgebra
from liefol.lie import (
    LieAlgebra,
    ad_matrix,
    bracket,
    center,
    change_basis,
    classify,
    derived_algebra,
    derived_series,
    is_ideal,
    is_subalgebra,
    killing_form,
    lower_central_series,
    quotient_algebra,
    radical,
    require_lie,
    restrict,
    validate_jacobi,
)
from liefol.linalg import Mat, Subspace
from oracles import all_corpus_files, brute_killing, corpus_algebra, sl2r, su2


def test_antisymmetry_enforced_on_construction():
    c = [[[F(0)] * 2 for _ in range(2)] for _ in range(2)]
    c[0][1] = [F(1), F(0)]
    with pytest.raises(InvalidAlgebra):
        LieAlgebra.from_tensor("AB", c)


def test_brackets_of_su2():
    g = su2()
    assert bracket(g, g.e("X"), g.e("Y")) == (0, 0, 2)
    assert bracket(g, g.e("Y"), g.e("X")) == (0, 0, -2)
    assert bracket(g, (1, 1, 0), (0, 1, 1)) == (2, -2, 2)


def test_corrupted_su2_reports_the_triple():
    g = LieAlgebra.from_brackets("XYZ", {("X", "Y"): {"Z": 2, "X": 1}, ("Y", "Z"): {"X": 2}, ("Z", "X"): {"Y": 2}})
    bad = validate_jacobi(g)
    assert [v.triple for v in bad] == [("X", "Y", "Z")]
    # [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]] = 0 + 0 + [Z, 2Z + X] = 2Y
    assert bad[0].residual == (0, 2, 0)
    with pytest.raises(InvalidAlgebra):
        require_lie(g)


def test_every_corpus_algebra_satisfies_jacobi():
    for af in all_corpus_files():
        assert validate_jacobi(af.algebra()) == [], af.name


def test_ad_matrix_columns():
    g = su2()
    assert ad_matrix(g, g.e("X")).entries == ((0, 0, 0), (0, 0, -2), (0, 2, 0))
    h = corpus_algebra("h2_conformal_not_riemannian")
    adb = ad_matrix(h, h.e("B"))
    assert adb.col(h.index("A")) == (2, 0, 0, 0)


def test_killing_forms_against_brute_force():
    assert killing_form(su2()) == Mat.diagonal([-8, -8, -8])
    # X generates the compact direction in this basis
    assert killing_form(sl2r()) == Mat.diagonal([-8, 8, 8])
    for af in all_corpus_files():
        g = af.algebra()
        assert killing_form(g).entries == tuple(tuple(r) for r in brute_killing(g)), af.name


def test_killing_ad_invariance_on_corpus():
    for af in all_corpus_files():
        g = af.algebra()
        kf = killing_form(g)
        for x, y, z in itertools.product(range(g.dim), repeat=3):
            lhs = kf.bilinear(bracket(g, g.e(x), g.e(y)), g.e(z))
            rhs = kf.bilinear(g.e(x), bracket(g, g.e(y), g.e(z)))
            assert lhs == rhs, (af.name, x, y, z)


def test_ideal_killing_form_is_restriction():
    g = corpus_algebra("su2_normal_totally_geodesic")
    k = g.span("A", "B", "C")
    assert is_ideal(g, k)
    sub = restrict(g, k.vectors)
    kf = killing_form(g)
    assert killing_form(sub).entries == tuple(tuple(kf.bilinear(u, v) for v in k.vectors) for u in k.vectors)


def test_derived_and_lower_central_series():
    heis = LieAlgebra.from_brackets("XYZ", {("X", "Y"): {"Z": 1}})
    assert [s.dim for s in derived_series(heis)] == [1, 0]
    assert [s.dim for s in lower_central_series(heis)] == [1, 0]
    assert derived_algebra(su2()).dim == 3
    assert center(heis) == heis.span("Z")


@pytest.mark.parametrize(
    "name, rad_dim",
    [
        ("su2_normal_totally_geodesic", 3),
        ("sol_alpha1", 3),
        ("sol_alpha2", 3),
        ("perfect_not_semisimple", 3),
        ("sl2r_cartan_killing", 0),
        ("a9_su2", 0),
        ("a5_h3", 3),
    ],
)
def test_radical_dimensions(name, rad_dim):
    assert radical(corpus_algebra(name)).dim == rad_dim


def test_radical_of_perfect_example():
    g = corpus_algebra("perfect_not_semisimple")
    rad = radical(g)
    for combo in [{"A": 1, "Z": 1}, {"B": 1, "X": 1, "Z": -1}, {"C": 1, "X": 1, "Y": -1}]:
        assert tuple(F(combo.get(lab, 0)) for lab in g.labels) in rad


def test_classification_flags():
    f = classify(su2())
    assert f.is_semisimple and f.is_perfect and not f.is_solvable and f.killing_signature == (0, 3, 0)
    assert classify(sl2r()).killing_signature == (2, 1, 0)
    heis = classify(LieAlgebra.from_brackets("XYZ", {("X", "Y"): {"Z": 1}}))
    assert heis.is_nilpotent and heis.is_solvable and not heis.is_abelian and heis.radical_dim == 3
    p = classify(corpus_algebra("perfect_not_semisimple"))
    assert p.is_perfect and not p.is_semisimple
    ab = classify(LieAlgebra.abelian("AB"))
    assert ab.is_abelian and ab.is_nilpotent and ab.radical_dim == 2


def test_subalgebra_and_ideal_checks():
    g = corpus_algebra("intro_su2_not_normal")
    k = g.span("A", "B", "C")
    assert is_subalgebra(g, k) and not is_ideal(g, k)
    assert not is_subalgebra(g, g.span("A", "X"))
    with pytest.raises(NotASubalgebra):
        restrict(g, g.span("A", "X").vectors)


def test_quotient_of_sol():
    g = corpus_algebra("sol_alpha2")
    k = g.span("A", "B", "C")
    q = quotient_algebra(g, k, [g.e("X"), g.e("Y"), g.e("Z")], "XYZ")
    assert q.c[q.index("Z")][q.index("X")] == (2, 0, 0)
    assert q.c[q.index("Z")][q.index("Y")] == (0, -1, 0)
    assert q.c[q.index("X")][q.index("Y")] == (0, 0, 0)


def test_quotient_rejects_bad_input():
    g = corpus_algebra("intro_su2_not_normal")
    with pytest.raises(NotAnIdeal):
        quotient_algebra(g, g.span("A", "B", "C"), [g.e("X"), g.e("Y"), g.e("Z")])
    h = corpus_algebra("sol_alpha1")
    with pytest.raises(NotAComplement):
        quotient_algebra(h, h.span("A", "B", "C"), [h.e("X"), h.e("Y"), h.e("A")])


@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_change_of_basis_preserves_invariants(entries):
    m = Mat.of([entries[0:3], entries[3:6], entries[6:9]])
    if m.det() == 0:
        return
    g = sl2r()
    h = change_basis(g, [m.col(j) for j in range(3)], "PQR")
    assert validate_jacobi(h) == []
    assert classify(h).killing_signature == (2, 1, 0)
    # B_h = M^T B_g M
    assert killing_form(h) == m.T @ killing_form(g) @ m


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=6, max_size=6))
def test_bracket_bilinear_and_antisymmetric(xs):
    g = corpus_algebra("a8_sl2r")
    u, v = tuple(xs[:3]), tuple(xs[3:])
    assert bracket(g, u, v) == tuple(-x for x in bracket(g, v, u))
    assert bracket(g, u, u) == (0, 0, 0)
