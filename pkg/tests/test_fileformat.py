from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liefol.errors import DuplicateBracket, ParseError, UnboundParam, UnknownLabel
from liefol.fileformat import dump, format_comb, from_algebra, load, parse_algebra
from liefol.lie import LieAlgebra
from liefol.linalg import Mat
from oracles import CORPUS, all_corpus_files

SOL = """\
algebra "sol"   # comment
dim 3
basis X Y Z
param a = 3/2
bracket [Z,X] = a*X
bracket [Z,Y] = -Y
expect solvable = true
expect radical_contains = [X, 2*Y - Z]
annotate bianchi-VI
"""


def test_parse_example():
    af = parse_algebra(SOL)
    assert af.name == "sol" and af.labels == ("X", "Y", "Z")
    g = af.algebra()
    assert g.c[2][0] == (F(3, 2), 0, 0) and g.c[0][2] == (F(-3, 2), 0, 0)
    assert af.expectations["solvable"] is True
    assert af.expectations["radical_contains"] == [(1, 0, 0), (0, 2, -1)]
    assert af.annotations == ("bianchi-VI",) and af.gram is None


def test_linear_combination_forms():
    af = parse_algebra("basis A B C\nparam t = 2\nbracket [A,B] = 1/2 A - t B + 3*C\nbracket [A,C] = 0\n")
    assert af.brackets[("A", "B")] == (F(1, 2), -2, 3)
    assert af.brackets[("A", "C")] == (0, 0, 0)


def test_gram_metric():
    af = parse_algebra("basis A B\nmetric gram\n  2 1\n  1 3\nvertical A\n")
    assert af.gram == Mat.of([[2, 1], [1, 3]]) and af.vertical == ("A",)


def test_unbound_param_position():
    with pytest.raises(UnboundParam) as exc:
        parse_algebra("basis X Y\nbracket [X,Y] = beta Y\n")
    assert exc.value.line == 2


def test_param_must_precede_use():
    with pytest.raises(UnboundParam):
        parse_algebra("basis X Y\nbracket [X,Y] = t X\nparam t = 1\n")


def test_mirrored_duplicate_bracket():
    with pytest.raises(DuplicateBracket) as exc:
        parse_algebra("basis X Y\nbracket [X,Y] = X\nbracket [Y,X] = -X\n")
    assert exc.value.line == 3


def test_unknown_label_column():
    with pytest.raises(UnknownLabel) as exc:
        parse_algebra("basis X Y\nbracket [X,Q] = X\n")
    assert (exc.value.line, exc.value.column) == (2, 12)
    with pytest.raises(UnknownLabel):
        parse_algebra("basis X Y\nbracket [X,Y] = 2 W\n")


@pytest.mark.parametrize(
    "text",
    [
        "dim 2\n",
        "basis X Y\ndim 3\n",
        "basis X Y\nexpect shiny = true\n",
        "basis X Y\nmetric gram\n1 0\n",
        "basis X Y\nmetric gram\n1 2\n0 1\n",
        "basis X Y\nbracket [X,X] = Y\n",
        "basis X Y\nfrobnicate\n",
        "basis X Y\nbracket [X,Y] = 2.5 X\n",
    ],
)
def test_malformed_inputs(text):
    with pytest.raises(ParseError):
        parse_algebra(text)


def test_crlf_and_utf8(tmp_path):
    p = tmp_path / "crlf.lie"
    p.write_bytes(SOL.replace("\n", "\r\n").encode("utf-8"))
    af = load(p)
    assert af.algebra() == parse_algebra(SOL).algebra()


def test_name_defaults_to_stem(tmp_path):
    p = tmp_path / "plain.lie"
    p.write_text("basis X\n")
    assert load(p).name == "plain"


def test_format_comb_canonical():
    assert format_comb("ABC", (F(2), F(0), F(-1, 2))) == "2*A - 1/2*C"
    assert format_comb("ABC", (F(0),) * 3) == "0"
    assert format_comb("ABC", (F(-1), F(1), F(0))) == "-A + B"


def test_corpus_files_round_trip():
    for af in all_corpus_files():
        again = parse_algebra(dump(af))
        assert again.algebra() == af.algebra()
        assert again.expectations == af.expectations and again.annotations == af.annotations


def test_bundled_corpus_present():
    assert len(list(CORPUS.glob("*.lie"))) >= 20


coef = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@given(st.lists(coef, min_size=9, max_size=9), st.lists(st.integers(1, 5), min_size=3, max_size=3))
def test_dump_parse_round_trip(cs, ws):
    # arbitrary antisymmetric tables need not satisfy Jacobi; the file layer must not care
    labels = ("P", "Q", "R")
    pairs = [(0, 1), (0, 2), (1, 2)]
    c = [[[F(0)] * 3 for _ in range(3)] for _ in range(3)]
    for n, (i, j) in enumerate(pairs):
        c[i][j] = cs[3 * n : 3 * n + 3]
        c[j][i] = [-x for x in c[i][j]]
    g = LieAlgebra.from_tensor(labels, c, "rand")
    af = from_algebra(g, Mat.diagonal(ws), vertical=["P"])
    back = parse_algebra(dump(af))
    assert back.algebra() == g
    assert back.metric() == Mat.diagonal(ws) and back.vertical == ("P",)
