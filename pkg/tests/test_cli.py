import json
import shutil

import pytest

from liefol.cli import main
from oracles import CORPUS, corpus_file, flipped_variants


@pytest.fixture
def corpus_copy(tmp_path):
    d = tmp_path / "corpus"
    shutil.copytree(CORPUS, d)
    return d


def test_bundled_corpus_passes(capsys):
    assert main(["corpus"]) == 0
    out = capsys.readouterr().out
    assert "overall PASS" in out
    assert "PASS* codim4_not_normal" in out


def test_parallel_corpus_same_output(capsys):
    main(["corpus"])
    serial = capsys.readouterr().out
    assert main(["corpus", "--jobs", "2"]) == 0
    assert capsys.readouterr().out == serial


def test_flipped_expectation_names_entry(corpus_copy, capsys):
    p = corpus_copy / "sol_alpha1.lie"
    key, text = next(flipped_variants(p.read_text()))
    p.write_text(text)
    assert main(["corpus", str(corpus_copy)]) == 1
    out = capsys.readouterr().out
    assert "FAIL sol_alpha1" in out and key in out


def test_flipping_disputed_expectation_fails(corpus_copy, capsys):
    p = corpus_copy / "codim4_not_normal.lie"
    p.write_text(p.read_text().replace("expect quotient_flat = true", "expect quotient_flat = false"))
    assert main(["corpus", str(corpus_copy)]) == 1
    assert "FAIL codim4_not_normal" in capsys.readouterr().out


def test_jacobi_corrupted_file(corpus_copy, capsys):
    p = corpus_copy / "a9_su2.lie"
    p.write_text(p.read_text().replace("bracket [X,Y] = 2 Z", "bracket [X,Y] = 2 Z + X").replace("bracket [X,Y] = 2Z", "bracket [X,Y] = 2Z + X"))
    assert main(["check", str(p)]) == 2
    assert "(X, Y, Z)" in capsys.readouterr().err
    assert main(["corpus", str(corpus_copy)]) == 2
    assert "(X, Y, Z)" in capsys.readouterr().out


def test_typo_adjusted_entry_blocks_when_valid(corpus_copy, capsys):
    p = corpus_copy / "sl2r_cartan_killing.lie"
    p.write_text(p.read_text().replace("expect minimal = true", "expect minimal = false"))
    assert main(["corpus", str(corpus_copy)]) == 1


def test_typo_adjusted_entry_warns_when_still_invalid(corpus_copy, capsys):
    p = corpus_copy / "sl2r_cartan_killing.lie"
    p.write_text(p.read_text().replace("bracket [C,Z] = A + 2B", "bracket [C,Z] = A + 3B"))
    assert main(["corpus", str(corpus_copy)]) == 0
    assert "WARN sl2r_cartan_killing" in capsys.readouterr().out


def test_empty_directory(tmp_path, capsys):
    assert main(["corpus", str(tmp_path)]) == 0
    assert "no .lie files" in capsys.readouterr().out


def test_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.lie"
    p.write_text("basis X Y\nbracket [X,Q] = X\n")
    assert main(["analyze", str(p)]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["corpus", str(tmp_path)]) == 2


def test_analyze_structured_is_deterministic(capsys):
    path = str(CORPUS / "intro_su2_not_normal.lie")
    assert main(["analyze", path, "--format", "structured"]) == 0
    first = capsys.readouterr().out
    main(["analyze", path, "--format", "structured"])
    assert capsys.readouterr().out == first
    rep = json.loads(first)
    assert rep["foliation"]["mean_curvature"] == "-Y - Z"
    assert rep["foliation"]["witnesses"]["minimal"] == ["Y"]
    assert rep["quotient"]["method"] == "leaf space (integrability tensor)"


def test_analyze_text(capsys):
    assert main(["analyze", str(CORPUS / "h2_conformal_not_riemannian.lie")]) == 0
    out = capsys.readouterr().out
    assert "riemannian: false  (witness X, B, X)" in out


def test_analyze_reports_failed_expectation(tmp_path, capsys):
    p = tmp_path / "x.lie"
    p.write_text("basis X Y\nbracket [X,Y] = Y\nexpect nilpotent = true\n")
    assert main(["analyze", str(p)]) == 1
    assert "nilpotent" in capsys.readouterr().err


def test_quotient_emits_parseable_file(tmp_path, capsys):
    assert main(["quotient", str(CORPUS / "sol_alpha2.lie")]) == 0
    out = capsys.readouterr().out
    assert "bracket [X,Z] = -2*X" in out and "bracket [Y,Z] = Y" in out
    p = tmp_path / "q.lie"
    p.write_text(out)
    assert main(["check", str(p)]) == 0


def test_quotient_refuses_non_normal(capsys):
    assert main(["quotient", str(CORPUS / "intro_su2_not_normal.lie")]) == 2
    assert "not an ideal" in capsys.readouterr().err


def test_curvature_command(capsys):
    assert main(["curvature", str(CORPUS / "a02_h2_rho2.lie")]) == 0
    assert "constant_curvature=-4" in capsys.readouterr().out


def test_loaded_file_name():
    assert corpus_file("a9_su2").name == "a9_su2"
