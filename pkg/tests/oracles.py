"""Corpus access and brute-force reference computations shared by the tests."""

import itertools
from fractions import Fraction

from liefol.analysis import bundled_corpus_dir
from liefol.fileformat import load
from liefol.lie import LieAlgebra

CORPUS = bundled_corpus_dir()


def corpus_file(name: str):
    return load(CORPUS / f"{name}.lie")


def corpus_algebra(name: str) -> LieAlgebra:
    return corpus_file(name).algebra()


def all_corpus_files():
    return [load(p) for p in sorted(CORPUS.glob("*.lie"))]


def su2() -> LieAlgebra:
    return LieAlgebra.from_brackets("XYZ", {("X", "Y"): {"Z": 2}, ("Y", "Z"): {"X": 2}, ("Z", "X"): {"Y": 2}})


def sl2r() -> LieAlgebra:
    return LieAlgebra.from_brackets("XYZ", {("X", "Y"): {"Z": 2}, ("Y", "Z"): {"X": -2}, ("Z", "X"): {"Y": 2}})


def brute_killing(g: LieAlgebra):
    """B_ij = sum_{k,l} c[i][l][k] c[j][k][l], straight from the definition of trace(ad ad)."""
    n = g.dim
    c = g.c
    return [
        [sum((c[i][l][k] * c[j][k][l] for k, l in itertools.product(range(n), repeat=2)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def flipped_variants(text: str):
    """Yield (key, new_text) with exactly one expectation changed to a wrong-on-purpose value."""
    from liefol.fileformat import parse_algebra
    from liefol.lie import radical

    af = parse_algebra(text)
    lines = text.splitlines(keepends=True)
    for n, line in enumerate(lines):
        body = line.split("#", 1)[0].strip()
        if not body.startswith("expect "):
            continue
        key, value = (part.strip() for part in body[len("expect ") :].split("=", 1))
        if value in ("true", "false"):
            new = "false" if value == "true" else "true"
        elif value.startswith("["):
            rad = radical(af.algebra())
            outside = next(lab for lab in af.labels if af.algebra().e(lab) not in rad)
            new = f"[{outside}]"
        else:
            new = str(Fraction(value) + 1)
        yield key, "".join(lines[:n]) + f"expect {key} = {new}\n" + "".join(lines[n + 1 :])
