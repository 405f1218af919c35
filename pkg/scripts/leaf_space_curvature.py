"""Leaf-space curvature for each Riemannian corpus foliation.

Normal subalgebras are computed twice (quotient algebra and integrability
tensor route) and compared; non-normal ones use the integrability tensor only.
"""

import argparse
from pathlib import Path

from liefol.analysis import bundled_corpus_dir
from liefol.curvature import quotient_geometry, submersion_quotient_geometry
from liefol.fileformat import load
from liefol.foliation import is_normal, is_riemannian, make_split


def describe(rep) -> str:
    if rep.flat:
        return "flat"
    if rep.constant_curvature is not None:
        return f"constant curvature {rep.constant_curvature}"
    return ", ".join(f"K({a},{b})={k}" for (a, b), k in rep.sectional.items() if k)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("corpus", nargs="?", type=Path, default=bundled_corpus_dir())
    args = ap.parse_args()
    for path in sorted(args.corpus.glob("*.lie")):
        af = load(path)
        if not af.vertical:
            continue
        s = make_split(af.algebra(), af.gram, af.vertical)
        if not is_riemannian(s):
            print(f"{af.name}: not Riemannian, no leaf-space metric")
            continue
        leaf = submersion_quotient_geometry(s)
        line = f"{af.name}: {describe(leaf)}"
        if is_normal(s):
            agree = quotient_geometry(s).riemann == leaf.riemann
            line += f"  (quotient algebra route {'agrees' if agree else 'DISAGREES'})"
        else:
            line += "  (subalgebra not normal)"
        print(line)


if __name__ == "__main__":
    main()
