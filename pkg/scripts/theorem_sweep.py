"""Sweep the theorem harness over every bracket-closed label subset of the corpus.

Each split is tried with the file's own metric and with ``--random-metrics``
random diagonal metrics; prints per-claim counts of applicable rows and
counterexamples.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from liefol.analysis import bundled_corpus_dir
from liefol.fileformat import load
from liefol.foliation import CLAIMS, closed_label_subsets, make_split, verify_theorems
from liefol.linalg import Mat


@dataclass
class SweepConfig:
    corpus: Path
    random_metrics: int = 3
    seed: int = 0
    max_denominator: int = 6


def sweep(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    applicable, broken = Counter(), Counter()
    examples = []
    splits = 0
    for path in sorted(cfg.corpus.glob("*.lie")):
        af = load(path)
        g = af.algebra()
        metrics = [af.gram]
        for _ in range(cfg.random_metrics):
            metrics.append(
                Mat.diagonal([Fraction(rng.randint(1, 12), rng.randint(1, cfg.max_denominator)) for _ in range(g.dim)])
            )
        for labels in closed_label_subsets(g):
            for gram in metrics:
                splits += 1
                for row in verify_theorems(make_split(g, gram, labels)):
                    applicable[row.claim] += row.applicable
                    if row.counterexample:
                        broken[row.claim] += 1
                        examples.append((af.name, labels, row.claim))
    return splits, applicable, broken, examples


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("corpus", nargs="?", type=Path, default=bundled_corpus_dir())
    ap.add_argument("--random-metrics", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = SweepConfig(args.corpus, args.random_metrics, args.seed)
    splits, applicable, broken, examples = sweep(cfg)
    print(f"{splits} splits")
    width = max(map(len, CLAIMS))
    for claim in CLAIMS:
        print(f"  {claim:<{width}}  applicable {applicable[claim]:>4}  counterexamples {broken[claim]}")
    for name, labels, claim in examples[:20]:
        print(f"  counterexample: {name} vertical {' '.join(labels)} -> {claim}")
    raise SystemExit(1 if examples else 0)


if __name__ == "__main__":
    main()
