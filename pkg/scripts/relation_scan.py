"""Scan the five sphere relations across orders r and print worst deviations.

For each r the five defining relators of the mapping class group of the
4-punctured sphere are evaluated on random generic color sets; a relation
holds when the image is projectively the identity. Deviations grow slowly
with r as the 6j sums accumulate rounding error.
"""

import argparse
import random

from quantrep.cli import SPHERE_RELATORS, _sample_sphere_colors
from quantrep.m04 import IDENTITY_PERM, evaluate_word, projective_deviation, rep_space
from quantrep.qscalar import QParams

import numpy as np


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-r", type=int, default=5)
    parser.add_argument("--samples", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for r in range(2, args.max_r + 1):
        p = QParams(r)
        rng = random.Random(args.seed)
        eye = np.eye(r, dtype=complex)
        worst = {name: 0.0 for name in SPHERE_RELATORS}
        for _ in range(args.samples):
            colors = _sample_sphere_colors(r, rng)
            space = rep_space(p, colors)
            cache: dict = {}
            for name, word in SPHERE_RELATORS.items():
                block = evaluate_word(p, space, word, cache=cache)
                assert block.dst_perm == IDENTITY_PERM
                worst[name] = max(worst[name], projective_deviation(block.matrix, eye))
        row = "  ".join(f"{name}={dev:.1e}" for name, dev in worst.items())
        print(f"r={r}: {row}")


if __name__ == "__main__":
    main()
