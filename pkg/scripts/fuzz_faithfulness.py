"""Fuzz the faithfulness of the quantum representation against the oracle.

Samples random words in the mapping-class-group generators, evaluates the
projective representation at a fixed random generic color set, and compares
projective triviality with the exact word-problem oracle. Faithfulness at
generic parameters predicts zero disagreements; any mismatch is printed with
its word and deviation.
"""

import argparse
import random

import numpy as np

from quantrep.cli import _sample_sphere_colors, format_word, random_word
from quantrep.groups import word_problem
from quantrep.m04 import (
    IDENTITY_PERM,
    evaluate_word,
    matrices_projectively_equal,
    rep_space,
)
from quantrep.qscalar import QParams


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=int, default=2)
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--max-len", type=int, default=12)
    parser.add_argument("--tol", type=float, default=1e-7)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    p = QParams(args.r)
    rng = random.Random(args.seed)
    colors = _sample_sphere_colors(args.r, rng)
    space = rep_space(p, colors)
    eye = np.eye(args.r, dtype=complex)
    cache: dict = {}

    trivial = mismatches = 0
    for _ in range(args.samples):
        word = random_word(rng, args.max_len)
        block = evaluate_word(p, space, word, cache=cache)
        rep_trivial = block.dst_perm == IDENTITY_PERM and matrices_projectively_equal(
            block.matrix, eye, args.tol
        )
        oracle_trivial = word_problem(word)
        trivial += oracle_trivial
        if rep_trivial != oracle_trivial:
            mismatches += 1
            print(f"MISMATCH {format_word(word)}: rep={rep_trivial} oracle={oracle_trivial}")

    print(
        f"{args.samples} words (len <= {args.max_len}), {trivial} trivial by oracle, "
        f"{mismatches} disagreements"
    )


if __name__ == "__main__":
    main()
