"""Compare the 6j-pipeline generator matrices against the r=2 closed forms.

Samples random generic parameter triples A1, A2, A3, builds the four-color
representation space, and prints the projective deviation of the normalized
sigma_1 and sigma_2 blocks from their closed forms, plus the deviation of the
determinant-normalized word images from QS and QT in the unicolored case.
"""

import argparse
import random

import numpy as np

from quantrep.cli import lambda_of_a
from quantrep.m04 import (
    MCGWord,
    closed_form_m1,
    closed_form_m2,
    evaluate_word,
    projective_deviation,
    qs_matrix,
    qt_matrix,
    rep_space,
    sigma_matrix,
)
from quantrep.qscalar import QParams


def sample_a(rng: random.Random) -> complex:
    while True:
        a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if 0.5 <= abs(a) <= 2 and abs(a * a - 1) > 1e-3:
            return a


def det_normalized(mat: np.ndarray) -> np.ndarray:
    return mat / np.sqrt(np.linalg.det(mat))


def sign_free_dev(a: np.ndarray, b: np.ndarray) -> float:
    """Entrywise deviation up to a global sign (square-root branch)."""
    return min(float(np.max(np.abs(a - b))), float(np.max(np.abs(a + b))))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    p = QParams(2)
    rng = random.Random(args.seed)
    worst = {"sigma1": 0.0, "sigma2": 0.0, "QS": 0.0, "QT": 0.0}
    for _ in range(args.samples):
        a1, a2, a3 = (sample_a(rng) for _ in range(3))
        lams = [lambda_of_a(2, a) for a in (a1, a2, a3)]
        space = rep_space(p, (*lams, -sum(lams)))
        m1 = sigma_matrix(p, space, 1, normalized=True).matrix
        m2 = sigma_matrix(p, space, 2, normalized=True).matrix
        worst["sigma1"] = max(worst["sigma1"], projective_deviation(m1, closed_form_m1(a1, a2, a3)))
        worst["sigma2"] = max(worst["sigma2"], projective_deviation(m2, closed_form_m2(a1, a2, a3)))

        lam = lambda_of_a(2, a1)
        uspace = rep_space(p, (lam, lam, lam, -3 * lam))
        qs = det_normalized(evaluate_word(p, uspace, MCGWord(((1, 1), (2, 1)))).matrix)
        qt = det_normalized(evaluate_word(p, uspace, MCGWord(((1, 1), (2, 1), (1, 1)))).matrix)
        worst["QS"] = max(worst["QS"], sign_free_dev(qs, qs_matrix(a1)))
        worst["QT"] = max(worst["QT"], sign_free_dev(qt, qt_matrix(a1)))

    for name, dev in worst.items():
        print(f"{name:8s} max deviation over {args.samples} samples: {dev:.3e}")


if __name__ == "__main__":
    main()
