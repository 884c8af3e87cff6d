"""Acceptance suite: one test per numbered criterion, one printed line each.

Every test prints `PASS criterion N: ...` or `FAIL criterion N: ...` with the
worst observed deviation and the elapsed time, then asserts the criterion at
its stated tolerance and runtime budget. Criterion 2 contains one clause that
is mathematically unreachable (see its docstring); the test asserts the
clause as stated and is marked strict-xfail so the failure stays recorded.
"""

import itertools
import random
import time

import numpy as np
import pytest

from quantrep.braiding import BraidWord, ado_rep, braiding_c
from quantrep.cli import lambda_of_a, random_word
from quantrep.graph_basis import h_to_i_matrix, i_to_h_matrix
from quantrep.groups import perm_of_word, presentation_check, word_problem
from quantrep.m04 import (
    CS_MATRIX,
    IDENTITY_PERM,
    MCGWord,
    N_A_WORD,
    N_B_WORD,
    closed_form_m1,
    closed_form_m2,
    conjugate_by_P,
    evaluate_word,
    matrices_projectively_equal,
    projective_deviation,
    qs_matrix,
    qt_matrix,
    rep_space,
    sigma_matrix,
)
from quantrep.qscalar import QParams, qnum
from quantrep.weight_modules import tensor_action, typical_module

SEED = 20240811


def _report(number: int, ok: bool, detail: str):
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")


def _generic_a(rng):
    while True:
        a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if 0.5 <= abs(a) <= 2 and abs(a * a - 1) > 1e-3:
            return a


def _colors_from_as(r, a_values):
    lams = [lambda_of_a(r, a) for a in a_values]
    return (*lams, -sum(lams))


def _generic_colors(rng, r):
    """Four zero-sum colors with typical entries and generic pair sums."""
    while True:
        c = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3)]
        colors = (*c, -sum(c))
        pairs = [colors[0] + colors[1], colors[0] + colors[2], colors[0] + colors[3]]
        if all(abs(x.imag) > 1e-2 for x in colors) and all(
            abs(s.imag) > 1e-2 for s in pairs
        ):
            return colors


def _rel_dev(a, b):
    scale = max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    return float(np.max(np.abs(a - b))) / scale


def _block_identity_deviation(p, block):
    if block.dst_perm != IDENTITY_PERM:
        return float("inf")
    return projective_deviation(block.matrix, np.eye(p.r, dtype=complex))


def test_criterion_1_closed_forms():
    """r=2 pipeline matrices match the closed forms up to one global scalar."""
    t0 = time.perf_counter()
    p = QParams(2)
    rng = random.Random(SEED)
    worst = 0.0
    for _ in range(100):
        a_values = [_generic_a(rng) for _ in range(3)]
        space = rep_space(p, _colors_from_as(2, a_values))
        m1 = sigma_matrix(p, space, 1, normalized=True).matrix
        m2 = sigma_matrix(p, space, 2, normalized=True).matrix
        worst = max(worst, projective_deviation(m1, closed_form_m1(*a_values)))
        worst = max(worst, projective_deviation(m2, closed_form_m2(*a_values)))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed < 2.0
    _report(1, ok, f"closed forms, 100 triples, max_dev={worst:.2e}, {elapsed:.2f}s")
    assert ok


@pytest.mark.xfail(
    strict=True,
    reason="the stated CS target [[0,-1],[-1,0]] has determinant -1, so it "
    "cannot equal P^-1 QS P for any determinant-one QS; the actual conjugate "
    "is [[0,1/A],[-A,1]], the trace-one order-3 torsion element",
)
def test_criterion_2_psl2z_chain():
    """QS/QT torsion and the conjugated presentation hold; the literal CS
    identity is asserted as stated although it is unreachable."""
    t0 = time.perf_counter()
    rng = random.Random(SEED + 1)
    eye = np.eye(2)
    torsion_dev = conj_dev = pres_dev = 0.0
    for _ in range(100):
        a = _generic_a(rng)
        qs, qt = qs_matrix(a), qt_matrix(a)
        torsion_dev = max(
            torsion_dev,
            float(np.max(np.abs(np.linalg.matrix_power(qs, 3) + eye))),
            float(np.max(np.abs(qt @ qt + eye))),
        )
        conj_dev = max(conj_dev, float(np.max(np.abs(conjugate_by_P(a, qs) - CS_MATRIX))))
        s = conjugate_by_P(a, qt)
        t = conjugate_by_P(a, qs)
        pres_dev = max(
            pres_dev,
            projective_deviation(s @ s, eye),
            projective_deviation(np.linalg.matrix_power(t, 3), eye),
        )
    elapsed = time.perf_counter() - t0
    ok = max(torsion_dev, conj_dev, pres_dev) <= 1e-10 and elapsed < 1.0
    _report(
        2,
        ok,
        f"torsion_dev={torsion_dev:.2e}, CS_dev={conj_dev:.2e}, "
        f"presentation_dev={pres_dev:.2e}, {elapsed:.2f}s",
    )
    assert torsion_dev <= 1e-10
    assert pres_dev <= 1e-10
    assert elapsed < 1.0
    assert conj_dev <= 1e-10  # unreachable: determinant obstruction


SPHERE_RELATORS = (
    MCGWord(((1, 1), (3, 1), (1, -1), (3, -1))),
    MCGWord(((1, 1), (2, 1), (1, 1), (2, -1), (1, -1), (2, -1))),
    MCGWord(((2, 1), (3, 1), (2, 1), (3, -1), (2, -1), (3, -1))),
    MCGWord(((1, 1), (2, 1), (3, 1)) * 4),
    MCGWord(((1, 1), (2, 1), (3, 1), (3, 1), (2, 1), (1, 1))),
)


def test_criterion_3_sphere_relations():
    """All five defining relations hold projectively at r = 2, 3, 4."""
    t0 = time.perf_counter()
    results = {}
    for r, samples, tol in ((2, 50, 1e-8), (3, 10, 1e-7), (4, 5, 1e-7)):
        p = QParams(r)
        rng = random.Random(SEED + 2)
        worst = 0.0
        for _ in range(samples):
            space = rep_space(p, _generic_colors(rng, r))
            cache: dict = {}
            for word in SPHERE_RELATORS:
                block = evaluate_word(p, space, word, cache=cache)
                worst = max(worst, _block_identity_deviation(p, block))
        results[r] = (worst, tol)
    elapsed = time.perf_counter() - t0
    ok = all(dev <= tol for dev, tol in results.values()) and elapsed < 10.0
    detail = ", ".join(f"r={r} max_dev={dev:.2e}" for r, (dev, _) in results.items())
    _report(3, ok, f"five relations, {detail}, {elapsed:.2f}s")
    assert ok


def test_criterion_4_n_subgroup():
    """The Klein four-group elements square to the identity projectively but
    are themselves nontrivial (the matrices are blocks between permuted
    bases, so a nonidentity puncture permutation counts as deviation inf)."""
    t0 = time.perf_counter()
    p = QParams(2)
    rng = random.Random(SEED + 3)
    lam = lambda_of_a(2, _generic_a(rng))
    space = rep_space(p, (lam, lam, lam, -3 * lam))
    commutator = N_A_WORD * N_B_WORD * N_A_WORD.inverse() * N_B_WORD.inverse()
    trivial_dev = max(
        _block_identity_deviation(p, evaluate_word(p, space, w))
        for w in (N_A_WORD * N_A_WORD, N_B_WORD * N_B_WORD, commutator)
    )
    nontrivial_dev = min(
        _block_identity_deviation(p, evaluate_word(p, space, w))
        for w in (N_A_WORD, N_B_WORD)
    )
    elapsed = time.perf_counter() - t0
    ok = trivial_dev <= 1e-9 and nontrivial_dev > 1e-3 and elapsed < 1.0
    _report(
        4,
        ok,
        f"squares/commutator dev={trivial_dev:.2e}, generators dev={nontrivial_dev}, "
        f"{elapsed:.2f}s",
    )
    assert ok


def test_criterion_5_faithfulness_fuzz():
    """1000 random words: projective triviality agrees with the exact oracle."""
    t0 = time.perf_counter()
    p = QParams(2)
    rng = random.Random(SEED + 4)
    while True:
        lam = lambda_of_a(2, _generic_a(rng))
        if abs((2 * lam).imag) > 1e-2:
            break
    space = rep_space(p, (lam, lam, lam, -3 * lam))
    eye = np.eye(2, dtype=complex)
    cache: dict = {}
    disagreements = 0
    trivial = 0
    for _ in range(1000):
        word = random_word(rng, 12)
        block = evaluate_word(p, space, word, cache=cache)
        rep_trivial = block.dst_perm == IDENTITY_PERM and matrices_projectively_equal(
            block.matrix, eye, 1e-7
        )
        oracle = word_problem(word)
        trivial += oracle
        disagreements += rep_trivial != oracle
    elapsed = time.perf_counter() - t0
    ok = disagreements == 0 and elapsed < 10.0
    _report(
        5,
        ok,
        f"1000 words len<=12, {trivial} trivial, {disagreements} disagreements, "
        f"{elapsed:.2f}s",
    )
    assert ok


def test_criterion_6_braiding_layer():
    """Yang-Baxter, intertwiner and algebra relations at the stated tolerances."""
    t0 = time.perf_counter()
    rng = random.Random(SEED + 5)
    yb_dev = int_dev = alg_dev = 0.0
    for r in (2, 3, 4):
        p = QParams(r)
        eye = np.eye(r, dtype=complex)
        for _ in range(34):
            a, b, c = (
                complex(rng.uniform(-2, 2), rng.uniform(0.1, 2)) for _ in range(3)
            )
            cab = braiding_c(p, a, b).matrix
            cac = braiding_c(p, a, c).matrix
            cbc = braiding_c(p, b, c).matrix
            lhs = np.kron(cbc, eye) @ np.kron(eye, cac) @ np.kron(cab, eye)
            rhs = np.kron(eye, cab) @ np.kron(cac, eye) @ np.kron(eye, cbc)
            yb_dev = max(yb_dev, _rel_dev(lhs, rhs))
            v, w = typical_module(p, a), typical_module(p, b)
            for gen in "EFKH":
                int_dev = max(
                    int_dev,
                    _rel_dev(
                        cab @ tensor_action(p, gen, [v, w]).matrix,
                        tensor_action(p, gen, [w, v]).matrix @ cab,
                    ),
                )
    for _ in range(100):
        r = rng.choice((2, 3, 4))
        p = QParams(r)
        v = typical_module(p, complex(rng.uniform(-2, 2), rng.uniform(0.1, 2)))
        e, f, k = v.e_mat, v.f_mat, v.k_mat
        alg_dev = max(
            alg_dev,
            _rel_dev(e @ f - f @ e, (k - np.linalg.inv(k)) / qnum(p, 1)),
            _rel_dev(k @ e @ np.linalg.inv(k), p.q**2 * e),
            float(np.max(np.abs(np.linalg.matrix_power(e, r)))),
            float(np.max(np.abs(np.linalg.matrix_power(f, r)))),
        )
    elapsed = time.perf_counter() - t0
    ok = yb_dev <= 1e-9 and int_dev <= 1e-9 and alg_dev <= 1e-10 and elapsed < 5.0
    _report(
        6,
        ok,
        f"yang_baxter={yb_dev:.2e}, intertwiner={int_dev:.2e}, algebra={alg_dev:.2e}, "
        f"{elapsed:.2f}s",
    )
    assert ok


def test_criterion_7_graph_roundtrip():
    """The H -> I -> H change of basis composes to the identity at r = 2."""
    t0 = time.perf_counter()
    p = QParams(2)
    rng = random.Random(SEED + 6)
    worst = 0.0
    for _ in range(100):
        colors = _generic_colors(rng, 2)
        prod = i_to_h_matrix(p, colors).matrix @ h_to_i_matrix(p, colors).matrix
        worst = max(worst, _rel_dev(prod, np.eye(2, dtype=complex)))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-8 and elapsed < 1.0
    _report(7, ok, f"roundtrip, 100 color sets, max_dev={worst:.2e}, {elapsed:.2f}s")
    assert ok


def test_criterion_8_exact_group_layer():
    """Exact presentation checks plus exhaustive oracle consistency."""
    t0 = time.perf_counter()
    pres = presentation_check()
    pres_ok = all(pres.values())

    gens = [(i, e) for i in (1, 2, 3) for e in (1, -1)]
    consistent = True
    for length in range(7):
        for combo in itertools.product(gens, repeat=length):
            w = MCGWord(combo)
            if word_problem(w) and not perm_of_word(w).is_identity:
                consistent = False
                break
        if not consistent:
            break

    rng = random.Random(SEED + 7)
    respects = True
    for rel in SPHERE_RELATORS:
        for _ in range(100):
            u = random_word(rng, 6)
            v = random_word(rng, 6)
            if word_problem(u * rel * v) != word_problem(u * v):
                respects = False
    elapsed = time.perf_counter() - t0
    ok = pres_ok and consistent and respects and elapsed < 30.0
    _report(
        8,
        ok,
        f"presentation exact={pres_ok}, exhaustive len<=6 consistent={consistent}, "
        f"relators respected={respects}, {elapsed:.2f}s",
    )
    assert ok
