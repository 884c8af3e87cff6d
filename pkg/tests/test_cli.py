"""Unit tests for the command-line front end."""

import io
import json

import numpy as np
import pytest

from quantrep.cli import (
    RunConfig,
    cmd_braid,
    cmd_fuzz,
    cmd_rep,
    cmd_verify,
    lambda_of_a,
    main,
    parse_word_tokens,
    sphere_colors,
)
from quantrep.errors import ParseError
from quantrep.qscalar import QParams, q_pow


def _run(argv):
    out = io.StringIO()
    import contextlib

    with contextlib.redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue()


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(r=1)
    with pytest.raises(ValueError):
        RunConfig(tolerance=0)
    with pytest.raises(ValueError):
        RunConfig(samples=0)


def test_lambda_of_a_roundtrip():
    for r in (2, 3, 5):
        p = QParams(r)
        for a in (1.3 + 0.4j, -0.7 + 0.9j, 0.5 - 1.2j):
            lam = lambda_of_a(r, a)
            assert abs(q_pow(p, lam) - a) < 1e-12


def test_parse_word_tokens():
    assert parse_word_tokens(["s1", "s2^-1", "s3"], "s", 3) == ((1, 1), (2, -1), (3, 1))
    assert parse_word_tokens([], "s", 3) == ()
    with pytest.raises(ParseError) as exc:
        parse_word_tokens(["s1", "s4"], "s", 3)
    assert exc.value.position == 2
    with pytest.raises(ParseError):
        parse_word_tokens(["b1^2"], "b", 3)
    with pytest.raises(ParseError):
        parse_word_tokens(["x1"], "b", 3)


def test_sphere_colors_modes():
    import random

    cfg = RunConfig(r=2, colors=(0.3 + 0.4j, -0.8 + 0.2j, 1.1 + 0.6j))
    colors = sphere_colors(cfg, random.Random(0))
    assert abs(sum(colors)) < 1e-12
    uni = sphere_colors(RunConfig(r=2, colors=(1.3 + 0.4j,)), random.Random(0))
    assert uni[0] == uni[1] == uni[2]
    sampled = sphere_colors(RunConfig(r=2), random.Random(0))
    assert abs(sum(sampled)) < 1e-12


def test_rep_json_schema():
    code, text = _run(["rep", "--A", "1.3+0.4j", "--json", "s1", "s2"])
    assert code == 0
    report = json.loads(text)
    assert set(report) == {"matrix", "src_perm", "dst_perm", "eigenvalues", "checks", "colors"}
    mat = np.array([[complex(re, im) for re, im in row] for row in report["matrix"]])
    assert mat.shape == (2, 2)
    assert report["src_perm"] == [1, 2, 3, 4]
    assert report["dst_perm"] == [2, 3, 1, 4]
    # eigenvalues of the integer image of s1 s2 (order-6 lift): primitive roots
    eigs = [complex(re, im) for re, im in report["eigenvalues"]]
    assert all(abs(abs(e) - 1) < 1e-9 for e in eigs)


def test_rep_empty_word_is_identity():
    code, text = _run(["rep", "--A", "1.3+0.4j", "--json"])
    assert code == 0
    report = json.loads(text)
    mat = np.array([[complex(re, im) for re, im in row] for row in report["matrix"]])
    assert np.allclose(mat, np.eye(2))
    assert report["dst_perm"] == [1, 2, 3, 4]


def test_rep_parse_error_exit_code(capsys):
    assert main(["rep", "s4"]) == 2
    assert "token 1" in capsys.readouterr().err


def test_reports_deterministic():
    first = _run(["rep", "--seed", "5", "--json", "s2", "s1^-1"])
    second = _run(["rep", "--seed", "5", "--json", "s2", "s1^-1"])
    assert first == second


def test_braid_inverse_word():
    code, text = _run(["braid", "--n", "2", "--seed", "3", "--json", "b1", "b1^-1"])
    assert code == 0
    report = json.loads(text)
    mat = np.array([[complex(re, im) for re, im in row] for row in report["matrix"]])
    assert np.max(np.abs(mat - np.eye(4))) < 1e-9
    assert report["dst_perm"] == [1, 2]


def test_braid_relation_via_cli():
    a = _run(["braid", "--n", "3", "--seed", "9", "--json", "b1", "b2", "b1"])
    b = _run(["braid", "--n", "3", "--seed", "9", "--json", "b2", "b1", "b2"])
    ma = np.array(json.loads(a[1])["matrix"])
    mb = np.array(json.loads(b[1])["matrix"])
    assert np.max(np.abs(ma - mb)) < 1e-8 * max(1, np.max(np.abs(ma)))


def test_verify_suites_pass():
    assert main(["verify", "psl2z"]) == 0
    assert main(["verify", "algebra", "--samples", "20", "--tol", "1e-10"]) == 0
    assert main(["verify", "yangbaxter", "--samples", "10", "--tol", "1e-9"]) == 0
    assert main(["verify", "relations", "--samples", "10", "--tol", "1e-8"]) == 0


def test_verify_failure_exit_code():
    # an absurd tolerance forces every floating-point check to fail
    assert main(["verify", "relations", "--samples", "2", "--tol", "1e-300"]) == 1


def test_fuzz_small_run():
    assert main(["fuzz", "--samples", "50", "--max-len", "6", "--tol", "1e-7"]) == 0


def test_env_tolerance(monkeypatch):
    monkeypatch.setenv("QUANTREP_TOL", "1e-300")
    assert main(["verify", "relations", "--samples", "2"]) == 1
    monkeypatch.setenv("QUANTREP_TOL", "1e-6")
    assert main(["verify", "relations", "--samples", "2"]) == 0
