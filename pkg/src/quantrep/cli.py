"""Command-line front end: evaluate representations, verify identities, fuzz.

Subcommands:

    rep     evaluate a mapping-class-group word on the 4-punctured sphere
    braid   evaluate a braid word on a tensor product of typical modules
    verify  run one of the named verification suites
    fuzz    compare projective triviality of random words against the oracle

Words are whitespace-separated tokens `s1 s2 s3` (rep, fuzz) or `b1 .. b<n-1>`
(braid), each optionally suffixed `^-1`. Colors come from `--lambda c1,c2,c3`
(the fourth color is derived so the sum vanishes), from the unicolored
shortcut `--A`, or are sampled from the seed. Reports are deterministic given
the configuration; `--json` switches to a structured schema.
"""

from __future__ import annotations

import argparse
import cmath
import json
import os
import random
import sys
from dataclasses import dataclass

import numpy as np

from .braiding import BraidWord, ado_rep, braiding_c
from .errors import ParseError, QuantrepError
from .groups import (
    perm_of_word,
    presentation_check,
    psl2z_image,
    word_problem,
)
from .m04 import (
    IDENTITY_PERM,
    MCGWord,
    evaluate_word,
    matrices_projectively_equal,
    projective_deviation,
    rep_space,
)
from .qscalar import DEFAULT_TOL, QParams, qnum
from .weight_modules import is_typical, typical_module


@dataclass(frozen=True)
class RunConfig:
    """Common knobs shared by every subcommand."""

    r: int = 2
    colors: tuple[complex, ...] | None = None
    tolerance: float = DEFAULT_TOL
    seed: int = 0
    samples: int = 100
    json_output: bool = False

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"order parameter must be >= 2, got {self.r}")
        if self.tolerance <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")


def lambda_of_a(r: int, a: complex) -> complex:
    """The color with q^lambda = A: lambda = r Log(A) / (i pi)."""
    return r * cmath.log(a) / (1j * cmath.pi)


def _sample_color(r: int, rng: random.Random) -> complex:
    while True:
        c = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if is_typical(QParams(r), c, tol=1e-3):
            return c


def _sample_sphere_colors(r: int, rng: random.Random) -> tuple[complex, ...]:
    """Four colors summing to zero, all typical, all pair sums generic."""
    p = QParams(r)
    while True:
        c123 = [_sample_color(r, rng) for _ in range(3)]
        colors = (*c123, -sum(c123))
        if not all(is_typical(p, c, tol=1e-3) for c in colors):
            continue
        # internal edge colors are pair sums shifted by integers
        pairs = [colors[0] + colors[1], colors[0] + colors[2], colors[0] + colors[3]]
        if all(abs(s.imag) > 1e-3 or abs(s.real - round(s.real)) > 1e-3 for s in pairs):
            return colors


def sphere_colors(config: RunConfig, rng: random.Random) -> tuple[complex, ...]:
    """Resolve the four puncture colors from the config or the seed."""
    if config.colors is not None:
        if len(config.colors) == 1:
            lam = lambda_of_a(config.r, config.colors[0])
            return (lam, lam, lam, -3 * lam)
        if len(config.colors) == 3:
            return (*config.colors, -sum(config.colors))
        raise ValueError("expected one unicolored A or three lambda values")
    return _sample_sphere_colors(config.r, rng)


# --- word parsing ---------------------------------------------------------


def parse_word_tokens(tokens: list[str], prefix: str, max_index: int) -> tuple[tuple[int, int], ...]:
    """Parse tokens like `s2` or `b1^-1` into (index, exponent) letters."""
    letters = []
    for pos, tok in enumerate(tokens, start=1):
        base, caret, tail = tok.partition("^")
        if caret and tail != "-1":
            raise ParseError(f"exponent must be ^-1, got {tok!r}", pos)
        if not (base.startswith(prefix) and base[len(prefix):].isdigit()):
            raise ParseError(f"expected {prefix}<k>, got {tok!r}", pos)
        idx = int(base[len(prefix):])
        if not 1 <= idx <= max_index:
            raise ParseError(f"generator index {idx} not in 1..{max_index}", pos)
        letters.append((idx, -1 if caret else 1))
    return tuple(letters)


# --- report plumbing ------------------------------------------------------


def _fmt_complex(z: complex) -> str:
    return f"{z.real:+.6g}{z.imag:+.6g}j"


def _matrix_json(mat: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in mat]


def _print_matrix(mat: np.ndarray, out):
    for row in mat:
        print("  [" + ", ".join(_fmt_complex(z) for z in row) + "]", file=out)


def _emit(config: RunConfig, report: dict, out):
    if config.json_output:
        print(json.dumps(report, indent=2, sort_keys=True), file=out)
        return
    if report.get("colors"):
        print("colors: " + ", ".join(report["colors"]), file=out)
    if report.get("matrix"):
        print("matrix:", file=out)
        for row in report["matrix"]:
            print("  [" + ", ".join(f"{re:+.6g}{im:+.6g}j" for re, im in row) + "]", file=out)
    if report.get("src_perm"):
        print(f"src_perm: {report['src_perm']}  dst_perm: {report['dst_perm']}", file=out)
    if report.get("eigenvalues"):
        eigs = ", ".join(f"{re:+.6g}{im:+.6g}j" for re, im in report["eigenvalues"])
        print(f"eigenvalues: {eigs}", file=out)
    for check in report.get("checks", []):
        status = "pass" if check["pass"] else "FAIL"
        print(f"{status}  {check['name']}  max_dev={check['max_dev']:.3e}", file=out)


def _image_array(slot_perm: tuple[int, ...]) -> list[int]:
    # slot_perm[k] = source index at slot k; invert into destination images
    return [slot_perm.index(j) + 1 for j in sorted(slot_perm)]


# --- subcommands ----------------------------------------------------------


def cmd_rep(config: RunConfig, tokens: list[str], out=None) -> int:
    out = out or sys.stdout
    p = QParams(config.r)
    word = MCGWord(parse_word_tokens(tokens, "s", 3))
    rng = random.Random(config.seed)
    colors = sphere_colors(config, rng)
    space = rep_space(p, colors)
    block = evaluate_word(p, space, word)
    g = psl2z_image(word)
    eigs = np.linalg.eigvals(np.array(g.matrix, dtype=float))
    report = {
        "colors": [_fmt_complex(c) for c in colors],
        "matrix": _matrix_json(block.matrix),
        "src_perm": _image_array(block.src_perm),
        "dst_perm": _image_array(block.dst_perm),
        "eigenvalues": [[float(e.real), float(e.imag)] for e in eigs],
        "checks": [],
    }
    _emit(config, report, out)
    return 0


def cmd_braid(config: RunConfig, strands: int, tokens: list[str], out=None) -> int:
    out = out or sys.stdout
    p = QParams(config.r)
    word = BraidWord(strands=strands, letters=parse_word_tokens(tokens, "b", strands - 1))
    rng = random.Random(config.seed)
    if config.colors is None:
        colors = [_sample_color(config.r, rng) for _ in range(strands)]
    elif len(config.colors) == 1:
        colors = [lambda_of_a(config.r, config.colors[0])] * strands
    elif len(config.colors) == strands:
        colors = list(config.colors)
    else:
        raise ValueError(f"expected {strands} colors or one unicolored A")
    rep = ado_rep(p, colors, word)
    slot = tuple(k + 1 for k in rep.permutation)
    report = {
        "colors": [_fmt_complex(c) for c in colors],
        "matrix": _matrix_json(rep.matrix.matrix),
        "src_perm": list(range(1, strands + 1)),
        "dst_perm": _image_array(slot),
        "eigenvalues": [],
        "checks": [],
    }
    _emit(config, report, out)
    return 0


# the five defining relations of the 4-punctured-sphere mapping class group
SPHERE_RELATORS = {
    "far_commutation_s1s3": MCGWord(((1, 1), (3, 1), (1, -1), (3, -1))),
    "braid_relation_s1s2": MCGWord(((1, 1), (2, 1), (1, 1), (2, -1), (1, -1), (2, -1))),
    "braid_relation_s2s3": MCGWord(((2, 1), (3, 1), (2, 1), (3, -1), (2, -1), (3, -1))),
    "power_(s1s2s3)^4": MCGWord(((1, 1), (2, 1), (3, 1)) * 4),
    "boundary_s1s2s3^2s2s1": MCGWord(((1, 1), (2, 1), (3, 1), (3, 1), (2, 1), (1, 1))),
}


def _relation_deviation(p: QParams, colors, word: MCGWord, cache=None) -> float:
    space = rep_space(p, colors)
    block = evaluate_word(p, space, word, cache=cache)
    if block.dst_perm != IDENTITY_PERM:
        return float("inf")
    return projective_deviation(block.matrix, np.eye(p.r, dtype=complex))


def _rel_dev(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    return float(np.max(np.abs(a - b))) / scale


def _suite_relations(config: RunConfig) -> list[dict]:
    p = QParams(config.r)
    rng = random.Random(config.seed)
    worst = {name: 0.0 for name in SPHERE_RELATORS}
    for _ in range(config.samples):
        colors = _sample_sphere_colors(config.r, rng)
        cache: dict = {}
        for name, word in SPHERE_RELATORS.items():
            worst[name] = max(worst[name], _relation_deviation(p, colors, word, cache))
    return [
        {"name": name, "pass": dev <= config.tolerance, "max_dev": dev}
        for name, dev in worst.items()
    ]


def _suite_psl2z(config: RunConfig) -> list[dict]:
    checks = [
        {"name": name, "pass": ok, "max_dev": 0.0}
        for name, ok in presentation_check().items()
    ]
    s_word = MCGWord(((1, 1), (2, 1)))
    t_word = MCGWord(((1, 1), (2, 1), (1, 1)))
    checks.append(
        {
            "name": "image_s1s2_is_S",
            "pass": psl2z_image(s_word).matrix == ((0, 1), (-1, 1)),
            "max_dev": 0.0,
        }
    )
    checks.append(
        {
            "name": "image_s1s2s1_is_T",
            "pass": psl2z_image(t_word).matrix == ((0, 1), (-1, 0)),
            "max_dev": 0.0,
        }
    )
    checks.append(
        {
            "name": "kernel_s1s3inv",
            "pass": psl2z_image(MCGWord(((1, 1), (3, -1)))).is_identity,
            "max_dev": 0.0,
        }
    )
    return checks


def _suite_yangbaxter(config: RunConfig) -> list[dict]:
    p = QParams(config.r)
    rng = random.Random(config.seed)
    r = p.r
    eye = np.eye(r, dtype=complex)
    worst = {"yang_baxter": 0.0, "braid_relation": 0.0, "inverse_identity": 0.0}
    for _ in range(config.samples):
        a, b, c = (_sample_color(config.r, rng) for _ in range(3))
        cab = braiding_c(p, a, b).matrix
        cac = braiding_c(p, a, c).matrix
        cbc = braiding_c(p, b, c).matrix
        lhs = np.kron(cbc, eye) @ np.kron(eye, cac) @ np.kron(cab, eye)
        rhs = np.kron(eye, cab) @ np.kron(cac, eye) @ np.kron(eye, cbc)
        worst["yang_baxter"] = max(worst["yang_baxter"], _rel_dev(lhs, rhs))
        w1 = ado_rep(p, [a, b, c], BraidWord(3, ((1, 1), (2, 1), (1, 1))))
        w2 = ado_rep(p, [a, b, c], BraidWord(3, ((2, 1), (1, 1), (2, 1))))
        worst["braid_relation"] = max(
            worst["braid_relation"], _rel_dev(w1.matrix.matrix, w2.matrix.matrix)
        )
        w3 = ado_rep(p, [a, b, c], BraidWord(3, ((1, 1), (1, -1))))
        worst["inverse_identity"] = max(
            worst["inverse_identity"],
            _rel_dev(w3.matrix.matrix, np.eye(r**3, dtype=complex)),
        )
    return [
        {"name": name, "pass": dev <= config.tolerance, "max_dev": dev}
        for name, dev in worst.items()
    ]


def _suite_algebra(config: RunConfig) -> list[dict]:
    p = QParams(config.r)
    rng = random.Random(config.seed)
    worst = {"commutator_EF": 0.0, "conjugation_KEK": 0.0, "nilpotency": 0.0}
    for _ in range(config.samples):
        v = typical_module(p, _sample_color(config.r, rng))
        e, f, k = v.e_mat, v.f_mat, v.k_mat
        comm = e @ f - f @ e
        worst["commutator_EF"] = max(
            worst["commutator_EF"], _rel_dev(comm, (k - np.linalg.inv(k)) / qnum(p, 1))
        )
        worst["conjugation_KEK"] = max(
            worst["conjugation_KEK"], _rel_dev(k @ e @ np.linalg.inv(k), p.q**2 * e)
        )
        nil = max(
            float(np.max(np.abs(np.linalg.matrix_power(e, p.r)))),
            float(np.max(np.abs(np.linalg.matrix_power(f, p.r)))),
        )
        worst["nilpotency"] = max(worst["nilpotency"], nil)
    return [
        {"name": name, "pass": dev <= config.tolerance, "max_dev": dev}
        for name, dev in worst.items()
    ]


VERIFY_SUITES = {
    "relations": _suite_relations,
    "psl2z": _suite_psl2z,
    "yangbaxter": _suite_yangbaxter,
    "algebra": _suite_algebra,
}


def cmd_verify(config: RunConfig, suite: str, out=None) -> int:
    out = out or sys.stdout
    checks = VERIFY_SUITES[suite](config)
    report = {
        "colors": [],
        "matrix": [],
        "src_perm": [],
        "dst_perm": [],
        "eigenvalues": [],
        "checks": checks,
    }
    _emit(config, report, out)
    return 0 if all(c["pass"] for c in checks) else 1


def random_word(rng: random.Random, max_len: int) -> MCGWord:
    length = rng.randint(0, max_len)
    return MCGWord(
        tuple((rng.randint(1, 3), rng.choice((1, -1))) for _ in range(length))
    )


def format_word(word: MCGWord) -> str:
    if not word.letters:
        return "(empty)"
    return " ".join(f"s{i}" + ("^-1" if e < 0 else "") for i, e in word.letters)


def cmd_fuzz(config: RunConfig, max_len: int, out=None) -> int:
    out = out or sys.stdout
    if max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    p = QParams(config.r)
    rng = random.Random(config.seed)
    colors = sphere_colors(config, rng)
    space = rep_space(p, colors)
    eye = np.eye(p.r, dtype=complex)
    cache: dict = {}
    mismatches = []
    for _ in range(config.samples):
        word = random_word(rng, max_len)
        block = evaluate_word(p, space, word, cache=cache)
        rep_trivial = block.dst_perm == IDENTITY_PERM and matrices_projectively_equal(
            block.matrix, eye, config.tolerance
        )
        oracle_trivial = word_problem(word)
        if rep_trivial != oracle_trivial:
            dev = projective_deviation(block.matrix, eye)
            mismatches.append((word, rep_trivial, oracle_trivial, dev))
    checks = [
        {
            "name": f"fuzz_{config.samples}_words_len{max_len}",
            "pass": not mismatches,
            "max_dev": 0.0,
        }
    ]
    report = {
        "colors": [_fmt_complex(c) for c in colors],
        "matrix": [],
        "src_perm": [],
        "dst_perm": [],
        "eigenvalues": [],
        "checks": checks,
    }
    _emit(config, report, out)
    for word, rep_v, oracle_v, dev in mismatches:
        print(
            f"mismatch: word={format_word(word)} rep_trivial={rep_v} "
            f"oracle_trivial={oracle_v} deviation={dev:.3e}",
            file=out,
        )
    return 0 if not mismatches else 1


# --- argument parsing -----------------------------------------------------


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex literal {text!r}") from exc


def _parse_complex_list(text: str) -> tuple[complex, ...]:
    return tuple(_parse_complex(part) for part in text.split(","))


def _add_common(sub: argparse.ArgumentParser):
    sub.add_argument("--r", type=int, default=2, help="order parameter r >= 2")
    sub.add_argument(
        "--lambda",
        dest="lambdas",
        type=_parse_complex_list,
        default=None,
        metavar="c1,c2,c3",
        help="puncture colors; the last color is derived so the sum vanishes",
    )
    sub.add_argument(
        "--A",
        type=_parse_complex,
        default=None,
        help="unicolored shortcut: every color is lambda with q^lambda = A",
    )
    sub.add_argument("--tol", type=float, default=None, help="comparison tolerance")
    sub.add_argument("--seed", type=int, default=0, help="random seed")
    sub.add_argument("--samples", type=int, default=100, help="number of random samples")
    sub.add_argument("--json", action="store_true", help="structured JSON output")


def _config_from(args) -> RunConfig:
    tol = args.tol
    if tol is None:
        tol = float(os.environ.get("QUANTREP_TOL", DEFAULT_TOL))
    colors = None
    if args.A is not None:
        colors = (args.A,)
    elif args.lambdas is not None:
        colors = args.lambdas
    return RunConfig(
        r=args.r,
        colors=colors,
        tolerance=tol,
        seed=args.seed,
        samples=args.samples,
        json_output=args.json,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantrep",
        description="Quantum representations of the 4-punctured-sphere mapping class group",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    rep = subs.add_parser("rep", help="evaluate a mapping-class-group word")
    _add_common(rep)
    rep.add_argument("word", nargs="*", help="tokens s1 s2 s3, optionally ^-1")

    braid = subs.add_parser("braid", help="evaluate a braid word")
    _add_common(braid)
    braid.add_argument("--n", type=int, default=2, help="number of strands")
    braid.add_argument("word", nargs="*", help="tokens b1..b<n-1>, optionally ^-1")

    verify = subs.add_parser("verify", help="run a verification suite")
    _add_common(verify)
    verify.add_argument("suite", choices=sorted(VERIFY_SUITES))

    fuzz = subs.add_parser("fuzz", help="fuzz projective triviality against the oracle")
    _add_common(fuzz)
    fuzz.add_argument("--max-len", type=int, default=12, help="maximum word length")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config_from(args)
        if args.command == "rep":
            return cmd_rep(config, args.word)
        if args.command == "braid":
            return cmd_braid(config, args.n, args.word)
        if args.command == "verify":
            return cmd_verify(config, args.suite)
        return cmd_fuzz(config, args.max_len)
    except (QuantrepError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
