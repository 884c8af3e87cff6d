"""The projective representation of the mapping class group of the
4-punctured sphere on the H-graph basis.

Generators sigma_1, sigma_3 act by diagonal half-twist phases and swap the
colors of punctures (1,2) resp. (3,4); sigma_2 mixes the basis through a
double 6j-symbol sum and swaps punctures (2,3). Since the generators
permute punctures, a word's image is a block between the H-basis at the
source color tuple and the one at the permuted tuple; equality of images
is only ever tested up to a global nonzero scalar.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AtypicalColor, ColorSumNonzero, DegenerateParameter
from .graph_basis import admissible_betas, fusion_window, sixj
from .qscalar import QParams, modified_dim, q_pow, qnum
from .weight_modules import is_typical

Colors4 = tuple[complex, complex, complex, complex]
Perm4 = tuple[int, int, int, int]

IDENTITY_PERM: Perm4 = (1, 2, 3, 4)


@dataclass(frozen=True)
class MCGWord:
    """A word in sigma_1, sigma_2, sigma_3 with exponents +-1."""

    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, exp in self.letters:
            if i not in (1, 2, 3):
                raise IndexError(f"generator index {i} not in 1..3")
            if exp not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {exp}")

    def __mul__(self, other: "MCGWord") -> "MCGWord":
        return MCGWord(self.letters + other.letters)

    def inverse(self) -> "MCGWord":
        return MCGWord(tuple((i, -e) for i, e in reversed(self.letters)))


@dataclass(frozen=True)
class RepSpace:
    """The H-graph basis attached to four colors summing to zero."""

    params: QParams
    colors: Colors4
    basis: tuple[complex, ...]


@dataclass(frozen=True)
class ProjectiveBlockMap:
    """A matrix block between H-bases at permuted color tuples."""

    matrix: np.ndarray
    src_perm: Perm4
    dst_perm: Perm4


def rep_space(p: QParams, colors: Colors4) -> RepSpace:
    colors = tuple(complex(c) for c in colors)
    if abs(sum(colors)) > 1e-9:
        raise ColorSumNonzero(f"colors sum to {sum(colors)}, expected 0")
    for c in colors:
        if not is_typical(p, c):
            raise AtypicalColor(f"color {c} lies in Z \\ {p.r}Z")
    basis = tuple(admissible_betas(p, colors))
    assert len(basis) == p.r
    return RepSpace(params=p, colors=colors, basis=basis)


def _swap(colors: Colors4, i: int) -> Colors4:
    out = list(colors)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def _compose_transposition(perm: Perm4, i: int) -> Perm4:
    out = list(perm)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def _basis_gauge(p: QParams, colors: Colors4, beta: complex) -> complex:
    """Normalization scalar attached to the basis graph with internal color beta.

    Each trivalent vertex joining colors (a, b) to the internal edge carries
    a factor (d(a) d(b))^(-B) with B = (a + b - edge + r - 1)/2, an integer
    in 0..r-1 by admissibility. Symmetric in (l1, l2) and in (l3, l4), so
    the diagonal sigma_1, sigma_3 blocks are unaffected.
    """
    l1, l2, l3, l4 = colors
    b12 = round(((l1 + l2 - beta + p.r - 1) / 2).real)
    b34 = round(((l3 + l4 + beta + p.r - 1) / 2).real)
    left = (modified_dim(p, l1) * modified_dim(p, l2)) ** (-b12)
    right = (modified_dim(p, l3) * modified_dim(p, l4)) ** (-b34)
    return left * right


def _sigma_block(p: QParams, colors: Colors4, i: int) -> np.ndarray:
    """Unnormalized matrix of sigma_i from the H-basis at `colors` to the
    H-basis at the (i, i+1)-swapped colors."""
    l1, l2, l3, l4 = colors
    betas = admissible_betas(p, colors)
    r = p.r
    if i == 1:
        phases = [q_pow(p, (-(l1**2) - l2**2 + b**2 + (r - 1)) / 4) for b in betas]
        return np.diag(np.array(phases, dtype=complex))
    if i == 3:
        phases = [q_pow(p, (-(l3**2) - l4**2 + b**2 + (r - 1)) / 4) for b in betas]
        return np.diag(np.array(phases, dtype=complex))

    # sigma_2: dense, through the I-basis
    window = fusion_window(p).values
    gammas = [l1 + l4 + e for e in window]
    target_bs = [l1 + l3 + e for e in window]  # H-basis at (l1, l3, l2, l4)
    swapped = _swap(colors, 2)
    mat = np.zeros((r, r), dtype=complex)
    for col, beta in enumerate(betas):
        src_gauge = _basis_gauge(p, colors, beta)
        for row, b in enumerate(target_bs):
            acc = 0.0 + 0j
            for gamma in gammas:
                acc += (
                    modified_dim(p, b)
                    * modified_dim(p, gamma)
                    * q_pow(p, (-(l2**2) - l3**2 + gamma**2 + (r - 1)) / 4)
                    * sixj(p, l1, l4, gamma, l2, -l3, -b)
                    * sixj(p, l1, l2, beta, l3, -l4, -gamma)
                )
            mat[row, col] = acc * src_gauge / _basis_gauge(p, swapped, b)
    return mat


def _normalization_factor(p: QParams, colors: Colors4, i: int) -> complex:
    """Color-quadratic global phase divided out of the normalized matrices.

    Chosen so that at r = 2 the normalized sigma_1 and sigma_2 agree
    entrywise with the closed forms in the variables A_k = q^(l_k).
    """
    l1, l2, l3, l4 = colors
    r = p.r
    if i == 1:
        return q_pow(p, (2 * l1 * l2 + r) / 4)
    if i == 3:
        return q_pow(p, (2 * l3 * l4 + r) / 4)
    return q_pow(p, (l2 * l3 - l2 - l3 + 1) / 2) / (
        4 * qnum(p, l1 + l3) * qnum(p, l2 + l3)
    )


def sigma_matrix(p: QParams, space: RepSpace, i: int, normalized: bool = False) -> ProjectiveBlockMap:
    """Block of sigma_i on the H-basis at the space's colors."""
    if i not in (1, 2, 3):
        raise IndexError(f"generator index {i} not in 1..3")
    mat = _sigma_block(p, space.colors, i)
    if normalized:
        mat = mat / _normalization_factor(p, space.colors, i)
    return ProjectiveBlockMap(
        matrix=mat,
        src_perm=IDENTITY_PERM,
        dst_perm=_compose_transposition(IDENTITY_PERM, i),
    )


def evaluate_word(
    p: QParams,
    space: RepSpace,
    word: MCGWord,
    normalized: bool = False,
    cache: dict | None = None,
) -> ProjectiveBlockMap:
    """Matrix of the word as the product of generator blocks in word order.

    The image of a word is the matrix product of the letter images read left
    to right, so the rightmost letter is the first map applied to the source
    basis (the usual convention for words mapped to matrix products).

    A dict passed as `cache` memoizes generator blocks keyed by the color
    permutation; reuse it across words on the same space to avoid recomputing
    the 6j sums (useful when fuzzing many words).
    """
    cur_colors = space.colors
    perm = IDENTITY_PERM
    total = np.eye(p.r, dtype=complex)
    if cache is None:
        cache = {}
    for i, exp in reversed(word.letters):
        if exp == 1:
            key = (perm, i, 1)
            if key not in cache:
                block = _sigma_block(p, cur_colors, i)
                if normalized:
                    block = block / _normalization_factor(p, cur_colors, i)
                cache[key] = block
            block = cache[key]
        else:
            key = (perm, i, -1)
            if key not in cache:
                pre = _swap(cur_colors, i)
                fwd = _sigma_block(p, pre, i)
                if normalized:
                    fwd = fwd / _normalization_factor(p, pre, i)
                cache[key] = np.linalg.inv(fwd)
            block = cache[key]
        total = block @ total
        cur_colors = _swap(cur_colors, i)
        perm = _compose_transposition(perm, i)
    return ProjectiveBlockMap(matrix=total, src_perm=IDENTITY_PERM, dst_perm=perm)


def projectively_equal(m: ProjectiveBlockMap, n: ProjectiveBlockMap, tol: float = 1e-9) -> bool:
    """True iff m = c * n entrywise for some nonzero scalar c."""
    if m.src_perm != n.src_perm or m.dst_perm != n.dst_perm:
        return False
    return matrices_projectively_equal(m.matrix, n.matrix, tol)


def matrices_projectively_equal(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    if a.shape != b.shape:
        return False
    flat_b = b.ravel()
    k = int(np.argmax(np.abs(flat_b)))
    if abs(flat_b[k]) == 0.0:
        return bool(np.max(np.abs(a)) <= tol)
    c = a.ravel()[k] / flat_b[k]
    if abs(c) == 0.0:
        return False
    scale = max(1.0, float(np.max(np.abs(a))))
    return bool(np.max(np.abs(a - c * b)) <= tol * scale)


def projective_deviation(a: np.ndarray, b: np.ndarray) -> float:
    """Max entrywise deviation between a and the best scalar multiple of b."""
    flat_b = b.ravel()
    k = int(np.argmax(np.abs(flat_b)))
    if abs(flat_b[k]) == 0.0:
        return float(np.max(np.abs(a)))
    c = a.ravel()[k] / flat_b[k]
    scale = max(1.0, float(np.max(np.abs(a))))
    return float(np.max(np.abs(a - c * b))) / scale


# --- closed forms at r = 2, in the variables A_k = q^(l_k) ---------------


def closed_form_m1(a1: complex, a2: complex, a3: complex) -> np.ndarray:
    """Normalized sigma_1 block at r = 2: diag(sqrt(A1 A2), 1/sqrt(A1 A2))."""
    root = np.sqrt(complex(a1 * a2))
    return np.diag([root, 1 / root]).astype(complex)


def closed_form_m2(a1: complex, a2: complex, a3: complex) -> np.ndarray:
    """Normalized sigma_2 block at r = 2 (prefactor A2^2 A3^2 - 1 included)."""
    a1, a2, a3 = complex(a1), complex(a2), complex(a3)
    pref = a2**2 * a3**2 - 1
    return pref * np.array(
        [
            [-(1 + a3**2) / (a1 * a2 * a3**2), -(1 + a1**2) / (a1 * a3)],
            [(a1**2 * a2**2 * a3**2 + 1) / (a1 * a2**2 * a3), (a2**2 + 1) * a1 / a2],
        ],
        dtype=complex,
    )


def _check_generic(a: complex):
    a = complex(a)
    if abs(a) < 1e-8 or abs(a**2 - 1) < 1e-8:
        raise DegenerateParameter(f"A = {a} is degenerate (A = 0 or A^2 = 1)")


def qs_matrix(a: complex) -> np.ndarray:
    """Determinant-one image of sigma_1 sigma_2 in the unicolored case."""
    _check_generic(a)
    a = complex(a)
    return (
        1
        / (a**2 - 1)
        * np.array([[-1, -(a**2)], [(a**2 - 1) ** 2 / a**2 + 1, a**2]], dtype=complex)
    )


def qt_matrix(a: complex) -> np.ndarray:
    """Determinant-one image of sigma_1 sigma_2 sigma_1 in the unicolored case."""
    _check_generic(a)
    a = complex(a)
    return (
        1
        / (a**2 - 1)
        * np.array([[-a, -a], [(a**2 - 1) ** 2 / a + a, a]], dtype=complex)
    )


def ct_matrix(a: complex) -> np.ndarray:
    """The closed form [[0, 1/A], [-A, 1]].

    Numerically this is conjugate_by_P(A, QS(A)): trace 1 and determinant 1,
    so its cube is -Id and it is the order-3 torsion element of the
    conjugated pair. At A = 1 it degenerates to [[0,1],[-1,1]] = AB.
    """
    a = complex(a)
    if abs(a) < 1e-12:
        raise DegenerateParameter("A = 0")
    return np.array([[0, 1 / a], [-a, 1]], dtype=complex)


CS_MATRIX = np.array([[0, -1], [-1, 0]], dtype=complex)


def conjugate_by_P(a: complex, m: np.ndarray) -> np.ndarray:
    """P^{-1} M P for P = [[0, 1], [(A^2-1)/A, -1]]."""
    _check_generic(a)
    a = complex(a)
    pmat = np.array([[0, 1], [(a**2 - 1) / a, -1]], dtype=complex)
    return np.linalg.inv(pmat) @ np.asarray(m, dtype=complex) @ pmat


N_A_WORD = MCGWord(((1, 1), (3, -1)))
N_B_WORD = MCGWord(((2, 1), (1, 1), (3, -1), (2, -1)))
