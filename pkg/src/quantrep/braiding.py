"""R-matrix braiding on tensor products of typical modules.

On V_lambda (x) V_mu the R operator is

    R = q^(H (x) H / 2) * sum_{n=0}^{r-1} ({1}^{2n} / {n}!) q^(n(n-1)/2) E^n (x) F^n

where q^(H (x) H / 2) acts diagonally by q^(w * w' / 2) on a pair of weight
vectors. The half in the Cartan exponent is forced by the coproduct
normalization K = q^H: it is what makes c an intertwiner and a solution of
the Yang-Baxter equation (checked to 1e-10 in the test suite).
The braiding c = tau . R flips the factors afterwards; stacking braidings
at tensor positions gives the colored braid-group representation, with the
induced permutation of strand colors tracked alongside the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AtypicalColor
from .qscalar import QParams, q_pow, qfact, qnum
from .weight_modules import ModuleMap, TypicalModule, is_typical, typical_module


@dataclass(frozen=True)
class BraidWord:
    """A word in braid generators sigma_i^{+-1}, i in 1..strands-1."""

    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("need at least one strand")
        for i, exp in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise IndexError(f"generator index {i} out of range for {self.strands} strands")
            if exp not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {exp}")


@dataclass(frozen=True)
class ColoredRep:
    """Braid image: matrix on the colored tensor product plus the color permutation."""

    matrix: ModuleMap
    permutation: tuple[int, ...]  # permutation[k] = source strand now at position k


def _require_typical(p: QParams, lam: complex):
    if not is_typical(p, lam):
        raise AtypicalColor(f"color {lam} lies in Z \\ {p.r}Z")


def r_matrix(p: QParams, lam: complex, mu: complex) -> ModuleMap:
    """The R operator on V_lam (x) V_mu as an r^2 x r^2 matrix."""
    _require_typical(p, lam)
    _require_typical(p, mu)
    v, w = typical_module(p, lam), typical_module(p, mu)
    r = p.r
    one = qnum(p, 1)

    series = np.zeros((r * r, r * r), dtype=complex)
    e_pow = np.eye(r, dtype=complex)
    f_pow = np.eye(r, dtype=complex)
    for n in range(r):
        coeff = one ** (2 * n) / qfact(p, n) * q_pow(p, n * (n - 1) / 2)
        series += coeff * np.kron(e_pow, f_pow)
        e_pow = e_pow @ v.e_mat
        f_pow = f_pow @ w.f_mat

    cartan = np.array([q_pow(p, wi * wj / 2) for wi in v.weights for wj in w.weights])
    mat = cartan[:, None] * series

    labels = tuple((a, b) for a in v.basis_labels for b in w.basis_labels)
    return ModuleMap(domain_label=labels, codomain_label=labels, matrix=mat)


def _flip_matrix(r: int) -> np.ndarray:
    """Permutation matrix of tau(v (x) w) = w (x) v on an r x r grid."""
    tau = np.zeros((r * r, r * r))
    for i in range(r):
        for j in range(r):
            tau[j * r + i, i * r + j] = 1.0
    return tau


def braiding_c(p: QParams, lam: complex, mu: complex) -> ModuleMap:
    """Braiding c = tau . R : V_lam (x) V_mu -> V_mu (x) V_lam."""
    rmat = r_matrix(p, lam, mu)
    r = p.r
    mat = _flip_matrix(r) @ rmat.matrix
    v, w = typical_module(p, lam), typical_module(p, mu)
    dom = tuple((a, b) for a in v.basis_labels for b in w.basis_labels)
    cod = tuple((b, a) for b in w.basis_labels for a in v.basis_labels)
    return ModuleMap(domain_label=dom, codomain_label=cod, matrix=mat)


def ado_rep(p: QParams, colors: list[complex], word: BraidWord) -> ColoredRep:
    """Image of a braid word on V_{c_1} (x) ... (x) V_{c_n}.

    Leftmost letter acts first; the matrix of a concatenation w1.w2 is
    matrix(w2) @ matrix(w1). Colors are permuted as the strands cross.
    """
    if len(colors) != word.strands:
        raise ValueError(f"{len(colors)} colors for {word.strands} strands")
    for c in colors:
        _require_typical(p, c)
    r = p.r
    n = word.strands
    dim = r**n

    cur = list(colors)
    perm = list(range(n))
    total = np.eye(dim, dtype=complex)
    for i, exp in word.letters:
        a, b = cur[i - 1], cur[i]
        if exp == 1:
            block = braiding_c(p, a, b).matrix
        else:
            # inverse braiding from the post-swap colors back again
            block = np.linalg.inv(braiding_c(p, b, a).matrix)
        op = np.kron(
            np.eye(r ** (i - 1), dtype=complex),
            np.kron(block, np.eye(r ** (n - i - 1), dtype=complex)),
        )
        total = op @ total
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
        perm[i - 1], perm[i] = perm[i], perm[i - 1]

    dom = _tensor_labels(p, colors)
    cod = _tensor_labels(p, cur)
    mm = ModuleMap(domain_label=dom, codomain_label=cod, matrix=total)
    return ColoredRep(matrix=mm, permutation=tuple(perm))


def _tensor_labels(p: QParams, colors: list[complex]) -> tuple:
    mods = [typical_module(p, c) for c in colors]
    labels = [()]
    for mod in mods:
        labels = [prev + (lab,) for prev in labels for lab in mod.basis_labels]
    return tuple(labels)
