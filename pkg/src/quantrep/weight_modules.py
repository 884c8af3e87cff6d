"""The r-dimensional typical weight modules and tensor-product actions.

V_lambda has basis e_0..e_{r-1} with

    H e_i = (lambda + r - 1 - 2i) e_i
    E e_i = ({i}{i - lambda} / {1}^2) e_{i-1}
    F e_i = e_{i+1}            (F e_{r-1} = 0)
    K e_i = q^(lambda + r - 1 - 2i) e_i

and tensor actions are assembled through the coproduct

    D(E) = 1 (x) E + E (x) K      D(F) = K^{-1} (x) F + F (x) 1
    D(K) = K (x) K                D(H) = H (x) 1 + 1 (x) H

Kronecker products put the leftmost tensor factor most significant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import AtypicalColor
from .qscalar import QParams, q_pow, qnum

TYPICALITY_TOL = 1e-9


@dataclass(frozen=True)
class ModuleMap:
    """A dense complex matrix with labeled domain/codomain bases."""

    domain_label: tuple
    codomain_label: tuple
    matrix: np.ndarray

    def __post_init__(self):
        rows, cols = self.matrix.shape
        assert rows == len(self.codomain_label)
        assert cols == len(self.domain_label)


def is_typical(p: QParams, lam: complex, tol: float = TYPICALITY_TOL) -> bool:
    """True iff lam is (numerically) in (C \\ Z) union rZ."""
    lam = complex(lam)
    nearest = round(lam.real)
    if abs(lam - nearest) > tol:
        return True
    return nearest % p.r == 0


@dataclass(frozen=True)
class TypicalModule:
    """V_lambda with the generator actions stored as dense r x r matrices."""

    params: QParams
    color: complex
    h_mat: np.ndarray
    e_mat: np.ndarray
    f_mat: np.ndarray
    k_mat: np.ndarray

    @property
    def dim(self) -> int:
        return self.params.r

    @property
    def weights(self) -> np.ndarray:
        return np.diag(self.h_mat)

    @property
    def basis_labels(self) -> tuple:
        return tuple((self.color, i) for i in range(self.dim))


def typical_module(p: QParams, lam: complex) -> TypicalModule:
    lam = complex(lam)
    if not is_typical(p, lam):
        raise AtypicalColor(f"color {lam} lies in Z \\ {p.r}Z")
    r = p.r
    weights = np.array([lam + r - 1 - 2 * i for i in range(r)], dtype=complex)
    h = np.diag(weights)
    k = np.diag(np.array([q_pow(p, w) for w in weights]))
    one = qnum(p, 1)
    e = np.zeros((r, r), dtype=complex)
    for i in range(1, r):
        e[i - 1, i] = qnum(p, i) * qnum(p, i - lam) / one**2
    f = np.zeros((r, r), dtype=complex)
    for i in range(r - 1):
        f[i + 1, i] = 1.0
    return TypicalModule(params=p, color=lam, h_mat=h, e_mat=e, f_mat=f, k_mat=k)


def _tensor_labels(factors: list[TypicalModule]) -> tuple:
    labels = [()]
    for mod in factors:
        labels = [prev + (lab,) for prev in labels for lab in mod.basis_labels]
    return tuple(labels)


def _kron_all(mats) -> np.ndarray:
    return reduce(np.kron, mats)


def tensor_action(p: QParams, generator: str, factors: list[TypicalModule]) -> ModuleMap:
    """Action of E, F, K or H on the tensor product of the given modules."""
    if not factors:
        raise ValueError("need at least one tensor factor")
    gen = generator.upper()
    if gen not in ("E", "F", "K", "H"):
        raise ValueError(f"unknown generator {generator!r}")

    mat = _single(gen, factors[0])
    left = [factors[0]]
    for mod in factors[1:]:
        eye_left = np.eye(mat.shape[0], dtype=complex)
        eye_right = np.eye(mod.dim, dtype=complex)
        if gen == "E":
            mat = np.kron(eye_left, mod.e_mat) + np.kron(mat, mod.k_mat)
        elif gen == "F":
            k_inv_left = _kron_all([np.linalg.inv(m.k_mat) for m in left])
            mat = np.kron(k_inv_left, mod.f_mat) + np.kron(mat, eye_right)
        elif gen == "K":
            mat = np.kron(mat, mod.k_mat)
        else:  # H
            mat = np.kron(mat, eye_right) + np.kron(eye_left, mod.h_mat)
        left.append(mod)

    labels = _tensor_labels(factors)
    return ModuleMap(domain_label=labels, codomain_label=labels, matrix=mat)


def _single(gen: str, mod: TypicalModule) -> np.ndarray:
    return {"E": mod.e_mat, "F": mod.f_mat, "K": mod.k_mat, "H": mod.h_mat}[gen]
