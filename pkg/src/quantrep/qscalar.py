"""Quantum-number arithmetic at a 2r-th root of unity.

Everything downstream (module actions, R-matrices, 6j-symbols) is built out
of powers q^x = exp(i*pi*x/r), quantum numbers {x} = q^x - q^{-x}, their
factorials, binomials with complex top entry, and the modified dimension
d(lambda) = (-1)^(r-1) {lambda}/{r*lambda}.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

DEFAULT_TOL = 1e-9

# absolute tolerance for "is this float an integer" admissibility checks
INT_TOL = 1e-6


@dataclass(frozen=True)
class QParams:
    """Order parameter r >= 2 and the root of unity q = exp(i*pi/r)."""

    r: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"order parameter must be >= 2, got {self.r}")

    @property
    def q(self) -> complex:
        return cmath.exp(1j * cmath.pi / self.r)


def q_pow(p: QParams, x: complex) -> complex:
    """q^x = exp(i*pi*x/r) for complex x."""
    return cmath.exp(1j * cmath.pi * x / p.r)


def qnum(p: QParams, x: complex) -> complex:
    """Quantum number {x} = q^x - q^{-x}."""
    return q_pow(p, x) - q_pow(p, -x)


def qfact(p: QParams, n: int) -> complex:
    """Quantum factorial {n}! = {n}{n-1}...{1}, with {0}! = 1."""
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    out = 1.0 + 0j
    for k in range(1, n + 1):
        out *= qnum(p, k)
    return out


def qbinom(p: QParams, top: complex, k: int) -> complex:
    """Quantum binomial with complex top entry:

        {top choose k} = {top}{top-1}...{top-k+1} / {k}!

    {k}! vanishes for k >= r, which signals an inadmissible fusion input;
    that surfaces as ZeroDivisionError.
    """
    if k < 0:
        raise ValueError(f"quantum binomial needs k >= 0, got {k}")
    denom = qfact(p, k)
    if abs(denom) < 1e-14:
        raise ZeroDivisionError(f"{{k}}! = 0 for k = {k} >= r = {p.r}")
    num = 1.0 + 0j
    for j in range(k):
        num *= qnum(p, top - j)
    return num / denom


def modified_dim(p: QParams, lam: complex) -> complex:
    """Modified dimension d(lambda) = (-1)^(r-1) {lambda} / {r*lambda}.

    Blows up exactly at atypical colors, where {r*lambda} = 0.
    """
    denom = qnum(p, p.r * lam)
    if abs(denom) < 1e-12:
        raise ZeroDivisionError(f"{{r*lambda}} = 0: color {lam} is atypical")
    return (-1) ** (p.r - 1) * qnum(p, lam) / denom
