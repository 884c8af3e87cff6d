"""Fusion admissibility, 6j-symbols and the H/I change of basis.

A trivalent vertex joining colors a, b to c is admissible when a + b - c
lies in the fusion window {r-1, r-3, ..., -r+1}. The 6j-symbol below is the
coefficient relating the two fusion trees of four colors; the H-basis of
the 4-punctured-sphere space is indexed by the admissible internal colors
beta, and h_to_i_matrix expresses it in the I-basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InadmissibleSixJ
from .qscalar import INT_TOL, QParams, modified_dim, q_pow, qbinom, qfact
from .weight_modules import ModuleMap


@dataclass(frozen=True)
class FusionWindow:
    r: int
    values: tuple[int, ...]


def fusion_window(p: QParams) -> FusionWindow:
    """The r-element window {r-1, r-3, ..., -r+1}."""
    vals = tuple(range(p.r - 1, -p.r, -2))
    return FusionWindow(r=p.r, values=vals)


def admissible_betas(p: QParams, colors: tuple[complex, complex, complex, complex]) -> list[complex]:
    """Internal colors beta with l1+l2-beta and l3+l4+beta both in the window.

    When the colors sum to zero the two conditions coincide and the full
    window of r values comes back, sorted by decreasing offset.
    """
    l1, l2, l3, l4 = (complex(c) for c in colors)
    window = fusion_window(p).values
    out = []
    for h in window:  # l1 + l2 - beta = h, offsets -h ascending in h
        beta = l1 + l2 - h
        second = l3 + l4 + beta
        if any(abs(second - w) < INT_TOL for w in window):
            out.append(beta)
    out.sort(key=lambda b: -(b - l1 - l2).real)
    return out


def _near_int(x: complex, tol: float = INT_TOL):
    n = round(x.real)
    if abs(x - n) < tol:
        return n
    return None


def _qbin_pair(p: QParams, top: complex, bottom: complex) -> complex:
    """{top choose bottom} when bottom or top-bottom is a nonnegative integer.

    Both reductions give {top}{top-1}...{top-k+1}/{k}! with k the integral
    entry; when both entries are integers the two agree by symmetry.
    """
    k = _near_int(bottom)
    if k is not None and k >= 0:
        return qbinom(p, top, k)
    k = _near_int(top - bottom)
    if k is not None and k >= 0:
        return qbinom(p, top, k)
    raise InadmissibleSixJ(f"binomial ({top} choose {bottom}) has no integral entry")


def sixj(p: QParams, j1: complex, j2: complex, j3: complex, j4: complex, j5: complex, j6: complex) -> complex:
    """The 6j-symbol of the one-sum hypergeometric form.

    With A_xyz = (j_x+j_y+j_z+3(r-1))/2 and B_xyz = (j_x+j_y-j_z+r-1)/2:

        (-1)^(r-1+B165) * {B345}!{B123}! / ({B246}!{B165}!)
        * {j3+r-1 choose A123+1-r} / {j3+r-1 choose B354}
        * sum_{z=m}^{M} (-1)^z {A165+1 choose j5+z+r} {B156+z choose B156}
                        {B264+B345-z choose B264} {B453+z choose B462}

    with m = max(0, (j3+j6-j2-j5)/2) and M = min(B435, B165). The four
    quantities B123, B345, B246, B165 and the bound m must be integers
    (within 1e-6); anything else means the colors violate the fusion rules.
    """
    r = p.r

    def A(x, y, z):
        return (x + y + z + 3 * (r - 1)) / 2

    def B(x, y, z):
        return (x + y - z + r - 1) / 2

    b123 = _near_int(B(j1, j2, j3))
    b345 = _near_int(B(j3, j4, j5))
    b246 = _near_int(B(j2, j4, j6))
    b165 = _near_int(B(j1, j6, j5))
    m_raw = _near_int((j3 + j6 - j2 - j5) / 2)
    if None in (b123, b345, b246, b165, m_raw):
        raise InadmissibleSixJ("non-integral vertex datum among B123, B345, B246, B165, m")
    if min(b123, b345, b246, b165) < 0:
        raise InadmissibleSixJ("negative factorial argument")

    try:
        pref = (
            (-1) ** (r - 1 + b165)
            * qfact(p, b345)
            * qfact(p, b123)
            / (qfact(p, b246) * qfact(p, b165))
        )
        pref *= _qbin_pair(p, j3 + r - 1, A(j1, j2, j3) + 1 - r)
        denom = _qbin_pair(p, j3 + r - 1, B(j3, j5, j4))
        if abs(denom) < 1e-13:
            raise InadmissibleSixJ("vanishing binomial in the 6j prefactor")
        pref /= denom

        m = max(0, m_raw)
        M = min(b345, b165)  # B435 = B345
        total = 0.0 + 0j
        for z in range(m, M + 1):
            term = (-1) ** z
            term *= _qbin_pair(p, A(j1, j6, j5) + 1, j5 + z + r)
            term *= _qbin_pair(p, B(j1, j5, j6) + z, B(j1, j5, j6))
            term *= _qbin_pair(p, B(j2, j6, j4) + b345 - z, B(j2, j6, j4))
            term *= _qbin_pair(p, B(j4, j5, j3) + z, B(j4, j6, j2))
            total += term
    except ZeroDivisionError as exc:
        raise InadmissibleSixJ(str(exc)) from exc

    return pref * total


def h_to_i_matrix(p: QParams, colors: tuple[complex, complex, complex, complex]) -> ModuleMap:
    """Change of basis from the H-graph basis to the I-graph basis.

    Column beta holds the I-coefficients of H(colors, beta):

        H_beta = sum_gamma d(gamma) 6j(l1, l2, beta, l3, -l4, -gamma) I_gamma

    where gamma runs over l1 + l4 + window, ordered like admissible_betas.
    """
    l1, l2, l3, l4 = (complex(c) for c in colors)
    betas = admissible_betas(p, colors)
    gammas = [l1 + l4 + e for e in fusion_window(p).values]
    if not betas:
        raise InadmissibleSixJ("no admissible internal colors for these punctures")
    mat = np.zeros((len(gammas), len(betas)), dtype=complex)
    for col, beta in enumerate(betas):
        for row, gamma in enumerate(gammas):
            mat[row, col] = modified_dim(p, gamma) * sixj(p, l1, l2, beta, l3, -l4, -gamma)
    return ModuleMap(domain_label=tuple(betas), codomain_label=tuple(gammas), matrix=mat)


def i_to_h_matrix(p: QParams, colors: tuple[complex, complex, complex, complex]) -> ModuleMap:
    """Change of basis back from the I-graph basis to the H-graph basis.

    An I-graph at (l1, l2, l3, l4) is the H-graph of the sphere with the
    second and fourth punctures exchanged, so the return leg is the H-to-I
    map at colors (l1, l4, l3, l2) up to normalization: the double sum over
    the r-element window contributes a completeness factor 1/r^2, which is
    compensated here so that the two legs compose to the identity.
    """
    l1, l2, l3, l4 = (complex(c) for c in colors)
    flipped = h_to_i_matrix(p, (l1, l4, l3, l2))
    return ModuleMap(
        domain_label=flipped.domain_label,
        codomain_label=flipped.codomain_label,
        matrix=p.r**2 * flipped.matrix,
    )


def half_twist_phase(p: QParams, lam: complex, mu: complex, beta: complex) -> complex:
    """Phase picked up by a positive half twist across a fused pair:

    q^((-lam^2 - mu^2 + beta^2 + (r-1)^2) / 4)
    """
    r = p.r
    return q_pow(p, (-(lam**2) - mu**2 + beta**2 + (r - 1) ** 2) / 4)
