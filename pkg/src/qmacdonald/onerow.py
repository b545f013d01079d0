"""Closed forms for the one-row polynomials ``P_(lambda, 0, ..., 0)``.

``corollary_P`` is the explicit finite sum over weak compositions;
``residue_solution`` evaluates the two families of rational eigenfunctions
obtained from the residues of the integrand at ``x = y_i**(±1) q**m``.
"""

from __future__ import annotations

import cmath
from math import comb
from typing import Iterator, Sequence

from .laurent import LaurentPoly, LaurentQuotient
from .qfield import VFrac, VPoly, gauss_coeff, poch_finite, q, t

__all__ = [
    "PoleProximity",
    "composition_enumerate",
    "corollary_P",
    "residue_solution",
    "residue_sum",
    "theorem2_constant",
]

POLE_GUARD = 1e-9


class PoleProximity(ValueError):
    """A denominator came within the guard distance of zero."""


def composition_enumerate(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic order."""
    if total < 0 or parts < 1:
        raise ValueError("need total >= 0 and parts >= 1")
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in composition_enumerate(total - first, parts - 1):
            yield (first,) + rest


def corollary_P(lam: int, n: int, k: int) -> LaurentQuotient:
    """Explicit ``P_(lam,0,...,0)`` as a sum over compositions ``i_1 + ... + i_2n = lam``.

    The monomial of a composition is ``prod_j y_j**(i_j - i_{2n+1-j})`` and
    its weight ``prod_m (t;q)_{i_m} / (q;q)_{i_m}``.  Weights are built
    incrementally along the depth-first enumeration.
    """
    if lam < 0 or n < 1 or k < 1:
        raise ValueError("need lam >= 0, n >= 1, k >= 1")
    parts = 2 * n
    gauss = [gauss_coeff(k, i) for i in range(lam + 1)]
    acc: dict[tuple[int, ...], VPoly] = {}

    def rec(prefix: list[int], remaining: int, weight: VPoly):
        if len(prefix) == parts - 1:
            comp = prefix + [remaining]
            w = weight * gauss[remaining]
            e = tuple(comp[j] - comp[parts - 1 - j] for j in range(n))
            acc[e] = acc[e] + w if e in acc else w
            return
        for i in range(remaining + 1):
            rec(prefix + [i], remaining - i, weight * gauss[i])

    rec([], lam, VPoly(1))
    body = LaurentPoly(n, acc)
    numer = body.scale(VPoly(1) * poch_finite(q(), lam))
    denom = VPoly(1) * poch_finite(t(k), lam)
    return LaurentQuotient(numer, denom)


def theorem2_constant(lam: int, n: int, k: int) -> VFrac:
    """Normalization ``(t;q)_lam / (q;q)_lam`` between the full-cycle integral and ``P``."""
    if lam < 0:
        raise ValueError("lam must be non-negative")
    return VFrac(VPoly(1) * poch_finite(t(k), lam), VPoly(1) * poch_finite(q(), lam))


def _guard(val: complex, what: str) -> complex:
    if abs(val) < POLE_GUARD:
        raise PoleProximity(f"{what} is {abs(val):.3e}, below guard {POLE_GUARD}")
    return val


def residue_solution(i: int, branch: int, lam: int, n: int, k: int,
                     q_val: float, y: Sequence[complex]) -> complex:
    """``(1/2 pi i)`` times the integral over the cycle around ``y_i**branch * q**m``, ``m < k``.

    ``branch=+1`` picks the poles ``y_i q**m``; ``branch=-1`` is the same
    expression with ``y_i`` replaced by ``1/y_i``.  ``i`` is 0-based.
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    y = [complex(a) for a in y]
    if len(y) != n:
        raise ValueError(f"expected {n} values of y")
    yi = y[i] if branch == 1 else 1 / y[i]
    others = [y[j] for j in range(n) if j != i]
    tq = q_val ** k
    pref = poch_finite(q_val, k - 1, q_val)
    for yj in others:
        pref *= poch_finite(yj / yi, k, q_val)
    # j runs over all indices including i, with y_i replaced on the - branch.
    ys = [yi] + others
    for yj in ys:
        pref *= poch_finite(1 / (yj * yi), k, q_val)
    _guard(pref, "prefactor denominator")
    z = tq ** (2 * n) * q_val ** lam
    total = 0j
    for l in range(k):
        term = z ** l
        for yj in ys:
            num = poch_finite(q_val / tq * yi / yj, l, q_val) * poch_finite(q_val / tq * yi * yj, l, q_val)
            den = poch_finite(q_val * yi / yj, l, q_val) * poch_finite(q_val * yi * yj, l, q_val)
            term *= num / _guard(den, "series denominator")
        total += term
    return yi ** lam * total / pref


def residue_sum(lam: int, n: int, k: int, q_val: float, y: Sequence[complex]) -> complex:
    """Sum of :func:`residue_solution` over every index and both branches."""
    return sum(residue_solution(i, b, lam, n, k, q_val, y) for i in range(n) for b in (1, -1))


def composition_count(total: int, parts: int) -> int:
    return comb(total + parts - 1, parts - 1)
