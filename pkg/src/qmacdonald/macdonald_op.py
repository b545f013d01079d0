"""Macdonald's q-difference operator of type C_n and the triangular eigen-solver.

The operator is

    E = sum_{a in {±1}^n} prod_{i<j} (1 - t y_i^a_i y_j^a_j) / (1 - y_i^a_i y_j^a_j)
                          prod_i   (1 - t y_i^(2 a_i))    / (1 - y_i^(2 a_i))
                          T_{y_1}^(a_1/2) ... T_{y_n}^(a_n/2)

with ``t = q**k``.  On W(C_n)-invariant input the sum is a Laurent
polynomial; it is computed by putting all ``2**n`` terms over one
denominator and dividing exactly, so a nonzero remainder is an alarm.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .laurent import Binomial, LaurentPoly, LaurentQuotient, common_denominator_sum, exact_divide
from .qfield import NotDivisible, VFrac, VPoly, eigenvalue_c
from .weyl import (
    Partition,
    _as_partition,
    dominance_leq,
    first_invariance_failure,
    lower_partitions,
    orbit_monomial,
)

__all__ = [
    "NotSymmetric",
    "DegenerateEigenvalue",
    "OperatorTerm",
    "operator_terms",
    "apply_E",
    "apply_E_direct",
    "E_on_monomial",
    "expand_in_monomials",
    "solve_P",
]


class NotSymmetric(ValueError):
    """Input is not invariant under W(C_n)."""


class DegenerateEigenvalue(ArithmeticError):
    """``c_mu == c_nu`` for some ``nu < mu``; the triangular solve is singular."""


@dataclass(frozen=True)
class OperatorTerm:
    """One summand of E: coefficient ``numerator / prod(denominator)`` times ``T^(signs/2)``."""

    signs: tuple[int, ...]
    numerator: LaurentPoly
    denominator: tuple[Binomial, ...]


def _unit(n, i, s):
    e = [0] * n
    e[i] = s
    return e


@lru_cache(maxsize=None)
def operator_terms(n: int, k: int) -> tuple[OperatorTerm, ...]:
    terms = []
    for signs in itertools.product((1, -1), repeat=n):
        num = LaurentPoly.one(n)
        den = []
        roots = []
        for i, j in itertools.combinations(range(n), 2):
            e = [0] * n
            e[i], e[j] = signs[i], signs[j]
            roots.append(tuple(e))
        for i in range(n):
            e = [0] * n
            e[i] = 2 * signs[i]
            roots.append(tuple(e))
        for r in roots:
            num = num.mul_binomial(Binomial(r, 2 * k))
            den.append(Binomial(r))
        terms.append(OperatorTerm(signs, num, tuple(den)))
    return tuple(terms)


def _check_invariant(f: LaurentPoly):
    bad = first_invariance_failure(f)
    if bad is not None:
        raise NotSymmetric(f"input is not W(C_n)-invariant (fails generator {bad})")


def apply_E_direct(f: LaurentPoly, n: int, k: int) -> LaurentPoly:
    """E f computed term by term over a common denominator, then divided exactly."""
    if f.n != n:
        raise ValueError(f"polynomial has {f.n} variables, expected {n}")
    _check_invariant(f)
    pieces = []
    for term in operator_terms(n, k):
        shifted = f
        for i, s in enumerate(term.signs):
            shifted = shifted.half_shift(i, s)
        pieces.append((term.numerator * shifted, term.denominator))
    num, den = common_denominator_sum(pieces, n)
    out = exact_divide(num, den)
    _check_invariant(out)
    return out


def expand_in_monomials(f: LaurentPoly, n: int | None = None, k: int | None = None) -> dict[Partition, VPoly]:
    """Coefficients of ``f`` in the basis ``m_nu``, keyed by partition.

    Every orbit has exactly one dominant point (a partition), so the
    coefficient of ``m_nu`` is read off ``y**nu``; the reconstruction is
    then compared with ``f`` exactly.
    """
    n = f.n if n is None else n
    if f.n != n:
        raise ValueError(f"polynomial has {f.n} variables, expected {n}")
    out: dict[Partition, VPoly] = {}
    for e, c in f.terms().items():
        if all(a >= b for a, b in zip(e, e[1:])) and e[-1] >= 0:
            out[Partition(e)] = c
    rebuilt = LaurentPoly.zero(n)
    for nu, c in out.items():
        rebuilt = rebuilt + orbit_monomial(nu, n).scale(c)
    if rebuilt != f:
        raise NotSymmetric("polynomial is not a combination of orbit sums")
    return dict(sorted(out.items(), key=lambda kv: (kv[0].size, tuple(kv[0])), reverse=True))


@lru_cache(maxsize=None)
def _E_on_monomial(mu: Partition, n: int, k: int) -> LaurentPoly:
    return apply_E_direct(orbit_monomial(mu, n), n, k)


def E_on_monomial(mu, n: int, k: int) -> dict[Partition, VPoly]:
    """``E m_mu`` expanded in the monomial basis (memoized)."""
    mu = _as_partition(mu, n)
    return expand_in_monomials(_E_on_monomial(mu, n, k), n)


def apply_E(f, n: int, k: int):
    """E applied to an invariant :class:`LaurentPoly` or :class:`LaurentQuotient`.

    Uses linearity over the coefficient ring: ``f`` is expanded in the
    ``m_nu`` basis and each ``E m_nu`` is taken from the memoized direct
    computation.
    """
    if isinstance(f, LaurentQuotient):
        return LaurentQuotient(apply_E(f.numerator, n, k), f.denominator)
    if f.n != n:
        raise ValueError(f"polynomial has {f.n} variables, expected {n}")
    out = LaurentPoly.zero(n)
    for nu, c in expand_in_monomials(f, n).items():
        out = out + _E_on_monomial(nu, n, k).scale(c)
    return out


def solve_P(mu, n: int, k: int) -> LaurentQuotient:
    """Macdonald polynomial ``P_mu`` from its definition as a triangular eigenfunction.

    Writes ``P = m_mu + sum_{nu < mu} a_nu m_nu`` and solves
    ``(c_mu - c_kappa) a_kappa = sum_{nu != kappa} a_nu [m_kappa] E m_nu``
    going down the dominance order.
    """
    mu = _as_partition(mu, n)
    c_mu = eigenvalue_c(mu, n, k)
    lower = lower_partitions(mu, n)
    coeffs: dict[Partition, VFrac] = {mu: VFrac(1)}
    images = {}
    for nu in [mu] + lower:
        img = E_on_monomial(nu, n, k)
        for kappa in img:
            if not dominance_leq(kappa, nu, n):
                raise NotDivisible(f"E m_{tuple(nu)} has a term m_{tuple(kappa)} outside the lower order ideal")
        images[nu] = img
    for kappa in lower:
        rhs = VFrac(0)
        for nu, a in coeffs.items():
            e = images[nu].get(kappa)
            if e is not None:
                rhs = rhs + a * e
        diff = c_mu - eigenvalue_c(kappa, n, k)
        if not diff:
            raise DegenerateEigenvalue(f"c_{tuple(mu)} == c_{tuple(kappa)}")
        if rhs:
            coeffs[kappa] = rhs / diff
    terms = {}
    for nu, a in coeffs.items():
        for pt in orbit_monomial(nu, n).support():
            terms[pt] = a
    return LaurentQuotient.from_coefficients(n, terms)
