"""Partitions, the hyperoctahedral group W(C_n), and C_n dominance order.

Dominance: ``nu <= mu`` iff ``mu - nu`` is a non-negative integer
combination of the simple roots ``e_i - e_{i+1}`` (``i < n``) and
``2 e_n``.  Writing ``mu - nu = sum c_i alpha_i`` and solving the
bidiagonal system gives ``c_i = S_i`` for ``i < n`` and ``c_n = S_n / 2``,
where ``S_i`` is the ``i``-th partial sum of ``mu - nu``.  So the test is:
every ``S_i >= 0`` for ``i < n``, and ``S_n`` is non-negative and even.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

from .laurent import LaurentPoly

__all__ = [
    "Partition",
    "partitions_bounded",
    "orbit",
    "orbit_monomial",
    "dominance_leq",
    "lower_partitions",
    "signed_permutations",
    "is_invariant",
    "generators",
]


class Partition(tuple):
    """Weakly decreasing tuple of non-negative integers.

    Trailing zeros are significant only through :meth:`padded`; two
    partitions differing by trailing zeros compare unequal as tuples, so
    callers normalize with ``padded(n)``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    def padded(self, n: int) -> "Partition":
        if len(self) > n:
            if any(self[n:]):
                raise ValueError(f"{tuple(self)} has more than {n} nonzero parts")
            return Partition(self[:n])
        return Partition(tuple(self) + (0,) * (n - len(self)))

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"


def _as_partition(mu, n: int) -> Partition:
    return (mu if isinstance(mu, Partition) else Partition(mu)).padded(n)


def partitions_bounded(total_max: int, n: int) -> list[Partition]:
    """All partitions with at most ``n`` parts and size ``<= total_max``."""
    out = []

    def rec(prefix, remaining, cap):
        if len(prefix) == n:
            out.append(Partition(prefix))
            return
        for p in range(min(cap, remaining), -1, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], total_max, total_max)
    return out


def signed_permutations(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ``2**n * n!`` pairs ``(perm, signs)`` of W(C_n)."""
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield perm, signs


def orbit(mu, n: int) -> list[tuple[int, ...]]:
    """Distinct points of the W(C_n)-orbit of ``mu``, sorted descending."""
    mu = _as_partition(mu, n)
    pts = set()
    for perm in set(itertools.permutations(mu)):
        nz = [i for i, a in enumerate(perm) if a]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            p = list(perm)
            for i, s in zip(nz, signs):
                p[i] *= s
            pts.add(tuple(p))
    return sorted(pts, reverse=True)


def orbit_size(mu, n: int) -> int:
    """``2**r * n! / (z! * prod(multiplicities!))`` for ``r`` nonzero parts."""
    mu = _as_partition(mu, n)
    r = sum(1 for a in mu if a)
    denom = 1
    for _, grp in itertools.groupby(mu):
        denom *= factorial(len(list(grp)))
    return 2**r * factorial(n) // denom


@lru_cache(maxsize=None)
def _orbit_monomial(mu: Partition, n: int) -> LaurentPoly:
    return LaurentPoly(n, {p: 1 for p in orbit(mu, n)})


def orbit_monomial(mu, n: int, k: int | None = None) -> LaurentPoly:
    """Monomial symmetric function ``m_mu``: the orbit sum of ``y**mu``.

    ``k`` is accepted for signature symmetry with the rest of the API;
    ``m_mu`` does not depend on it.
    """
    return _orbit_monomial(_as_partition(mu, n), n)


def dominance_leq(nu, mu, n: int) -> bool:
    """True iff ``nu <= mu`` in the C_n dominance order."""
    nu = _as_partition(nu, n)
    mu = _as_partition(mu, n)
    s = 0
    for i in range(n):
        s += mu[i] - nu[i]
        if s < 0:
            return False
    return s % 2 == 0


def lower_partitions(mu, n: int) -> list[Partition]:
    """Partitions ``nu < mu`` (strictly), largest size first, then lex descending.

    This order is a linear extension of dominance read downward, which is
    what the triangular eigen-solver relies on.
    """
    mu = _as_partition(mu, n)
    cands = [
        nu for nu in partitions_bounded(mu.size, n)
        if nu != mu and dominance_leq(nu, mu, n)
    ]
    return sorted(cands, key=lambda p: (p.size, tuple(p)), reverse=True)


def generators(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Coxeter generators of W(C_n) as ``(perm, signs)``."""
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append((tuple(perm), (1,) * n))
    gens.append((tuple(range(n)), (1,) * (n - 1) + (-1,)))
    return gens


def is_invariant(p: LaurentPoly) -> bool:
    """Whether ``p`` is fixed by every generator of W(C_n)."""
    return all(p.signed_permute(perm, signs) == p for perm, signs in generators(p.n))


def first_invariance_failure(p: LaurentPoly):
    for perm, signs in generators(p.n):
        if p.signed_permute(perm, signs) != p:
            return perm, signs
    return None

