import itertools
from math import factorial

import pytest

from qmacdonald.laurent import LaurentPoly
from qmacdonald.weyl import (
    Partition,
    dominance_leq,
    generators,
    is_invariant,
    lower_partitions,
    orbit,
    orbit_monomial,
    orbit_size,
    partitions_bounded,
    signed_permutations,
)


def cone_member(diff, bound=12):
    """Brute-force search for c >= 0 with diff = sum c_i alpha_i."""
    n = len(diff)
    for c in itertools.product(range(bound + 1), repeat=n):
        vec = [0] * n
        for i in range(n - 1):
            vec[i] += c[i]
            vec[i + 1] -= c[i]
        vec[n - 1] += 2 * c[n - 1]
        if vec == list(diff):
            return True
    return False


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((1, -1))
    assert Partition((2,)).padded(3) == (2, 0, 0)


def test_orbit_monomial_examples():
    assert orbit_monomial((0,), 3) == 1
    y = [LaurentPoly.variable(2, i) for i in range(2)]
    yi = [LaurentPoly.variable(2, i, -1) for i in range(2)]
    assert orbit_monomial((1,), 2) == y[0] + yi[0] + y[1] + yi[1]
    assert orbit_monomial((1, 1), 2) == y[0] * y[1] + y[0] * yi[1] + yi[0] * y[1] + yi[0] * yi[1]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_orbit_monomial_fixed_by_whole_group(n):
    for mu in partitions_bounded(4, n):
        m = orbit_monomial(mu, n)
        assert all(m.signed_permute(p, s) == m for p, s in signed_permutations(n))
        assert is_invariant(m)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_orbit_size_formula(n):
    for mu in partitions_bounded(4, n):
        brute = {tuple(s * mu[p] for p, s in zip(perm, signs))
                 for perm, signs in signed_permutations(n)}
        assert len(orbit(mu, n)) == len(brute) == orbit_size(mu, n)


def test_generator_count():
    assert len(generators(3)) == 3
    assert sum(1 for _ in signed_permutations(3)) == 2**3 * factorial(3)


def test_dominance_examples():
    assert dominance_leq((0, 0), (2, 0), 2)
    assert not dominance_leq((1, 0), (2, 0), 2)
    assert dominance_leq((1, 1), (2, 0), 2)
    assert cone_member((1, -1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dominance_matches_cone_search(n):
    parts = partitions_bounded(6, n)
    for mu, nu in itertools.product(parts, repeat=2):
        diff = [a - b for a, b in zip(mu, nu)]
        assert dominance_leq(nu, mu, n) == cone_member(diff), (nu, mu)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dominance_is_partial_order(n):
    parts = partitions_bounded(6, n)
    for a in parts:
        assert dominance_leq(a, a, n)
    for a, b in itertools.product(parts, repeat=2):
        if a != b:
            assert not (dominance_leq(a, b, n) and dominance_leq(b, a, n))
    for a, b, c in itertools.product(parts, repeat=3):
        if dominance_leq(a, b, n) and dominance_leq(b, c, n):
            assert dominance_leq(a, c, n)


def test_lower_partitions_examples():
    for n in (1, 2, 3):
        assert lower_partitions((1,), n) == []
        assert lower_partitions((0,), n) == []
    assert lower_partitions((2, 0), 2) == [(1, 1), (0, 0)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lower_partitions_brute(n):
    for mu in partitions_bounded(5, n):
        brute = [nu for nu in partitions_bounded(10, n) if nu != mu and dominance_leq(nu, mu, n)]
        got = lower_partitions(mu, n)
        assert sorted(got) == sorted(brute)
        # a linear extension of the order read downward
        for i, a in enumerate(got):
            for b in got[i + 1:]:
                assert not dominance_leq(a, b, n) or a == b
