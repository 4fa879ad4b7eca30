import math
import random

import pytest

from macdgroups.residue import (
    Residue,
    geom_sum,
    is_odd_prime,
    mod_inv,
    mod_pow,
    vp,
)


def test_mod_pow_examples():
    assert mod_pow(4, 3, 27) == 10
    assert mod_pow(7, 0, 27) == 1
    # alpha^(p^m) = 1 mod p^(2m) for alpha = 4, p = 3, m = 1
    assert mod_pow(4, 3, 9) == 1


def test_mod_pow_matches_naive():
    rng = random.Random(1)
    for _ in range(10_000):
        mod = rng.choice([27, 9, 125, 2401, 3**6])
        base = rng.randrange(mod)
        exp = rng.randrange(200)
        naive = 1
        for _ in range(exp):
            naive = naive * base % mod
        assert mod_pow(base, exp, mod) == naive


def test_mod_inv_examples():
    assert mod_inv(2, 9) == 5
    assert mod_inv(4, 9) == 7
    assert mod_inv(1, 3**6) == 1
    with pytest.raises(ValueError):
        mod_inv(3, 9)


def test_mod_inv_property():
    rng = random.Random(2)
    for _ in range(2000):
        mod = rng.choice([9, 27, 25, 343, 3**6])
        p = {9: 3, 27: 3, 25: 5, 343: 7, 3**6: 3}[mod]
        a = rng.randrange(1, mod)
        if a % p == 0:
            continue
        assert a * mod_inv(a, mod) % mod == 1


def test_vp():
    assert vp(12, 3) == 1
    assert vp(0, 3) == math.inf
    assert vp(54, 3) == 3
    assert vp(7, 3) == 0
    # accepted group parameters always satisfy vp(alpha - 1) = m
    for p, m, alpha in [(3, 1, 4), (5, 1, 6), (3, 2, 10), (7, 1, 8)]:
        assert vp(alpha - 1, p) == m


def test_geom_sum_examples():
    assert geom_sum(4, 3, 27) == 21
    assert geom_sum(4, 0, 27) == 0
    assert geom_sum(4, 9, 9) == 0


def test_geom_sum_matches_naive_loop():
    rng = random.Random(3)
    for _ in range(10_000):
        mod = rng.choice([9, 27, 81, 125, 2401])
        q = rng.randrange(mod)
        n = rng.randrange(60)
        naive = 0
        term = 1
        for _ in range(n):
            naive = (naive + term) % mod
            term = term * q % mod
        assert geom_sum(q, n, mod) == naive


def test_is_odd_prime():
    assert [n for n in range(30) if is_odd_prime(n)] == [3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_residue_type():
    a = Residue(4, 27)
    assert int(a.pow(3)) == 10
    assert int(a.inv()) == 7
    assert int(a.geom_sum(3)) == 21
    assert int(Residue(4, 9) * Residue(7, 9)) == 1
    assert int(Residue(5, 9) + Residue(7, 9)) == 3
    with pytest.raises(ValueError):
        Residue(1, 9) + Residue(1, 27)
