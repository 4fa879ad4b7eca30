"""Exact arithmetic in Z/p^e: powers, inverses, p-adic valuations, geometric sums.

Every other module reduces its integer bookkeeping to the handful of functions
here.  All moduli are odd prime powers; the group constructor enforces the
global size cap RESIDUE_CAP so hot loops stay in machine-word range even when
the caller hands us numpy int64 scalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Moduli are capped so p^{3m} < 2^40; larger parameters are rejected at
# construction rather than silently promoted to big-integer arithmetic.
RESIDUE_CAP = 1 << 40


def is_odd_prime(p: int) -> bool:
    """Deterministic trial division, adequate below RESIDUE_CAP**(1/3)."""
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def vp(n: int, p: int) -> int | float:
    """p-adic valuation of n.

    Returns math.inf for n = 0 so callers can test ``vp(n, p) >= e``
    uniformly instead of special-casing zero.
    """
    if p < 2:
        raise ValueError(f"not a prime: {p}")
    if n == 0:
        return math.inf
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus by square-and-multiply; exp must be >= 0."""
    if exp < 0:
        raise ValueError("negative exponent; invert the base first")
    base %= modulus
    acc = 1 % modulus
    while exp:
        if exp & 1:
            acc = acc * base % modulus
        base = base * base % modulus
        exp >>= 1
    return acc


def mod_inv(a: int, modulus: int) -> int:
    """Inverse of a mod modulus via extended Euclid; rejects non-units."""
    a %= modulus
    r0, r1 = modulus, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise ValueError(f"{a} is not invertible mod {modulus}")
    return s0 % modulus


def geom_sum(q: int, n: int, modulus: int) -> int:
    """1 + q + ... + q^(n-1) mod modulus, with n >= 0.

    Uses the doubling recurrences sigma(2k) = sigma(k) * (1 + q^k) and
    sigma(k+1) = 1 + q * sigma(k).  Division by q - 1 is deliberately
    avoided: in this package q is always 1 mod p, so q - 1 is never a unit.
    """
    if n < 0:
        raise ValueError("geometric sums need n >= 0")
    q %= modulus
    s = 0          # sigma over the prefix of length built so far
    pw = 1 % modulus  # q ** (prefix length)
    for bit in bin(n)[2:]:
        s = s * (1 + pw) % modulus
        pw = pw * pw % modulus
        if bit == "1":
            s = (1 + q * s) % modulus
            pw = pw * q % modulus
    return s


@dataclass(frozen=True)
class Residue:
    """A value in Z/modulus with exact, overflow-free arithmetic."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _check(self, other: "Residue"):
        if self.modulus != other.modulus:
            raise ValueError("mixed moduli")

    def __add__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue(self.value * other.value, self.modulus)

    def pow(self, exp: int) -> "Residue":
        return Residue(mod_pow(self.value, exp, self.modulus), self.modulus)

    def inv(self) -> "Residue":
        return Residue(mod_inv(self.value, self.modulus), self.modulus)

    def geom_sum(self, n: int) -> "Residue":
        return Residue(geom_sum(self.value, n, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} mod {self.modulus}"
