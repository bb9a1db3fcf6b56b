"""Exact arithmetic in the prime field GF(p).

Field elements are plain ints in [0, p); a GF instance carries the modulus
and supplies the operations. Everything goes through Python ints, so results
are exact for any supported p (no overflow to worry about).
"""

from __future__ import annotations

from .errors import DivisionByZero


def is_prime(n: int) -> bool:
    """Trial-division primality test; plenty fast for moduli below 2**31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class GF:
    """The prime field of order p."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"field order must be prime, got {p}")
        self.p = p

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def reduce(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        """Multiplicative inverse by Fermat exponentiation; a must be nonzero."""
        a %= self.p
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return a % self.p * self.inv(b) % self.p

    def pow(self, a: int, e: int) -> int:
        """a**e mod p for e >= 0, with 0**0 == 1."""
        if e < 0:
            raise ValueError("exponent must be non-negative")
        return pow(a % self.p, e, self.p)

    def elements(self) -> range:
        return range(self.p)

    def units(self) -> range:
        return range(1, self.p)
