"""Exact coefficient fields (rationals, word-sized prime fields) plus the
seeded prime generator and symmetric CRT lifting used by modular detection."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)  # deterministic < 3.3e24


class Rationals:
    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def of(value) -> Fraction:
        return Fraction(value)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in the rationals")
        return a / b

    @staticmethod
    def neg(a):
        return -a

    def __repr__(self):
        return "Rationals()"


RATIONALS = Rationals()


@dataclass(frozen=True)
class PrimeField:
    """Z/p for prime p; elements are plain ints in [0, p)."""

    p: int

    @property
    def name(self) -> str:
        return f"mod {self.p}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def of(self, value) -> int:
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by p={self.p}")
            return value.numerator * pow(den, self.p - 2, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return a * pow(b, self.p - 2, self.p) % self.p

    def neg(self, a):
        return -a % self.p


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def seeded_primes(count: int, seed: int, bits: int = 51) -> list[int]:
    """Distinct primes in [2^(bits-1), 2^bits), reproducible from the seed.

    bits must be at least 51 so every prime exceeds 2^50.
    """
    if bits < 51:
        raise ValueError("primes below 2^50 are not allowed")
    rng = random.Random(f"qrec-primes-{seed}")
    primes: list[int] = []
    while len(primes) < count:
        candidate = rng.randrange(1 << (bits - 1), 1 << bits) | 1
        if candidate not in primes and is_probable_prime(candidate):
            primes.append(candidate)
    return primes


def crt_symmetric(residues, moduli) -> int:
    """The unique integer in (-M/2, M/2] congruent to each residue, M = prod moduli."""
    total, modulus = 0, 1
    for r, p in zip(residues, moduli):
        g = pow(modulus % p, p - 2, p) if modulus % p else None
        if g is None:
            raise ValueError("moduli are not coprime")
        k = (r - total) * g % p
        total += modulus * k
        modulus *= p
    total %= modulus
    if total > modulus // 2:
        total -= modulus
    return total
