"""Integer factorization: trial division, then Pollard rho with Brent's cycle detection."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, prod

MR_ROUNDS = 40
DEFAULT_BUDGET = 10**6
_TRIAL_LIMIT = 10**4

# fixed seed: golden files must not depend on the run
_MR_BASES_SEED = 0x5EED


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


SMALL_PRIMES = _small_primes(_TRIAL_LIMIT)


def is_probable_prime(n: int, rounds: int = MR_ROUNDS) -> bool:
    """Miller-Rabin with reproducible pseudorandom bases."""
    if n < 2:
        return False
    for p in SMALL_PRIMES[:25]:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = random.Random(_MR_BASES_SEED)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FactoredInt:
    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return self.sign * prod(p**e for p, e in self.factors)

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self):
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors) or "1"
        return ("-" if self.sign < 0 else "") + body


class FactorizationError(RuntimeError):
    """Budget exhausted; carries what was found and the unfactored cofactors."""

    def __init__(self, n, partial, cofactors):
        self.n = n
        self.partial = partial
        self.cofactors = cofactors
        super().__init__(f"could not finish factoring {n}: composite cofactor(s) {cofactors}")


def pollard_brent(n: int, budget: int, seed: int = 1) -> int | None:
    """A nontrivial factor of composite odd n, or None if the budget runs out."""
    if n % 2 == 0:
        return 2
    rng = random.Random(seed)
    spent = 0
    while spent < budget:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            # backtrack one step at a time
            while True:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                if g > 1:
                    break
        if 1 < g < n:
            return g
    return None


def _perfect_power(n: int):
    from .poly import integer_nth_root

    for k in range(n.bit_length(), 1, -1):
        r = integer_nth_root(n, k)
        if r is not None and r > 1:
            return r, k
    return None


def factor_integer(n: int, budget: int = DEFAULT_BUDGET, hints=()) -> FactoredInt:
    """Complete factorization of a nonzero integer.

    ``budget`` bounds the Pollard rho iterations spent on each composite
    cofactor; ``hints`` are candidate primes divided out first.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}

    def add(p, e=1):
        found[p] = found.get(p, 0) + e

    for h in hints:
        h = abs(int(h))
        if h > 1:
            while n % h == 0:
                add(h)
                n //= h
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            add(p)
            n //= p
    stack = [n] if n > 1 else []
    stuck = []
    while stack:
        m = stack.pop()
        if m < SMALL_PRIMES[-1] ** 2 or is_probable_prime(m):
            add(m)
            continue
        root = _perfect_power(m)
        if root is not None:
            stack.extend([root[0]] * root[1])
            continue
        f = pollard_brent(m, budget)
        if f is None:
            stuck.append(m)
            continue
        stack.extend([f, m // f])
    # hints or trial division may have left composite entries
    merged: dict[int, int] = {}
    for p, e in found.items():
        if is_probable_prime(p):
            merged[p] = merged.get(p, 0) + e
        else:
            sub = factor_integer(p, budget)
            for q, f in sub.factors:
                merged[q] = merged.get(q, 0) + e * f
    if stuck:
        partial = FactoredInt(sign, tuple(sorted(merged.items())))
        raise FactorizationError(sign * prod(stuck) * partial.value(), partial, stuck)
    return FactoredInt(sign, tuple(sorted(merged.items())))


def valuation(n, p: int) -> int:
    """p-adic valuation of a nonzero integer or Fraction."""
    from fractions import Fraction

    if isinstance(n, Fraction):
        return valuation(n.numerator, p) - valuation(n.denominator, p) if n else 10**9
    n = abs(int(n))
    if n == 0:
        return 10**9
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
