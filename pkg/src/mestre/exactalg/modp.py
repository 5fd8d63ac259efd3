"""Polynomials over prime fields, just enough for irreducibility witnesses."""

from __future__ import annotations

from .intfactor import SMALL_PRIMES
from .poly import Poly

# polynomials mod q are int lists, low degree first, trimmed


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod(a, b, q):
    a = list(a)
    inv = pow(b[-1], -1, q)
    db = len(b) - 1
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv % q
        if c:
            for j in range(db + 1):
                a[k + j] = (a[k + j] - c * b[j]) % q
    return _trim(a[:db])


def _mulmod(a, b, m, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod([c % q for c in out], m, q)


def _gcd(a, b, q):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _mod(a, b, q)
    return a


def _powmod(base, e, m, q):
    result = [1]
    while e:
        if e & 1:
            result = _mulmod(result, base, m, q)
        e >>= 1
        if e:
            base = _mulmod(base, base, m, q)
    return result


def reduce_mod(p: Poly, q: int) -> list[int] | None:
    """Primitive integer form of p reduced mod q; None if the degree drops."""
    ints = p.primitive_int()
    if ints[-1] % q == 0:
        return None
    return _trim([c % q for c in ints])


def small_factor_degrees(f: list[int], q: int) -> int | None:
    """Smallest i <= deg/2 such that f has an irreducible factor of degree i mod q."""
    n = len(f) - 1
    xpow = [0, 1]
    for i in range(1, n // 2 + 1):
        xpow = _powmod(xpow, q, f, q)
        h = list(xpow) + [0] * max(0, 2 - len(xpow))
        h[1] = (h[1] - 1) % q
        if len(_gcd(f, _trim(h), q)) > 1:
            return i
    return None


def is_irreducible_mod(p: Poly, q: int) -> bool:
    f = reduce_mod(p, q)
    if f is None:
        return False
    if len(f) == 2:
        return True
    return small_factor_degrees(f, q) is None


def irreducibility_witness(p: Poly, prime_bound: int = 200) -> int | None:
    """A prime q <= prime_bound with p irreducible mod q (proves p irreducible over Q)."""
    if p.degree < 1:
        raise ValueError("need a non-constant polynomial")
    for q in SMALL_PRIMES:
        if q > prime_bound:
            break
        if is_irreducible_mod(p, q):
            return q
    return None
