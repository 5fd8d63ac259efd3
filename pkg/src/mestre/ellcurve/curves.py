"""Weierstrass models and the chord-tangent group law over any supported field.

Field elements only need ``+ - * /``, ``==`` and mixed arithmetic with
Python ints, so the same code runs over Q (``Fraction``), Q(t)
(``RatFunc``) and quadratic extensions of either (``QuadExt``).
Points are ``(x, y)`` tuples; the point at infinity is ``INF`` (``None``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..exactalg import rational_nth_root

INF = None


class SingularCurveError(ValueError):
    pass


@dataclass(frozen=True)
class ShortW:
    """y^2 = x^3 + A x + B."""

    A: Any
    B: Any

    def __post_init__(self):
        if not (4 * self.A**3 + 27 * self.B**2):
            raise SingularCurveError(f"singular curve A={self.A}, B={self.B}")

    @property
    def discriminant(self):
        return -16 * (4 * self.A**3 + 27 * self.B**2)

    def j_invariant(self):
        a3 = 4 * self.A**3
        return 1728 * a3 / (a3 + 27 * self.B**2)

    def rhs(self, x):
        return x * x * x + self.A * x + self.B

    def contains(self, P) -> bool:
        if P is INF:
            return True
        x, y = P
        return y * y == self.rhs(x)

    def to_long(self) -> LongW:
        z = self.A * 0
        return LongW(z, z, z, self.A, self.B)


@dataclass(frozen=True)
class LongW:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Any
    a2: Any
    a3: Any
    a4: Any
    a6: Any

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.ainvs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self):
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def c6(self):
        return -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def contains(self, P) -> bool:
        if P is INF:
            return True
        x, y = P
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6

    def change_coords(self, u, r, s, t) -> LongW:
        """Model for x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
        a1, a2, a3, a4, a6 = self.ainvs
        return LongW(
            (a1 + 2 * s) / u,
            (a2 - s * a1 + 3 * r - s * s) / u**2,
            (a3 + r * a1 + 2 * t) / u**3,
            (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u**4,
            (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) / u**6,
        )

    def short_model(self) -> tuple[ShortW, Any]:
        """Isomorphic short model and the point map onto it."""
        A = -self.c4 / 48
        B = -self.c6 / 864
        b2, a1, a3 = self.b2, self.a1, self.a3

        def to_short(P):
            if P is INF:
                return INF
            x, y = P
            return (x + b2 / 12, y + (a1 * x + a3) / 2)

        return ShortW(A, B), to_short


def map_point(P, u, r, s, t):
    """Image of P under the change of variables of ``LongW.change_coords``."""
    if P is INF:
        return INF
    x, y = P
    xr = x - r
    return (xr / u**2, (y - s * xr - t) / u**3)


# group law --------------------------------------------------------------


def neg(E: ShortW, P):
    if P is INF:
        return INF
    return (P[0], -P[1])


def add(E: ShortW, P, Q):
    if P is INF:
        return Q
    if Q is INF:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 == -y2:
            return INF
        lam = (3 * x1 * x1 + E.A) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return (x3, y3)


def sub(E: ShortW, P, Q):
    return add(E, P, neg(E, Q))


def double(E: ShortW, P):
    return add(E, P, P)


def mul(E: ShortW, n: int, P):
    """n*P by double-and-add."""
    if n < 0:
        return mul(E, -n, neg(E, P))
    result = INF
    addend = P
    while n:
        if n & 1:
            result = add(E, result, addend)
        n >>= 1
        if n:
            addend = add(E, addend, addend)
    return result


def torsion_order(E: ShortW, P, bound: int = 12) -> int | None:
    """Order of P if it is at most ``bound`` (Mazur: rational torsion has order <= 12)."""
    Q = P
    for n in range(1, bound + 1):
        if Q is INF:
            return n
        Q = add(E, Q, P)
    return None


# twists and isomorphism -------------------------------------------------


def quadratic_twist(E: ShortW, d) -> ShortW:
    if not d:
        raise ValueError("twist parameter must be nonzero")
    return ShortW(E.A * d * d, E.B * d * d * d)


def scale_model(E: ShortW, u):
    """The model for x = x'/u^2, y = y'/u^3, i.e. A u^4, B u^6, with its point map."""
    E2 = ShortW(E.A * u**4, E.B * u**6)

    def f(P):
        if P is INF:
            return INF
        return (P[0] * u**2, P[1] * u**3)

    return E2, f


def isomorphic_over_Q(E: ShortW, E2: ShortW) -> bool:
    A, B, A2, B2 = (Fraction(c) for c in (E.A, E.B, E2.A, E2.B))
    if E.j_invariant() != E2.j_invariant():
        return False
    if B == 0:
        return rational_nth_root(A2 / A, 4) is not None
    if A == 0:
        return rational_nth_root(B2 / B, 6) is not None
    # A2 = u^4 A and B2 = u^6 B  <=>  u^2 = (B2/B)/(A2/A)
    u2 = (B2 / B) / (A2 / A)
    return rational_nth_root(u2, 2) is not None and u2 * u2 == A2 / A


def integral_scale(E: ShortW) -> int:
    """Least u > 0 with A u^4 and B u^6 integral (E over Q)."""
    from ..exactalg import factor_integer, valuation

    A, B = Fraction(E.A), Fraction(E.B)
    den = A.denominator * B.denominator
    u = 1
    if den > 1:
        for p, _ in factor_integer(den).factors:
            u *= p ** max(-(-valuation(A.denominator, p) // 4), -(-valuation(B.denominator, p) // 6))
    return u
