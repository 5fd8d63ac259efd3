"""Rational functions over Q in canonical form (reduced, monic denominator)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .poly import Poly, as_rat, poly_gcd, squarefree_decomposition, rational_nth_root


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = _to_poly(num)
        den = Poly((1,)) if den is None else _to_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced and den.degree > 0 and num:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        if num.is_zero():
            den = Poly((1,))
        elif den.lc != 1:
            c = den.lc
            num = num / c
            den = den / c
        self.num = num
        self.den = den

    @classmethod
    def t(cls) -> RatFunc:
        return cls(Poly.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num[0]

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Rational)):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den.degree == 0:
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (Poly, int, Rational)):
            return RatFunc(other, _reduced=True)
        return None

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den, _reduced=self.den.degree == 0)
        g = poly_gcd(self.den, o.den)
        if g.degree > 0:
            d1 = self.den.exact_div(g)
            d2 = o.den.exact_div(g)
            return RatFunc(self.num * d2 + o.num * d1, d1 * o.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return RatFunc(self.num * other, self.den, _reduced=True)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # cross-cancel before multiplying
        g1 = poly_gcd(self.num, o.den) if self.num and o.den.degree > 0 else Poly((1,))
        g2 = poly_gcd(o.num, self.den) if o.num and self.den.degree > 0 else Poly((1,))
        n1 = self.num.exact_div(g1) if g1.degree > 0 else self.num
        d2 = o.den.exact_div(g1) if g1.degree > 0 else o.den
        n2 = o.num.exact_div(g2) if g2.degree > 0 else o.num
        d1 = self.den.exact_div(g2) if g2.degree > 0 else self.den
        return RatFunc(n1 * n2, d1 * d2, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num, _reduced=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    def __call__(self, x):
        """Evaluate at a rational (raises ZeroDivisionError at a pole) or compose."""
        if isinstance(x, (int, Rational)):
            d = self.den(as_rat(x))
            if d == 0:
                raise ZeroDivisionError(f"pole at t={x}")
            return self.num(as_rat(x)) / d
        return self.num(x) / self.den(x)

    def derivative(self) -> RatFunc:
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def degree_pair(self) -> tuple[int, int]:
        return self.num.degree, self.den.degree


def _to_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Rational, str)):
        return Poly((as_rat(p),))
    raise TypeError(f"cannot coerce {p!r} to a polynomial")


def as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    return RatFunc(x)


def is_nth_power_up_to_constant(h, n: int) -> bool:
    """True iff h = c * s**n with c a nonzero rational and s in Q(t)."""
    h = as_ratfunc(h)
    if h.is_zero():
        raise ValueError("zero is excluded")
    for p in (h.num, h.den):
        if p.degree <= 0:
            continue
        _, facs = squarefree_decomposition(p)
        if any(e % n for _, e in facs):
            return False
    return True


def nth_root_ratfunc(h, n: int) -> RatFunc | None:
    """Exact n-th root in Q(t), if any."""
    from .poly import nth_root_poly

    h = as_ratfunc(h)
    if h.is_zero():
        return h
    # den is monic, so the constant lives in num
    rn = nth_root_poly(h.num, n)
    if rn is None:
        return None
    rd = nth_root_poly(h.den, n)
    if rd is None:
        return None
    return RatFunc(rn, rd)


def rat_is_nth_power(q, n: int) -> bool:
    return rational_nth_root(q, n) is not None
