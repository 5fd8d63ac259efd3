"""Univariate polynomials over Q with exact Fraction coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Rational


def as_rat(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot coerce {c!r} to a rational")


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x**i."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        # coeffs already Fractions and trimmed
        p = cls.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots) -> Poly:
        p = cls((1,))
        for r in roots:
            p = p * cls((-as_rat(r), 1))
        return p

    # basic structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs) if len(self.coeffs) > 1 else hash(self[0])
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            elif mono:
                s = f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}"
            else:
                s = str(c)
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")

    # arithmetic ------------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Rational)):
            return Poly((other,))
        return None

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return Poly(cs)

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
            c = as_rat(other)
            if c == 0:
                return Poly._raw(())
            return Poly._raw(tuple(a * c for a in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        # integer convolution after clearing denominators is much faster than
        # Fraction products
        da = lcm(*(c.denominator for c in a))
        db = lcm(*(c.denominator for c in b))
        ia = [c.numerator * (da // c.denominator) for c in a]
        ib = [c.numerator * (db // c.denominator) for c in b]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        d = da * db
        return Poly._raw(tuple(Fraction(c, d) for c in out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly._raw((Fraction(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            c = as_rat(other)
            return Poly._raw(tuple(a / c for a in self.coeffs))
        return NotImplemented

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly._raw(()), self
        quo = [Fraction(0)] * (dq + 1)
        inv = 1 / o.lc
        ob = o.coeffs
        m = len(ob) - 1
        for k in range(dq, -1, -1):
            c = rem[k + m] * inv
            quo[k] = c
            if c:
                for j in range(m + 1):
                    rem[k + j] -= c * ob[j]
        return Poly(quo), Poly(rem[:m])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    # evaluation and calculus -----------------------------------------------

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element (Fraction, Poly, RatFunc, ...)."""
        if not self.coeffs:
            return Fraction(0) if isinstance(x, (int, Rational)) else x * 0
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if isinstance(x, (int, Rational)):
            return as_rat(acc)
        if not isinstance(acc, type(x)):
            acc = x * 0 + acc
        return acc

    def derivative(self) -> Poly:
        return Poly._raw(tuple(i * c for i, c in enumerate(self.coeffs) if i)) if len(self.coeffs) > 1 else Poly._raw(())

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        inv = 1 / self.lc
        return Poly._raw(tuple(c * inv for c in self.coeffs))

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive in Z[x] (0 for zero)."""
        if not self.coeffs:
            return Fraction(0)
        num = reduce(gcd, (c.numerator for c in self.coeffs))
        den = lcm(*(c.denominator for c in self.coeffs))
        return Fraction(abs(num), den)

    def primitive_int(self) -> list[int]:
        """Integer coefficient list of the primitive part, leading coefficient positive."""
        if not self.coeffs:
            return []
        c = self.content()
        if self.lc < 0:
            c = -c
        return [int(a / c) for a in self.coeffs]

    def shift(self, k: int) -> Poly:
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Poly._raw((Fraction(0),) * k + self.coeffs)

    def compose(self, q) -> Poly:
        return self(q)


X = Poly.x()


def _prim(f: list[int]) -> list[int]:
    g = reduce(gcd, f)
    if f[-1] < 0:
        g = -g
    return [c // g for c in f] if g != 1 else f


def _int_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive PRS gcd of nonzero primitive integer polynomials (low degree first)."""
    if len(f) < len(g):
        f, g = g, f
    while True:
        # pseudo-remainder of f by g, reduced to its primitive part
        r = list(f)
        lg, m = g[-1], len(g) - 1
        while len(r) > m and r:
            lr = r[-1]
            k = len(r) - 1 - m
            r = [c * lg for c in r]
            for j in range(m + 1):
                r[k + j] -= lr * g[j]
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        if not r:
            return g
        f, g = g, _prim(r)


def _int_divides(h: list[int], f: list[int]) -> bool:
    """Whether h divides f in Z[x]."""
    r = list(f)
    lh, m = h[-1], len(h) - 1
    while len(r) > m:
        q, rem = divmod(r[-1], lh)
        if rem:
            return False
        k = len(r) - 1 - m
        if q:
            for j in range(m + 1):
                r[k + j] -= q * h[j]
        r.pop()
    return not any(r)


def _heuristic_gcd(f: list[int], g: list[int]) -> list[int] | None:
    """GCDHEU: gcd of values at a large integer, read back in balanced base xi."""
    bound = min(max(abs(c) for c in f), max(abs(c) for c in g))
    xi = 2 * bound + 29
    for _ in range(6):
        hv = gcd(sum(c * xi**i for i, c in enumerate(f)), sum(c * xi**i for i, c in enumerate(g)))
        h = []
        while hv:
            d = hv % xi
            if d > xi // 2:
                d -= xi
            h.append(d)
            hv = (hv - d) // xi
        if h:
            h = _prim(h)
            if _int_divides(h, f) and _int_divides(h, g):
                return h
        xi = xi * 73794 // 27011
    return None


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero if both are zero)."""
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return Poly._raw((Fraction(1),))
    f, g = a.primitive_int(), b.primitive_int()
    h = _heuristic_gcd(f, g)
    if h is None:
        h = _int_gcd(f, g)
    return Poly(h).monic()


def resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant via the Euclidean remainder sequence over Q."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    m, n = f.degree, g.degree
    if n == 0:
        return g.lc ** m
    if m == 0:
        return f.lc ** n
    sign = 1
    acc = Fraction(1)
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return sign * acc * g.lc ** m
        r = f % g
        if r.is_zero():
            return Fraction(0)
        k = r.degree
        if (m * n) % 2:
            sign = -sign
        acc *= g.lc ** (m - k)
        f, g = g, r


def poly_discriminant(p: Poly) -> Fraction:
    """Discriminant (-1)^(d(d-1)/2) Res(p, p') / lc(p)."""
    d = p.degree
    if d < 1:
        raise ValueError("discriminant needs a polynomial of degree >= 1")
    if d == 1:
        return Fraction(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc


def squarefree_decomposition(p: Poly) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Yun's algorithm: p = c * prod f_i**e_i with monic squarefree pairwise-coprime f_i."""
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    c = p.lc
    f = p.monic()
    if f.degree == 0:
        return c, []
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    cc = fp.exact_div(a)
    d = cc - b.derivative()
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        cc = d.exact_div(g)
        d = cc - b.derivative()
        i += 1
    return c, out


def squarefree_part(p: Poly) -> tuple[Poly, Poly]:
    """Split p = S * T**2 with S squarefree (constant folded into S)."""
    c, facs = squarefree_decomposition(p)
    s = Poly((c,))
    t = Poly((1,))
    for f, e in facs:
        if e % 2:
            s = s * f
        t = t * f ** (e // 2)
    return s, t


def integer_nth_root(n: int, k: int) -> int | None:
    """Exact k-th root of an integer, or None."""
    if n < 0:
        if k % 2 == 0:
            return None
        r = integer_nth_root(-n, k)
        return None if r is None else -r
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x ** k == n else None


def rational_nth_root(q, n: int) -> Fraction | None:
    q = as_rat(q)
    a = integer_nth_root(q.numerator, n)
    b = integer_nth_root(q.denominator, n)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def nth_root_poly(p: Poly, n: int) -> Poly | None:
    """q with q**n == p over Q if it exists (positive leading coefficient for even n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if p.is_zero():
        return p
    c, facs = squarefree_decomposition(p)
    if any(e % n for _, e in facs):
        return None
    rc = rational_nth_root(c, n)
    if rc is None:
        return None
    q = Poly((rc,))
    for f, e in facs:
        q = q * f ** (e // n)
    return q


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of p, sorted.

    Roots are located numerically and snapped to fractions whose denominator
    divides the leading coefficient of the primitive integer form, then
    confirmed exactly.
    """
    import mpmath

    if p.is_zero():
        raise ValueError("zero polynomial has every rational as a root")
    roots = []
    f = p
    # strip x**k
    k = 0
    while f.degree > 0 and f[0] == 0:
        f = Poly._raw(f.coeffs[1:])
        k += 1
    if k:
        roots.append(Fraction(0))
    if f.degree < 1:
        return roots
    _, facs = squarefree_decomposition(f)
    for g, _ in facs:
        coeffs = g.primitive_int()
        if g.degree == 1:
            roots.append(Fraction(-coeffs[0], coeffs[1]))
            continue
        lead = coeffs[-1]
        size = max(abs(c) for c in coeffs).bit_length()
        bits = 2 * size + 2 * lead.bit_length() + 64
        with mpmath.workprec(bits):
            try:
                approx = mpmath.polyroots(coeffs[::-1], maxsteps=400, extraprec=2 * bits)
            except mpmath.libmp.NoConvergence:
                approx = mpmath.polyroots(coeffs[::-1], maxsteps=4000, extraprec=4 * bits)
            for z in approx:
                if abs(mpmath.im(z)) > mpmath.mpf(2) ** (-bits // 4) * (1 + abs(z)):
                    continue
                re = mpmath.re(z)
                cand = Fraction(mpmath.nstr(re, bits // 3, strip_zeros=False)).limit_denominator(lead)
                if g(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)
