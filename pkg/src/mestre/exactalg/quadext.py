"""Quadratic extensions F(sqrt(d)) over any field implemented by this package."""

from __future__ import annotations


class QuadExt:
    """The element a + b*sqrt(d); ``d`` must be a non-square of the base field."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def sqrt(cls, d) -> QuadExt:
        return cls(d * 0, d * 0 + 1, d)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError("mixing different quadratic extensions")
            return other
        try:
            return QuadExt(other, self.b * 0, self.d)
        except TypeError:
            return None

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        return self.b == 0 and self.a == other

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, sqrt({self.d}))"

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QuadExt):
            return QuadExt(self.a * other, self.b * other, self.d)
        o = self._coerce(other)
        return QuadExt(self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def norm(self):
        return self.a * self.a - self.b * self.b * self.d

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.d)

    def inverse(self) -> QuadExt:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in quadratic extension")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if not isinstance(other, QuadExt):
            return QuadExt(self.a / other, self.b / other, self.d)
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self._coerce(self.d * 0 + 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def in_base(self) -> bool:
        return not self.b
