"""The two non-Weierstrass genus-one models and their reduction to short Weierstrass form.

* ``QuarticModel``: x^4 + a2 y^2 + a1 y + a0 = 0 with a0 = -u^4, marked points
  (x_i, x_i) for the roots of x^4 + a2 x^2 + a1 x + a0 and origin (-u, 0).
* ``CubicYModel``: r(x) + y^3 = 0 with r = p - g^3, marked points (x_i, g(x_i))
  for the roots of the sextic p, origin the rational point at infinity.

Both reductions go through a quartic v^2 = q(U) whose constant term is a
square, which is then sent to a long Weierstrass model by the classical
formulas (the point U = 0, v = q goes to infinity).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..exactalg import RatFunc, nth_root_ratfunc, rational_nth_root
from .curves import INF, LongW, ShortW


class DegenerateModelError(ValueError):
    pass


def field_nth_root(v, n: int):
    """Exact n-th root in Q or Q(t), or None."""
    if isinstance(v, RatFunc):
        return nth_root_ratfunc(v, n)
    return rational_nth_root(v, n)


def horner(coeffs, x):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def taylor_shift(coeffs, x0):
    """Coefficients of f(x0 + U) in U, for f given low degree first."""
    cs = list(coeffs)
    n = len(cs)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            cs[j] = cs[j] + x0 * cs[j + 1]
    return cs


@dataclass(frozen=True)
class QuarticPointCurve:
    """v^2 = a U^4 + b U^3 + c U^2 + d U + q^2, sent to a long Weierstrass model."""

    a: Any
    b: Any
    c: Any
    d: Any
    q: Any

    def __post_init__(self):
        if not self.q:
            raise DegenerateModelError("the marked point must have v != 0")

    def long_model(self) -> LongW:
        a, b, c, d, q = self.a, self.b, self.c, self.d, self.q
        a2 = c - d * d / (4 * q * q)
        a4 = -4 * q * q * a
        return LongW(d / q, a2, 2 * q * b, a4, a2 * a4)

    def __call__(self, U, v):
        q, c, d = self.q, self.c, self.d
        if not U:
            if v == q:
                return INF
            if v != -q:
                raise ValueError("point is not on the quartic")
            # limit along the branch v = -q - d U / (2q) + ...
            return (d * d / (4 * q * q) - c, c * d / q - 2 * self.b * q - d**3 / (4 * q**3))
        X = (2 * q * (v + q) + d * U) / (U * U)
        Y = (4 * q * q * (v + q) + 2 * q * (d * U + c * U * U) - d * d * U * U / (2 * q)) / (U * U * U)
        return (X, Y)


@dataclass
class ModelMap:
    """Result of a model reduction: the Weierstrass curve and the point map onto it."""

    curve: ShortW
    _steps: list = field(repr=False)
    notes: dict = field(default_factory=dict)

    def __call__(self, P):
        for step in self._steps:
            P = step(P)
            if P is INF:
                return INF
        return P


# quartic model (j = 1728) -----------------------------------------------


@dataclass(frozen=True)
class QuarticModel:
    a0: Any
    a1: Any
    a2: Any
    roots: tuple
    u: Any

    def __post_init__(self):
        x1, x2, x3, x4 = self.roots
        if x1 + x2 + x3 + x4 != 0:
            raise ValueError("roots must sum to zero")
        if self.a0 != -self.u**4:
            raise ValueError("a0 must equal -u^4")
        for r in self.roots:
            if self.poly(r):
                raise ValueError("listed root is not a root of x^4 + a2 x^2 + a1 x + a0")
        if not self.a2 or not (self.a1 * self.a1 - 4 * self.a0 * self.a2):
            raise DegenerateModelError("a2 (a1^2 - 4 a0 a2) vanishes")

    @classmethod
    def from_roots(cls, roots, u) -> QuarticModel:
        x1, x2, x3, x4 = roots
        e2 = x1 * x2 + x1 * x3 + x1 * x4 + x2 * x3 + x2 * x4 + x3 * x4
        e3 = x1 * x2 * x3 + x1 * x2 * x4 + x1 * x3 * x4 + x2 * x3 * x4
        e4 = x1 * x2 * x3 * x4
        return cls(a0=e4, a1=-e3, a2=e2, roots=tuple(roots), u=u)

    def poly(self, x):
        return x**4 + self.a2 * x * x + self.a1 * x + self.a0

    def contains(self, P) -> bool:
        x, y = P
        return x**4 + self.a2 * y * y + self.a1 * y + self.a0 == 0

    @property
    def points(self):
        return [(r, r) for r in self.roots]

    @property
    def origin(self):
        return (-self.u, self.u * 0)

    @property
    def weierstrass_A(self):
        return self.a2 * (self.a1 * self.a1 - 4 * self.a0 * self.a2)


def quartic_to_weierstrass(M: QuarticModel) -> ModelMap:
    """Map onto y^2 = x^3 + a2 (a1^2 - 4 a0 a2) x sending the origin (-u, 0) to infinity."""
    a0, a1, a2 = M.a0, M.a1, M.a2
    if not a1:
        raise DegenerateModelError("a1 = 0: the origin is a branch point of w^2 = -4 a2 x^4 + ...")
    alpha = -4 * a2
    x0 = -M.u
    # v^2 = alpha (x0 + U)^4 + beta, constant term a1^2 at the origin
    qc = QuarticPointCurve(alpha, 4 * alpha * x0, 6 * alpha * x0**2, 4 * alpha * x0**3, a1)
    long_model = qc.long_model()
    short, to_short = long_model.short_model()
    target = ShortW(M.weierstrass_A, a0 * 0)
    if short.B:
        raise AssertionError("quartic reduction produced a curve with B != 0")
    scale = field_nth_root(target.A / short.A, 4)
    if scale is None:
        raise AssertionError("reduced curve is not the expected quartic twist")

    def to_quartic(P):
        x, y = P
        return (x - x0, 2 * a2 * y + a1)

    def wash(P):
        return qc(*P)

    def rescale(P):
        return (P[0] * scale**2, P[1] * scale**3)

    return ModelMap(target, [to_quartic, wash, to_short, rescale], {"scale": scale, "long_model": long_model})


# cubic-in-y model (j = 0) -----------------------------------------------


def cubic_discriminant(c0, c1, c2, c3):
    return c2 * c2 * c1 * c1 - 4 * c3 * c1**3 - 4 * c2**3 * c0 - 27 * c3 * c3 * c0 * c0 + 18 * c3 * c2 * c1 * c0


@dataclass(frozen=True)
class CubicYModel:
    """r(x) + y^3 = 0 with r = p - g^3; polynomials stored as coefficient tuples (low first)."""

    p: tuple
    g: tuple
    r: tuple
    roots: tuple

    @classmethod
    def from_roots(cls, roots) -> CubicYModel:
        if len(roots) != 6:
            raise ValueError("need six roots")
        zero = roots[0] * 0
        # p = prod (x - x_i)
        p = [zero + 1]
        for xi in roots:
            nxt = [zero] * (len(p) + 1)
            for k, c in enumerate(p):
                nxt[k + 1] = nxt[k + 1] + c
                nxt[k] = nxt[k] - xi * c
            p = nxt
        if p[5]:
            raise ValueError("roots must sum to zero")
        a4 = p[4]
        g = (a4 / 3, zero, zero + 1)
        g3 = [zero] * 7
        # (x^2 + k)^3 = x^6 + 3k x^4 + 3k^2 x^2 + k^3
        k = g[0]
        g3[6], g3[4], g3[2], g3[0] = zero + 1, 3 * k, 3 * k * k, k**3
        r = [p[i] - g3[i] for i in range(7)]
        if any(r[4:]):
            raise AssertionError("p - g^3 has degree > 3")
        return cls(tuple(p), g, tuple(r[:4]), tuple(roots))

    @property
    def a3(self):
        return self.r[3]

    def discriminant(self):
        return cubic_discriminant(*self.r)

    def contains(self, P) -> bool:
        x, y = P
        return horner(self.r, x) + y**3 == 0

    @property
    def points(self):
        return [(xi, horner(self.g, xi)) for xi in self.roots]


def cubic_y3_to_weierstrass(M: CubicYModel, cube_root=None, origin: str = "infinity") -> ModelMap:
    """Reduce r(x) + y^3 = 0 through its rational point at infinity O = [1 : -u : 0], u^3 = a3.

    The substitution Y = y + u x kills the x^3 term, leaving a quadratic in x
    over the Y-line; its discriminant quartic W^2 = q(Y) has a rational point
    over Y0 = -c2/(3u^2) with two branches: W = W0 is O itself, W = -W0 is the
    point R where the tangent at O meets the cubic again (the tangent is the
    line Y = Y0).  ``origin`` picks which of O and R becomes the identity.

    The result is rescaled onto y^2 = x^3 - 16 D (D = disc r) or, failing
    that, onto y^2 = x^3 + 16 D; ``notes['twist_sign']`` records which (-1 for
    the first), and stays None when neither is isomorphic over the base field.
    """
    if origin not in ("tangent", "infinity"):
        raise ValueError("origin must be 'tangent' or 'infinity'")
    c0, c1, c2, c3 = M.r
    if not c3:
        raise DegenerateModelError("r must have degree 3")
    u = cube_root if cube_root is not None else field_nth_root(c3, 3)
    if u is None:
        raise ValueError("leading coefficient of r is not a cube")
    if u**3 != c3:
        raise ValueError("supplied cube root is wrong")
    D = M.discriminant()
    if not D:
        raise DegenerateModelError("disc(r) = 0")
    Y0 = -c2 / (3 * u * u)
    W0 = 3 * u * Y0 * Y0 - c1
    if not W0:
        raise DegenerateModelError("the point at infinity is a flex")
    # W^2 = -3u^2 Y^4 - 4c2 Y^3 - 6u c1 Y^2 - 12u^2 c0 Y + c1^2 - 4 c2 c0
    quartic = [c1 * c1 - 4 * c2 * c0, -12 * u * u * c0, -6 * u * c1, -4 * c2, -3 * u * u]
    e0, e1, e2, e3, e4 = taylor_shift(quartic, Y0)
    if e0 != W0 * W0:
        raise AssertionError("point at infinity did not land on the discriminant quartic")
    qc = QuarticPointCurve(e4, e3, e2, e1, -W0 if origin == "tangent" else W0)
    long_model = qc.long_model()
    short, to_short = long_model.short_model()
    if short.A:
        raise AssertionError("cubic reduction produced A != 0")

    def to_quartic(P):
        x, y = P
        Y = y + u * x
        W = 2 * (3 * u * u * Y + c2) * x + (c1 - 3 * u * Y * Y)
        return (Y - Y0, W)

    def wash(P):
        return qc(*P)

    xR = (c0 + Y0**3) / W0
    notes = {
        "cube_root": u,
        "D": D,
        "origin": origin,
        "tangent_point": (xR, Y0 - u * xR),
        "long_model": long_model,
        "twist_sign": None,
    }
    steps = [to_quartic, wash, to_short]
    for sign in (-1, 1):
        target = ShortW(D * 0, 16 * sign * D)
        scale = field_nth_root(target.B / short.B, 6)
        if scale is not None:
            notes["twist_sign"] = sign

            def rescale(P, scale=scale):
                return (P[0] * scale**2, P[1] * scale**3)

            return ModelMap(target, steps + [rescale], notes)
    notes["ratio_to_minus16D"] = -16 * D / short.B
    return ModelMap(short, steps, notes)
