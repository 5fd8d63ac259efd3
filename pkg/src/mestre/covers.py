"""Hyperelliptic covers carrying two independent maps to elliptic curves.

A cover is stored through its x-line data: C is Y^2 = S(X) with S squarefree,
and a map to y^2 = h(x) is a pair (xfun, yfun) of rational functions meaning
(X, Y) -> (xfun(X), yfun(X) * Y).  Both maps are checked symbolically when a
cover is built.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .ellcurve import ShortW, isomorphic_over_Q
from .exactalg import Poly, RatFunc, poly_gcd, squarefree_part

X = RatFunc.t()


class InvalidPairError(ValueError):
    """Both curves have j = 0, or both have j = 1728."""


@dataclass(frozen=True)
class CurveMap:
    xfun: RatFunc
    yfun: RatFunc

    def __call__(self, Xv, Yv):
        return (self.xfun(Xv), self.yfun(Xv) * Yv)

    def to_json(self) -> dict:
        return {"x": str(self.xfun), "y_over_Y": str(self.yfun)}


def _cubic(E: ShortW) -> Poly:
    return Poly((E.B, E.A, 0, 1))


def _lands(S: Poly, m: CurveMap, h: Poly) -> bool:
    """(yfun * Y)^2 = h(xfun) on Y^2 = S, as an identity in Q(X)."""
    return m.yfun * m.yfun * S == h(m.xfun)


def _differential_ratio(m1: CurveMap, m2: CurveMap) -> RatFunc:
    # m^*(dx/y) = xfun' dX / (yfun Y)
    return m1.xfun.derivative() * m2.yfun / (m2.xfun.derivative() * m1.yfun)


def _genus(S: Poly) -> int:
    g = (S.degree - 1) // 2
    if S.degree <= 2:
        warnings.warn(f"cover is rational (deg S = {S.degree})", stacklevel=3)
    return g


@dataclass(frozen=True)
class CoverSpec:
    """Y^2 = S(X) with maps rho onto y^2 = f(x) and rho_prime onto y^2 = g(x)."""

    E: ShortW
    E_prime: ShortW
    f: Poly
    g: Poly
    phi: RatFunc
    F_cleared: Poly
    S: Poly
    T: Poly
    rho: CurveMap
    rho_prime: CurveMap
    ratio: RatFunc
    genus: int
    notes: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "E": {"A": str(self.E.A), "B": str(self.E.B)},
            "E_prime": {"A": str(self.E_prime.A), "B": str(self.E_prime.B)},
            "phi": str(self.phi),
            "S": str(self.S),
            "T": str(self.T),
            "rho": self.rho.to_json(),
            "rho_prime": self.rho_prime.to_json(),
            "ratio": str(self.ratio),
            "genus": self.genus,
        }


def _admissible(E: ShortW, E2: ShortW) -> bool:
    return not ((E.A == 0 and E2.A == 0) or (E.B == 0 and E2.B == 0))


def phi_function(E: ShortW, E2: ShortW) -> RatFunc:
    """The solution x = phi(u) of u^6 f(x) = g(u^2 x)."""
    a, b, a2, b2 = E.A, E.B, E2.A, E2.B
    return -(b2 - X**6 * b) / (X**2 * (a2 - X**4 * a))


def build_cover(E: ShortW, E2: ShortW) -> CoverSpec:
    if not _admissible(E, E2):
        raise InvalidPairError("j(E) = j(E') = 0 or j(E) = j(E') = 1728")
    f, g = _cubic(E), _cubic(E2)
    phi = phi_function(E, E2)
    fphi = f(phi)
    if g(X**2 * phi) != X**6 * fphi:
        raise AssertionError("phi does not solve u^6 f(x) = g(u^2 x)")
    # Y^2 = N/Dn  <=>  (Y Dn)^2 = N Dn = S T^2
    cleared = fphi.num * fphi.den
    S, T = squarefree_part(cleared)
    yfun = RatFunc(T, fphi.den)
    rho = CurveMap(phi, yfun)
    rho_prime = CurveMap(X**2 * phi, X**3 * yfun)
    if not (_lands(S, rho, f) and _lands(S, rho_prime, g)):
        raise AssertionError("cover maps do not land on the target curves")
    ratio = _differential_ratio(rho, rho_prime)
    return CoverSpec(E, E2, f, g, phi, cleared, S, T, rho, rho_prime, ratio, _genus(S))


def pullback_ratio(C: CoverSpec) -> RatFunc:
    """omega / omega' for omega = rho^*(dx/y), omega' = rho'^*(dx/y)."""
    return _differential_ratio(C.rho, C.rho_prime)


def closed_form_ratio(E: ShortW, E2: ShortW) -> RatFunc:
    """(3 a X^4 b' - 2 X^6 b a' - b' a') / (X^3 (X^6 b a - 3 X^2 b a' + 2 a b'))."""
    a, b, a2, b2 = E.A, E.B, E2.A, E2.B
    num = 3 * a * X**4 * b2 - 2 * X**6 * b * a2 - b2 * a2
    den = X**3 * (X**6 * b * a - 3 * X**2 * b * a2 + 2 * a * b2)
    return num / den


def cover_genus(C: CoverSpec) -> int:
    return C.genus


# special covers and the dispatcher ------------------------------------------

_SPECIAL_1728 = Poly.from_roots([-1, 2]) * Poly((-1, 2))  # (x+1)(x-2)(2x-1)


def special_cover(j) -> CoverSpec:
    """Genus-2 covers for j = 0 (y^2 = x^6 + 1) and j = 1728, with maps t -> t^2 and t -> 1/t^2."""
    j = Fraction(j)
    if j == 0:
        h = Poly((1, 0, 0, 1))
        E = ShortW(Fraction(0), Fraction(1))
        notes = {}
    elif j == 1728:
        h = _SPECIAL_1728
        # (2y)^2 = Z^3 - 9Z with Z = 2x - 1
        E = ShortW(Fraction(-9), Fraction(0))
        notes = {"to_short": "Z = 2x - 1, Y = 2y"}
    else:
        raise ValueError("special covers exist for j = 0 and j = 1728 only")
    S = h(Poly((0, 0, 1)))
    rho = CurveMap(X**2, RatFunc(1))
    rho_prime = CurveMap(1 / X**2, 1 / X**3)
    if not (_lands(S, rho, h) and _lands(S, rho_prime, h)):
        raise AssertionError("special cover maps do not land on the target curve")
    ratio = _differential_ratio(rho, rho_prime)
    return CoverSpec(E, E, h, h, X**2, S, S, Poly((1,)), rho, rho_prime, ratio, _genus(S), notes)


def curve_with_invariant(j) -> ShortW:
    """y^2 = x^3 + a x + a with a = 27 j / (4 (1728 - j)), for j not in {0, 1728}."""
    j = Fraction(j)
    if j in (0, 1728):
        raise ValueError("j = 0 and j = 1728 have no curve of this shape")
    a = 27 * j / (4 * (1728 - j))
    return ShortW(a, a)


def cover_for_invariant(j) -> CoverSpec:
    j = Fraction(j)
    if j in (0, 1728):
        return special_cover(j)
    E = curve_with_invariant(j)
    return build_cover(E, E)


# double covers from a conic parametrization --------------------------------


@dataclass(frozen=True)
class Remark1Spec:
    alpha: Fraction
    beta: Fraction
    a: Fraction
    b: Fraction
    conic_point: tuple
    x1: RatFunc
    x2: RatFunc
    f_cover: Poly
    S: Poly
    genus: int


def conic_double_cover(alpha, beta, b) -> Remark1Spec:
    """Parametrize x1^2 + x1 x2 + x2^2 = a (a = alpha^2 + 3 beta^2) by lines through (alpha - beta, 2 beta).

    Since x1^3 - a x1 - (x2^3 - a x2) = (x1 - x2)(x1^2 + x1 x2 + x2^2 - a), both
    x1(s) and x2(s) give the same value of x^3 - a x + b, whose square class
    defines the cover y^2 = f(x1(s)).
    """
    alpha, beta, b = Fraction(alpha), Fraction(beta), Fraction(b)
    a = alpha**2 + 3 * beta**2
    if not a:
        raise ValueError("a = alpha^2 + 3 beta^2 must be nonzero")
    p1, p2 = alpha - beta, 2 * beta
    s = X
    # (p1 + m, p2 + s m) on the conic: m^2 (1 + s + s^2) + m (2 p1 + p2 + s (p1 + 2 p2)) = 0
    m = -(2 * p1 + p2 + s * (p1 + 2 * p2)) / (1 + s + s * s)
    x1 = p1 + m
    x2 = p2 + s * m
    if x1 * x1 + x1 * x2 + x2 * x2 != a:
        raise AssertionError("parametrization leaves the conic")
    fx1 = x1**3 - a * x1 + b
    if fx1 != x2**3 - a * x2 + b:
        raise AssertionError("x1 and x2 give different cubic values")
    if x1.derivative() * x2 == x2.derivative() * x1:
        raise AssertionError("x1' and x2' are proportional to x1 and x2")
    cleared = fx1.num * fx1.den
    S, _ = squarefree_part(cleared)
    return Remark1Spec(alpha, beta, a, b, (p1, p2), x1, x2, cleared, S, _genus(S))


# gluing along two-torsion ----------------------------------------------------


@dataclass(frozen=True)
class Remark2Spec:
    roots1: tuple
    roots2: tuple
    h: tuple  # (alpha, beta): x -> alpha x + beta
    q1: Poly
    q2: Poly
    shared_degree: int
    transported_isomorphic: bool
    degenerate: bool = False


def _short_from_roots(roots) -> ShortW:
    return _short_from_cubic(Poly.from_roots(list(roots)))


def two_torsion_glue(roots1, roots2) -> Remark2Spec:
    r1 = tuple(Fraction(r) for r in roots1)
    r2 = tuple(Fraction(r) for r in roots2)
    if len(set(r1)) != 3 or len(set(r2)) != 3:
        raise ValueError("roots must be distinct")
    a, b, c = r1
    for ap, bp, cp in itertools.permutations(r2):
        alpha = (ap - bp) / (a - b)
        beta = ap - alpha * a
        if alpha * c + beta == cp:
            continue
        c_pre = (cp - beta) / alpha
        q1 = Poly.from_roots([a, b, c])
        q2 = Poly.from_roots([a, b, c_pre]) * alpha
        shared = poly_gcd(q1, q2).degree
        # with X = h(x), z^2 = q2(x) becomes (alpha z)^2 = alpha^2 q2((X - beta)/alpha)
        transported = q2.compose(Poly((-beta / alpha, 1 / alpha))) * alpha**2
        iso = isomorphic_over_Q(_short_from_cubic(transported), _short_from_roots(r2))
        return Remark2Spec(r1, r2, (alpha, beta), q1, q2, shared, iso)
    return Remark2Spec(r1, r2, (None, None), Poly.from_roots(r1), Poly(), 0, False, degenerate=True)


def _short_from_cubic(q: Poly) -> ShortW:
    """Short model of y^2 = q(x) for a cubic q with leading coefficient c: scale by c."""
    c = q.lc
    # (c^2 y)^2 = (c x)^3 + ... after multiplying by c^4
    monic = q.compose(Poly((0, 1 / c))) * c * c
    shift = monic[2] / 3
    dep = monic.compose(Poly((-shift, 1)))
    return ShortW(dep[1], dep[0])
