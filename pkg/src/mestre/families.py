"""Curve families over Q(t) with many rational points, and their specializations.

* ``twist_family(j)``: two points on a quadratic twist, for any j.
* ``euler_family_1728()``: four points, j = 1728, from Euler's quartic.
* ``sextic_family_0()``: six points, j = 0, from a sextic p with p - g^3 cubic.

Every family records the polynomials in t whose rational zeros make a
specialization degenerate; ``specialize`` refuses those values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .covers import CoverSpec, CurveMap, cover_for_invariant
from .ellcurve import (
    INF,
    CubicYModel,
    DegenerateModelError,
    QuarticModel,
    ShortW,
    SingularCurveError,
    cubic_y3_to_weierstrass,
    integral_scale,
    isomorphic_over_Q,
    quartic_to_weierstrass,
    scale_model,
    sub,
)
from .exactalg import (
    Poly,
    QuadExt,
    RatFunc,
    irreducibility_witness,
    is_nth_power_up_to_constant,
    rational_nth_root,
    rational_roots,
)
from .heights import DEFAULT_PREC, RankCertificate, independence_certificate

T = RatFunc.t()


def _bad(polys_with_reasons):
    """Drop constants; keep (poly, reason) pairs whose zeros are excluded."""
    out = []
    for p, why in polys_with_reasons:
        p = p.num if isinstance(p, RatFunc) else p
        if p.degree >= 1:
            out.append((p, why))
    return out


def _excluded_reason(bad, t0) -> str | None:
    for p, why in bad:
        if p(t0) == 0:
            return why
    return None


def _excluded_values(bad) -> list[Fraction]:
    vals = set()
    for p, _ in bad:
        vals.update(rational_roots(p))
    return sorted(vals)


# twists of a curve with two maps from a hyperelliptic cover ------------------


def _short_maps(C: CoverSpec) -> tuple[CurveMap, CurveMap]:
    """The cover's maps composed with the change of variables to C.E."""
    if C.f == Poly((C.E.B, C.E.A, 0, 1)):
        return C.rho, C.rho_prime
    # j = 1728 special cover: Z = 2x - 1, Y = 2y
    return tuple(CurveMap(2 * m.xfun - 1, 2 * m.yfun) for m in (C.rho, C.rho_prime))


@dataclass
class TwistFamily:
    j: Fraction
    cover: CoverSpec
    f: Poly
    E: ShortW
    curve: ShortW
    points: list
    isotrivial: bool
    bad: list = field(repr=False)

    family_id = "twist"

    @property
    def excluded_values(self) -> list[Fraction]:
        return _excluded_values(self.bad)


def twist_family(j) -> TwistFamily:
    """Twist of E by f, where Y^2 = f(t) covers E twice; points p o w - p.

    For a map p: (t, Y) -> (xfun, yfun Y), the point p(t, -Y) - p(t, Y) is
    computed over Q(t)(sqrt f) by the group law; it has the shape
    (xi, eta sqrt f) and gives (f xi, f^2 eta) on y^2 = x^3 + a f^2 x + b f^3.
    """
    j = Fraction(j)
    C = cover_for_invariant(j)
    E = C.E
    f = C.S
    F = RatFunc(f)
    root = QuadExt.sqrt(F)
    EF = ShortW(RatFunc(E.A), RatFunc(E.B))
    curve = ShortW(E.A * F * F, E.B * F * F * F)
    points = []
    bad = [(f, "f(t0) = 0")]
    for m in _short_maps(C):
        P = (QuadExt(m.xfun, RatFunc(0), F), m.yfun * root)
        Pw = (P[0], -P[1])
        R = sub(EF, Pw, P)
        if R is INF:
            raise DegenerateModelError("p o w - p is the identity")
        xi, y = R
        if xi.b or y.a:
            raise AssertionError("p o w - p is not Galois-antisymmetric")
        xi, eta = xi.a, y.b
        Q = (F * xi, F * F * eta)
        if not curve.contains(Q):
            raise AssertionError("twisted point is not on the twisted curve")
        points.append(Q)
        bad += [(xi.den, "pole of a twisted point"), (eta.den, "pole of a twisted point")]
    if E.A and E.B:
        iso = is_nth_power_up_to_constant(F, 2)
    elif E.B == 0:
        iso = is_nth_power_up_to_constant(curve.A, 4)
    else:
        iso = is_nth_power_up_to_constant(curve.B, 6)
    return TwistFamily(j, C, f, E, curve, points, iso, _bad(bad))


# Euler's quartic, j = 1728 -------------------------------------------------


@dataclass
class QuarticFamily:
    roots: tuple
    model: QuarticModel
    curve: ShortW
    points: list
    origin_image: object
    checks: dict
    bad: list = field(repr=False)

    family_id = "euler1728"

    @property
    def A(self) -> RatFunc:
        return self.curve.A

    @property
    def excluded_values(self) -> list[Fraction]:
        return _excluded_values(self.bad)


@lru_cache(maxsize=1)
def euler_family_1728() -> QuarticFamily:
    t = T
    x1 = t * (2 * t**2 - 1) / (2 * t**2 + 1)
    x2 = (2 * t**2 - 1) / (2 * t * (2 * t**2 + 1))
    x3 = 4 * t / (2 * t**2 - 1)
    x4 = -x1 - x2 - x3
    checks = {"euler_identity": x1 * x2 * x3 * (x1 + x2 + x3) == 1}
    model = QuarticModel.from_roots((x1, x2, x3, x4), RatFunc(1))
    checks["a0_is_minus_one"] = model.a0 == -1
    mp = quartic_to_weierstrass(model)
    curve = mp.curve
    points = [mp(P) for P in model.points]
    checks["points_on_curve"] = all(curve.contains(P) for P in points)
    checks["A_not_fourth_power"] = not is_nth_power_up_to_constant(curve.A, 4)
    bad = [(x.den, "pole of a root") for x in (x1, x2, x3, x4)]
    bad += [(curve.A.num, "A(t0) = 0"), (curve.A.den, "pole of A"), (model.a1.num, "a1(t0) = 0")]
    return QuarticFamily((x1, x2, x3, x4), model, curve, points, mp(model.origin), checks, _bad(bad))


# the sextic p with p - g^3 cubic, j = 0 ------------------------------------------

def sextic_roots() -> tuple[list[Poly], dict]:
    """x1..x6, with the t^2 coefficient of x2 solved from sum x_i = 0."""
    t = Poly.x()
    x1 = -126 * (35 * t - 19) * (14 * t - 13) * (t + 1)
    x3 = -x1
    x4 = 63 * (1127 * t**3 - 3108 * t**2 + 3525 * t - 988)
    x5 = -113876 * t**3 + 265629 * t**2 - 259980 * t + 69103
    x6 = 104615 * t**3 - 293412 * t**2 + 232197 * t - 78364
    known = 63 * (-980 * t**3 - 3084 * t + 1135)
    resid = x1 + x3 + x4 + x5 + x6 + known
    if resid[0] or resid[1] or resid[3] or resid.degree > 3:
        raise ArithmeticError("no t^2 coefficient of x2 makes the roots sum to zero")
    c = -resid[2] / 63
    x2 = known + 63 * c * t**2
    return [x1, x2, x3, x4, x5, x6], {"x2_t2_coefficient": c}


@dataclass
class CubicFamily:
    roots: list
    model: CubicYModel
    D: Poly
    cube_root: RatFunc
    curve: ShortW
    points: list
    origin: str
    checks: dict
    notes: dict
    bad: list = field(repr=False)

    family_id = "sextic0"

    @property
    def excluded_values(self) -> list[Fraction]:
        return _excluded_values(self.bad)


@lru_cache(maxsize=2)
def sextic_family_0(origin: str = "infinity", witness_bound: int = 200) -> CubicFamily:
    xs, notes = sextic_roots()
    model = CubicYModel.from_roots(tuple(RatFunc(x) for x in xs))
    checks = {"roots_sum_zero": sum(xs, Poly()) == 0}
    checks["deg_r_le_3"] = len(model.r) <= 4
    D = model.discriminant()
    checks["disc_r_nonzero"] = bool(D)
    mp = cubic_y3_to_weierstrass(model, origin=origin)
    u = mp.notes["cube_root"]
    checks["a3_is_cube"] = u**3 == model.a3
    checks["D_not_sixth_power"] = not is_nth_power_up_to_constant(D, 6)
    w = irreducibility_witness(D.num, witness_bound)
    notes["irreducibility_witness"] = w
    notes["witness_bound"] = witness_bound
    checks["D_irreducible_witness"] = w is not None
    notes["twist_sign"] = mp.notes["twist_sign"]
    checks["model_is_y2_x3_minus_16D"] = mp.notes["twist_sign"] == -1
    curve = mp.curve
    points = [mp(P) for P in model.points]
    checks["points_on_cubic"] = all(model.contains(P) for P in model.points)
    checks["points_on_curve"] = all(curve.contains(P) for P in points)
    c0, c1, c2, _ = model.r
    Y0 = -c2 / (3 * u * u)
    W0 = 3 * u * Y0 * Y0 - c1
    bad = [(D.num, "disc r(t0) = 0"), (u.num, "a3(t0) = 0"), (W0.num, "point at infinity is a flex")]
    return CubicFamily(xs, model, D.num, u, curve, points, origin, checks, notes, _bad(bad))


# specialization ------------------------------------------------------------


@dataclass
class SpecializedCurve:
    family_id: str
    t0: Fraction
    curve: ShortW | None
    points: list
    excluded: str | None = None
    scale: int = 1

    def on_curve(self) -> bool:
        return self.curve is not None and all(self.curve.contains(P) for P in self.points)


def _eval(v, t0):
    return v(t0) if isinstance(v, RatFunc) else Fraction(v)


def _clear(family_id, t0, E, pts) -> SpecializedCurve:
    u = integral_scale(E)
    E2, f = scale_model(E, u)
    pts = [f(P) for P in pts]
    sc = SpecializedCurve(family_id, t0, E2, pts, None, u)
    if not sc.on_curve():
        raise AssertionError(f"specialized point off the curve at t = {t0}")
    return sc


def specialize(family, t0) -> SpecializedCurve:
    t0 = Fraction(t0)
    fid = family.family_id
    why = _excluded_reason(family.bad, t0)
    if why is None and isinstance(family, TwistFamily) and rational_nth_root(family.f(t0), 2) is not None:
        why = "f(t0) is a square: trivial twist"
    if why is not None:
        return SpecializedCurve(fid, t0, None, [], why)
    try:
        if isinstance(family, TwistFamily):
            E = ShortW(_eval(family.curve.A, t0), _eval(family.curve.B, t0))
            pts = [(_eval(x, t0), _eval(y, t0)) for x, y in family.points]
        elif isinstance(family, QuarticFamily):
            M = QuarticModel.from_roots(tuple(x(t0) for x in family.roots), Fraction(1))
            mp = quartic_to_weierstrass(M)
            E, pts = mp.curve, [mp(P) for P in M.points]
        elif isinstance(family, CubicFamily):
            M = CubicYModel.from_roots(tuple(Fraction(x(t0)) for x in family.roots))
            mp = cubic_y3_to_weierstrass(M, cube_root=family.cube_root(t0), origin=family.origin)
            E, pts = mp.curve, [mp(P) for P in M.points]
        else:
            raise TypeError(f"unknown family {family!r}")
    except (DegenerateModelError, SingularCurveError, ZeroDivisionError, ValueError) as exc:
        return SpecializedCurve(fid, t0, None, [], f"degenerate: {exc}")
    if any(P is INF for P in pts):
        return SpecializedCurve(fid, t0, None, [], "a point specializes to the identity")
    return _clear(fid, t0, E, pts)


def certify(spec: SpecializedCurve, prec_bits: int = DEFAULT_PREC, **kw) -> RankCertificate:
    if spec.excluded is not None:
        raise ValueError(f"t0 = {spec.t0} is excluded: {spec.excluded}")
    return independence_certificate(spec.curve, spec.points, prec_bits, **kw)


def distinct_classes(specs) -> list[list[SpecializedCurve]]:
    """Partition by isomorphism over Q, in input order."""
    classes: list[list[SpecializedCurve]] = []
    for s in specs:
        if s.curve is None:
            continue
        for cls in classes:
            if isomorphic_over_Q(cls[0].curve, s.curve):
                cls.append(s)
                break
        else:
            classes.append([s])
    return classes
