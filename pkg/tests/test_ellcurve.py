from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mestre.ellcurve import (
    INF,
    CubicYModel,
    DegenerateModelError,
    LongW,
    QuarticModel,
    ShortW,
    SingularCurveError,
    add,
    cubic_y3_to_weierstrass,
    double,
    integral_scale,
    isomorphic_over_Q,
    map_point,
    mul,
    neg,
    quadratic_twist,
    quartic_to_weierstrass,
    scale_model,
    sub,
    torsion_order,
)

E = ShortW(F(0), F(-2))
P = (F(3), F(5))


def test_singular_rejected():
    with pytest.raises(SingularCurveError):
        ShortW(F(-3), F(2))


def test_group_law():
    assert E.contains(double(E, P))
    assert add(E, P, neg(E, P)) is INF
    assert add(E, P, INF) == P
    assert mul(E, 5, P) == add(E, mul(E, 2, P), mul(E, 3, P))
    assert mul(E, -3, P) == neg(E, mul(E, 3, P))
    assert sub(E, mul(E, 4, P), P) == mul(E, 3, P)


@settings(max_examples=25, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
def test_associativity(a, b, c):
    Pa, Pb, Pc = (mul(E, k, P) for k in (a, b, c))
    assert add(E, add(E, Pa, Pb), Pc) == add(E, Pa, add(E, Pb, Pc))


def test_torsion():
    E2 = ShortW(F(-1), F(0))
    assert torsion_order(E2, (F(0), F(0))) == 2
    # y^2 = x^3 + 1 has (2, 3) of order 6
    assert torsion_order(ShortW(F(0), F(1)), (F(2), F(3))) == 6
    assert torsion_order(E, P) is None


def test_j_invariant_and_twist():
    assert E.j_invariant() == 0
    assert ShortW(F(-1), F(0)).j_invariant() == 1728
    T = quadratic_twist(ShortW(F(-2), F(3)), F(5))
    assert T.j_invariant() == ShortW(F(-2), F(3)).j_invariant()
    assert not isomorphic_over_Q(T, ShortW(F(-2), F(3)))
    assert isomorphic_over_Q(quadratic_twist(ShortW(F(-2), F(3)), F(4)), ShortW(F(-2), F(3)))


def test_sextic_and_quartic_twist_classes():
    assert isomorphic_over_Q(ShortW(F(0), F(2)), ShortW(F(0), F(2 * 64)))
    assert not isomorphic_over_Q(ShortW(F(0), F(2)), ShortW(F(0), F(-2)))
    assert isomorphic_over_Q(ShortW(F(3), F(0)), ShortW(F(3 * 16), F(0)))
    assert not isomorphic_over_Q(ShortW(F(3), F(0)), ShortW(F(-3), F(0)))


def test_scale_model_and_integral_scale():
    E2 = ShortW(F(1, 16), F(-3, 64))
    u = integral_scale(E2)
    assert u == 2
    E3, f = scale_model(E2, u)
    assert E3.A.denominator == 1 and E3.B.denominator == 1


def test_long_model_change_of_coordinates():
    L = LongW(F(1), F(-1), F(1), F(-3), F(5))
    u, r, s, t = F(2), F(1), F(-1), F(3)
    L2 = L.change_coords(u, r, s, t)
    assert L2.discriminant == L.discriminant / u**12
    assert L2.c4 == L.c4 / u**4
    for x0 in range(-5, 6):
        # find points on L by brute force and push them through
        for y0 in range(-30, 31):
            pt = (F(x0), F(y0))
            if L.contains(pt):
                assert L2.contains(map_point(pt, u, r, s, t))


def test_short_model_of_long():
    L = LongW(F(0), F(0), F(1), F(-1), F(0))  # 37a
    S, f = L.short_model()
    assert L.contains((F(0), F(0)))
    assert S.contains(f((F(0), F(0))))


QUARTIC_ROOTS = tuple(F(v) for v in (-9, -8, -1, 18))


def test_quartic_reduction():
    M = QuarticModel.from_roots(QUARTIC_ROOTS, F(6))
    assert M.a0 == -(6**4)
    mm = quartic_to_weierstrass(M)
    assert mm.curve.A == M.weierstrass_A and mm.curve.B == 0
    for pt in M.points:
        assert M.contains(pt)
        assert mm.curve.contains(mm(pt))
    assert mm(M.origin) is INF


def test_quartic_model_validation():
    with pytest.raises(ValueError):
        QuarticModel.from_roots(QUARTIC_ROOTS, F(5))


SEXTIC_ROOTS = tuple(F(v) for v in (-7, -6, -1, 3, 5, 6))


@pytest.mark.parametrize("origin", ["infinity", "tangent"])
def test_cubic_reduction(origin):
    M = CubicYModel.from_roots(SEXTIC_ROOTS)
    assert M.a3 == 64
    mm = cubic_y3_to_weierstrass(M, origin=origin)
    assert mm.curve.A == 0
    for pt in M.points:
        assert M.contains(pt)
        assert mm.curve.contains(mm(pt))
    R = mm.notes["tangent_point"]
    assert M.contains(R)
    if origin == "tangent":
        assert mm(R) is INF
    else:
        assert mm.curve.contains(mm(R))
    # the model is one of the two sextic twists y^2 = x^3 -+ 16 D
    assert mm.notes["twist_sign"] in (-1, 1)
    assert isomorphic_over_Q(mm.curve, ShortW(F(0), 16 * mm.notes["twist_sign"] * M.discriminant()))


def test_cubic_reduction_rejects_bad_cube_root():
    M = CubicYModel.from_roots(SEXTIC_ROOTS)
    with pytest.raises(ValueError):
        cubic_y3_to_weierstrass(M, cube_root=F(5))
    with pytest.raises(ValueError):
        cubic_y3_to_weierstrass(M, origin="nowhere")


def test_degenerate_model_error_is_value_error():
    assert issubclass(DegenerateModelError, ValueError)
