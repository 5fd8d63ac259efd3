from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from mestre.exactalg import (
    FactorizationError,
    Poly,
    QuadExt,
    RatFunc,
    factor_integer,
    irreducibility_witness,
    is_nth_power_up_to_constant,
    is_probable_prime,
    nth_root_poly,
    nth_root_ratfunc,
    poly_discriminant,
    poly_gcd,
    rat_from_str,
    rat_to_str,
    rational_roots,
    resultant,
    squarefree_decomposition,
    squarefree_part,
    valuation,
)

x = sympy.Symbol("x")
small = st.integers(-20, 20)
polys = st.lists(small, min_size=1, max_size=6).map(Poly)
nonconst = st.lists(small, min_size=2, max_size=6).filter(lambda c: c[-1] != 0).map(Poly)


def to_sympy(p: Poly):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], x, domain="QQ")


def from_sympy(sp) -> Poly:
    return Poly([Fraction(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs())])


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly()


@given(polys, nonconst)
def test_divmod(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=60)
@given(polys, polys)
def test_gcd_matches_sympy(a, b):
    g = poly_gcd(a, b)
    expected = sympy.gcd(to_sympy(a), to_sympy(b))
    if expected.is_zero:
        assert g.is_zero()
    else:
        assert g == from_sympy(expected.monic())


def sylvester(a: Poly, b: Poly):
    m, n = a.degree, b.degree
    ra, rb = list(reversed(a.coeffs)), list(reversed(b.coeffs))
    rows = [[0] * i + ra + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + rb + [0] * (m - 1 - i) for i in range(m)]
    return sympy.Matrix(rows).det()


@settings(max_examples=60)
@given(nonconst, nonconst)
def test_resultant_is_sylvester_determinant(a, b):
    assert resultant(a, b) == Fraction(str(sylvester(a, b)))


def test_resultant_sign_convention():
    # Res(x + 1, x^3) = (-1)^3: sympy reports +1 for this pair, Sylvester gives -1
    assert resultant(Poly((1, 1)), Poly((0, 0, 0, 1))) == -1


@settings(max_examples=60)
@given(nonconst)
def test_discriminant_matches_sympy(p):
    if p.degree < 2:
        return
    assert poly_discriminant(p) == Fraction(str(sympy.discriminant(to_sympy(p))))


def test_cubic_discriminant_closed_form():
    a, b = Fraction(-7), Fraction(6)
    assert poly_discriminant(Poly((b, a, 0, 1))) == -4 * a**3 - 27 * b * b


@settings(max_examples=60)
@given(st.lists(st.tuples(nonconst, st.integers(1, 3)), min_size=1, max_size=3), st.integers(1, 9))
def test_squarefree_reconstruction(parts, c):
    p = Poly((c,))
    for f, e in parts:
        p = p * f**e
    lc, facs = squarefree_decomposition(p)
    back = Poly((lc,))
    for f, e in facs:
        assert f.lc == 1
        back = back * f**e
    assert back == p
    S, T = squarefree_part(p)
    assert S * T * T == p
    assert poly_gcd(S, S.derivative()).degree == 0


@given(nonconst, st.integers(2, 4))
def test_nth_root_round_trip(p, n):
    assert nth_root_poly(p**n, n) ** n == p**n


def test_nth_root_rejects():
    assert nth_root_poly(Poly((1, 0, 2)) * Poly((0, 1)), 2) is None
    assert nth_root_poly(Poly((2,)), 2) is None


def test_ratfunc_arithmetic():
    t = RatFunc.t()
    h = (t**2 + 1) / (t - 3)
    assert h * h.inverse() == 1
    assert h(Fraction(5)) == Fraction(26, 2)
    assert (h**6 * 7).is_constant() is False
    assert is_nth_power_up_to_constant(h**6 * 7, 6)
    assert not is_nth_power_up_to_constant(h**6 * t, 6)
    assert nth_root_ratfunc(h**3, 3) == h
    assert h.derivative() == (t**2 - 6 * t - 1) / (t - 3) ** 2


def test_ratfunc_normal_form():
    t = RatFunc.t()
    a = (2 * t + 2) / (4 * t * t - 4)
    assert a == 1 / (2 * t - 2)
    assert a.den.lc == 1


def test_quadext():
    s = QuadExt.sqrt(Fraction(5))
    assert s * s == 5
    z = 3 + 2 * s
    assert z * z.inverse() == 1
    assert z.norm() == 9 - 20
    assert (z * z.conjugate()).in_base()


@given(st.integers(2, 10**12))
def test_factor_integer_small(n):
    fac = factor_integer(n)
    assert fac.value() == n
    assert dict(fac.factors) == {int(p): e for p, e in sympy.factorint(n).items()}


def test_factor_semiprime_and_budget():
    p, q = 1000000007, 998244353
    assert factor_integer(p * q).primes() == [q, p]
    big = sympy.nextprime(10**30) * sympy.nextprime(10**31)
    with pytest.raises(FactorizationError) as exc:
        factor_integer(int(big) * 12, budget=50)
    assert exc.value.partial.value() == 12
    assert factor_integer(int(big), hints=(int(sympy.nextprime(10**30)),)).value() == int(big)


def test_primality():
    assert is_probable_prime(2**127 - 1)
    assert not is_probable_prime(561)
    assert not is_probable_prime(3215031751)


def test_valuation():
    assert valuation(Fraction(50, 3), 5) == 2
    assert valuation(Fraction(50, 3), 3) == -1


def test_rational_roots():
    p = Poly.from_roots([Fraction(1, 2), -3, 7]) * Poly((1, 0, 1))
    assert rational_roots(p) == [-3, Fraction(1, 2), 7]


def test_irreducibility_witness():
    assert irreducibility_witness(Poly((-2, 0, 0, 1))) is not None
    assert irreducibility_witness(Poly((-4, 0, 1))) is None


def test_rat_strings():
    assert rat_to_str(Fraction(-3, 4)) == "-3/4"
    assert rat_from_str("-3/4") == Fraction(-3, 4)
