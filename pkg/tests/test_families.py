from fractions import Fraction as F

import pytest

from mestre.ellcurve import ShortW, isomorphic_over_Q
from mestre.exactalg import Poly
from mestre.families import (
    certify,
    distinct_classes,
    euler_family_1728,
    sextic_family_0,
    sextic_roots,
    specialize,
    twist_family,
)


@pytest.mark.parametrize("j", [0, 1728, 5, -3])
def test_twist_family(j):
    fam = twist_family(j)
    assert not fam.isotrivial
    assert len(fam.points) == 2
    for P in fam.points:
        assert fam.curve.contains(P)
    assert fam.curve.j_invariant() == j


def test_twist_family_specialization():
    fam = twist_family(5)
    spec = specialize(fam, 2)
    assert spec.excluded is None and spec.on_curve()
    assert certify(spec).verdict == "independent"


def test_twist_family_excludes_square():
    fam = twist_family(0)
    # f(t) = t^6 + 1 is a square at t = 0
    assert specialize(fam, 0).excluded is not None


def test_euler_family():
    fam = euler_family_1728()
    assert all(fam.checks.values()), fam.checks
    assert fam.curve.B == 0
    assert len(fam.points) == 4
    x1, x2, x3, _ = fam.roots
    assert x1 * x2 * x3 * (x1 + x2 + x3) == 1


def test_euler_specialization_and_rank():
    fam = euler_family_1728()
    spec = specialize(fam, 1)
    assert spec.on_curve()
    assert spec.curve.A.denominator == 1
    cert = certify(spec)
    assert cert.verdict == "independent" and cert.rank_lower_bound == 4


def test_euler_excluded_values():
    fam = euler_family_1728()
    assert F(0) in fam.excluded_values
    assert specialize(fam, 0).excluded is not None


def test_sextic_roots_sum_to_zero():
    xs, notes = sextic_roots()
    assert sum(xs, Poly()) == 0
    assert notes["x2_t2_coefficient"] == 3549


def test_sextic_family_checks():
    fam = sextic_family_0()
    c = fam.checks
    for name in ("roots_sum_zero", "deg_r_le_3", "disc_r_nonzero", "a3_is_cube", "D_not_sixth_power",
                 "points_on_cubic", "points_on_curve"):
        assert c[name], name
    assert fam.curve.A == 0
    assert len(fam.points) == 6
    # the reduction lands on the +16D twist; recorded rather than assumed
    assert fam.notes["twist_sign"] == 1
    assert not c["model_is_y2_x3_minus_16D"]


def test_sextic_irreducibility_witness():
    assert sextic_family_0().notes["irreducibility_witness"] is None
    wide = sextic_family_0(witness_bound=300)
    assert wide.notes["irreducibility_witness"] == 239


def test_sextic_specialization():
    fam = sextic_family_0()
    spec = specialize(fam, 1)
    assert spec.on_curve() and len(spec.points) == 6
    D1 = fam.D(F(1))
    assert isomorphic_over_Q(spec.curve, ShortW(F(0), 16 * D1))


def test_distinct_classes():
    fam = euler_family_1728()
    specs = [specialize(fam, t) for t in (1, 2, 3)]
    classes = distinct_classes(specs + [specs[0]])
    assert len(classes) == 3
    assert len(classes[0]) == 2


def test_certify_refuses_excluded():
    fam = euler_family_1728()
    with pytest.raises(ValueError):
        certify(specialize(fam, 0))
