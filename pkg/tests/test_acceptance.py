"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (printed in the pytest summary by
conftest.py, or directly with ``python tests/test_acceptance.py``).  Criteria
that the implementation cannot meet fail here with their measured values.
"""

import time
from fractions import Fraction as F

import mpmath
import pytest

from mestre import cli, covers, families
from mestre.ellcurve import (
    INF,
    CubicYModel,
    QuarticModel,
    ShortW,
    add,
    cubic_y3_to_weierstrass,
    isomorphic_over_Q,
    mul,
    neg,
    quartic_to_weierstrass,
)
from mestre.exactalg import is_nth_power_up_to_constant
from mestre.heights import canonical_height, naive_height_limit

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def _reproduce(case, **kw):
    t0 = time.perf_counter()
    rep = cli.cmd_reproduce(case, **kw)
    return rep, time.perf_counter() - t0


def test_criterion_1_det_j1728():
    rep, secs = _reproduce("j1728")
    m = rep.checks["det_matches_published"]["value"]
    det = rep.checks["gram_det"]["value"]["value"]
    ok = rep.passed and secs < 60
    record(1, ok, f"det {det} x factor {m['normalization_factor']} vs 603.61237 (rtol 1e-3), {secs:.1f}s")


def test_criterion_2_det_j0():
    rep, secs = _reproduce("j0")
    m = rep.checks["det_matches_published"]["value"]
    det = rep.checks["gram_det"]["value"]["value"]
    detail = (f"det {det}, ratio to 38462030713.186929 is {m['measured_ratio']}, "
              f"factor {m['normalization_factor']} (allowed 1 or 64, rtol 1e-6), {secs:.1f}s")
    if not rep.passed:
        alt, _ = _reproduce("j0", origin="tangent")
        detail += f"; with the tangential point as origin the ratio is {alt.checks['det_matches_published']['value']['measured_ratio']}"
    record(2, rep.passed and secs < 120, detail)


def test_criterion_3_symbolic_identities():
    X = covers.X
    fails = []
    x1, x2, x3, _ = families.euler_family_1728().roots
    if x1 * x2 * x3 * (x1 + x2 + x3) != 1:
        fails.append("euler")
    for E, E2 in cli.random_admissible_pairs(25):
        C = covers.build_cover(E, E2)
        if X**6 * C.f(C.phi) != C.g(X**2 * C.phi):
            fails.append("phi")
        if covers.pullback_ratio(C) != covers.closed_form_ratio(E, E2):
            fails.append("ratio")
    for j in (0, 1728):
        C = covers.special_cover(j)
        if not all(m.yfun * m.yfun * C.S == C.f(m.xfun) for m in (C.rho, C.rho_prime)):
            fails.append(f"special[{j}]")
    fam = families.sextic_family_0()
    if not (fam.checks["roots_sum_zero"] and fam.checks["deg_r_le_3"]):
        fails.append("sextic")
    record(3, not fails, "Euler identity, 25 pairs phi and omega/omega', special covers, sextic sum and deg r"
           + (f"; failed {sorted(set(fails))}" if fails else ""))


def test_criterion_4_genus_table():
    pairs = [((1, 1), (2, 3)), ((1, 1), (1, 1)), ((1, 0), (2, 3)), ((0, 1), (2, 3)), ((0, 1), (1, 0))]
    got = [covers.cover_genus(covers.build_cover(ShortW(F(a), F(b)), ShortW(F(c), F(d))))
           for (a, b), (c, d) in pairs]
    record(4, got == [10, 6, 7, 8, 5], f"genera {got}, expected [10, 6, 7, 8, 5]")


def test_criterion_5_non_isotriviality():
    A = families.euler_family_1728().A
    fam = families.sextic_family_0()
    a_ok = not is_nth_power_up_to_constant(A, 4)
    d_ok = fam.checks["D_not_sixth_power"]
    w = fam.notes["irreducibility_witness"]
    wide = families.sextic_family_0(witness_bound=1000).notes["irreducibility_witness"]
    record(5, a_ok and d_ok and w is not None,
           f"A not a 4th power: {a_ok}; D not a 6th power: {d_ok}; witness prime < 200: {w} "
           f"(smallest witness: {wide})")


def test_criterion_6_twist_families():
    parts, ok = [], True
    for j in (0, 1728, 5, -3):
        fam = families.twist_family(j)
        on = all(fam.curve.contains(P) for P in fam.points)
        good = 0
        for t in range(1, 12):
            spec = families.specialize(fam, t)
            if spec.excluded is None and families.certify(spec).gram.determinant.excludes_zero():
                good += 1
            if good == 3:
                break
        ok &= on and good >= 3 and not fam.isotrivial
        parts.append(f"j={j}: on-curve {on}, {good} certified")
    record(6, ok, "; ".join(parts))


def test_criterion_7_height_properties():
    curves = [
        (ShortW(F(0), F(-2)), (F(3), F(5))),
        (ShortW(F(0), F(17)), (F(-2), F(3))),
        (ShortW(F(-2), F(1)), (F(0), F(1))),
        (ShortW(F(-16), F(16)), (F(0), F(4))),
    ]
    quad = par = orc = 0.0
    for E, P in curves:
        hp = canonical_height(E, P).value
        for n in (2, 3, 5):
            quad = max(quad, abs(canonical_height(E, mul(E, n, P)).value - n * n * hp) / (n * n))
        orc = max(orc, abs(hp - naive_height_limit(E, P, 8)))
    E = ShortW(F(0), F(17))
    P, Q = (F(-2), F(3)), (F(-1), F(4))
    h = lambda R: canonical_height(E, R).value  # noqa: E731
    par = abs(h(add(E, P, Q)) + h(add(E, P, neg(E, Q))) - 2 * h(P) - 2 * h(Q))
    Et = ShortW(F(-43), F(166))
    tor = max(abs(canonical_height(Et, mul(Et, k, (F(3), F(8)))).value) for k in range(1, 7))
    ok = quad < 1e-9 and par < 1e-8 and tor < 1e-10 and orc < 1e-3
    record(7, ok, f"quadraticity {mpmath.nstr(quad, 3)}, parallelogram {mpmath.nstr(par, 3)}, "
           f"torsion {mpmath.nstr(tor, 3)}, oracle {mpmath.nstr(orc, 3)}")


def _sweep(fam, rank):
    specs, certified, nonexcl = [], 0, 0
    for t in range(1, 11):
        spec = families.specialize(fam, t)
        if spec.excluded is not None:
            continue
        nonexcl += 1
        specs.append(spec)
        if families.certify(spec).rank_lower_bound >= rank:
            certified += 1
    return nonexcl, certified, len(families.distinct_classes(specs))


def test_criterion_8_family_sampling():
    n4, c4, k4 = _sweep(families.euler_family_1728(), 4)
    n6, c6, k6 = _sweep(families.sextic_family_0(), 6)
    ok = c4 == n4 and k4 >= 8 and c6 == n6 and k6 >= 8
    record(8, ok, f"j=1728: {c4}/{n4} rank>=4, {k4} classes; j=0: {c6}/{n6} rank>=6, {k6} classes")


def test_criterion_9_model_transformations():
    fq = families.euler_family_1728()
    mq = quartic_to_weierstrass(fq.model)
    quartic_ok = all(mq.curve.contains(P) for P in fq.points) and mq(fq.model.origin) is INF
    fc = families.sextic_family_0()
    cubic_ok = fc.checks["points_on_curve"]
    # exact check at integer specializations too
    for t in (1, 2, 3):
        Mq = QuarticModel.from_roots(tuple(x(F(t)) for x in fq.roots), F(1))
        m = quartic_to_weierstrass(Mq)
        quartic_ok &= all(m.curve.contains(m(P)) for P in Mq.points)
        Mc = CubicYModel.from_roots(tuple(F(x(F(t))) for x in fc.roots))
        m = cubic_y3_to_weierstrass(Mc, cube_root=fc.cube_root(F(t)))
        cubic_ok &= all(m.curve.contains(m(P)) for P in Mc.points)
    D = fc.D
    minus = isomorphic_over_Q(ShortW(F(0), -16 * D(F(1))), families.specialize(fc, 1).curve)
    sign = fc.notes["twist_sign"]
    record(9, quartic_ok and cubic_ok and minus,
           f"quartic exact {quartic_ok}, cubic exact {cubic_ok}; model ~ y^2=x^3-16D: {minus} "
           f"(measured twist class: y^2 = x^3 {'+' if sign == 1 else '-'} 16D)")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
