"""Canonical heights on elliptic curves over Q and point-independence certificates.

Heights use the convention h(nP) = n^2 h(P) with h(P) = lim h_x(2^k P) / (2 * 4^k),
i.e. half the naive logarithmic height of x.  ``doubled=True`` gives twice that.

The canonical height is split into local pieces on a global minimal model:
the archimedean piece comes from Tate's series (after translating x so that
the real locus lies in x >= 1, which keeps every term bounded), the finite
pieces from the denominator of x and the singular-reduction correction at
each prime of bad reduction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np

from .ellcurve import INF, LongW, ShortW, add, integral_scale, map_point, mul, torsion_order
from .exactalg import FactoredInt, FactorizationError, factor_integer, valuation
from .exactalg.intfactor import DEFAULT_BUDGET

DEFAULT_PREC = 128
_GUARD_BITS = 32


@dataclass(frozen=True)
class ApproxReal:
    """A real number known to lie in [value - err, value + err]."""

    value: mpmath.mpf
    err: mpmath.mpf
    prec_bits: int

    def __float__(self):
        return float(self.value)

    def excludes_zero(self) -> bool:
        return abs(self.value) > self.err

    def to_json(self) -> dict:
        digits = max(15, int(self.prec_bits * 0.30103))
        return {
            "value": mpmath.nstr(self.value, digits),
            "err": mpmath.nstr(self.err, 5),
            "prec_bits": self.prec_bits,
        }


# minimal models ----------------------------------------------------------


@dataclass(frozen=True)
class MinimalModelData:
    model: LongW
    transform: tuple  # (u, r, s, t) taking the input curve to ``model``
    disc_factored: FactoredInt | None  # None when factoring was not attempted

    def map_point(self, P):
        return map_point(P, *self.transform)


def _kraus_ok(c4: int, c6: int, p: int) -> bool:
    """Local Kraus condition: (c4, c6) are the invariants of a model integral at p."""
    if p == 3:
        return valuation(c6, 3) != 2
    if p == 2:
        if c6 % 4 == 3:
            return True
        return valuation(c4, 2) >= 4 and c6 % 32 in (0, 8)
    return True


def _ainvs_from_c4c6(c4: int, c6: int) -> tuple[int, ...]:
    for b2 in sorted(range(-5, 7), key=abs):
        if (b2 + c6) % 12:
            continue
        if (b2 * b2 - c4) % 24:
            continue
        b4 = (b2 * b2 - c4) // 24
        num6 = -(b2**3) + 36 * b2 * b4 - c6
        if num6 % 216:
            continue
        b6 = num6 // 216
        a1 = b2 % 2
        a3 = b6 % 2
        if (b2 - a1) % 4 or (b4 - a1 * a3) % 2 or (b6 - a3) % 4:
            continue
        return (a1, (b2 - a1) // 4, a3, (b4 - a1 * a3) // 2, (b6 - a3) // 4)
    raise ArithmeticError(f"no integral model with c4={c4}, c6={c6}")


def _lkc(E: ShortW, budget: int, hints: tuple, strict: bool):
    """Laska-Kraus-Connell reduction; returns (data, unfactored cofactors of gcd(c4, c6)).

    With ``strict`` a factoring failure propagates; otherwise the model is
    minimised only at the primes that were found.
    """
    A, B = Fraction(E.A), Fraction(E.B)
    k = integral_scale(E)
    c4i = -48 * int(A * k**4)
    c6i = -864 * int(B * k**6)
    disc = (c4i**3 - c6i**2) // 1728
    g = math.gcd(c4i, c6i)
    stuck: tuple = ()
    if g > 1:
        try:
            primes = factor_integer(g, budget, hints).factors
        except FactorizationError as exc:
            if strict:
                raise
            primes, stuck = exc.partial.factors, tuple(exc.cofactors)
    else:
        primes = ()
    u1 = 1
    for p, _ in primes:
        d = valuation(disc, p) // 12
        if c4i:
            d = min(d, valuation(c4i, p) // 4)
        d = min(d, valuation(c6i, p) // 6) if c6i else d
        while d > 0 and not _kraus_ok(c4i // p ** (4 * d), c6i // p ** (6 * d), p):
            d -= 1
        u1 *= p**d
    c4m, c6m = c4i // u1**4, c6i // u1**6
    model = LongW(*(Fraction(a) for a in _ainvs_from_c4c6(c4m, c6m)))
    U = Fraction(u1, k)
    r = U * U * model.b2 / 12
    s = U * model.a1 / 2
    t = U**3 * model.a3 / 2
    if E.to_long().change_coords(U, r, s, t) != model:
        raise AssertionError("minimal model transform does not reproduce the model")
    dm = int(model.discriminant)
    fac = factor_integer(dm, budget, hints) if strict else None
    return MinimalModelData(model, (U, r, s, t), fac), stuck


@lru_cache(maxsize=256)
def minimal_model(E: ShortW, budget: int = DEFAULT_BUDGET, hints: tuple = ()) -> MinimalModelData:
    """Global minimal model over Q (Laska-Kraus-Connell) and the change of variables to it."""
    return _lkc(E, budget, tuple(hints), True)[0]


@lru_cache(maxsize=256)
def _height_model(E: ShortW, budget: int, hints: tuple):
    return _lkc(E, budget, hints, False)


def singular_primes(model: LongW, P, budget: int = DEFAULT_BUDGET, hints: tuple = ()) -> tuple:
    """Primes at which P reduces to the singular point of the integral ``model``.

    They divide gcd(2y + a1 x + a3, 3x^2 + 2a2 x + a4 - a1 y), so only that gcd
    is factored, never the discriminant.
    """
    x, y = P
    a1, a2, a3, a4, a6 = model.ainvs
    d = x.denominator
    g = math.gcd((2 * y + a1 * x + a3).numerator, (3 * x * x + 2 * a2 * x + a4 - a1 * y).numerator)
    # primes dividing den(x) give nonintegral points, which are nonsingular
    while (h := math.gcd(g, d)) > 1:
        g //= h
    if g <= 1:
        return ()
    return tuple(p for p, _ in factor_integer(g, budget, hints).factors)


# local heights --------------------------------------------------------------


def local_height_p(model: LongW, P, p: int, disc_val: int) -> Fraction:
    """Non-archimedean correction at a bad prime, in units of log p.

    Only the singular-reduction correction is returned; the contribution
    max(0, -v(x))/2 of nonsingular points is accounted for globally through
    the denominator of x.
    """
    x, y = P
    a1, a2, a3, a4, a6 = model.ainvs
    if valuation(x, p) < 0:
        return Fraction(0)
    va = valuation(3 * x * x + 2 * a2 * x + a4 - a1 * y, p)
    vb = valuation(2 * y + a1 * x + a3, p)
    if va <= 0 or vb <= 0:
        return Fraction(0)
    if valuation(model.c4, p) == 0:
        # multiplicative reduction
        N = disc_val
        m = min(Fraction(vb), Fraction(N, 2))
        return -m * (N - m) / (2 * N)
    psi3 = 3 * x**4 + model.b2 * x**3 + 3 * model.b4 * x**2 + 3 * model.b6 * x + model.b8
    vc = valuation(psi3, p)
    if vc >= 3 * vb:
        return Fraction(-vb, 3)
    return Fraction(-vc, 8)


def _real_locus(b2, b4, b6):
    """Real roots of 4x^3 + b2 x^2 + 2 b4 x + b6, ascending."""
    roots = mpmath.polyroots([4, b2, 2 * b4, b6], maxsteps=200, extraprec=200)
    real = sorted(mpmath.re(r) for r in roots if abs(mpmath.im(r)) < mpmath.mpf(10) ** (-mpmath.mp.dps // 2))
    return real


def archimedean_height(model: LongW, P, prec_bits: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Archimedean local height (Tate normalization) and a bound on the truncation error."""
    x, _ = P
    b2, b4, b6 = model.b2, model.b4, model.b6
    with mpmath.workprec(prec_bits + _GUARD_BITS):
        roots = _real_locus(*(mpmath.mpf(c.numerator) / c.denominator for c in (b2, b4, b6)))
        r0 = math.floor(roots[0]) - 1
        # translate so every real point has x >= 1
        m = model.change_coords(1, r0, 0, 0)
        B2, B4, B6, B8 = (mpmath.mpf(c.numerator) / c.denominator for c in (m.b2, m.b4, m.b6, m.b8))
        shifted = [r - r0 for r in roots]
        M = _log_z_bound(B4, B6, B8, shifted)
        x0 = x - r0
        if x0 <= 0:
            raise AssertionError("translated x-coordinate is not positive")
        # tail (1/8) sum_{n>N} 4^-n M < 2^(-prec+8)
        N = max(4, math.ceil((prec_bits + math.log2(M + 1)) / 2) + 2)
        tail = M / (24 * mpmath.mpf(4) ** N)
        t = 1 / (mpmath.mpf(x0.numerator) / x0.denominator)
        S = mpmath.mpf(0)
        f = mpmath.mpf(1)
        for _ in range(N + 1):
            t2 = t * t
            z = 1 - B4 * t2 - 2 * B6 * t2 * t - B8 * t2 * t2
            w = 4 * t + B2 * t2 + 2 * B4 * t2 * t + B6 * t2 * t2
            S += f * mpmath.log(z)
            t = w / z
            f /= 4
        lam = mpmath.log(mpmath.mpf(x0.numerator) / x0.denominator) / 2 + S / 8
        rounding = mpmath.mpf(2) ** (-prec_bits) * (1 + abs(lam))
        return +lam, tail + rounding


def _log_z_bound(B4, B6, B8, roots):
    """max |log z| over the real locus, z(t) = 1 - B4 t^2 - 2 B6 t^3 - B8 t^4, t = 1/x."""
    if len(roots) == 3:
        intervals = [(1 / roots[1], 1 / roots[0]), (mpmath.mpf(0), 1 / roots[2])]
    else:
        intervals = [(mpmath.mpf(0), 1 / roots[0])]

    def z(t):
        return 1 - B4 * t**2 - 2 * B6 * t**3 - B8 * t**4

    # stationary points of z: t = 0 and the roots of 2 B8 t^2 + 3 B6 t + B4
    crit = []
    if B8:
        disc = 9 * B6 * B6 - 8 * B8 * B4
        if disc >= 0:
            sq = mpmath.sqrt(disc)
            crit = [(-3 * B6 + sq) / (4 * B8), (-3 * B6 - sq) / (4 * B8)]
    elif B6:
        crit = [-B4 / (3 * B6)]
    vals = []
    for lo, hi in intervals:
        vals += [z(lo), z(hi)]
        vals += [z(c) for c in crit if lo <= c <= hi]
    zmin, zmax = min(vals), max(vals)
    if zmin <= 0:
        raise AssertionError("Tate series would not converge on this model")
    return max(abs(mpmath.log(zmin)), abs(mpmath.log(zmax)))


def canonical_height(E: ShortW, P, prec_bits: int = DEFAULT_PREC, doubled: bool = False,
                     budget: int = DEFAULT_BUDGET, hints: tuple = ()) -> ApproxReal:
    if P is INF:
        return ApproxReal(mpmath.mpf(0), mpmath.mpf(0), prec_bits)
    hints = tuple(hints)
    mm, stuck = _height_model(E, budget, hints)
    Pm = mm.map_point(P)
    primes = singular_primes(mm.model, Pm, budget, hints)
    if any(math.gcd(p, c) > 1 for p in primes for c in stuck):
        # a singular prime hides in the unfactored part of gcd(c4, c6): minimise there too
        mm, stuck = _height_model(E, budget, hints + primes)
        Pm = mm.map_point(P)
        primes = singular_primes(mm.model, Pm, budget, hints)
    model = mm.model
    dm = int(model.discriminant)
    lam_inf, err = archimedean_height(model, Pm, prec_bits)
    with mpmath.workprec(prec_bits + _GUARD_BITS):
        x = Pm[0]
        fin = mpmath.log(x.denominator) / 2
        for p in primes:
            corr = local_height_p(model, Pm, p, valuation(dm, p))
            if corr:
                fin += mpmath.mpf(corr.numerator) / corr.denominator * mpmath.log(p)
        h = lam_inf + fin
        if doubled:
            h, err = 2 * h, 2 * err
        return ApproxReal(+h, err, prec_bits)


def naive_height_limit(E: ShortW, P, k: int) -> mpmath.mpf:
    """(1/2) h_x(2^k P) / 4^k by exact doubling; an independent check on ``canonical_height``."""
    Q = P
    for _ in range(k):
        Q = add(E, Q, Q)
        if Q is INF:
            return mpmath.mpf(0)
    x = Fraction(Q[0])
    return mpmath.log(max(abs(x.numerator), x.denominator)) / (2 * 4**k)


def neron_tate_pairing(E: ShortW, P, Q, prec_bits: int = DEFAULT_PREC, doubled: bool = False, **kw) -> ApproxReal:
    hp = canonical_height(E, P, prec_bits, doubled, **kw)
    hq = canonical_height(E, Q, prec_bits, doubled, **kw)
    hpq = canonical_height(E, add(E, P, Q), prec_bits, doubled, **kw)
    with mpmath.workprec(prec_bits + _GUARD_BITS):
        return ApproxReal((hpq.value - hp.value - hq.value) / 2, (hpq.err + hp.err + hq.err) / 2, prec_bits)


# Gram matrices and certificates ---------------------------------------------


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple  # tuple of tuples of ApproxReal
    determinant: ApproxReal

    @property
    def n(self) -> int:
        return len(self.entries)

    def midpoints(self) -> np.ndarray:
        return np.array([[float(e.value) for e in row] for row in self.entries])


def _interval_det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _interval_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def gram_matrix(E: ShortW, points, prec_bits: int = DEFAULT_PREC, doubled: bool = False, **kw) -> GramMatrix:
    """Gram matrix of the height pairing with an interval-propagated determinant."""
    if not points:
        raise ValueError("need at least one point")
    for P in points:
        if not E.contains(P):
            raise ValueError(f"point {P} is not on the curve")
    n = len(points)
    h = [canonical_height(E, P, prec_bits, doubled, **kw) for P in points]
    G = [[None] * n for _ in range(n)]
    with mpmath.workprec(prec_bits + _GUARD_BITS):
        for i in range(n):
            G[i][i] = h[i]
            for j in range(i + 1, n):
                hij = canonical_height(E, add(E, points[i], points[j]), prec_bits, doubled, **kw)
                G[i][j] = G[j][i] = ApproxReal(
                    (hij.value - h[i].value - h[j].value) / 2, (hij.err + h[i].err + h[j].err) / 2, prec_bits
                )
    iv = mpmath.iv
    old = iv.prec
    iv.prec = prec_bits + _GUARD_BITS
    try:
        with mpmath.workprec(prec_bits + _GUARD_BITS):
            M = [[iv.mpf([e.value - e.err, e.value + e.err]) for e in row] for row in G]
            det = _interval_det(M)
            lo, hi = mpmath.mpf(det.a), mpmath.mpf(det.b)
            dval = ApproxReal((lo + hi) / 2, (hi - lo) / 2, prec_bits)
    finally:
        iv.prec = old
    return GramMatrix(tuple(tuple(r) for r in G), dval)


def gram_determinant(E: ShortW, points, prec_bits: int = DEFAULT_PREC, doubled: bool = False, **kw) -> GramMatrix:
    return gram_matrix(E, points, prec_bits, doubled, **kw)


@dataclass
class RankCertificate:
    curve: ShortW
    points: list
    gram: GramMatrix
    verdict: str  # "independent" | "dependent" | "inconclusive"
    prec_bits: int
    relation: tuple | None = None
    notes: dict = field(default_factory=dict)

    @property
    def rank_lower_bound(self) -> int:
        return len(self.points) if self.verdict == "independent" else 0


def find_relation(E: ShortW, points, gram: GramMatrix, bound: int = 8):
    """Small integer relation sum c_i P_i = torsion, verified exactly; None if none found."""
    G = gram.midpoints()
    n = len(points)
    scale = max(1.0, float(np.abs(G).max()))
    tol = max(1e-6 * scale, 10 * max(float(e.err) for row in gram.entries for e in row))
    if n <= 4:
        grid = np.array(list(itertools.product(range(-bound, bound + 1), repeat=n)))
        grid = grid[np.any(grid != 0, axis=1)]
        first = grid[np.arange(len(grid)), np.argmax(grid != 0, axis=1)]
        grid = grid[first > 0]
        q = np.einsum("ij,jk,ik->i", grid, G, grid)
        order = np.argsort(np.abs(q))
        cands = [tuple(int(c) for c in grid[i]) for i in order if abs(q[i]) < tol]
    else:
        w, V = np.linalg.eigh(G)
        v = V[:, 0]
        cands = []
        for k in range(1, bound + 1):
            c = np.round(v / np.abs(v).max() * k).astype(int)
            if np.any(c) and np.abs(c).max() <= bound and abs(c @ G @ c) < tol:
                cands.append(tuple(int(a) for a in c))
    for c in cands:
        S = INF
        for ci, P in zip(c, points):
            S = add(E, S, mul(E, ci, P))
        if torsion_order(E, S) is not None:
            return c
    return None


def independence_certificate(E: ShortW, points, prec_bits: int = DEFAULT_PREC, doubled: bool = False,
                             **kw) -> RankCertificate:
    gram = gram_matrix(E, points, prec_bits, doubled, **kw)
    det = gram.determinant
    if det.value - det.err > 0:
        return RankCertificate(E, list(points), gram, "independent", prec_bits)
    rel = find_relation(E, points, gram)
    if rel is not None:
        return RankCertificate(E, list(points), gram, "dependent", prec_bits, relation=rel)
    return RankCertificate(E, list(points), gram, "inconclusive", prec_bits)
