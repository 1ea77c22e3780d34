"""Arithmetic criteria deciding when |-mK| maps to something bigger than a curve.

Three independent tools live here.

* The per-point criterion: for one orbifold point (b, r) and a degree m, the
  periodic sum G(x) = sum_{j<=l} F(x + jb) - sum_{j<=l} F(jb) with l = m mod r
  must be non-negative everywhere; its minimum over a period is attained at
  the end points -jb, j = 0..l.  This generalizes the classical residue
  conditions for m mod r in {0, +-1, +-2, 3, 4}.

* The doubling thresholds n0 and l0 read off a plurigenus sequence along
  multiples of a base degree.

* The growth thresholds: P_{-m} > r_X (-K^3) m + 1 certifies "not composed
  with a pencil", and two explicit lower-bound regimes make the inequality
  effective (a general one driven by a tunable rational t, and a sharper one
  for Gorenstein index 840).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Sequence

from .basket import Basket, WeightedBasket, f_periodic

F = Fraction


def f_local(x: int, r: int) -> Fraction:
    """F(x) = x̄ (r - x̄)/(2r), period r."""
    return f_periodic(x, r)


def g_min(b: int, r: int, m: int) -> Fraction:
    """min over all integers x of G(x), by end-point reduction.

    G is periodic piecewise quadratic with negative leading coefficients,
    so the minimum sits on the end-point set {nr - jb}; it suffices to
    scan x = -jb for j = 0..(m mod r).
    """
    if r < 2 or m < 1 or gcd(b, r) != 1 or not 0 < 2 * b <= r:
        raise ValueError(f"need canonical (b, r) and m >= 1, got ({b},{r}), m={m}")
    l = m % r
    base = sum(f_local(j * b, r) for j in range(l + 1))
    best = F(0)
    for j in range(1, l + 1):
        x = -j * b
        val = sum(f_local(x + k * b, r) for k in range(l + 1)) - base
        if val < best:
            best = val
    return best


def g_min_bruteforce(b: int, r: int, m: int) -> Fraction:
    """Direct minimum of G over a full period; oracle for `g_min`."""
    l = m % r
    base = sum(f_local(j * b, r) for j in range(l + 1))
    return min(
        sum(f_local(x + k * b, r) for k in range(l + 1)) - base for x in range(r)
    )


def k1_condition(point: tuple[int, int], m: int) -> bool:
    """True iff the local criterion holds at this point for degree m."""
    b, r = point
    return g_min(b, r, m) >= 0


def k1_condition_tabulated(point: tuple[int, int], m: int) -> Optional[bool]:
    """The explicit residue conditions; None when no clause covers m mod r.

    Clauses (any one suffices): m = 0, +-1 (mod r) always; m = -2 needs
    b = floor(r/2); m = 2 needs 3b >= r; m = 3 needs 4b >= r; m = 4 needs
    F(b) >= F(4b) and F(b) + F(2b) >= F(3b) + F(4b).
    """
    b, r = point
    l = m % r
    clauses = []
    if l in (0, 1, (r - 1) % r):
        clauses.append(True)
    if l == (r - 2) % r:
        clauses.append(b == r // 2)
    if l == 2 % r:
        clauses.append(3 * b >= r)
    if l == 3 % r:
        clauses.append(4 * b >= r)
    if l == 4 % r:
        fb, f2, f3, f4 = (f_local(k * b, r) for k in (1, 2, 3, 4))
        clauses.append(fb >= f4 and fb + f2 >= f3 + f4)
    if not clauses:
        return None
    return any(clauses)


def k1_all_points(basket: Basket, m: int) -> bool:
    return all(k1_condition(pt, m) for pt in basket)


@dataclass(frozen=True)
class K2Thresholds:
    n0: int
    l0: int


def k2_thresholds(values: Sequence[int]) -> Optional[K2Thresholds]:
    """(n0, l0) from P_{-m}, P_{-2m}, ... ; None when the horizon is too short.

    n0 is the least n with P_{-nm} >= 2; writing l = s n0 + t with
    0 <= t < n0, l0 is the least l >= n0 with P_{-lm} > s + 1.
    """
    n0 = next((k for k, v in enumerate(values, start=1) if v >= 2), None)
    if n0 is None:
        return None
    for l in range(n0, len(values) + 1):
        s = l // n0
        if values[l - 1] > s + 1:
            return K2Thresholds(n0, l)
    return None


NOT_PENCIL = "NotPencil"
POSSIBLY_PENCIL = "PossiblyPencil"


@dataclass(frozen=True)
class PencilVerdict:
    m: int
    verdict: str
    witness: Optional[str] = None


@dataclass(frozen=True)
class PencilScan:
    verdicts: tuple[PencilVerdict, ...]
    first_not_pencil: Optional[int]


def non_pencil_threshold(wb: WeightedBasket, horizon: int) -> PencilScan:
    """Per-degree verdicts of P_{-m} > r_X (-K^3) m + 1, exact."""
    vol = wb.volume()
    if vol <= 0:
        raise ValueError("the growth criterion needs positive volume")
    r_x = wb.gorenstein_index()
    seq = wb.plurigenera(horizon)
    verdicts = []
    first = None
    for m in range(1, horizon + 1):
        bound = r_x * vol * m + 1
        if seq[m] > bound:
            verdicts.append(
                PencilVerdict(m, NOT_PENCIL, f"P_-{m} = {seq[m]} > {bound}")
            )
            if first is None:
                first = m
        else:
            verdicts.append(PencilVerdict(m, POSSIBLY_PENCIL))
    return PencilScan(tuple(verdicts), first)


def _ceil_sqrt(q: Fraction) -> int:
    """Least integer s with s*s >= q, by exact integer arithmetic."""
    if q <= 0:
        return 0
    num, den = q.numerator, q.denominator
    s = isqrt(num // den)
    while s * s * den < num:
        s += 1
    return s


def _ceil_fraction(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def thm1_threshold(wb: WeightedBasket, t: Fraction) -> int:
    """Least m with m >= 37, m >= r_max t / 3 and m^2 >= 6 r_X + 12/(t (-K^3)).

    Beyond the threshold the anti-plurigenus satisfies
    P_{-m} >= r_X (-K^3) m + 2, hence |-mK| is not composed with a pencil.
    """
    t = Fraction(t)
    if not 0 < t <= 37:
        raise ValueError(f"t must lie in (0, 37], got {t}")
    vol = wb.volume()
    if vol <= 0:
        raise ValueError("threshold needs positive volume")
    r_x = wb.gorenstein_index()
    r_max = wb.basket.r_max()
    return max(
        37,
        _ceil_fraction(Fraction(r_max) * t / 3),
        _ceil_sqrt(6 * r_x + 12 / (t * vol)),
    )


def thm1_threshold_from_bounds(
    r_x: int, vol_lower: Fraction, r_max: int, t: Fraction
) -> int:
    """`thm1_threshold` evaluated on case-wide caps instead of one basket."""
    t = Fraction(t)
    if not 0 < t <= 37:
        raise ValueError(f"t must lie in (0, 37], got {t}")
    if vol_lower <= 0:
        raise ValueError("need a positive volume lower bound")
    return max(
        37,
        _ceil_fraction(Fraction(r_max) * t / 3),
        _ceil_sqrt(6 * r_x + 12 / (t * vol_lower)),
    )


L840_SLOPE = F(19907, 10080)
L840_OFFSET = F(295, 72)


def thm2_check_840(wb: WeightedBasket, horizon: int = 150) -> bool:
    """Check the index-840 growth regime on an explicit weighted basket.

    Requires Gorenstein index exactly 840.  Verifies, for 71 <= m <= horizon,
    both P_{-m} >= 840 (-K^3) m + 2 and the linear envelope
    l(-m) <= 19907 m / 10080 + 295/72, all exactly.
    """
    if wb.gorenstein_index() != 840:
        raise ValueError("this regime is specific to Gorenstein index 840")
    vol = wb.volume()
    seq = wb.plurigenera(horizon)
    for m in range(71, horizon + 1):
        if seq[m] < 840 * vol * m + 2:
            return False
        if wb.basket.l_neg(m) > L840_SLOPE * m + L840_OFFSET:
            return False
    return True


def l_upper_bound_general(
    b: int, r: int, n: int, t: Optional[Fraction] = None
) -> bool:
    """Assert sum_{j=1..n} F(jb) <= (r^2 - 1)/(12 r) (n + r/3), exactly.

    For r > 2 the envelope holds for every n >= 0; the optional t is only
    validated against the scoped hypothesis n >= r t / 3.
    """
    if r <= 2:
        raise ValueError("the envelope needs r > 2")
    if t is not None and Fraction(n) < Fraction(r) * Fraction(t) / 3:
        raise ValueError("n below the scoped hypothesis r t / 3")
    lhs = Basket([(b, r)]).l_neg(n)
    rhs = F(r * r - 1, 12 * r) * (n + F(r, 3))
    return lhs <= rhs
