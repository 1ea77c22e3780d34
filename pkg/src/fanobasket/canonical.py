"""The packing partial order and the canonical unpacking chain.

Packing merges two points (b1,r1),(b2,r2) into (b1+b2, r1+r2); the packing
is prime when b1 r2 - b2 r1 = 1.  Unpacking goes the other way: against the
fraction set S^(n) every point splits into a combination of the two
S^(n)-neighbours of b/r, producing the stage baskets

    B^(0)  >=  B^(5)  >=  B^(6)  >=  ...  >=  B,

where eps_n counts the prime packings between consecutive stages.  All the
arithmetic (counts, neighbour determinants) is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Optional

from .basket import Basket


def _valid_level(n: int) -> None:
    if n != 0 and n < 5:
        raise ValueError(f"fraction-set level must be 0 or >= 5, got {n}")


@dataclass(frozen=True)
class FractionSet:
    """A finite truncation of S^(n), sorted in decreasing order.

    Adjacent members q_i/p_i > q_{i+1}/p_{i+1} always satisfy
    q_i p_{i+1} - p_i q_{i+1} = 1; construction asserts it.
    """

    level: int
    fractions: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for hi, lo in zip(self.fractions, self.fractions[1:]):
            det = hi.numerator * lo.denominator - hi.denominator * lo.numerator
            if det != 1:
                raise AssertionError(
                    f"neighbour determinant {det} != 1 between {hi} and {lo}"
                )

    def __contains__(self, frac: Fraction) -> bool:
        return frac in set(self.fractions)

    def neighbours(self, frac: Fraction) -> tuple[Fraction, Fraction]:
        """(upper, lower) adjacent members around a non-member fraction."""
        lo, hi = 0, len(self.fractions) - 1
        fr = self.fractions
        # descending list: find the last index with fr[i] > frac
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if fr[mid] > frac:
                lo = mid
            else:
                hi = mid - 1
        upper = fr[lo]
        if lo + 1 >= len(fr):
            raise ValueError(f"{frac} below the truncation tail of S^({self.level})")
        return upper, fr[lo + 1]


def s_set(n: int, cap: int) -> FractionSet:
    """The truncation of S^(n) with denominators up to `cap`.

    S^(0) holds 1/k for k >= 2; for n >= 5 every reduced b/m with
    0 < b < m/2 and m <= n joins.  The truncation suffices to unpack any
    basket whose local indices are <= cap, since neighbours of b/r always
    have denominator < r.
    """
    _valid_level(n)
    if cap < 2:
        raise ValueError("cap must be >= 2")
    members = {Fraction(1, k) for k in range(2, cap + 1)}
    for m in range(5, min(n, cap) + 1):
        for b in range(2, (m + 1) // 2):
            if gcd(b, m) == 1:
                members.add(Fraction(b, m))
    return FractionSet(n, tuple(sorted(members, reverse=True)))


def unpack(basket: Basket, n: int) -> Basket:
    """The stage-n basket B^(n): split every point against S^(n)."""
    _valid_level(n)
    if len(basket) == 0:
        return basket
    sset = s_set(n, basket.r_max())
    table = set(sset.fractions)
    pairs: list[tuple[int, int]] = []
    for b, r in basket:
        frac = Fraction(b, r)
        if frac in table:
            pairs.append((b, r))
            continue
        (qh, ph), (ql, pl) = (
            (f.numerator, f.denominator) for f in sset.neighbours(frac)
        )
        count_low = r * qh - b * ph
        count_high = -r * ql + b * pl
        assert count_low > 0 and count_high > 0
        pairs.extend([(ql, pl)] * count_low)
        pairs.extend([(qh, ph)] * count_high)
    return Basket(pairs)


def epsilon_n(basket: Basket, n: int) -> int:
    """Number of prime packings between stages n-1 and n of the chain.

    Evaluated as Delta^n(B^(n-1)) - Delta^n(B); stage 4 means stage 0.
    Always a non-negative integer.
    """
    if n < 5:
        raise ValueError(f"epsilon_n needs n >= 5, got {n}")
    prev = unpack(basket, n - 1 if n > 5 else 0)
    eps = prev.delta(n) - basket.delta(n)
    assert eps >= 0
    return eps


@dataclass(frozen=True)
class ChainStage:
    level: int
    basket: Basket
    epsilon: int


@dataclass(frozen=True)
class CanonicalChain:
    base: Basket
    stages: tuple[ChainStage, ...]


def canonical_chain(basket: Basket) -> CanonicalChain:
    """Stages n = 0, 5, 6, ..., r_max with their prime-packing counts."""
    stages = [ChainStage(0, unpack(basket, 0), 0)]
    if basket.r_max() >= 5:
        for n in range(5, basket.r_max() + 1):
            stages.append(ChainStage(n, unpack(basket, n), epsilon_n(basket, n)))
    assert stages[-1].basket == basket
    return CanonicalChain(basket, tuple(stages))


def prime_packings(basket: Basket, min_target: int = 0) -> list[Basket]:
    """All distinct one-step prime packings of `basket`.

    `min_target` restricts merges to r1 + r2 >= min_target, which walks
    only the part of the order below a fixed canonical stage.
    """
    pts = basket.points
    seen: set[Basket] = set()
    out: list[Basket] = []
    for i in range(len(pts)):
        b1, r1 = pts[i]
        for j in range(i + 1, len(pts)):
            b2, r2 = pts[j]
            if r1 + r2 < min_target:
                continue
            if abs(b1 * r2 - b2 * r1) != 1:
                continue
            merged = basket.replace_pair_with(i, j, (b1 + b2, r1 + r2))
            if merged not in seen:
                seen.add(merged)
                out.append(merged)
    out.sort()
    return out


def dominated_baskets(
    basket: Basket,
    prune: Optional[Callable[[Basket], bool]] = None,
    min_target: int = 0,
) -> list[Basket]:
    """Every basket reachable from `basket` by prime packings, itself included.

    `prune`, when given, must be monotone-safe: once it rejects a basket it
    rejects all of its packings (gamma-threshold predicates qualify).  The
    result is deterministic, sorted by canonical form.
    """
    if prune is not None and not prune(basket):
        return []
    seen: set[Basket] = {basket}
    stack = [basket]
    while stack:
        current = stack.pop()
        for nxt in prime_packings(current, min_target=min_target):
            if nxt in seen:
                continue
            if prune is not None and not prune(nxt):
                continue
            seen.add(nxt)
            stack.append(nxt)
    return sorted(seen)


def minimal_baskets(basket: Basket, min_target: int = 0) -> list[Basket]:
    """The dominated baskets admitting no further prime packing."""
    return [
        b
        for b in dominated_baskets(basket, min_target=min_target)
        if not prime_packings(b, min_target=min_target)
    ]


def general_packings(basket: Basket) -> list[Basket]:
    """All one-step packings, prime or not.

    A merge whose sum pair has gcd > 1 is only legal between two equal
    points, where the multiple-of-coprime convention makes it a no-op;
    those no-ops are omitted.  Everything else with a non-coprime sum is
    not a packing move at all.
    """
    pts = basket.points
    seen: set[Basket] = set()
    out = []
    for i in range(len(pts)):
        b1, r1 = pts[i]
        for j in range(i + 1, len(pts)):
            b2, r2 = pts[j]
            if gcd(b1 + b2, r1 + r2) != 1:
                continue
            merged = basket.replace_pair_with(i, j, (b1 + b2, r1 + r2))
            if merged not in seen:
                seen.add(merged)
                out.append(merged)
    out.sort()
    return out
