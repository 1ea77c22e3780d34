"""Recover the head of the canonical chain from anti-plurigenera.

The stage-0 basket of a weighted basket consists of points (1, r) only, and
its multiplicities are integer-linear in the first few anti-plurigenera once
the tail counts n_{1,r} for r >= 5 are chosen:

    sigma   = 10 - 5 P1 + P2
    n_{1,2} = 5 - 6 P1 + 4 P2 - P3            (= Delta^3)
    n_{1,3} = 4 - 2 P1 - 2 P2 + 3 P3 - P4
    n_{1,4} = 1 + 3 P1 - P2 - 2 P3 + P4 - sigma5

with sigma5 the total tail count.  The stage-5 basket and the prime-packing
counts eps_5..eps_8 follow from further linear formulas, with eps_6 = 0 as a
hard consistency identity.  Negative counts, negative eps, or eps_6 != 0
certify that no basket realizes the given data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .basket import Basket, PlurigenusSequence

TAIL_R_CAP = 24  # a single (1, r) with r > 24 already violates sum(r - 1/r) <= 24


@dataclass(frozen=True)
class RecoveryInput:
    p: PlurigenusSequence
    sigma5: int
    tail_counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if any(r < 5 for r in self.tail_counts):
            raise ValueError("tail counts are indexed by r >= 5")
        if any(c < 0 for c in self.tail_counts.values()):
            raise ValueError("tail counts must be non-negative")
        if sum(self.tail_counts.values()) != self.sigma5:
            raise ValueError("sigma5 must equal the total tail count")

    def tail_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((r, c) for r, c in self.tail_counts.items() if c))


@dataclass(frozen=True)
class Infeasible:
    """Witness that the recovery identities reject the input."""

    violated: str
    value: Optional[int] = None

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class RecoveredData:
    sigma: int
    delta3: int
    delta4: int
    n0: dict[int, int]          # r in {2, 3, 4}
    tail: dict[int, int]        # r >= 5, shared by stages 0 and 5
    n5: dict[tuple[int, int], int]
    eps: dict[int, Optional[int]]  # eps_5, eps_6 (=0), eps_7, eps_8

    def basket0(self) -> Basket:
        pairs = []
        for r in (2, 3, 4):
            pairs.extend([(1, r)] * self.n0[r])
        for r, c in sorted(self.tail.items()):
            pairs.extend([(1, r)] * c)
        return Basket(pairs)

    def basket5(self) -> Basket:
        pairs = []
        for (b, r), c in self.n5.items():
            pairs.extend([(b, r)] * c)
        for r, c in sorted(self.tail.items()):
            pairs.extend([(1, r)] * c)
        return Basket(pairs)


def recover(inp: RecoveryInput) -> Union[RecoveredData, Infeasible]:
    """Evaluate the recovery formulas; first violated identity wins."""
    p = inp.p
    s5 = inp.sigma5

    def P(m: int) -> Optional[int]:
        return p[m] if p.has(m) else None

    p1, p2, p3, p4 = P(1), P(2), P(3), P(4)
    if p1 is None or p2 is None:
        raise ValueError("recovery needs at least P_{-1} and P_{-2}")
    sigma = 10 - 5 * p1 + p2
    if sigma < 0:
        return Infeasible("sigma >= 0", sigma)

    delta3 = None if p3 is None else 5 - 6 * p1 + 4 * p2 - p3
    delta4 = None if p4 is None else 14 - 14 * p1 + 6 * p2 + p3 - p4

    n12 = delta3
    n13 = None if p4 is None else 4 - 2 * p1 - 2 * p2 + 3 * p3 - p4
    n14 = None if p4 is None else 1 + 3 * p1 - p2 - 2 * p3 + p4 - s5
    for name, val in (("n0_{1,2}", n12), ("n0_{1,3}", n13), ("n0_{1,4}", n14)):
        if val is not None and val < 0:
            return Infeasible(f"{name} >= 0", val)

    n15 = inp.tail_counts.get(5, 0)
    n16 = inp.tail_counts.get(6, 0)
    n17 = inp.tail_counts.get(7, 0)
    eps = 2 * s5 - n15
    if eps < 0:
        return Infeasible("eps = 2 sigma5 - n0_{1,5} >= 0", eps)

    p5, p6, p7, p8 = P(5), P(6), P(7), P(8)
    eps5 = None if p5 is None else 2 + p2 - 2 * p4 + p5 - s5
    if eps5 is not None and eps5 < 0:
        return Infeasible("eps_5 >= 0", eps5)

    n5 = {}
    if p5 is not None:
        n5 = {
            (1, 2): 3 - 6 * p1 + 3 * p2 - p3 + 2 * p4 - p5 + s5,
            (2, 5): eps5,
            (1, 3): 2 - 2 * p1 - 3 * p2 + 3 * p3 + p4 - p5 + s5,
            (1, 4): n14,
        }
        for key, val in n5.items():
            if val < 0:
                return Infeasible(f"n5_{key} >= 0", val)

    eps6 = None
    if p6 is not None:
        eps6 = 3 * p1 + p2 - p3 - p4 - p5 + p6 - eps
        if eps6 != 0:
            return Infeasible("eps_6 = 0", eps6)

    eps7 = None
    if p7 is not None:
        eps7 = 1 + p1 + p2 - p5 - p6 + p7 - 2 * s5 + 2 * n15 + n16
        if eps7 < 0:
            return Infeasible("eps_7 >= 0", eps7)

    eps8 = None
    if p8 is not None:
        eps8 = (
            2 * p1 + p2 + p3 - p4 - p5 - p7 + p8 - 3 * s5 + 3 * n15 + 2 * n16 + n17
        )
        if eps8 < 0:
            return Infeasible("eps_8 >= 0", eps8)

    return RecoveredData(
        sigma=sigma,
        delta3=delta3,
        delta4=delta4,
        n0={2: n12, 3: n13, 4: n14},
        tail={r: c for r, c in inp.tail_counts.items() if c},
        n5=n5,
        eps={5: eps5, 6: eps6, 7: eps7, 8: eps8},
    )


def _tail_multisets(sigma5: int, r_cap: int):
    """All tail-count dictionaries with total sigma5 over 5 <= r <= r_cap."""
    if sigma5 == 0:
        yield {}
        return
    import itertools

    for combo in itertools.combinations_with_replacement(
        range(5, r_cap + 1), sigma5
    ):
        counts: dict[int, int] = {}
        for r in combo:
            counts[r] = counts.get(r, 0) + 1
        yield counts


def feasible_tails(
    p: PlurigenusSequence, sigma5_max: int, r_cap: int = TAIL_R_CAP
) -> list[RecoveryInput]:
    """Every (sigma5, tail) choice the recovery identities accept."""
    if sigma5_max < 0:
        raise ValueError("sigma5_max must be >= 0")
    out = []
    for s5 in range(sigma5_max + 1):
        for counts in _tail_multisets(s5, r_cap):
            inp = RecoveryInput(p, s5, counts)
            if not isinstance(recover(inp), Infeasible):
                out.append(inp)
    out.sort(key=lambda i: (i.sigma5, i.tail_key()))
    return out


def structural_tail(basket: Basket) -> tuple[int, dict[int, int]]:
    """The true (sigma5, tail counts) of a basket, read off its stage-0 form."""
    from .canonical import unpack

    counts: dict[int, int] = {}
    for b, r in unpack(basket, 0):
        assert b == 1
        if r >= 5:
            counts[r] = counts.get(r, 0) + 1
    return sum(counts.values()), counts
