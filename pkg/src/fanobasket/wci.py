"""Hilbert series of weighted complete intersections, as an independent oracle.

The series of X_{d_1..d_c} in P(a_0..a_n) is prod(1 - t^d) / prod(1 - t^a);
for a family with Fano index iota = sum(a) - sum(d) >= 1 the anti-plurigenus
P_{-m} is the coefficient at degree m iota.  Fitting a weighted basket whose
Riemann-Roch output matches all provided coefficients turns the series into a
cross-check on everything upstream: the match forces the volume, which for a
general hypersurface equals d iota^3 / prod(a).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .basket import PlurigenusSequence, Source, WeightedBasket
from .canonical import dominated_baskets
from .recovery import RecoveryInput, feasible_tails, recover
from .search import SearchBudgetExceeded

F = Fraction


@dataclass(frozen=True)
class WeightedCI:
    weights: tuple[int, ...]
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.weights or any(a < 1 for a in self.weights):
            raise ValueError("weights must be positive")
        if any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be positive")

    @property
    def fano_index(self) -> int:
        return sum(self.weights) - sum(self.degrees)

    def hypersurface_volume(self) -> Fraction:
        """prod(d) iota^3 / prod(a), the general-member anti-canonical degree."""
        iota = self.fano_index
        return F(
            reduce(lambda x, y: x * y, self.degrees, 1) * iota**3,
            reduce(lambda x, y: x * y, self.weights, 1),
        )


def hilbert_coeffs(wci: WeightedCI, upto: int) -> list[int]:
    """Series coefficients c_0..c_upto of prod(1-t^d)/prod(1-t^a), exact."""
    if upto < 0:
        raise ValueError("upto must be >= 0")
    coeffs = [0] * (upto + 1)
    coeffs[0] = 1
    for d in wci.degrees:  # multiply by (1 - t^d)
        for k in range(upto, d - 1, -1):
            coeffs[k] -= coeffs[k - d]
    for a in wci.weights:  # divide by (1 - t^a)
        for k in range(a, upto + 1):
            coeffs[k] += coeffs[k - a]
    return coeffs


def monomial_count_oracle(wci: WeightedCI, upto: int) -> list[int]:
    """Brute-force coefficients by counting monomials and inclusion-exclusion.

    Counts exponent tuples by explicit recursion; only meant for small
    weights as an independent check on the series arithmetic.
    """

    def counts(weights: tuple[int, ...]) -> list[int]:
        table = [0] * (upto + 1)
        if not weights:
            table[0] = 1
            return table
        head, *rest = weights
        sub = counts(tuple(rest))
        for total in range(upto + 1):
            table[total] = sum(sub[total - k * head] for k in range(total // head + 1))
        return table

    base = counts(wci.weights)
    out = list(base)
    for mask in range(1, 1 << len(wci.degrees)):
        shift = sum(d for i, d in enumerate(wci.degrees) if mask >> i & 1)
        sign = -1 if bin(mask).count("1") % 2 else 1
        for k in range(shift, upto + 1):
            out[k] += sign * base[k - shift]
    return out


def anti_plurigenera_from_hilbert(wci: WeightedCI, upto_m: int) -> PlurigenusSequence:
    """P_{-1}..P_{-upto_m}, read off at degrees m * iota."""
    iota = wci.fano_index
    if iota < 1:
        raise ValueError("anti-plurigenus extraction needs Fano index >= 1")
    coeffs = hilbert_coeffs(wci, upto_m * iota)
    return PlurigenusSequence(
        tuple(coeffs[m * iota] for m in range(1, upto_m + 1)), Source.CONSTRAINT
    )


def fit_basket(
    p: PlurigenusSequence,
    sigma5_max: int = 6,
    max_candidates: int = 200_000,
) -> list[WeightedBasket]:
    """All weighted baskets whose Riemann-Roch output matches every entry of p.

    Recovery-first: enumerate the feasible tails, build the stage-0 basket,
    close under prime packings (the weak gamma bound prunes), and keep exact
    full-sequence matches.  Sequences of length >= 8 are recommended; the
    longer the sequence, the tighter the fit.
    """
    if len(p) < 5:
        raise ValueError("need at least P_{-1}..P_{-5} to anchor a fit")
    horizon = len(p)
    p1 = p[1]
    seen = 0
    fits: list[WeightedBasket] = []
    for tail in feasible_tails(p, sigma5_max):
        data = recover(RecoveryInput(p, tail.sigma5, tail.tail_counts))
        b0 = data.basket0()
        for cand in dominated_baskets(b0, prune=lambda b: b.gamma() >= 0):
            seen += 1
            if seen > max_candidates:
                raise SearchBudgetExceeded(f"fit exceeded {max_candidates} candidates")
            wb = WeightedBasket(cand, p1)
            seq = wb.plurigenera(horizon)
            if all(seq[m] == p[m] for m in range(1, horizon + 1)):
                if wb not in fits:
                    fits.append(wb)
    fits.sort(key=lambda w: w.basket.points)
    return fits


# the named families realized as fixtures: general hypersurfaces and one
# codimension-two intersection, plus the twelve X_{6d} in P(1,a,b,2d,3d)
X66 = WeightedCI((1, 5, 6, 22, 33), (66,))
X42 = WeightedCI((1, 1, 6, 14, 21), (42,))
X24_30 = WeightedCI((1, 8, 9, 10, 12, 15), (24, 30))
X19 = WeightedCI((1, 3, 4, 5, 7), (19,))

X6D_PAIRS: tuple[tuple[int, int], ...] = (
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (1, 5),
    (1, 6),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
    (5, 6),
)


def x6d_member(a: int, b: int) -> WeightedCI:
    d = a + b
    return WeightedCI((1, a, b, 2 * d, 3 * d), (6 * d,))
