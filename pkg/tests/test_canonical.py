"""Packing order, S^(n) sets, unpacking chain, and their structural laws."""

import itertools
import random
from fractions import Fraction
from math import gcd

import pytest

from fanobasket.basket import Basket, WeightedBasket
from fanobasket.canonical import (
    canonical_chain,
    dominated_baskets,
    epsilon_n,
    general_packings,
    minimal_baskets,
    prime_packings,
    s_set,
    unpack,
)

F = Fraction
B = Basket.parse


def test_s_set_examples():
    assert s_set(0, 6).fractions == (F(1, 2), F(1, 3), F(1, 4), F(1, 5), F(1, 6))
    assert s_set(5, 5).fractions == (F(1, 2), F(2, 5), F(1, 3), F(1, 4), F(1, 5))
    seven = s_set(7, 7).fractions
    assert F(3, 7) in seven and F(2, 7) in seven
    with pytest.raises(ValueError):
        s_set(3, 10)


def test_s_set_neighbour_determinants_large():
    # Claim-A adjacency holds for every truncation we ever build
    for n in (0, 5, 9, 17, 24):
        s_set(n, 24)


def test_unpack_examples():
    assert unpack(B("(2,5)"), 0) == B("(1,2),(1,3)")
    assert unpack(B("(1,2)"), 0) == B("(1,2)")
    assert unpack(B("(3,7)"), 5) == B("(2,5),(1,2)")


def test_unpack_fixed_point_at_high_level():
    for text in ["(2,5),(3,7)", "(6,13),(1,2)", "3x(2,5),(1,4)"]:
        basket = B(text)
        for n in range(basket.r_max(), basket.r_max() + 3):
            assert unpack(basket, n) == basket


def test_unpack_preserves_sigma_and_dominates():
    pool = [(2, 5), (3, 7), (3, 8), (4, 9), (5, 11), (6, 13), (5, 12), (1, 2), (2, 9)]
    rng = random.Random(3)
    for _ in range(50):
        basket = Basket(rng.choices(pool, k=rng.randint(1, 5)))
        for n in (0, 5, 6, 7, 8):
            up = unpack(basket, n)
            assert up.sigma() == basket.sigma()
            assert basket in dominated_baskets(up)


def test_epsilon_examples():
    assert epsilon_n(B("(2,5)"), 5) == 1
    assert epsilon_n(B("(1,2)"), 5) == 0
    assert epsilon_n(B("(3,7)"), 7) == 1


def test_canonical_chain_examples():
    chain = canonical_chain(B("(2,5)"))
    assert [s.level for s in chain.stages] == [0, 5]
    assert chain.stages[0].basket == B("(1,2),(1,3)")
    assert chain.stages[1].basket == B("(2,5)")
    assert chain.stages[1].epsilon == 1

    flat = canonical_chain(B("(1,2)"))
    assert all(s.basket == B("(1,2)") for s in flat.stages)

    fixed = canonical_chain(B("5x(1,2),(1,3),(1,5)"))
    assert fixed.stages[0].basket == B("5x(1,2),(1,3),(1,5)")
    assert all(s.epsilon == 0 for s in fixed.stages)


def test_prime_packings_examples():
    assert prime_packings(B("(1,2),(1,3)")) == [B("(2,5)")]
    assert prime_packings(B("(1,2)")) == []
    assert prime_packings(B("2x(1,2),(1,3)")) == [B("(1,2),(2,5)")]


def test_prime_packing_preserves_coprimality_and_size():
    pool = [(1, 2), (1, 3), (2, 5), (1, 4), (3, 7), (2, 7), (1, 5)]
    rng = random.Random(11)
    for _ in range(100):
        basket = Basket(rng.choices(pool, k=rng.randint(2, 6)))
        for packed in prime_packings(basket):
            assert len(packed) == len(basket) - 1
            assert all(gcd(b, r) == 1 for b, r in packed)


def test_dominated_baskets_examples():
    assert dominated_baskets(B("(1,2),(1,3)")) == sorted([B("(1,2),(1,3)"), B("(2,5)")])

    closure = dominated_baskets(B("2x(1,2),(1,3),(1,4)"))
    # exhaustive closure by hand: the base, one (2,5) merge, one (2,7) merge,
    # and the maximal packing {(3,7),(1,4)}
    assert set(closure) == {
        B("2x(1,2),(1,3),(1,4)"),
        B("(1,2),(2,5),(1,4)"),
        B("2x(1,2),(2,7)"),
        B("(3,7),(1,4)"),
    }

    survivors = [
        wb
        for wb in dominated_baskets(
            B("9x(1,2),(1,3),(1,5)"), prune=lambda bb: bb.gamma() > 0
        )
        if WeightedBasket(wb, 0).volume() > 0
    ]
    assert set(survivors) == {
        B("7x(1,2),(3,7),(1,5)"),
        B("6x(1,2),(4,9),(1,5)"),
        B("5x(1,2),(5,11),(1,5)"),
        B("4x(1,2),(6,13),(1,5)"),
    }


def test_minimal_baskets_examples():
    assert minimal_baskets(B("(2,5)")) == [B("(2,5)")]
    assert set(minimal_baskets(B("9x(1,2),(1,3),(1,4)"))) == {
        B("(10,21),(1,4)"),
        B("9x(1,2),(2,7)"),
    }
    assert minimal_baskets(B("(1,2),(1,4)")) == [B("(1,2),(1,4)")]


def test_min_target_restricts_stage():
    # below stage 5 the (1,2)+(1,3) merge is forbidden
    base = B("(1,2),(2,5),(1,3),(1,4),(1,6)")
    full = dominated_baskets(base)
    restricted = dominated_baskets(base, min_target=6)
    assert B("2x(2,5),(1,4),(1,6)") in full
    assert B("2x(2,5),(1,4),(1,6)") not in restricted
    assert set(minimal_baskets(base, min_target=6)) == {
        B("(3,7),(2,7),(1,6)"),
        B("(1,2),(3,8),(1,4),(1,6)"),
    }


def test_packing_monotonicity_single_steps():
    pool = [(1, 2), (1, 3), (2, 5), (1, 4), (3, 7), (2, 7), (1, 5), (3, 8), (1, 7)]
    rng = random.Random(5)
    checked = 0
    for _ in range(300):
        basket = Basket(rng.choices(pool, k=rng.randint(2, 6)))
        p1 = rng.randint(0, 3)
        wb = WeightedBasket(basket, p1)
        seq = wb.plurigenera(40)
        for packed in general_packings(basket):
            wp = WeightedBasket(packed, p1)
            assert packed.sigma() == basket.sigma()
            assert packed.sigma_prime() <= basket.sigma_prime()
            assert wp.volume() >= wb.volume()
            assert wp.volume() + packed.sigma_prime() == wb.volume() + basket.sigma_prime()
            assert packed.gamma() <= basket.gamma()
            pseq = wp.plurigenera(40)
            for m in range(2, 41):
                assert basket.delta(m) >= packed.delta(m)
                assert seq[m] <= pseq[m]
            checked += 1
    assert checked > 100


def test_chain_delta_invariants_small_exhaustive():
    points = [
        (b, r) for r in range(2, 10) for b in range(1, r // 2 + 1) if gcd(b, r) == 1
    ]
    for k in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(points, k):
            basket = Basket(combo)
            chain = canonical_chain(basket)
            b0 = chain.stages[0].basket
            for j in (3, 4):
                assert b0.delta(j) == basket.delta(j)
            for prev, cur in zip(chain.stages, chain.stages[1:]):
                for j in range(2, cur.level):
                    assert prev.basket.delta(j) == cur.basket.delta(j)
                assert (
                    prev.basket.delta(cur.level)
                    == cur.basket.delta(cur.level) + cur.epsilon
                )


def test_prune_soundness_matches_post_filter():
    pool = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (1, 6), (3, 7)]
    rng = random.Random(17)
    for _ in range(40):
        basket = Basket(rng.choices(pool, k=rng.randint(2, 6)))
        pruned = dominated_baskets(basket, prune=lambda bb: bb.gamma() > 0)
        unpruned = [bb for bb in dominated_baskets(basket) if bb.gamma() > 0]
        assert pruned == unpruned


def test_unpacking_invariant_under_prime_packings():
    # stage baskets of a packed basket never move above the packing stage
    base = B("(1,2),(2,5),(1,3),(1,4),(1,7)")
    for packed in dominated_baskets(base, min_target=6):
        assert unpack(packed, 5) == unpack(base, 5)
        assert unpack(packed, 0) == unpack(base, 0)


def test_chain_stages_dominate_each_other():
    for text in ["(3,7),(2,5)", "2x(1,2),(2,5),(3,7),(4,9)", "(6,13),(1,4)"]:
        chain = canonical_chain(B(text))
        for prev, cur in zip(chain.stages, chain.stages[1:]):
            assert cur.basket in dominated_baskets(prev.basket)
