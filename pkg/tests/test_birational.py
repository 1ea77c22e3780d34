"""Birationality thresholds and the two full case-tree replays."""

from fractions import Fraction

import pytest

from fanobasket.birational import (
    BirationalityInputs,
    a_of_m0,
    replay_birationality,
    thm_main_threshold,
    zeta_lower_bound,
)
from fanobasket.wci import X6D_PAIRS

F = Fraction


def test_a_of_m0():
    assert a_of_m0(1) == 1
    assert a_of_m0(2) == 6
    assert a_of_m0(8) == 6
    with pytest.raises(ValueError):
        a_of_m0(0)


def test_zeta_lower_bound_menu():
    assert zeta_lower_bound(
        BirationalityInputs(1, 2, F(1), rmax=3, nu0=1, genus_case="g0")
    ) == 2
    g1 = zeta_lower_bound(
        BirationalityInputs(2, 5, F(2), rmax=10, genus_case="g1")
    )
    assert g1 == max(F(1, 10), F(1, 7))
    assert zeta_lower_bound(
        BirationalityInputs(2, 5, F(2), rmax=13, nu0=2, genus_case="unknown")
    ) == F(1, 26)
    assert zeta_lower_bound(
        BirationalityInputs(2, 5, F(2), genus_case="g_ge2")
    ) == F(3, 7)


def test_thm_main_threshold_examples():
    inp = BirationalityInputs(1, 2, F(1), rmax=3, nu0=1)
    assert thm_main_threshold(inp, "i") == 9
    assert thm_main_threshold(inp, "iii") == 9

    case1 = BirationalityInputs(8, 38, F(8), rmax=14)
    assert thm_main_threshold(case1, "ii") == 76

    case3 = BirationalityInputs(8, 65, F(8), rmax=12, nu0=1)
    assert thm_main_threshold(case3, "iii") == 97

    with pytest.raises(ValueError):
        thm_main_threshold(BirationalityInputs(1, 2, F(1)), "ii")


def test_threshold_monotonicity():
    base = BirationalityInputs(4, 20, F(3), rmax=9, nu0=2)
    for variant in ("i", "ii", "iii"):
        t0 = thm_main_threshold(base, variant)
        assert thm_main_threshold(
            BirationalityInputs(5, 20, F(3), rmax=9, nu0=2), variant
        ) >= t0
        assert thm_main_threshold(
            BirationalityInputs(4, 21, F(3), rmax=9, nu0=2), variant
        ) >= t0
        assert thm_main_threshold(
            BirationalityInputs(4, 20, F(7, 2), rmax=9, nu0=2), variant
        ) >= t0
        if variant in ("ii", "iii"):
            assert thm_main_threshold(
                BirationalityInputs(4, 20, F(3), rmax=10, nu0=2), variant
            ) >= t0


def test_floor_identity_variant_ii():
    for mu0 in range(0, 8):
        for m1 in range(mu0 if mu0 else 1, 12):
            if m1 < 1:
                continue
            inp = BirationalityInputs(max(mu0, 1), m1, F(max(mu0, 1)), rmax=2)
            middle = (5 * (inp.mu0_upper + m1)) // 3
            assert (
                F(5, 3) * inp.mu0_upper + F(5, 3) * m1
            ).__floor__() == middle


def test_x6d_family_thresholds_are_3d():
    for a, b in X6D_PAIRS:
        d = a + b
        inp = BirationalityInputs(a, b, F(a), rmax=d, nu0=1)
        assert thm_main_threshold(inp, "i") == 3 * d, (a, b)
        assert thm_main_threshold(inp, "ii") == 3 * d, (a, b)
        assert thm_main_threshold(inp, "iii") == 3 * d, (a, b)


def test_replay_qfano_39():
    rep = replay_birationality("QFano39")
    assert rep.conclusion.startswith("birational for all m >= 39")
    assert rep.leaves and all(leaf["threshold"] <= 39 for leaf in rep.leaves)
    assert max(leaf["threshold"] for leaf in rep.leaves) == 39
    # the two sharp leaves
    sharp = {leaf["name"] for leaf in rep.leaves if leaf["threshold"] == 39}
    assert "P1=P2=0 No.3" in sharp and "P1=1, n0>=7" in sharp


def test_replay_weak_97():
    rep = replay_birationality("Weak97")
    assert rep.conclusion.startswith("birational for all m >= 97")
    assert all(leaf["threshold"] <= 97 for leaf in rep.leaves)
    by_name = {leaf["name"]: leaf for leaf in rep.leaves}
    assert by_name["I: P2=0"]["threshold"] == 76
    assert by_name["II: 14<=rmax<=22"]["threshold"] == 96
    assert by_name["III: rmax<=12, rX<=660"]["threshold"] == 97
    assert by_name["IV: rX=630, pencil persists"]["threshold"] == 97
    assert by_name["IV: rX=630, pencil persists"]["mu0"] == "7/9"
    assert by_name["IV: rX=546, pencil persists"]["threshold"] == 95
    assert by_name["IV: rX=546, pencil persists"]["mu0"] == "1/2"
    # the three special baskets surface as survivors with their leaves
    texts = {s.wb.basket.text() for s in rep.survivors}
    assert "2x(1,2),(2,5),(3,7),(4,9)" in texts
    assert "2x(1,2),(1,3),(3,7),(5,11)" in texts
    assert "(1,2),(1,3),(3,7),(6,13)" in texts


def test_replay_reports_serialize():
    rep = replay_birationality("Weak97")
    data = rep.to_json()
    assert data["case"] == "Weak97"
    assert len(data["leaves"]) == len(rep.leaves)
    assert "axioms" in data
    assert rep.render()


def test_replays_carry_a_coverage_audit():
    for target in ("QFano39", "Weak97"):
        rep = replay_birationality(target)
        assert rep.coverage and all(isinstance(c, str) for c in rep.coverage)
        assert "coverage" in rep.to_json()
