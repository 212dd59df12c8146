import numpy as np
import pytest

from varnetgames import (
    NetworkGame,
    PlayerSet,
    check_balance,
    check_balanced_contributions,
    check_balanced_link_contributions,
    check_component_balance,
    check_deterministic_axioms,
    check_equal_bargaining_power,
    check_shapley_axioms,
    expected_myerson,
    expected_position,
    expected_wealth,
    generate_trade_example,
    myerson,
    point_mass,
    position,
    trade_game,
)
from varnetgames.axioms import random_variable_game
from varnetgames.netcore import members, touched_players

PS3 = PlayerSet(3)
PS4 = PlayerSet(4)
SB, SI, BI = 1, 2, 4
W = trade_game(PS3)


def zero_rule(v, rho):
    return np.zeros(v.players.n)


def egalitarian_rule(v, rho):
    """Splits expected wealth over the extent's non-isolated players."""
    out = np.zeros(v.players.n)
    players = members(touched_players(v.players, rho.extent()))
    if players:
        out[players] = expected_wealth(v, rho) / len(players)
    return out


def test_balance_pass_and_fail():
    v, rho1 = generate_trade_example(0.5, 0.5)
    assert check_balance(expected_myerson, v, rho1).passed
    _, rho2 = generate_trade_example(0.5, 0.5, institutional=True)
    assert check_balance(expected_position, v, rho2).passed
    report = check_balance(zero_rule, v, rho1)
    assert not report.passed
    assert report.gap > report.tolerance  # witness re-evaluates beyond tol


def test_component_balance_fail_for_egalitarian_split():
    two = PS4.link_mask(0, 1) | PS4.link_mask(2, 3)
    v = NetworkGame(
        PS4, {PS4.link_mask(0, 1): 2.0, PS4.link_mask(2, 3): 3.0, two: 5.0}
    )
    rho = point_mass(PS4, two)
    assert check_component_balance(expected_myerson, v, rho).passed
    assert check_component_balance(expected_position, v, rho).passed
    assert check_balance(egalitarian_rule, v, rho).passed
    report = check_component_balance(egalitarian_rule, v, rho)
    assert not report.passed and report.witness is not None


def test_component_balance_rejects_non_additive_game():
    v = NetworkGame(PS4, {PS4.link_mask(0, 1) | PS4.link_mask(2, 3): 5.0})
    with pytest.raises(ValueError):
        check_component_balance(expected_myerson, v, point_mass(PS4, 0))


def test_equal_bargaining_power_trade():
    v, rho1 = generate_trade_example(0.5, 0.5)
    assert check_equal_bargaining_power(expected_myerson, v, rho1).passed
    report = check_equal_bargaining_power(expected_position, v, rho1)
    assert not report.passed
    # vacuous on an empty extent
    assert check_equal_bargaining_power(
        expected_position, v, point_mass(PS3, 0)
    ).passed


def test_balanced_contributions_trade():
    v, rho2 = generate_trade_example(0.5, 0.5, institutional=True)
    assert check_balanced_contributions(expected_myerson, v, rho2).passed
    v, rho1 = generate_trade_example(0.3, 0.7)
    assert not check_balanced_contributions(egalitarian_rule, v, rho1).passed


def test_balanced_link_contributions_trade():
    v, rho1 = generate_trade_example(0.5, 0.5)
    assert check_balanced_link_contributions(expected_position, v, rho1).passed
    # Myerson and Position differ at {SI,BI}, so Myerson must violate it
    report = check_balanced_link_contributions(
        expected_myerson, v, point_mass(PS3, SI | BI)
    )
    assert not report.passed


def test_randomized_corpus_myerson_and_position():
    rng = np.random.default_rng(0)
    for _ in range(25):
        ps = PlayerSet(int(rng.integers(2, 5)))
        v, rho = random_variable_game(ps, rng)
        assert check_balance(expected_myerson, v, rho).passed
        assert check_component_balance(expected_myerson, v, rho).passed
        assert check_equal_bargaining_power(expected_myerson, v, rho).passed
        assert check_balanced_contributions(expected_myerson, v, rho).passed
        assert check_balance(expected_position, v, rho).passed
        assert check_component_balance(expected_position, v, rho).passed
        assert check_balanced_link_contributions(expected_position, v, rho).passed


def test_single_player_vacuous():
    ps = PlayerSet(1)
    v = NetworkGame(ps, {})
    rho = point_mass(ps, 0)
    for check in (
        check_balance,
        check_component_balance,
        check_equal_bargaining_power,
        check_balanced_contributions,
        check_balanced_link_contributions,
    ):
        assert check(expected_myerson, v, rho).passed


def test_deterministic_axioms_trade():
    by_name = {
        r.axiom: r for r in check_deterministic_axioms(myerson, W, PS3.complete)
    }
    assert by_name["equal bargaining power"].passed
    assert by_name["balance"].passed
    assert by_name["balanced contributions"].passed

    by_name = {
        r.axiom: r for r in check_deterministic_axioms(position, W, PS3.complete)
    }
    assert by_name["balanced link contributions"].passed
    assert by_name["component balance"].passed

    by_name = {
        r.axiom: r for r in check_deterministic_axioms(position, W, SI | BI)
    }
    assert by_name["component balance"].passed  # payoffs sum to 1


def test_shapley_axiom_suite():
    reports = check_shapley_axioms(seed=1)
    assert all(r.passed for r in reports)
    assert {r.axiom for r in reports} == {
        "shapley efficiency",
        "shapley null player",
        "shapley symmetry",
        "shapley linearity",
    }


def test_failure_witnesses_are_sound():
    v, rho1 = generate_trade_example(0.5, 0.5)
    for report in (
        check_balance(zero_rule, v, rho1),
        check_equal_bargaining_power(expected_position, v, rho1),
    ):
        assert not report.passed
        assert report.gap > report.tolerance
        assert report.witness is not None
