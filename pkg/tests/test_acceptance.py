"""Acceptance suite: one test per criterion, each printing its verdict.

Run with ``pytest tests/test_acceptance.py -v -s`` to see per-criterion
lines.  All tolerances are fixed here; nothing is calibrated at runtime.
"""

import time
from itertools import permutations
from math import factorial

import numpy as np
import pytest

from varnetgames import (
    CoopGame,
    PlayerSet,
    check_balance,
    check_balanced_contributions,
    check_balanced_link_contributions,
    check_component_balance,
    check_equal_bargaining_power,
    expected_marginal_link,
    expected_marginal_player,
    expected_myerson,
    expected_position,
    expected_wealth,
    generate_trade_example,
    links_of,
    myerson,
    omega_of,
    position,
    shapley,
    trade_game,
)
from varnetgames.axioms import random_variable_game
from varnetgames.netcore import members, touched_players
from varnetgames.netprob import (
    NetFormDist,
    from_independent_links,
    random_distribution,
)

PS3 = PlayerSet(3)
PS4 = PlayerSet(4)
SB, SI, BI = 1, 2, 4
GRID = [0.1, 0.3, 0.5, 0.7, 0.9]


def report(num, label, ok):
    print(f"criterion {num:2d} [{'PASS' if ok else 'FAIL'}] {label}")
    assert ok, f"criterion {num} failed: {label}"


def table1(p, q):
    return {
        0: (1 - p) * (1 - q) ** 2,
        SI: (1 - p) * (1 - q) * q,
        BI: (1 - p) * (1 - q) * q,
        SB: p * (1 - q) ** 2,
        SI | BI: (1 - p) * q ** 2,
        SI | SB: p * (1 - q) * q,
        BI | SB: p * (1 - q) * q,
        7: p * q ** 2,
    }


def table2(p, q):
    z = 2 - q
    return {
        0: 0.0,
        SI: (1 - p) * (1 - q) / z,
        BI: (1 - p) * (1 - q) / z,
        SB: 0.0,
        SI | BI: (1 - p) * q / z,
        SI | SB: p * (1 - q) / z,
        BI | SB: p * (1 - q) / z,
        7: p * q / z,
    }


def build_rho1(p, q):
    return from_independent_links(PS3, {(0, 1): p, (0, 2): q, (1, 2): q})


def test_criterion_1_table1_reproduction():
    p, q = 0.3, 0.6
    build_rho1(p, q)  # warm any caches before timing
    start = time.perf_counter()
    rho = build_rho1(p, q)
    elapsed = time.perf_counter() - start
    ok = all(
        abs(rho(g) - expect) <= 1e-12 for g, expect in table1(p, q).items()
    )
    ok = ok and abs(sum(pr for _, pr in rho.items()) - 1.0) <= 1e-12
    ok = ok and elapsed < 1e-3
    report(1, f"independent-link table at (0.3,0.6), {elapsed*1e6:.0f}us", ok)


def test_criterion_2_table2_reproduction():
    p, q = 0.3, 0.6
    _, rho2 = generate_trade_example(p, q, institutional=True)
    ok = all(
        abs(rho2(g) - expect) <= 1e-12 for g, expect in table2(p, q).items()
    )
    ok = ok and rho2(0) == 0.0 and rho2(SB) == 0.0
    report(2, "conditioned table at (0.3,0.6), zero rows exact", ok)


def test_criterion_3_table3_reproduction():
    w = trade_game(PS3)
    expected = {
        0: ((0, 0, 0), (0, 0, 0)),
        SI: ((0, 0, 0), (0, 0, 0)),
        BI: ((0, 0, 0), (0, 0, 0)),
        SB: ((0.5, 0.5, 0), (0.5, 0.5, 0)),
        SI | BI: ((1 / 3, 1 / 3, 1 / 3), (0.25, 0.25, 0.5)),
        SI | SB: ((0.5, 0.5, 0), (0.5, 0.5, 0)),
        BI | SB: ((0.5, 0.5, 0), (0.5, 0.5, 0)),
        7: ((0.5, 0.5, 0), (5 / 12, 5 / 12, 1 / 6)),
    }
    myerson(w, 7), position(w, 7)  # warm caches
    start = time.perf_counter()
    results = {g: (myerson(w, g), position(w, g)) for g in range(8)}
    elapsed = time.perf_counter() - start
    ok = all(
        np.allclose(results[g][0], ym, atol=1e-12)
        and np.allclose(results[g][1], yp, atol=1e-12)
        for g, (ym, yp) in expected.items()
    )
    ok = ok and elapsed < 10e-3
    report(3, f"Myerson/Position table over all 8 networks, {elapsed*1e3:.2f}ms", ok)


def test_criterion_4_example_closed_forms():
    ok = True
    for p in GRID:
        for q in GRID:
            v, rho1 = generate_trade_example(p, q)
            _, rho2 = generate_trade_example(p, q, institutional=True)
            m1 = expected_myerson(v, rho1)
            p1 = expected_position(v, rho1)
            m2 = expected_myerson(v, rho2)
            p2 = expected_position(v, rho2)
            sb_m1 = p / 2 + (1 - p) * q ** 2 / 3
            i_m1 = (1 - p) * q ** 2 / 3
            sb_p1 = p / 2 + q ** 2 / 4 - p * q ** 2 / 3
            i_p1 = (0.5 - p / 3) * q ** 2
            sb_m2 = p / 2 + q * (1 - p) / (3 * (2 - q))
            i_m2 = q * (1 - p) / (3 * (2 - q))
            sb_p2 = (3 - 10 * p) * q / (12 * (2 - q)) + p / (2 - q)
            i_p2 = (3 - 2 * p) * q / (6 * (2 - q))
            ok = ok and np.allclose(m1, [sb_m1, sb_m1, i_m1], atol=1e-10)
            ok = ok and np.allclose(p1, [sb_p1, sb_p1, i_p1], atol=1e-10)
            ok = ok and np.allclose(m2, [sb_m2, sb_m2, i_m2], atol=1e-10)
            ok = ok and np.allclose(p2, [sb_p2, sb_p2, i_p2], atol=1e-10)
    report(4, "all eight closed-form payoff formulas on the 5x5 grid", ok)


def test_criterion_5_expected_wealth_and_dominance():
    ok = True
    for p in GRID:
        for q in GRID:
            v, rho1 = generate_trade_example(p, q)
            _, rho2 = generate_trade_example(p, q, institutional=True)
            e1 = expected_wealth(v, rho1)
            e2 = expected_wealth(v, rho2)
            ok = ok and abs(e1 - (p + (1 - p) * q ** 2)) <= 1e-10
            ok = ok and abs(e2 - (q + 2 * p * (1 - q)) / (2 - q)) <= 1e-10
            ok = ok and e2 > e1  # p < 1 and q < 1 everywhere on the grid
    # boundary: equality when p = 1 or q = 1
    for p, q in [(1.0, 0.5), (0.5, 1.0), (1.0, 1.0)]:
        v, rho1 = generate_trade_example(p, q)
        _, rho2 = generate_trade_example(p, q, institutional=True)
        ok = ok and abs(expected_wealth(v, rho1) - expected_wealth(v, rho2)) <= 1e-12
    report(5, "expected wealth formulas and strict dominance iff p<1 and q<1", ok)


def test_criterion_6_position_threshold_sign():
    ok = True
    for p in GRID:
        for q in GRID:
            v, rho1 = generate_trade_example(p, q)
            _, rho2 = generate_trade_example(p, q, institutional=True)
            diff = expected_position(v, rho1)[0] - expected_position(v, rho2)[0]
            closed = (4 * p - 3) * (q - 1) ** 2 * q
            if abs(closed) <= 1e-12:
                ok = ok and abs(diff) <= 1e-10
            else:
                ok = ok and np.sign(diff) == np.sign(closed)
    report(6, "seller position sign matches (4p-3)(q-1)^2 q on the grid", ok)


def permutation_shapley(game):
    n = game.players.n
    out = np.zeros(n)
    for order in permutations(range(n)):
        coalition = 0
        for i in order:
            out[i] += game(coalition | 1 << i) - game(coalition)
            coalition |= 1 << i
    return out / factorial(n)


def brute_force_restrict(rho, g):
    ps = rho.players
    outside = ps.complete & ~g
    out = {}
    for h in range(ps.complete + 1):
        if h & ~g:
            continue
        total = 0.0
        hp = outside
        while True:
            total += rho(h | hp)
            if hp == 0:
                break
            hp = (hp - 1) & outside
        if total:
            out[h] = total
    return NetFormDist(ps, out)


def test_criterion_7_oracle_equivalence():
    rng = np.random.default_rng(42)
    ok = True
    for _ in range(50):
        ps = PlayerSet(int(rng.integers(2, 7)))
        game = CoopGame(
            ps, {s: float(rng.normal()) for s in range(1, 1 << ps.n)}
        )
        ok = ok and np.allclose(
            shapley(game), permutation_shapley(game), atol=1e-9
        )
    for _ in range(50):
        rho = random_distribution(PS4, rng)
        i, j = PS4.links()[rng.integers(PS4.num_links)]
        oracle = brute_force_restrict(rho, PS4.complete & ~PS4.link_mask(i, j))
        closed = rho.remove_link(i, j)
        ok = ok and all(
            abs(closed(g) - oracle(g)) <= 1e-12 for g in range(PS4.complete + 1)
        )
        k = int(rng.integers(PS4.n))
        oracle = brute_force_restrict(rho, PS4.complete & ~PS4.player_links(k))
        closed = rho.remove_player(k)
        ok = ok and all(
            abs(closed(g) - oracle(g)) <= 1e-12 for g in range(PS4.complete + 1)
        )
    report(7, "Shapley permutation oracle and restriction closed forms", ok)


def test_criterion_8_lemma_shapley_of_expected_game():
    rng = np.random.default_rng(43)
    ok = True
    for _ in range(100):
        ps = PlayerSet(int(rng.integers(2, 5)))
        v, rho = random_variable_game(ps, rng)
        ok = ok and np.allclose(
            expected_myerson(v, rho), shapley(omega_of(v, rho)), atol=1e-9
        )
    report(8, "expected Myerson equals Shapley of the expected game", ok)


def _corpus(seed=44, size=200):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(size):
        ps = PlayerSet(int(rng.integers(2, 5)))
        out.append(random_variable_game(ps, rng, max_support=8))
    return out


def test_criterion_9_axiom_suite_on_random_corpus():
    start = time.perf_counter()
    ok = True
    for v, rho in _corpus():
        tol = 1e-8
        ok = ok and check_balance(expected_myerson, v, rho, tol).passed
        ok = ok and check_component_balance(expected_myerson, v, rho, tol).passed
        ok = ok and check_equal_bargaining_power(expected_myerson, v, rho, tol).passed
        ok = ok and check_balanced_contributions(expected_myerson, v, rho, tol).passed
        ok = ok and check_balance(expected_position, v, rho, tol).passed
        ok = ok and check_component_balance(expected_position, v, rho, tol).passed
        ok = ok and check_balanced_link_contributions(
            expected_position, v, rho, tol
        ).passed
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    report(9, f"axiom suite on 200 random instances, {elapsed:.1f}s", ok)


def test_criterion_10_marginal_contribution_identities():
    ok = True
    for v, rho in _corpus():
        ps = v.players
        e = expected_wealth(v, rho)
        extent = rho.extent()
        for i, j in links_of(ps, extent):
            lhs = expected_wealth(v, rho.remove_link(i, j))
            rhs = e - expected_marginal_link(v, rho, i, j)
            ok = ok and abs(lhs - rhs) <= 1e-9
        for i in members(touched_players(ps, extent)):
            lhs = expected_wealth(v, rho.remove_player(i))
            rhs = e - expected_marginal_player(v, rho, i)
            ok = ok and abs(lhs - rhs) <= 1e-9
    report(10, "wealth-drop identities for every extent link and player", ok)
