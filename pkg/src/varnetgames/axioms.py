"""Executable axiom checkers for allocation rules, with failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

import numpy as np

from .netcore import (
    PlayerSet,
    components,
    connected_networks,
    link_neighborhood,
    links_of,
    members,
    touched_players,
)
from .netgame import CoopGame, NetworkGame
from .netprob import NetFormDist, random_distribution
from .values import expected_wealth, shapley

#: looser than the computation tolerance to absorb accumulation over supports
DEFAULT_TOL = 1e-8

VariableRule = Callable[[NetworkGame, NetFormDist], np.ndarray]
DeterministicRule = Callable[[NetworkGame, int], np.ndarray]


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    passed: bool
    tolerance: float
    witness: Optional[str] = None
    lhs: Optional[float] = None
    rhs: Optional[float] = None

    @property
    def gap(self) -> Optional[float]:
        if self.lhs is None:
            return None
        return abs(self.lhs - self.rhs)

    def __str__(self):
        if self.passed:
            return f"PASS {self.axiom}"
        return (
            f"FAIL {self.axiom}: {self.witness} "
            f"lhs={self.lhs:.12g} rhs={self.rhs:.12g} gap={self.gap:.3g}"
        )


def _report(axiom, tol, failures):
    """Build a report from (witness, lhs, rhs) triples that exceed tol."""
    for witness, lhs, rhs in failures:
        if abs(lhs - rhs) > tol:
            return AxiomReport(axiom, False, tol, witness, lhs, rhs)
    return AxiomReport(axiom, True, tol)


def check_balance(rule: VariableRule, v, rho, tol=DEFAULT_TOL) -> AxiomReport:
    """Payoffs sum to the expected wealth."""
    lhs = float(np.sum(rule(v, rho)))
    rhs = expected_wealth(v, rho)
    return _report("balance", tol, [("total payoff vs expected wealth", lhs, rhs)])


def check_component_balance(rule: VariableRule, v, rho, tol=DEFAULT_TOL):
    """Each extent component receives exactly its attributable wealth."""
    additive, witness = v.is_component_additive(tol)
    if not additive:
        raise ValueError(
            f"game is not component additive; witness mask {witness:#x}"
        )
    ps = v.players
    alloc = rule(v, rho)
    failures = []
    for comp in sorted(components(ps, rho.extent())):
        lhs = float(sum(alloc[i] for i in members(touched_players(ps, comp))))
        rhs = float(sum(p * v(g & comp) for g, p in rho.items()))
        failures.append((f"component {links_of(ps, comp)}", lhs, rhs))
    return _report("component balance", tol, failures)


def check_equal_bargaining_power(rule: VariableRule, v, rho, tol=DEFAULT_TOL):
    """Removing an extent link changes both endpoints' payoffs equally."""
    ps = v.players
    base = rule(v, rho)
    failures = []
    for i, j in links_of(ps, rho.extent()):
        reduced = rule(v, rho.remove_link(i, j))
        failures.append(
            (
                f"link ({i},{j})",
                float(base[i] - reduced[i]),
                float(base[j] - reduced[j]),
            )
        )
    return _report("equal bargaining power", tol, failures)


def check_balanced_contributions(rule: VariableRule, v, rho, tol=DEFAULT_TOL):
    """Mutual effects of removing a player's links are symmetric."""
    base = rule(v, rho)
    without = [rule(v, rho.remove_player(i)) for i in range(v.players.n)]
    failures = []
    for i, j in combinations(range(v.players.n), 2):
        failures.append(
            (
                f"players ({i},{j})",
                float(base[i] - without[j][i]),
                float(base[j] - without[i][j]),
            )
        )
    return _report("balanced contributions", tol, failures)


def check_balanced_link_contributions(rule: VariableRule, v, rho, tol=DEFAULT_TOL):
    """Summed one-link-removal effects between two players are equal."""
    ps = v.players
    extent = rho.extent()
    base = rule(v, rho)
    # one reduced allocation per extent link, shared across player pairs
    reduced = {
        lk: rule(v, rho.remove_link(*lk)) for lk in links_of(ps, extent)
    }
    failures = []
    for i, j in combinations(range(ps.n), 2):
        lhs = sum(
            base[i] - reduced[lk][i]
            for lk in links_of(ps, link_neighborhood(ps, extent, j))
        )
        rhs = sum(
            base[j] - reduced[lk][j]
            for lk in links_of(ps, link_neighborhood(ps, extent, i))
        )
        failures.append((f"players ({i},{j})", float(lhs), float(rhs)))
    return _report("balanced link contributions", tol, failures)


def check_deterministic_axioms(rule: DeterministicRule, v, g, tol=DEFAULT_TOL):
    """Fixed-network analogues: balance, component balance, EBP,
    balanced contributions, balanced link contributions."""
    ps = v.players
    base = rule(v, g)
    reports = []

    reports.append(
        _report("balance", tol, [("total payoff vs v(g)", float(np.sum(base)), v(g))])
    )

    additive, _ = v.is_component_additive(tol)
    if additive:
        failures = []
        for comp in sorted(components(ps, g)):
            lhs = float(sum(base[i] for i in members(touched_players(ps, comp))))
            failures.append((f"component {links_of(ps, comp)}", lhs, v(comp)))
        reports.append(_report("component balance", tol, failures))

    failures = []
    for i, j in links_of(ps, g):
        reduced = rule(v, g & ~ps.link_mask(i, j))
        failures.append(
            (f"link ({i},{j})", float(base[i] - reduced[i]), float(base[j] - reduced[j]))
        )
    reports.append(_report("equal bargaining power", tol, failures))

    failures = []
    for i, j in combinations(range(ps.n), 2):
        without_j = rule(v, g & ~ps.player_links(j))
        without_i = rule(v, g & ~ps.player_links(i))
        failures.append(
            (
                f"players ({i},{j})",
                float(base[i] - without_j[i]),
                float(base[j] - without_i[j]),
            )
        )
    reports.append(_report("balanced contributions", tol, failures))

    failures = []
    for i, j in combinations(range(ps.n), 2):
        lhs = sum(
            base[i] - rule(v, g & ~ps.link_mask(j1, j2))[i]
            for j1, j2 in links_of(ps, link_neighborhood(ps, g, j))
        )
        rhs = sum(
            base[j] - rule(v, g & ~ps.link_mask(i1, i2))[j]
            for i1, i2 in links_of(ps, link_neighborhood(ps, g, i))
        )
        failures.append((f"players ({i},{j})", float(lhs), float(rhs)))
    reports.append(_report("balanced link contributions", tol, failures))

    return reports


def random_coop_game(ps: PlayerSet, rng) -> CoopGame:
    worth = {s: float(rng.normal()) for s in range(1, 1 << ps.n)}
    return CoopGame(ps, worth)


def random_component_additive_game(ps: PlayerSet, rng) -> NetworkGame:
    """Sample a value per connected network, sum over components."""
    base = {h: float(rng.normal()) for h in connected_networks(ps)}
    values = {
        g: sum(base[h] for h in components(ps, g))
        for g in range(1, ps.complete + 1)
    }
    return NetworkGame(ps, values)


def random_variable_game(ps: PlayerSet, rng, max_support: int = 8):
    """Random component-additive game with a random sparse distribution."""
    v = random_component_additive_game(ps, rng)
    rho = random_distribution(ps, rng, max_support)
    return v, rho


def check_shapley_axioms(tol=DEFAULT_TOL, seed=0, trials=20):
    """Randomized suite for efficiency, null player, symmetry, linearity."""
    rng = np.random.default_rng(seed)
    eff, null, sym, lin = [], [], [], []
    for trial in range(trials):
        ps = PlayerSet(int(rng.integers(2, 7)))
        n = ps.n
        game = random_coop_game(ps, rng)
        phi = shapley(game)
        eff.append(
            (f"trial {trial}", float(np.sum(phi)), game(ps.all_players))
        )

        # plant a null player: worth(S) ignores membership of player 0
        worth = {s: game(s & ~1) for s in range(1 << n)}
        null.append(
            (f"trial {trial}", float(shapley(CoopGame(ps, worth))[0]), 0.0)
        )

        # symmetrize players 0 and 1: equal marginals force equal payoffs
        swap = {}
        for s in range(1 << n):
            t = (s & ~3) | ((s & 1) << 1) | ((s >> 1) & 1)
            swap[s] = 0.5 * (game(s) + game(t))
        phi_sym = shapley(CoopGame(ps, swap))
        sym.append((f"trial {trial}", float(phi_sym[0]), float(phi_sym[1])))

        # linearity on a random combination with a second game
        other = random_coop_game(ps, rng)
        a, b = float(rng.normal()), float(rng.normal())
        combo = CoopGame(
            ps, {s: a * game(s) + b * other(s) for s in range(1 << n)}
        )
        gap = shapley(combo) - (a * phi + b * shapley(other))
        worst = int(np.argmax(np.abs(gap)))
        lin.append(
            (f"trial {trial} player {worst}", float(np.abs(gap).max()), 0.0)
        )

    return [
        _report("shapley efficiency", tol, eff),
        _report("shapley null player", tol, null),
        _report("shapley symmetry", tol, sym),
        _report("shapley linearity", tol, lin),
    ]
